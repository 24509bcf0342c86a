"""Exact integer/rational linear algebra for small intersection matrices.

Everything here works on lists of Python ints (or Fractions) so results are
exact at any size.  Elimination is fraction-free (Bareiss): every
intermediate entry is itself a minor of the input, so it stays an integer.
"""
from fractions import Fraction


def leading_minors(matrix):
    """Return the leading principal minors det(M[:k, :k]) for k = 1..n.

    Bareiss elimination without pivoting: after step k the pivot in
    position (k, k) equals the k-th leading principal minor.  If a minor
    vanishes the elimination cannot continue; the remaining minors are
    reported as None.
    """
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            minors.extend([None] * (n - k - 1))
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def determinant(matrix):
    """Exact determinant via Bareiss elimination with row pivoting."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve(matrix, rhs):
    """Solve M x = b exactly; returns a list of Fractions.

    Fraction-free forward elimination on the augmented matrix, followed by
    back substitution in rational arithmetic.  Raises ValueError when M is
    singular.
    """
    n = len(matrix)
    if len(rhs) != n:
        raise ValueError("dimension mismatch")
    a = [list(map(int, row)) + [int(b)] for row, b in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                raise ValueError("singular matrix")
            a[k], a[swap] = a[swap], a[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = Fraction(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return x


def matvec(matrix, vec):
    return [sum(m * v for m, v in zip(row, vec)) for row in matrix]
