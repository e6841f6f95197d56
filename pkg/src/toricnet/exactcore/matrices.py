"""Exact linear algebra over Z and Q.

Everything here is deterministic and exact: integer matrices go through
fraction-free or unimodular algorithms, rational matrices through Fraction
Gaussian elimination. No floats anywhere.

Matrices are plain lists of row lists; functions never mutate their inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import SparsePoly

Matrix = list  # list of row lists


def dims(a: Matrix) -> tuple[int, int]:
    if not a:
        return 0, 0
    ncols = len(a[0])
    if any(len(row) != ncols for row in a):
        raise ValueError("ragged matrix")
    return len(a), ncols


def transpose(a: Matrix) -> Matrix:
    m, n = dims(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(a: Matrix, v: list) -> list:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    m, k = dims(a)
    k2, n = dims(b)
    if k != k2:
        raise ValueError("shape mismatch")
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


# ---------------------------------------------------------------------------
# determinants


def ff_determinant(a: Matrix):
    """Exact determinant.

    Integer/Fraction matrices use the fraction-free Bareiss scheme; matrices
    with polynomial entries use cofactor expansion memoized over column
    subsets (supported up to size 6, which the callers respect).
    """
    m, n = dims(a)
    if m != n:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    if any(isinstance(x, SparsePoly) for row in a for x in row):
        return _det_cofactor(a)
    return _det_bareiss(a)


def _det_bareiss(a: Matrix):
    n = len(a)
    exact_int = all(isinstance(x, int) for row in a for x in row)
    M = [[x if exact_int else Fraction(x) for x in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if pivot is None:
                return 0 if exact_int else Fraction(0)
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                # Bareiss guarantees exact divisibility by the previous pivot
                M[i][j] = num // prev if exact_int else num / prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _det_cofactor(a: Matrix, cap: int = 6):
    n = len(a)
    if n > cap:
        raise ValueError(f"polynomial determinant supported up to size {cap}, got {n}")
    rows = [[x if isinstance(x, SparsePoly) else SparsePoly.const(x) for x in row] for row in a]
    memo: dict = {}

    def det(cols: tuple):
        if not cols:
            return SparsePoly.one()
        if cols in memo:
            return memo[cols]
        r = n - len(cols)
        acc = SparsePoly.zero()
        for idx, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            sub = det(cols[:idx] + cols[idx + 1 :])
            term = entry * sub
            acc = acc + term if idx % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return det(tuple(range(n)))


# ---------------------------------------------------------------------------
# unimodular reduction over Z


def _check_int_matrix(a: Matrix) -> Matrix:
    m, n = dims(a)
    out = []
    for row in a:
        new = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("integer matrix expected")
                x = x.numerator
            if not isinstance(x, int):
                raise ValueError("integer matrix expected")
            new.append(x)
        out.append(new)
    return out


def hermite_normal_form(a: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular, U*A = H, H in row-echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    """
    H = _check_int_matrix(a)
    m, n = dims(H)
    U = identity(m)

    def combine(r, src, q):  # row r -= q * row src
        if q == 0:
            return
        H[r] = [x - q * y for x, y in zip(H[r], H[src])]
        U[r] = [x - q * y for x, y in zip(U[r], U[src])]

    pivot_row = 0
    for col in range(n):
        live = [r for r in range(pivot_row, m) if H[r][col] != 0]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(H[r][col]))
            base = live[0]
            for r in live[1:]:
                combine(r, base, H[r][col] // H[base][col])
            live = [r for r in range(pivot_row, m) if H[r][col] != 0]
        r0 = live[0]
        if r0 != pivot_row:
            H[r0], H[pivot_row] = H[pivot_row], H[r0]
            U[r0], U[pivot_row] = U[pivot_row], U[r0]
        if H[pivot_row][col] < 0:
            H[pivot_row] = [-x for x in H[pivot_row]]
            U[pivot_row] = [-x for x in U[pivot_row]]
        p = H[pivot_row][col]
        for r in range(pivot_row):
            combine(r, pivot_row, H[r][col] // p)
        pivot_row += 1
        if pivot_row == m:
            break
    return H, U


def lattice_kernel(a: Matrix) -> list[list[int]]:
    """Basis of the integer kernel {u : A u = 0}, canonically normalized.

    The basis is the Hermite normal form of the kernel lattice, so equal
    lattices produce byte-identical output; each vector's first nonzero entry
    is positive. Rational input rows are cleared to integers first (row
    scaling does not change the kernel).
    """
    m, n = dims(a)
    cleared = []
    for row in a:
        fr = [Fraction(x) for x in row]
        lcm = 1
        for x in fr:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        cleared.append([int(x * lcm) for x in fr])
    B = transpose(cleared)  # n x m; rows indexed by kernel coordinates
    H, U = hermite_normal_form(B)
    kernel_rows = [U[i] for i in range(n) if all(x == 0 for x in H[i])]
    if not kernel_rows:
        return []
    K, _ = hermite_normal_form(kernel_rows)
    return [row for row in K if any(row)]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def smith_normal_form(a: Matrix) -> list[int]:
    """Elementary divisors d_1 | d_2 | ... of an integer matrix."""
    M = _check_int_matrix(a)
    m, n = dims(M)
    divisors = []
    for t in range(min(m, n)):
        while True:
            entries = [
                (abs(M[i][j]), i, j)
                for i in range(t, m)
                for j in range(t, n)
                if M[i][j] != 0
            ]
            if not entries:
                return divisors
            _, i0, j0 = min(entries)
            M[t], M[i0] = M[i0], M[t]
            for row in M:
                row[t], row[j0] = row[j0], row[t]
            p = M[t][t]
            for i in range(t + 1, m):
                q = M[i][t] // p
                if q:
                    M[i] = [x - q * y for x, y in zip(M[i], M[t])]
            for j in range(t + 1, n):
                q = M[t][j] // p
                if q:
                    for row in M:
                        row[j] -= q * row[t]
            if any(M[i][t] for i in range(t + 1, m)) or any(
                M[t][j] for j in range(t + 1, n)
            ):
                continue  # remainders appeared; the minimum strictly shrank
            bad = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if M[i][j] % p != 0
                ),
                None,
            )
            if bad is None:
                break
            # fold a non-divisible row into row t so the next pass shrinks p
            M[t] = [x + y for x, y in zip(M[t], M[bad])]
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
        divisors.append(M[t][t])
    return divisors


# ---------------------------------------------------------------------------
# rational elimination


def rational_rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q. Returns (R, pivot_columns)."""
    m, n = dims(a)
    R = [[Fraction(x) for x in row] for row in a]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if R[i][c] != 0), None)
        if pivot is None:
            continue
        R[r], R[pivot] = R[pivot], R[r]
        inv = R[r][c]
        R[r] = [x / inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rank(a: Matrix) -> int:
    if dims(a)[0] == 0:
        return 0
    return len(rational_rref(a)[1])


def right_kernel_rational(a: Matrix) -> list[list[Fraction]]:
    """Basis of {v in Q^n : A v = 0} from the RREF free columns."""
    m, n = dims(a)
    if m == 0:
        return [[Fraction(i == j) for j in range(n)] for i in range(n)]
    R, pivots = rational_rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -R[r][f]
        basis.append(v)
    return basis


def solve_rational(a: Matrix, b: list) -> list[Fraction] | None:
    """One exact solution of A x = b, or None if inconsistent."""
    m, n = dims(a)
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    R, pivots = rational_rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = R[r][n]
    return x


def inverse_rational(a: Matrix) -> Matrix | None:
    """Exact inverse of a square rational matrix, or None if singular."""
    m, n = dims(a)
    if m != n:
        raise ValueError("inverse of a non-square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(i == j) for j in range(n)] for i, row in enumerate(a)]
    R, pivots = rational_rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R[:n]]
