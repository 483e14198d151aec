"""Exact linear algebra over Z, Q and F_p on small dense matrices (lists of rows)."""
from __future__ import annotations

from fractions import Fraction
from math import lcm


def bareiss_det(a) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pk - m[i][k] * m[k][j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def det_q(a) -> Fraction:
    """Determinant of a rational matrix: clear denominators row by row, then Bareiss."""
    scale = Fraction(1)
    rows = []
    for r in a:
        d = lcm(*(Fraction(x).denominator for x in r))
        rows.append([int(Fraction(x) * d) for x in r])
        scale /= d
    return bareiss_det(rows) * scale


def charpoly(a) -> list:
    """Characteristic polynomial det(xI - A), low degree first, via Faddeev-LeVerrier.

    Integer input stays in integers (every division is exact); otherwise
    Fractions are used.
    """
    n = len(a)
    integral = all(isinstance(x, int) or Fraction(x).denominator == 1 for r in a for x in r)
    a = [[int(x) if integral else Fraction(x) for x in r] for r in a]
    zero = 0 if integral else Fraction(0)
    coeffs = [zero] * (n + 1)
    coeffs[n] = zero + 1
    mk = [[zero] * n for _ in range(n)]
    am = mk
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I, and A M_k is reused for the trace
        mk = [row[:] for row in am]
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = _matmul(a, mk)
        tr = sum(am[i][i] for i in range(n))
        coeffs[n - k] = -(tr // k) if integral else -tr / k
    return coeffs


def _matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def hnf_lower(rows, n: int, modulus: int | None = None) -> list[list[int]]:
    """Canonical lower-triangular Hermite form of the lattice spanned by integer rows.

    Returns n rows; row i has a positive pivot in column i, zeros to the
    right, and entries left of the diagonal reduced into [0, pivot_j).  If
    modulus is given, modulus * Z^n is assumed to lie in the lattice and is
    used to keep entries small.  Raises ValueError if the rank is below n.
    """
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int] | None] = [None] * n
    for c in range(n - 1, -1, -1):
        piv = None
        rest = []
        if modulus is not None:
            # modulus * e_c joins only now, so earlier reductions mod modulus stay valid
            work.append([modulus if j == c else 0 for j in range(n)])
        for r in work:
            if r[c] == 0:
                rest.append(r)
                continue
            if piv is None:
                piv = r
                continue
            # extended gcd on the pair, keeping one row with zero in column c
            a, b = piv[c], r[c]
            g, x, y = _xgcd(a, b)
            new_piv = [x * u + y * v for u, v in zip(piv, r)]
            other = [(b // g) * u - (a // g) * v for u, v in zip(piv, r)]
            piv = new_piv
            if any(other):
                rest.append(other)
        if piv is None:
            raise ValueError("lattice is not of full rank")
        if piv[c] < 0:
            piv = [-u for u in piv]
        if modulus is not None:
            rest = [[u % modulus for u in r] for r in rest]
            piv = [u % modulus if j < c else u for j, u in enumerate(piv)]
        basis[c] = piv
        work = [r for r in rest if any(r)]
    # reduce entries left of the diagonal
    for i in range(n):
        for j in range(i - 1, -1, -1):
            q = basis[i][j] // basis[j][j]
            if q:
                basis[i] = [u - q * v for u, v in zip(basis[i], basis[j])]
    return basis


def _xgcd(a: int, b: int):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf_lower_q(rows, n: int, modulus_hint: int | None = None) -> list[list[Fraction]]:
    """Hermite form of a lattice given by rational rows.

    modulus_hint s promises s * Z^n inside the lattice (before scaling).
    """
    rows = [[Fraction(x) for x in r] for r in rows]
    d = lcm(*(x.denominator for r in rows for x in r)) if rows else 1
    ints = [[int(x * d) for x in r] for r in rows]
    mod = None if modulus_hint is None else modulus_hint * d
    h = hnf_lower(ints, n, mod)
    return [[Fraction(x, d) for x in r] for r in h]


def left_kernel_mod_p(rows, p: int) -> list[list[int]]:
    """Basis of {a : sum a_i rows[i] = 0 mod p}, as vectors over F_p."""
    k = len(rows)
    if k == 0:
        return []
    width = len(rows[0])
    # augment with identity to track combinations
    aug = [[x % p for x in r] + [1 if j == i else 0 for j in range(k)] for i, r in enumerate(rows)]
    prow = 0
    for c in range(width):
        sel = next((r for r in range(prow, k) if aug[r][c]), None)
        if sel is None:
            continue
        aug[prow], aug[sel] = aug[sel], aug[prow]
        inv = pow(aug[prow][c], -1, p)
        aug[prow] = [x * inv % p for x in aug[prow]]
        for r in range(k):
            if r != prow and aug[r][c]:
                f = aug[r][c]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[prow])]
        prow += 1
        if prow == k:
            break
    return [r[width:] for r in aug[prow:]]
