"""Seeded generators and small independent oracles shared by the tests.

The oracles here deliberately re-implement things the library also does
(rank, Sylvester determinants, pattern enumeration) with different,
simpler algorithms, so the tests never check the code against itself.
"""

from fractions import Fraction

from gridalgebra import GF, LaurentPoly, TorusConfig, UnimodularMatrix, ZZ


def random_torus(rng, kmax=6, lmax=6, max_symbols=4, symbols=None):
    k = rng.randint(1, kmax)
    l = rng.randint(1, lmax)
    if symbols is None:
        symbols = rng.sample(range(-4, 9), rng.randint(1, max_symbols))
    rows = [[rng.choice(symbols) for _ in range(k)] for _ in range(l)]
    return TorusConfig(rows)


def random_poly(rng, domain=ZZ, max_terms=5, span=2):
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            e = (rng.randint(-span, span), rng.randint(-span, span))
            terms[e] = rng.randint(-4, 4)
        f = LaurentPoly(domain, terms)
        if not f.is_zero:
            return f


def random_line_poly(rng, direction, domain=ZZ, max_points=4):
    """Line polynomial supported on multiples of the direction, with the
    smallest support point at the origin."""
    npts = rng.randint(2, max_points)
    js = sorted(rng.sample(range(0, 5), npts))
    js = [j - js[0] for j in js]
    terms = {
        (j * direction[0], j * direction[1]): rng.choice([-3, -2, -1, 1, 2, 3]) for j in js
    }
    return LaurentPoly(domain, terms)


def random_triangle_poly(rng, domain=ZZ):
    """Cofactor whose Newton polygon is a genuine triangle (never a line
    factor: a triangle has no parallel edge pair)."""
    while True:
        pts = {(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(3)}
        if len(pts) != 3:
            continue
        (ax, ay), (bx, by), (cx, cy) = sorted(pts)
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) != 0:
            return LaurentPoly(domain, {p: rng.choice([-2, -1, 1, 2, 3]) for p in pts})


def random_unimodular(rng, steps=4):
    m = UnimodularMatrix.identity()
    for _ in range(steps):
        t = rng.randint(-3, 3)
        shear = ((1, t), (0, 1)) if rng.random() < 0.5 else ((1, 0), (t, 1))
        m = m @ UnimodularMatrix(shear)
        if rng.random() < 0.3:
            m = m @ UnimodularMatrix(((0, 1), (1, 0)))
    return m


# -- independent linear algebra ------------------------------------------


def fraction_rank(matrix):
    """Rank by plain rational Gauss-Jordan elimination."""
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows:
        return 0
    rank = 0
    for c in range(len(rows[0])):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def fp_nullspace(rows, ncols, p):
    """Kernel basis of an F_p matrix by Gauss-Jordan elimination."""
    rows = [r[:] for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p != 0:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    pivot_of = {c: i for i, c in enumerate(pivots)}
    for free in range(ncols):
        if free in pivot_of:
            continue
        v = [0] * ncols
        v[free] = 1
        for c, i in pivot_of.items():
            v[c] = (-rows[i][free]) % p
        basis.append(v)
    return basis


def fp_torus_annihilated_by(polys, k, l, p, rng):
    """Random nonzero k x l torus over F_p annihilated by every given
    polynomial (wraparound convolution), or None if only zero works."""
    rows = []
    for f in polys:
        for uy in range(l):
            for ux in range(k):
                row = [0] * (k * l)
                for (vx, vy), c in f.terms.items():
                    i, j = (ux - vx) % k, (uy - vy) % l
                    row[j * k + i] = (row[j * k + i] + c) % p
                rows.append(row)
    basis = fp_nullspace(rows, k * l, p)
    if not basis:
        return None
    for _ in range(20):
        coefs = [rng.randrange(p) for _ in basis]
        vec = [sum(cf * b[i] for cf, b in zip(coefs, basis)) % p for i in range(k * l)]
        if any(vec):
            break
    else:
        vec = basis[0]
    return TorusConfig([[vec[j * k + i] for i in range(k)] for j in range(l)])


# -- independent Sylvester-determinant oracle over F_p --------------------


def _uni_mul_fp(a, b, p):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = (out.get(e1 + e2, 0) + c1 * c2) % p
    return {e: c for e, c in out.items() if c}


def _det_laplace_fp(mat, p):
    n = len(mat)
    if n == 1:
        return dict(mat[0][0])
    out = {}
    for j in range(n):
        if not mat[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = _uni_mul_fp(mat[0][j], _det_laplace_fp(minor, p), p)
        sign = 1 if j % 2 == 0 else p - 1
        for e, c in term.items():
            out[e] = (out.get(e, 0) + sign * c) % p
    return {e: c for e, c in out.items() if c}


def sylvester_resultant_oracle_fp(f, g, var, p):
    """Resultant eliminating ``var`` as a dict {other-var exponent: coeff},
    via an explicit Sylvester matrix and Laplace expansion."""

    def coeff_list(h):
        vi, oi = var - 1, 2 - var
        lo = min(e[vi] for e in h.terms)
        hi = max(e[vi] for e in h.terms)
        out = [dict() for _ in range(hi - lo + 1)]
        for e, c in h.terms.items():
            out[e[vi] - lo][e[oi]] = c % p
        return out

    fc, gc = coeff_list(f), coeff_list(g)
    n, m = len(fc) - 1, len(gc) - 1
    size = n + m
    mat = [[{} for _ in range(size)] for _ in range(size)]
    for i in range(m):
        for j, c in enumerate(reversed(fc)):
            mat[i][i + j] = c
    for i in range(n):
        for j, c in enumerate(reversed(gc)):
            mat[m + i][i + j] = c
    return _det_laplace_fp(mat, p)


def poly_fp_as_uni_dict(r, var_other):
    """Library Laurent polynomial (supported on one axis) as {exp: coeff}."""
    oi = var_other - 1
    return {e[oi]: c for e, c in r.terms.items()}


def random_fp_poly_with_both_vars(rng, p, span=2, max_terms=5):
    """Nonzero F_p polynomial whose support has positive extent in both
    variables (so resultants are defined)."""
    dom = GF(p)
    while True:
        f = random_poly(rng, dom, max_terms=max_terms, span=span)
        e1 = {e[0] for e in f.terms}
        e2 = {e[1] for e in f.terms}
        if len(e1) > 1 and len(e2) > 1:
            return f


def brute_force_torus_patterns(torus, shape):
    """Independent pattern enumeration: raw tuples, no library types."""
    out = set()
    for ty in range(torus.l):
        for tx in range(torus.k):
            out.add(
                tuple(
                    torus.rows[(ty + cy) % torus.l][(tx + cx) % torus.k]
                    for (cx, cy) in shape.cells
                )
            )
    return out
