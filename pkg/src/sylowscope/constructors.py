"""Concrete permutation realizations of the group families under study.

Presentation-defined families (the metacyclic and non-metacyclic minimal
non-abelian series) are realized on small faithful point sets derived from
their normal forms rather than on the regular representation, which would
blow the degree cap for the largest members.  Every constructor asserts the
predicted order, so a wrong realization cannot survive silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import BadParameters, NotAnAutomorphism, UnknownName
from .group import DEFAULT_CAP, Group, Perm
from .numutil import factorint, is_prime


@dataclass(frozen=True)
class MnaDescriptor:
    """Classification tag for a minimal non-abelian p-group."""

    kind: str  # "Gamma" | "Delta" | "Q8"
    p: int
    a: int
    b: int

    def __post_init__(self):
        if self.kind == "Gamma" and not (self.a >= 2 and self.b >= 1):
            raise BadParameters(f"Gamma requires a>=2, b>=1, got {self}")
        if self.kind == "Delta" and not (self.a >= self.b >= 1):
            raise BadParameters(f"Delta requires a>=b>=1, got {self}")
        if self.kind == "Q8" and self.p != 2:
            raise BadParameters("Q8 requires p=2")

    def predicted_order(self) -> int:
        if self.kind == "Gamma":
            return self.p ** (self.a + self.b)
        if self.kind == "Delta":
            return self.p ** (self.a + self.b + 1)
        return 8


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise BadParameters(f"{p} is not prime")


def cyclic(n: int, cap: int = DEFAULT_CAP) -> Group:
    if n < 1:
        raise BadParameters("cyclic order must be >= 1")
    if n == 1:
        return Group([], 1, name="C1", cap=cap)
    images = (np.arange(n, dtype=np.int32) + 1) % n
    g = Group([Perm(images)], name=f"C{n}", cap=cap)
    assert g.order == n
    return g


def elementary_abelian(p: int, k: int, cap: int = DEFAULT_CAP) -> Group:
    _require_prime(p)
    if k < 1:
        raise BadParameters("rank must be >= 1")
    gens = []
    for i in range(k):
        im = np.arange(p * k, dtype=np.int32)
        blk = np.arange(p) + i * p
        im[blk] = np.roll(blk, -1)
        gens.append(Perm(im))
    g = Group(gens, name=f"C{p}^{k}", cap=cap)
    assert g.order == p**k
    return g


def dihedral(order: int, cap: int = DEFAULT_CAP) -> Group:
    if order < 2 or order % 2:
        raise BadParameters(f"dihedral order must be even >= 2, got {order}")
    n = order // 2
    if n == 1:
        return cyclic(2, cap)
    if n == 2:
        g = elementary_abelian(2, 2, cap)
        g.name = "D4"
        return g
    rot = (np.arange(n, dtype=np.int32) + 1) % n
    ref = (-np.arange(n, dtype=np.int32)) % n
    g = Group([Perm(rot), Perm(ref)], name=f"D{order}", cap=cap)
    assert g.order == order
    return g


def semidihedral(order: int, cap: int = DEFAULT_CAP) -> Group:
    fac = factorint(order)
    if set(fac) != {2} or fac[2] < 4:
        raise BadParameters(f"semidihedral order must be 2^n with n>=4, got {order}")
    m = order // 2
    k = m // 2 - 1  # r s r = s^(2^(n-2)-1)
    rot = (np.arange(m, dtype=np.int32) + 1) % m
    ref = (np.arange(m, dtype=np.int32) * k) % m
    g = Group([Perm(rot), Perm(ref)], name=f"SD{order}", cap=cap)
    assert g.order == order
    return g


def generalized_quaternion(order: int, cap: int = DEFAULT_CAP) -> Group:
    fac = factorint(order)
    if set(fac) != {2} or fac[2] < 3:
        raise BadParameters(f"quaternion order must be 2^n with n>=3, got {order}")
    m = order // 2  # x has order m; s^2 = x^(m/2); s x s^-1 = x^-1
    # regular action on pairs (i, e) = x^i s^e, point index i + m*e
    def act(i1, e1):
        im = np.empty(order, dtype=np.int32)
        for e2 in range(2):
            for i2 in range(m):
                if e1 == 0:
                    j, f = (i1 + i2) % m, e2
                else:
                    j, f = (i1 - i2) % m, 1 - e2
                    if e2 == 1:  # s^2 = x^(m/2)
                        j = (j + m // 2) % m
                src = i2 + m * e2
                im[src] = j + m * f
        return Perm(im)

    g = Group([act(1, 0), act(0, 1)], name=f"Q{order}", cap=cap)
    assert g.order == order
    return g


def q8(cap: int = DEFAULT_CAP) -> Group:
    g = generalized_quaternion(8, cap)
    g.name = "Q8"
    return g


def gamma(p: int, a: int, b: int, cap: int = DEFAULT_CAP) -> Group:
    """Metacyclic minimal non-abelian group: x^(p^a), y^(p^b), x^y = x^(1+p^(a-1))."""
    _require_prime(p)
    if a < 2 or b < 1:
        raise BadParameters(f"gamma requires a>=2, b>=1, got a={a}, b={b}")
    pa, pb = p**a, p**b
    if pa + pb > 4096 or pa * pb > cap:
        raise BadParameters(f"gamma({p},{a},{b}) exceeds caps")
    u = 1 + p ** (a - 1)
    ax = np.concatenate([(np.arange(pa) + 1) % pa, pa + np.arange(pb)])
    ay = np.concatenate([(np.arange(pa) * u) % pa, pa + (np.arange(pb) + 1) % pb])
    g = Group([Perm(ax.astype(np.int32)), Perm(ay.astype(np.int32))],
              name=f"Gamma({p};{a},{b})", cap=cap)
    assert g.order == pa * pb
    return g


def delta(p: int, a: int, b: int, cap: int = DEFAULT_CAP) -> Group:
    """Non-metacyclic minimal non-abelian group of order p^(a+b+1)."""
    _require_prime(p)
    if not a >= b >= 1:
        raise BadParameters(f"delta requires a>=b>=1, got a={a}, b={b}")
    pa, pb = p**a, p**b
    order = pa * pb * p
    degree = pa + pb * p
    if degree > 4096 or order > cap:
        raise BadParameters(f"delta({p},{a},{b}) exceeds caps")

    # points: block A = cosets of <y,z> labelled i < p^a;
    # block B = cosets of <x> labelled (j, c) with j < p^b, c < p
    def bpt(j, c):
        return pa + (j % pb) * p + (c % p)

    ax = np.arange(degree, dtype=np.int32)
    ax[:pa] = (np.arange(pa) + 1) % pa
    for j in range(pb):
        for c in range(p):
            ax[bpt(j, c)] = bpt(j, c + j)
    ay = np.arange(degree, dtype=np.int32)
    for j in range(pb):
        for c in range(p):
            ay[bpt(j, c)] = bpt(j + 1, c)
    g = Group([Perm(ax), Perm(ay)], name=f"Delta({p};{a},{b})", cap=cap)
    assert g.order == order
    return g


def extraspecial(p: int, exponent: str = "p", cap: int = DEFAULT_CAP) -> Group:
    """Extraspecial group of order p^3 with the named exponent ('p' or 'p2')."""
    _require_prime(p)
    if p == 2:
        g = dihedral(8, cap) if exponent == "p" else q8(cap)
        return g
    if exponent == "p":
        g = delta(p, 1, 1, cap)
        g.name = f"ES({p}^3,exp {p})"
    elif exponent == "p2":
        g = gamma(p, 2, 1, cap)
        g.name = f"ES({p}^3,exp {p}^2)"
    else:
        raise BadParameters("exponent must be 'p' or 'p2'")
    return g


def direct_product(g1: Group, g2: Group, name: str | None = None,
                   cap: int = DEFAULT_CAP) -> Group:
    d1, d2 = g1.degree, g2.degree
    gens = []
    for a in g1.generators:
        gens.append(Perm(np.concatenate([a.images, d1 + np.arange(d2, dtype=np.int32)])))
    for b in g2.generators:
        gens.append(Perm(np.concatenate([np.arange(d1, dtype=np.int32), d1 + b.images])))
    g = Group(gens, degree=d1 + d2, name=name or f"{g1.name}x{g2.name}", cap=cap)
    assert g.order == g1.order * g2.order
    return g


def _hom_from_generator_images(n: Group, images: list[Perm]) -> np.ndarray:
    """Index map of the endomorphism of ``n`` sending generators to ``images``.

    Raises NotAnAutomorphism unless the map is a well-defined bijective
    homomorphism (verified on the whole multiplication action).
    """
    if len(images) != len(n.generators):
        raise NotAnAutomorphism("one image per generator required")
    order = n.order
    phi = np.full(order, -1, dtype=np.int64)
    phi[0] = 0
    img_idx = [n.index_of(im) for im in images]
    # BFS with parent tracking in enumeration order
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(n.generators):
                y = int(n.mul_rows(np.array([x], dtype=np.int64), g.images)[0])
                if phi[y] < 0:
                    phi[y] = int(n.mul_rows(np.array([phi[x]], dtype=np.int64),
                                            n.elements[img_idx[gi]])[0])
                    nxt.append(y)
        frontier = nxt
    if (phi < 0).any():
        raise NotAnAutomorphism("generator images do not reach the whole group")
    if len(set(phi.tolist())) != order:
        raise NotAnAutomorphism("map is not bijective")
    # full multiplicativity check: phi(x*g) == phi(x)*phi(g) for all x, gens g
    allx = np.arange(order, dtype=np.int64)
    for gi, g in enumerate(n.generators):
        lhs = phi[n.mul_rows(allx, g.images)]
        rhs = n.mul_rows(phi[allx], n.elements[img_idx[gi]])
        if not np.array_equal(lhs, rhs):
            raise NotAnAutomorphism("generator images are not multiplicative")
    return phi


def semidirect(n: Group, h: Group, action: list[list[Perm]],
               name: str | None = None, cap: int = DEFAULT_CAP) -> Group:
    """Semidirect product N x| H; ``action[i]`` gives the images of N's
    generators under the automorphism assigned to H's generator i.

    Realized on |N| + degree(H) points: H generators act on the set of
    N-elements through their automorphisms, N generators by left
    translation.  The order assertion catches actions that do not satisfy
    H's relations.
    """
    order = n.order * h.order
    if order > cap:
        raise BadParameters("semidirect product exceeds cap")
    if n.order + h.degree > 4096:
        raise BadParameters("semidirect realization exceeds degree cap")
    autos = [_hom_from_generator_images(n, imgs) for imgs in action]
    nn, dh = n.order, h.degree
    gens = []
    for a in n.generators:
        left = n.lookup(a.images[n.elements])  # x -> a*x
        gens.append(Perm(np.concatenate([left.astype(np.int32),
                                         nn + np.arange(dh, dtype=np.int32)])))
    for hi, hgen in enumerate(h.generators):
        gens.append(Perm(np.concatenate([autos[hi].astype(np.int32),
                                         nn + hgen.images])))
    g = Group(gens, degree=nn + dh, name=name or f"{n.name}:{h.name}", cap=cap)
    if g.order != order:
        raise NotAnAutomorphism(
            f"action does not respect the relations of {h.name}: "
            f"got order {g.order}, expected {order}"
        )
    return g


def cyclic_wreath(p: int, cap: int = DEFAULT_CAP) -> Group:
    """C_p wr C_p on p^2 points (order p^(p+1), maximal class)."""
    _require_prime(p)
    deg = p * p
    base = np.arange(deg, dtype=np.int32)
    base[:p] = np.roll(np.arange(p), -1)
    top = ((np.arange(deg) + p) % deg).astype(np.int32)
    g = Group([Perm(base), Perm(top)], name=f"C{p}wrC{p}", cap=cap)
    assert g.order == p ** (p + 1)
    return g


# -- finite fields and matrix groups ----------------------------------------


class GF:
    """Tiny finite field GF(p^k) with dense add/mul tables (k <= 3)."""

    _POLYS = {4: (1, 1, 1), 8: (1, 1, 0, 1), 9: (1, 0, 1)}  # low-first, monic

    def __init__(self, q: int):
        fac = factorint(q)
        if len(fac) != 1:
            raise BadParameters(f"{q} is not a prime power")
        self.q = q
        (self.p, self.k), = fac.items()
        if self.k == 1:
            self.add = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            poly = self._POLYS[q]
            p, k = self.p, self.k

            def to_vec(x):
                return [(x // p**i) % p for i in range(k)]

            def from_vec(v):
                return sum(c * p**i for i, c in enumerate(v))

            def polymul(x, y):
                a, b = to_vec(x), to_vec(y)
                prod = [0] * (2 * k - 1)
                for i, ai in enumerate(a):
                    for j, bj in enumerate(b):
                        prod[i + j] = (prod[i + j] + ai * bj) % p
                for i in range(2 * k - 2, k - 1, -1):
                    c = prod[i]
                    if c:
                        prod[i] = 0
                        for j in range(k):
                            prod[i - k + j] = (prod[i - k + j] - c * poly[j]) % p
                return from_vec(prod[:k])

            self.add = [[from_vec([(xa + ya) % p for xa, ya in
                                   zip(to_vec(x), to_vec(y))])
                         for y in range(q)] for x in range(q)]
            self.mul = [[polymul(x, y) for y in range(q)] for x in range(q)]
        self.neg = [self.sub(0, a) for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul[a][b] == 1:
                    self.inv[a] = b
                    break

    def sub(self, a, b):
        for c in range(self.q):
            if self.add[b][c] == a:
                return c
        raise ArithmeticError

    def frob(self, a):
        # a -> a^p
        if a == 0:
            return 0
        res, r, e = 1, a, self.p
        while e:
            if e & 1:
                res = self.mul[res][r]
            r = self.mul[r][r]
            e >>= 1
        return res


def _mat_mul(F: GF, A, B):
    n = len(A)
    return tuple(
        tuple(
            _dot(F, [A[i][t] for t in range(n)], [B[t][j] for t in range(n)])
            for j in range(n)
        )
        for i in range(n)
    )


def _dot(F: GF, u, v):
    s = 0
    for a, b in zip(u, v):
        s = F.add[s][F.mul[a][b]]
    return s


def _mat_vec(F: GF, A, v):
    n = len(A)
    return tuple(_dot(F, A[i], v) for i in range(n))


def _matrix_group_on_points(F: GF, mats, points, name, cap,
                            projective: bool) -> Group:
    pt_index = {v: i for i, v in enumerate(points)}

    def normalize(v):
        if not projective:
            return v
        for c in v:
            if c:
                s = F.inv[c]
                return tuple(F.mul[s][x] for x in v)
        raise ArithmeticError("zero vector in projective point set")

    gens = []
    for M in mats:
        im = np.empty(len(points), dtype=np.int32)
        for i, v in enumerate(points):
            w = normalize(_mat_vec(F, M, v))
            im[i] = pt_index[w]
        gens.append(Perm(im))
    return Group(gens, degree=len(points), name=name, cap=cap)


def _vec_points(F: GF, dim: int, projective: bool):
    q = F.q
    all_vecs = []
    for code in range(q**dim):
        v = tuple((code // q**i) % q for i in range(dim))
        if any(v):
            all_vecs.append(v)
    if not projective:
        return all_vecs
    seen = set()
    reps = []
    for v in all_vecs:
        for c in v:
            if c:
                s = F.inv[c]
                w = tuple(F.mul[s][x] for x in v)
                break
        if w not in seen:
            seen.add(w)
            reps.append(w)
    return reps


def special_linear(q: int, projective: bool, cap: int = DEFAULT_CAP) -> Group:
    """SL(2,q) on nonzero vectors, or PSL(2,q) on the projective line."""
    F = GF(q)
    one, zero = 1, 0
    neg1 = F.neg[1]
    a = ((one, one), (zero, one))       # transvection
    b = ((zero, neg1), (one, zero))     # Weyl element
    mats = [a, b]
    if q > 3:
        lam = next(x for x in range(2, q)
                   if len({_pow(F, x, e) for e in range(q - 1)}) == q - 1)
        mats.append(((lam, zero), (zero, F.inv[lam])))
    pts = _vec_points(F, 2, projective)
    name = f"PSL(2,{q})" if projective else f"SL(2,{q})"
    g = _matrix_group_on_points(F, mats, pts, name, cap, projective)
    order = q * (q - 1) * (q + 1)
    if projective:
        order //= gcd(2, q - 1)
    assert g.order == order, (g.order, order)
    return g


def _sl3_gens(F: GF):
    z, o = 0, 1
    t = ((o, o, z), (z, o, z), (z, z, o))
    c = ((z, z, o), (o, z, z), (z, o, z))
    return [t, c]


def psl3(q: int, cap: int = DEFAULT_CAP) -> Group:
    """PSL(3,q) on projective points (q with gcd(3, q-1) = 1)."""
    F = GF(q)
    if gcd(3, q - 1) != 1:
        raise BadParameters("psl3 helper only handles gcd(3,q-1)=1")
    pts = _vec_points(F, 3, projective=True)
    g = _matrix_group_on_points(F, _sl3_gens(F), pts, f"PSL(3,{q})", cap, True)
    order = q**3 * (q**3 - 1) * (q**2 - 1)
    assert g.order == order, (g.order, order)
    return g


def psu3(q: int, cap: int = DEFAULT_CAP) -> Group:
    """PSU(3,q) on the q^3+1 isotropic projective points (gcd(3,q+1)=1)."""
    F = GF(q * q)
    if gcd(3, q + 1) != 1:
        raise BadParameters("psu3 helper only handles gcd(3,q+1)=1")
    frob = F.frob

    def herm(u, v):
        # <u, v> = u1 conj(v3) + u2 conj(v2) + u3 conj(v1)
        s = 0
        for i in range(3):
            s = F.add[s][F.mul[u[i]][frob(v[2 - i])]]
        return s

    pts = [v for v in _vec_points(F, 3, projective=True) if herm(v, v) == 0]
    assert len(pts) == q**3 + 1
    z, neg1 = 0, F.neg[1]
    # unitriangular u(c, b): rows ((1, -conj(c), b), (0, 1, c), (0, 0, 1))
    def root_elt(c, b):
        return ((1, F.neg[frob(c)], b), (z, 1, c), (z, z, 1))

    def trace(x):
        return F.add[x][frob(x)]

    roots = []
    for c in range(F.q):
        target = F.neg[F.mul[c][frob(c)]]
        for b in range(F.q):
            if trace(b) == target:
                roots.append(root_elt(c, b))
                break
    # torus and Weyl element
    lam = next(x for x in range(2, F.q)
               if len({_pow(F, x, e) for e in range(F.q - 1)}) == F.q - 1)
    torus = ((lam, z, z), (z, _pow(F, lam, 2), z), (z, z, _pow(F, lam, F.q - 1 - 3)))
    weyl = ((z, z, 1), (z, neg1, z), (1, z, z))
    mats = roots[:3] + [torus, weyl]
    g = _matrix_group_on_points(F, mats, pts, f"PSU(3,{q})", cap, True)
    order = q**3 * (q**3 + 1) * (q**2 - 1)
    assert g.order == order, (g.order, order)
    return g


def _pow(F: GF, x: int, e: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = F.mul[r][x]
        x = F.mul[x][x]
        e >>= 1
    return r


def gl32(cap: int = DEFAULT_CAP) -> Group:
    """GL(3,2) on the 7 nonzero vectors of F_2^3."""
    F = GF(2)
    pts = _vec_points(F, 3, projective=False)
    g = _matrix_group_on_points(F, _sl3_gens(F), pts, "GL(3,2)", cap, False)
    assert g.order == 168
    return g


def m9(cap: int = DEFAULT_CAP) -> Group:
    """M9 = C3^2 x| Q8 (Frobenius of order 72) on the 9 affine points."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    idx = {v: i for i, v in enumerate(pts)}

    def translation(dx, dy):
        return Perm(np.array([idx[((x + dx) % 3, (y + dy) % 3)]
                              for x, y in pts], dtype=np.int32))

    def linear(a, b, c, d):
        return Perm(np.array([idx[((a * x + b * y) % 3, (c * x + d * y) % 3)]
                              for x, y in pts], dtype=np.int32))

    g = Group(
        [translation(1, 0), translation(0, 1), linear(0, 2, 1, 0), linear(1, 1, 1, 2)],
        name="M9", cap=cap,
    )
    assert g.order == 72
    # Frobenius check: no nonidentity point stabilizer element fixes 2 points
    return g


def a4_semidirect_c4(cap: int = DEFAULT_CAP) -> Group:
    """A4 x| C4 of order 48, C4 acting as a transposition-type automorphism."""
    a4 = alternating(4, cap)
    tau = Perm(np.array([1, 0, 2, 3], dtype=np.int32))
    images = [Perm(tau.images[g.images][tau.inverse().images]) for g in a4.generators]
    g = semidirect(a4, cyclic(4, cap), [images], name="A4:C4", cap=cap)
    assert g.order == 48
    return g


def m9_semidirect_c9(cap: int = DEFAULT_CAP) -> Group:
    """M9 x| C9 of order 648; C9 induces an outer automorphism of order 3."""
    grp = m9(cap)
    pts = [(x, y) for x in range(3) for y in range(3)]
    idx = {v: i for i, v in enumerate(pts)}
    # order-3 outer automorphism: conjugation by the unipotent [[1,1],[0,1]]
    u = Perm(np.array([idx[((x + y) % 3, y)] for x, y in pts], dtype=np.int32))
    images = [Perm(u.images[g.images][u.inverse().images]) for g in grp.generators]
    g = semidirect(grp, cyclic(9, cap), [images], name="M9:C9", cap=cap)
    assert g.order == 648
    return g


def symmetric(n: int, cap: int = DEFAULT_CAP) -> Group:
    if n < 2:
        return Group([], max(n, 1), name=f"S{n}", cap=cap)
    swap = np.arange(n, dtype=np.int32)
    swap[[0, 1]] = [1, 0]
    cyc = np.roll(np.arange(n, dtype=np.int32), -1)
    g = Group([Perm(swap), Perm(cyc)], name=f"S{n}", cap=cap)
    return g


def alternating(n: int, cap: int = DEFAULT_CAP) -> Group:
    if n < 3:
        return Group([], max(n, 1), name=f"A{n}", cap=cap)
    three = np.arange(n, dtype=np.int32)
    three[[0, 1, 2]] = [1, 2, 0]
    if n % 2:
        big = np.roll(np.arange(n, dtype=np.int32), -1)
    else:
        big = np.arange(n, dtype=np.int32)
        big[1:] = np.roll(np.arange(1, n, dtype=np.int32), -1)
    g = Group([Perm(three), Perm(big)], name=f"A{n}", cap=cap)
    return g


def order_1944_pair(cap: int = DEFAULT_CAP) -> list[Group]:
    """The two C9^2 x| SL(2,3) groups from non-conjugate faithful actions.

    Searches GL(2, Z/9) for SL(2,3)-subgroups up to conjugacy; returns one
    semidirect product per conjugacy class (expected: exactly two).
    """
    mats = _gl2z9_elements()
    minus_i = ((8, 0), (0, 8))
    by_order4 = []
    order3 = []
    for m in mats:
        o, sq = _mat_order_z9(m)
        if o == 4 and sq == minus_i:
            by_order4.append(m)
        elif o == 3:
            order3.append(m)
    # find Q8 subgroups first: anticommuting order-4 pairs with square -I
    quaternion_subs: dict[frozenset, tuple] = {}
    for a in by_order4:
        ainv = _mat_inv_z9(a)
        for b in by_order4:
            if b in (a, ainv):
                continue
            if _mat_mul_z9(b, _mat_mul_z9(a, _mat_inv_z9(b))) == ainv:
                cl = _close_matrices([a, b], limit=9)
                if cl is not None and len(cl) == 8:
                    quaternion_subs.setdefault(frozenset(cl), (a, b))
    # extend by order-3 normalizing elements: Q8 x| C3 = the binary tetrahedral group
    subgroups: dict[frozenset, tuple] = {}
    for q8set, (a, b) in quaternion_subs.items():
        for t in order3:
            tinv = _mat_inv_z9(t)
            ta = _mat_mul_z9(t, _mat_mul_z9(a, tinv))
            tb = _mat_mul_z9(t, _mat_mul_z9(b, tinv))
            if ta in q8set and tb in q8set and ta != a:
                cl = _close_matrices([a, b, t], limit=25)
                if cl is not None and len(cl) == 24:
                    subgroups.setdefault(frozenset(cl), (a, t))
    # conjugacy classes of the found subgroups inside GL(2, Z/9)
    classes: list[tuple[frozenset, tuple]] = []
    seen: set[frozenset] = set()
    for key, gens in sorted(subgroups.items(), key=lambda kv: sorted(kv[0])):
        if key in seen:
            continue
        orbit = set()
        for g in mats:
            gi = _mat_inv_z9(g)
            conj = frozenset(_mat_mul_z9(_mat_mul_z9(g, m), gi) for m in key)
            orbit.add(conj)
        seen |= orbit
        classes.append((key, gens))
    out = []
    for i, (_, (a, t)) in enumerate(classes):
        out.append(_affine_z9_group([a, t], name=f"C9^2:SL(2,3)#{i + 1}", cap=cap))
    return out


def _gl2z9_elements():
    out = []
    for a in range(9):
        for b in range(9):
            for c in range(9):
                for d in range(9):
                    if (a * d - b * c) % 3:
                        out.append(((a, b), (c, d)))
    return out


def _mat_mul_z9(m1, m2):
    return tuple(
        tuple(sum(m1[i][t] * m2[t][j] for t in range(2)) % 9 for j in range(2))
        for i in range(2)
    )


def _mat_inv_z9(m):
    det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 9
    di = pow(det, -1, 9)
    return (
        ((m[1][1] * di) % 9, (-m[0][1] * di) % 9),
        ((-m[1][0] * di) % 9, (m[0][0] * di) % 9),
    )


def _mat_order_z9(m):
    ident = ((1, 0), (0, 1))
    cur = m
    sq = None
    for k in range(1, 40):
        if k == 2:
            sq = cur
        if cur == ident:
            return k, sq if k >= 2 else ident
        cur = _mat_mul_z9(cur, m)
    return 0, None


def _close_matrices(gens, limit):
    ident = ((1, 0), (0, 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _mat_mul_z9(x, g)
                if y not in seen:
                    if len(seen) >= limit:
                        return None
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _affine_z9_group(linear_gens, name, cap) -> Group:
    pts = [(x, y) for x in range(9) for y in range(9)]
    idx = {v: i for i, v in enumerate(pts)}
    gens = [
        Perm(np.array([idx[((x + 1) % 9, y)] for x, y in pts], dtype=np.int32)),
        Perm(np.array([idx[(x, (y + 1) % 9)] for x, y in pts], dtype=np.int32)),
    ]
    for m in linear_gens:
        gens.append(Perm(np.array(
            [idx[((m[0][0] * x + m[0][1] * y) % 9, (m[1][0] * x + m[1][1] * y) % 9)]
             for x, y in pts], dtype=np.int32)))
    g = Group(gens, degree=81, name=name, cap=cap)
    assert g.order == 1944, g.order
    return g


# -- named catalog -------------------------------------------------------------

_PRIME_POWERS_LE_13 = [2, 3, 4, 5, 7, 8, 9, 11, 13]


def named(name: str, cap: int = DEFAULT_CAP) -> Group:
    """Catalog of named groups used throughout the corpus."""
    key = name.replace(" ", "")
    if key in ("S3", "S4", "S5"):
        return symmetric(int(key[1:]), cap)
    if key in ("A4", "A5", "A6", "A7"):
        return alternating(int(key[1:]), cap)
    if key == "GL(3,2)":
        return gl32(cap)
    if key == "M9":
        return m9(cap)
    if key == "Q8":
        return q8(cap)
    if key == "PSL(3,3)":
        return psl3(3, cap)
    if key == "PSU(3,3)":
        return psu3(3, cap)
    if key == "A4:C4":
        return a4_semidirect_c4(cap)
    if key == "M9:C9":
        return m9_semidirect_c9(cap)
    if key.startswith("SL(2,") and key.endswith(")"):
        q = int(key[5:-1])
        if q in _PRIME_POWERS_LE_13:
            return special_linear(q, projective=False, cap=cap)
    if key.startswith("PSL(2,") and key.endswith(")"):
        q = int(key[6:-1])
        if q in _PRIME_POWERS_LE_13:
            return special_linear(q, projective=True, cap=cap)
    raise UnknownName(f"no catalog entry for {name!r}")
