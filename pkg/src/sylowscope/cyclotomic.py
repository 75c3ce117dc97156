"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are sparse rational coefficient dictionaries over the reduced power
basis zeta_n^0 .. zeta_n^{phi(n)-1} (reduction modulo the n-th cyclotomic
polynomial).  No floating point is used anywhere; equality across different
moduli goes through promotion to a common modulus, and hashing through a
canonical minimal-conductor form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import BadParameters, NotAUnit
from .numutil import divisors, euler_phi, factorint, lcm

_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first."""
    if n == 1:
        return (-1, 1)
    # iterated exact division of x^n - 1 by Phi_d for proper divisors d
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in divisors(n)[:-1]:
        poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd]
        if c == 0:
            continue
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> dict[int, dict[int, int]]:
    """x^j mod Phi_n as sparse integer dicts, for phi(n) <= j < n."""
    phi = euler_phi(n)
    rows: dict[int, dict[int, int]] = {}
    if phi == n:  # n == 1
        return rows
    poly = cyclotomic_polynomial(n)
    top = {j: -poly[j] for j in range(phi) if poly[j]}  # x^phi = -(lower part)
    rows[phi] = top
    cur = top
    for j in range(phi + 1, n):
        nxt: dict[int, int] = {}
        for e, c in cur.items():
            if e + 1 == phi:
                for e2, c2 in top.items():
                    nxt[e2] = nxt.get(e2, 0) + c * c2
            else:
                nxt[e + 1] = nxt.get(e + 1, 0) + c
        cur = {e: c for e, c in nxt.items() if c}
        rows[j] = cur
    return rows


def reduction_coeff_bound(n: int) -> int:
    """Max |coeff| over all reduction rows of Phi_n (1 for prime powers)."""
    rows = _reduction_rows(n)
    best = 1
    for row in rows.values():
        for c in row.values():
            best = max(best, abs(c))
    return best


def _reduce(coeffs: dict[int, Fraction], n: int) -> dict[int, Fraction]:
    """Reduce exponents modulo n, then modulo Phi_n; drop zeros."""
    phi = euler_phi(n)
    rows = _reduction_rows(n)
    out: dict[int, Fraction] = {}
    for e, c in coeffs.items():
        if not c:
            continue
        e %= n
        if e < phi:
            out[e] = out.get(e, _ZERO) + c
        else:
            for e2, c2 in rows[e].items():
                out[e2] = out.get(e2, _ZERO) + c * c2
    return {e: c for e, c in out.items() if c}


class Cyclotomic:
    """Exact element of Q(zeta_n), immutable."""

    __slots__ = ("n", "coeffs", "_canon")

    def __init__(self, n: int, coeffs: dict[int, Fraction] | None = None,
                 _reduced: bool = False):
        if n < 1:
            raise BadParameters(f"modulus must be positive, got {n}")
        self.n = int(n)
        raw = {int(e): Fraction(c) for e, c in (coeffs or {}).items()}
        self.coeffs = raw if _reduced else _reduce(raw, self.n)
        self._canon = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n: int = 1) -> "Cyclotomic":
        return Cyclotomic(n, {})

    @staticmethod
    def rational(value, n: int = 1) -> "Cyclotomic":
        return Cyclotomic(n, {0: Fraction(value)})

    @staticmethod
    def root_of_unity(n: int, k: int = 1) -> "Cyclotomic":
        return Cyclotomic(n, {k % n: Fraction(1)})

    # -- ring operations ----------------------------------------------------

    def _common(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic", int]:
        if self.n == other.n:
            return self, other, self.n
        m = lcm(self.n, other.n)
        return self.promote(m), other.promote(m), m

    def promote(self, m: int) -> "Cyclotomic":
        """Rewrite in Q(zeta_m) for a multiple m of the modulus."""
        if m == self.n:
            return self
        if m % self.n:
            raise BadParameters(f"{m} is not a multiple of modulus {self.n}")
        scale = m // self.n
        return Cyclotomic(m, {e * scale: c for e, c in self.coeffs.items()})

    def __add__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        a, b, m = self._common(other)
        out = dict(a.coeffs)
        for e, c in b.coeffs.items():
            out[e] = out.get(e, _ZERO) + c
        return Cyclotomic(m, {e: c for e, c in out.items() if c}, _reduced=True)

    def __radd__(self, other) -> "Cyclotomic":
        return self.__add__(other)

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, {e: -c for e, c in self.coeffs.items()}, _reduced=True)

    def __sub__(self, other) -> "Cyclotomic":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Cyclotomic":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Cyclotomic":
        other = _coerce(other)
        a, b, m = self._common(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, _ZERO) + c1 * c2
        return Cyclotomic(m, out)

    def __rmul__(self, other) -> "Cyclotomic":
        return self.__mul__(other)

    def galois(self, k: int) -> "Cyclotomic":
        """Field automorphism zeta_n -> zeta_n^k, for k a unit mod n."""
        if gcd(k, self.n) != 1:
            raise NotAUnit(f"{k} is not a unit modulo {self.n}")
        return Cyclotomic(self.n, {e * k: c for e, c in self.coeffs.items()})

    def conj(self) -> "Cyclotomic":
        return self.galois(self.n - 1) if self.n > 1 else self

    # -- predicates and canonical form ----------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return all(e == 0 for e in self.coeffs)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise BadParameters("value is not rational")
        return self.coeffs.get(0, _ZERO)

    def canonical(self) -> "Cyclotomic":
        """Equivalent value at its minimal conductor (never 2 mod 4)."""
        if self._canon is not None:
            return self._canon
        cur = self
        changed = True
        while changed:
            changed = False
            if not cur.coeffs:
                cur = Cyclotomic(1, {}, _reduced=True)
                break
            if cur.n == 1:
                break
            for q in sorted(factorint(cur.n)):
                down = _descend(cur, q)
                if down is not None:
                    cur = down
                    changed = True
                    break
        self._canon = cur
        cur._canon = cur
        return cur

    def conductor(self) -> int:
        return self.canonical().n

    # -- comparisons -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b, _ = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.n, tuple(sorted(c.coeffs.items()))))

    def key(self) -> tuple:
        """Hashable total-order key of the canonical form."""
        c = self.canonical()
        return (c.n, tuple(sorted(c.coeffs.items())))

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        phi = euler_phi(self.n)
        dense = []
        for e in range(phi):
            c = self.coeffs.get(e, _ZERO)
            dense.append([c.numerator, c.denominator])
        return {"n": self.n, "coeffs": dense}

    @staticmethod
    def from_json(data: dict) -> "Cyclotomic":
        n = int(data["n"])
        coeffs = {
            e: Fraction(num, den)
            for e, (num, den) in enumerate(data["coeffs"])
            if num
        }
        return Cyclotomic(n, coeffs, _reduced=True)

    def complex_value(self, prec: int = 50):
        """Numeric evaluation via mpmath; diagnostic only, never an oracle."""
        import mpmath

        with mpmath.workdps(prec):
            z = mpmath.mpc(0)
            for e, c in self.coeffs.items():
                z += mpmath.mpf(c.numerator) / c.denominator * mpmath.root(1, self.n, e)
            return z

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Cyc(0)"
        terms = " + ".join(
            f"{c}*z{self.n}^{e}" if e else str(c)
            for e, c in sorted(self.coeffs.items())
        )
        return f"Cyc({terms})"


def _coerce(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.rational(x)
    raise TypeError(f"cannot coerce {type(x)} to Cyclotomic")


def _descend(v: Cyclotomic, q: int) -> Cyclotomic | None:
    """Try to rewrite v in Q(zeta_{n/q}); None if v is not in that subfield."""
    n = v.n
    m = n // q
    if m % q == 0:
        # q^2 | n: embedded basis monomials are exactly those with q | exponent
        if any(e % q for e in v.coeffs):
            return None
        return Cyclotomic(m, {e // q: c for e, c in v.coeffs.items()}, _reduced=True)
    # q exactly divides n: split off the zeta_q tensor factor
    if m == 1:
        # n = q prime: rational iff supported on exponent 0 after reduction,
        # except the all-equal case zeta summing to a rational via Phi_q
        if all(e == 0 for e in v.coeffs):
            return Cyclotomic(1, {0: v.coeffs.get(0, _ZERO)}, _reduced=True)
        return None
    u = pow(m, -1, q)
    w = pow(q, -1, m)
    # zeta_n^j = zeta_q^{ju mod q} * zeta_m^{jw mod m}
    tensor: dict[tuple[int, int], Fraction] = {}
    for e, c in v.coeffs.items():
        b, a = (e * u) % q, (e * w) % m
        if b == q - 1:
            # zeta_q^{q-1} = -(1 + zeta_q + ... + zeta_q^{q-2})
            for b2 in range(q - 1):
                key = (b2, a)
                tensor[key] = tensor.get(key, _ZERO) - c
        else:
            key = (b, a)
            tensor[key] = tensor.get(key, _ZERO) + c
    by_b: dict[int, dict[int, Fraction]] = {}
    for (b, a), c in tensor.items():
        if c:
            by_b.setdefault(b, {})[a] = c
    reduced_by_b = {b: _reduce(coef, m) for b, coef in by_b.items()}
    if any(b != 0 and coef for b, coef in reduced_by_b.items()):
        return None
    return Cyclotomic(m, reduced_by_b.get(0, {}), _reduced=True)


# -- rationality ------------------------------------------------------------------


@dataclass
class RationalityData:
    """Galois data of a value tuple inside Q(zeta_n)."""

    n: int
    feit_number: int
    field_degree: int
    _stab_mod_feit: tuple[int, ...] = field(repr=False, default=())

    @property
    def stabilizer(self) -> list[int]:
        """All units mod n fixing the tuple (can be large; computed lazily)."""
        f = self.feit_number
        allowed = set(self._stab_mod_feit)
        return [
            u for u in range(1, self.n + 1)
            if gcd(u, self.n) == 1 and (f == 1 or (u % f) in allowed)
        ]


def rationality(values, n: int) -> RationalityData:
    """Stabilizer / field degree / Feit number of a value tuple in Q(zeta_n)."""
    vals = [v.promote(n) if v.n != n else v for v in values]
    canons = [v.canonical() for v in vals]
    f = 1
    for c in canons:
        f = lcm(f, c.n)
    if n % f:
        raise BadParameters(f"conductor {f} does not divide the modulus {n}")
    lifted = [c.promote(f) for c in canons]
    stab = tuple(
        u for u in range(1, f + 1)
        if gcd(u, f) == 1 and all(v.galois(u) == v for v in lifted)
    )
    degree = euler_phi(f) // len(stab) if f > 1 else 1
    return RationalityData(n=n, feit_number=f, field_degree=degree,
                           _stab_mod_feit=stab)


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.root_of_unity(n, k)
