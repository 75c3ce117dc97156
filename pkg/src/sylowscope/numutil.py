"""Small exact number-theory helpers (all arguments are desk-scale)."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt


def factorint(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"factorint expects n >= 1, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def euler_phi(n: int) -> int:
    out = 1
    for p, k in factorint(n).items():
        out *= (p - 1) * p ** (k - 1)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors in increasing order."""
    divs = [1]
    for p, k in factorint(n).items():
        divs = [d * p**i for d in divs for i in range(k + 1)]
    return sorted(divs)


def p_part(n: int, p: int) -> tuple[int, int]:
    """Split n = n_p * n_p' with n_p the p-power part."""
    if n < 1:
        raise ValueError(f"p_part expects n >= 1, got {n}")
    np_ = 1
    while n % p == 0:
        n //= p
        np_ *= p
    return np_, n


def valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@lru_cache(maxsize=None)
def primitive_root(q: int) -> int:
    """Primitive root mod q for q in {2, 4, p^k, 2p^k} (p odd prime)."""
    if q in (1, 2):
        return 1
    if q == 4:
        return 3
    phi = euler_phi(q)
    prime_factors = list(factorint(phi))
    for g in range(2, q):
        if gcd(g, q) != 1:
            continue
        if all(pow(g, phi // f, q) != 1 for f in prime_factors):
            return g
    raise ValueError(f"no primitive root mod {q}")


@lru_cache(maxsize=None)
def unit_group_generators(n: int) -> tuple[int, ...]:
    """Generators of (Z/n)^*, lifted through the CRT decomposition."""
    if n <= 2:
        return ()
    gens: list[int] = []
    fac = factorint(n)
    for p, k in fac.items():
        q = p**k
        rest = n // q
        if p == 2:
            local = [3, 5] if k >= 3 else ([3] if k == 2 else [])
        else:
            local = [primitive_root(q)]
        for g in local:
            # g mod q, 1 mod rest
            if rest == 1:
                gens.append(g % n)
            else:
                inv_q = pow(q, -1, rest)
                inv_r = pow(rest, -1, q)
                gens.append((g * rest * inv_r + 1 * q * inv_q) % n)
    return tuple(g for g in gens if g != 1)


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo an odd prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def next_prime_congruent(modulus: int, residue: int, lower_bound: int) -> int:
    """Least prime > lower_bound that is congruent to residue mod modulus."""
    n = lower_bound + 1
    n += (residue - n) % modulus
    while not is_prime(n):
        n += modulus
    return n


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def integer_sqrt_exact(n: int) -> int | None:
    r = isqrt(n)
    return r if r * r == n else None
