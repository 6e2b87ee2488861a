"""Elementary integer routines: square-free tests, factorization, two-square splits.

Square-free testing and square-free parts use trial division with a 2-3-5
wheel up to the cube root of the (shrinking) cofactor: once every prime
below the cube root is removed, the cofactor is 1, p, p^2, or pq, so a
perfect-square check settles square-freeness.  This keeps family values of
size ~1e20 within desk-scale reach without a factorization backend.
"""

from __future__ import annotations

from math import gcd, isqrt

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def _divisor_candidates():
    """2, 3, 5 and the 2-3-5 wheel, unbounded ascending."""
    yield 2
    yield 3
    yield 5
    d = 7
    i = 0
    while True:
        yield d
        d += _WHEEL[i]
        i = (i + 1) % 8


def factorize(n: int) -> dict[int, int]:
    """Complete prime factorization of |n| by trial division (desk scale)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    if n > 10**14:
        raise ValueError(f"refusing to trial-factor {n} completely")
    out: dict[int, int] = {}
    for p in _divisor_candidates():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_squarefree(n: int) -> bool:
    """True iff n is square-free (n != 0)."""
    n = abs(n)
    if n == 0:
        return False
    for p in _divisor_candidates():
        if p * p * p > n:
            break
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
    if n == 1:
        return True
    # all prime factors of the cofactor exceed its cube root: 1, p, p^2 or pq
    r = isqrt(n)
    return r * r != n


def squarefree_part(n: int) -> int:
    """The square-free integer d with n = d * (perfect square), sign preserved."""
    if n == 0:
        raise ValueError("0 has no square-free part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    part = 1
    for p in _divisor_candidates():
        if p * p * p > n:
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2 == 1:
            part *= p
    r = isqrt(n)
    if r * r != n:
        part *= n  # cofactor is p or pq, square-free
    return sign * part


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _divisor_candidates():
        if p * p > n:
            return True
        if n % p == 0:
            return n == p
    return True


def two_squares(d: int) -> list[tuple[int, int]]:
    """All ordered pairs (b, c) of positive integers with b*b + c*c == d."""
    out = []
    for b in range(1, isqrt(d - 1) + 1):
        c2 = d - b * b
        c = isqrt(c2)
        if c >= 1 and c * c == c2:
            out.append((b, c))
    return out


def prime_two_square_split(r: int) -> tuple[int, int]:
    """Split a prime r = 5 (mod 8) as r1^2 + r2^2 with r1 odd, r2 = 2 (mod 4)."""
    if r % 8 != 5 or not is_prime(r):
        raise ValueError(f"{r} is not a prime congruent to 5 mod 8")
    for b, c in two_squares(r):
        if b % 2 == 1:
            assert c % 4 == 2
            return b, c
    raise AssertionError("unreachable: every prime 1 mod 4 is a sum of two squares")


def pairwise_coprime(values) -> bool:
    vals = [abs(v) for v in values]
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if gcd(vals[i], vals[j]) != 1:
                return False
    return True
