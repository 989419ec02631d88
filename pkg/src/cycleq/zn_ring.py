"""Arithmetic in {1..n} under mod-n operations, where n itself stands for zero.

Everything downstream indexes residues by values in the window {1..n} instead
of the usual {0..n-1}: exponents of an n-cycle only matter mod n, and writing
the zero class as n keeps divisors, graph vertices and one-line permutation
images in the same value range. This module also carries the divisor and
totient helpers the counting layer needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt  # gcd is re-exported on purpose; no point rewriting it

__all__ = [
    "ZnElement",
    "divisors",
    "gcd",
    "is_prime",
    "prime_factors",
    "residue",
    "set_sieve_limit",
    "totient",
    "zn",
    "zn_add",
    "zn_mul",
    "zn_sub",
]


def residue(x: int, n: int) -> int:
    """Representative of x mod n inside {1..n}; the zero class maps to n."""
    r = x % n
    return n if r == 0 else r


@dataclass(frozen=True)
class ZnElement:
    """A residue in {1..n} together with its modulus."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be at least 1, got {self.modulus}")
        if not 1 <= self.value <= self.modulus:
            raise ValueError(
                f"value {self.value} outside 1..{self.modulus}; "
                "use zn() to normalize arbitrary integers"
            )

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


def zn(value: int, modulus: int) -> ZnElement:
    """Element for an arbitrary integer, normalized into {1..modulus}."""
    return ZnElement(residue(value, modulus), modulus)


def _common_modulus(a: ZnElement, b: ZnElement) -> int:
    if a.modulus != b.modulus:
        raise ValueError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
    return a.modulus


def zn_mul(a: ZnElement, b: ZnElement) -> ZnElement:
    n = _common_modulus(a, b)
    return ZnElement(residue(a.value * b.value, n), n)


def zn_add(a: ZnElement, b: ZnElement) -> ZnElement:
    n = _common_modulus(a, b)
    return ZnElement(residue(a.value + b.value, n), n)


def zn_sub(a: ZnElement, b: ZnElement) -> ZnElement:
    n = _common_modulus(a, b)
    return ZnElement(residue(a.value - b.value, n), n)


# ---------------------------------------------------------------------------
# divisors, primes, totient
# ---------------------------------------------------------------------------

def divisors(n: int) -> list[int]:
    """All divisors of n in ascending order, 1 and n included."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending. prime_factors(1) == []."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


# Euler's phi: values up to the sieve limit come from a one-time table,
# anything larger falls back to direct factorization.
_sieve_limit = 10_000
_phi_table: list[int] | None = None


def set_sieve_limit(limit: int) -> None:
    """Resize the totient sieve; the table is rebuilt lazily on next use."""
    global _sieve_limit, _phi_table
    if limit < 1:
        raise ValueError(f"sieve limit must be positive, got {limit}")
    _sieve_limit = limit
    _phi_table = None


def _build_phi_table() -> list[int]:
    phi = list(range(_sieve_limit + 1))
    for p in range(2, _sieve_limit + 1):
        if phi[p] == p:  # untouched so far, hence prime
            for m in range(p, _sieve_limit + 1, p):
                phi[m] -= phi[m] // p
    return phi


def totient(m: int) -> int:
    """Euler's totient; totient(1) == 1."""
    global _phi_table
    if m < 1:
        raise ValueError(f"totient is defined for positive integers, got {m}")
    if m <= _sieve_limit:
        if _phi_table is None:
            _phi_table = _build_phi_table()
        return _phi_table[m]
    result = m
    for p in prime_factors(m):
        result = result // p * (p - 1)
    return result
