"""Constructive solving of sigma^k * xi == xi * sigma^l for a full cycle sigma.

The base case k = 1 is solvable exactly when GCD(l, n) = 1, and then one
anchor value xi(1) = a determines everything through the recursion
xi(sigma^j(1)) = sigma^(j*l)(a). For general k the points {1..n} split into
k blocks, the orbits of sigma^k, and a solution is one choice of a distinct
target block plus an anchor value per block; that makes k! * (n/k)**k
solutions, enumerated here in a fixed lexicographic order. Every permutation
handed back has been checked against the equation by direct composition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .permutation import (
    Permutation,
    canonical_sigma,
    compose,
    identity,
    is_full_cycle,
    power,
)

__all__ = [
    "BlockPartition",
    "EquationInstance",
    "InvalidParameters",
    "NoSolution",
    "block_partition",
    "check_parameters",
    "enumerate_solutions",
    "min_left_exponent",
    "solve_base",
]


class NoSolution(ValueError):
    """The base equation has no solution for this right exponent."""


class InvalidParameters(ValueError):
    """(k, l) is not a valid solution family; carries the failed condition."""


def _require_cycle(n: int, sigma: Permutation) -> None:
    if sigma.degree != n:
        raise ValueError(f"sigma has degree {sigma.degree}, expected {n}")
    if n > 1 and not is_full_cycle(sigma):
        raise ValueError(f"sigma must be a full cycle, got {sigma}")


@dataclass(frozen=True)
class EquationInstance:
    """One equation sigma^k * xi == xi * sigma^l over S_n."""

    n: int
    k: int
    l: int
    sigma: Permutation = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not (1 <= self.k <= self.n and 1 <= self.l <= self.n):
            raise ValueError(
                f"exponents must lie in 1..{self.n}, got k={self.k}, l={self.l}")
        if self.sigma is None:
            object.__setattr__(self, "sigma", canonical_sigma(self.n))
        _require_cycle(self.n, self.sigma)


@dataclass(frozen=True)
class BlockPartition:
    """Orbits of sigma^k on {1..n}: k blocks of n/k points each.

    blocks[i] lists the orbit of anchors[i] in orbit order, and anchors[i]
    is the least point not covered by the earlier blocks (anchors[0] == 1).
    """

    k: int
    blocks: tuple[tuple[int, ...], ...]
    anchors: tuple[int, ...]


def block_partition(n: int, k: int, sigma: Permutation | None = None) -> BlockPartition:
    if n < 1 or k < 1 or n % k:
        raise ValueError(f"k={k} must be a divisor of n={n}")
    sigma = canonical_sigma(n) if sigma is None else sigma
    _require_cycle(n, sigma)
    sig_k = power(sigma, k)
    covered = [False] * (n + 1)
    blocks, anchors = [], []
    for _ in range(k):
        m = next(i for i in range(1, n + 1) if not covered[i])
        anchors.append(m)
        block = []
        pos = m
        for _ in range(n // k):
            block.append(pos)
            covered[pos] = True
            pos = sig_k(pos)
        blocks.append(tuple(block))
    return BlockPartition(k, tuple(blocks), tuple(anchors))


def _check_solves(sigma: Permutation, k: int, l: int, xi: Permutation) -> None:
    # construction is never trusted: re-verify by explicit composition
    if compose(power(sigma, k), xi) != compose(xi, power(sigma, l)):
        raise RuntimeError(
            f"constructed {xi} fails sigma^{k} * xi == xi * sigma^{l}")


def solve_base(n: int, l: int, a: int, sigma: Permutation | None = None) -> Permutation:
    """One solution of sigma * xi == xi * sigma^l with xi(1) == a.

    Solvable exactly when GCD(l, n) == 1; raises NoSolution otherwise.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if l < 1:
        raise ValueError(f"l must be positive, got {l}")
    if not 1 <= a <= n:
        raise ValueError(f"anchor a={a} outside 1..{n}")
    sigma = canonical_sigma(n) if sigma is None else sigma
    _require_cycle(n, sigma)
    if gcd(l, n) != 1:
        raise NoSolution(
            f"sigma * xi == xi * sigma^{l} unsolvable in S_{n}: "
            f"GCD({l},{n}) = {gcd(l, n)}")
    sig_l = power(sigma, l)
    images = [0] * n
    pos, val = 1, a
    for _ in range(n):
        images[pos - 1] = val
        pos = sigma(pos)
        val = sig_l(val)
    xi = Permutation(tuple(images))
    _check_solves(sigma, 1, l, xi)
    return xi


def check_parameters(n: int, k: int, l: int) -> str | None:
    """Diagnostic naming the first failed solvability condition, else None.

    Valid families are (n, n), the trivial equation satisfied by all of S_n,
    and pairs with 1 <= k <= l < n where k divides both n and l and l is
    s*k mod n for some s coprime to n.
    """
    if k == n and l == n:
        return None
    if not (1 <= k <= l < n):
        return f"need 1 <= k <= l < n (or k = l = n), got k={k}, l={l}"
    if n % k:
        return f"k={k} does not divide n={n}"
    if l % k:
        return f"k={k} does not divide l={l}"
    if not any(gcd(s, n) == 1 and s * k % n == l for s in range(1, n)):
        return f"l={l} is not s*k mod {n} for any s coprime to {n}"
    return None


def enumerate_solutions(inst: EquationInstance) -> list[Permutation]:
    """Every solution of the instance, in a fixed deterministic order.

    The result has exactly k! * (n/k)**k members. Invalid (k, l) raises
    InvalidParameters with the failed condition spelled out.
    """
    n, k, l, sigma = inst.n, inst.k, inst.l, inst.sigma
    reason = check_parameters(n, k, l)
    if reason is not None:
        raise InvalidParameters(reason)
    if k == n:
        # sigma^n is the identity on both sides, so everything solves it
        return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]

    part = block_partition(n, k, sigma)
    sig_k = power(sigma, k)
    sig_l = power(sigma, l)
    targets = [tuple(sorted(b)) for b in part.blocks]
    span = n // k
    out = []
    for assignment in itertools.permutations(range(k)):
        for choice in itertools.product(*(targets[t] for t in assignment)):
            images = [0] * n
            for anchor, val in zip(part.anchors, choice):
                pos = anchor
                for _ in range(span):
                    images[pos - 1] = val
                    pos = sig_k(pos)
                    val = sig_l(val)
            xi = Permutation(tuple(images))
            _check_solves(sigma, k, l, xi)
            out.append(xi)
    return out


def min_left_exponent(xi: Permutation,
                      sigma: Permutation | None = None) -> tuple[int, int] | None:
    """Least k in 1..n-1 with sigma^k * xi == xi * sigma^l for some l.

    Returns the pair (k, l); the l is unique for that k. Returns None when
    no such pair exists, which is the relation-free case.
    """
    n = xi.degree
    sigma = canonical_sigma(n) if sigma is None else sigma
    _require_cycle(n, sigma)
    pow_sigma = [identity(n)]
    for _ in range(n - 1):
        pow_sigma.append(compose(pow_sigma[-1], sigma))
    for k in range(1, n):
        left = compose(pow_sigma[k], xi)
        for l in range(1, n):
            if left == compose(xi, pow_sigma[l]):
                return (k, l)
    return None
