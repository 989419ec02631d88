"""Exact class counting. Everything here is plain Python integers.

For k dividing n, p_count(n, k) = k! * (n/k)**k is the number of solutions
of the shift equation with left exponent k, h_count(n, k) is the number of
equivalence classes attached to any single graph vertex with first
coordinate k, and q_count(n) sums h over the divisors weighted by how many
vertices carry each divisor. Divisions in the recursion must come out exact;
a remainder means a bug upstream and raises InexactDivision rather than
rounding anything over.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import NamedTuple

from .class_graph import GammaGraph, build_gamma, tau
from .zn_ring import divisors, is_prime, totient

__all__ = [
    "Column",
    "CountTable",
    "InexactDivision",
    "NotPrime",
    "count_table",
    "h_count",
    "p_count",
    "predicted_size_histogram",
    "q_count",
    "q_prime",
    "wilson_check",
]


class InexactDivision(ArithmeticError):
    """A count formula left a remainder; never rounded over."""


class NotPrime(ValueError):
    pass


def p_count(n: int, k: int) -> int:
    """Solutions of the left-exponent-k shift equation: k! * (n/k)**k."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k < 1 or n % k:
        raise ValueError(f"k={k} must be a divisor of n={n}")
    return factorial(k) * (n // k) ** k


def _h_values(n: int, g: GammaGraph, ks: list[int]) -> dict[int, int]:
    """h for every k in ks (ascending and closed under divisors), shared memo."""
    memo: dict[int, int] = {}
    for k in ks:
        if k == 1:
            memo[1] = 1
            continue
        lower = sum(r * tau(g, k, r) * memo[r] for r in divisors(k)[:-1])
        numerator = factorial(k - 1) * (n // k) ** (k - 1) - lower
        q, rem = divmod(numerator, k)
        if rem:
            raise InexactDivision(
                f"h({n},{k}) = {numerator}/{k} leaves remainder {rem}")
        memo[k] = q
    return memo


def h_count(n: int, k: int, g: GammaGraph | None = None) -> int:
    """Classes attached to one graph vertex with first coordinate k."""
    if n < 1 or k < 1 or n % k:
        raise ValueError(f"k={k} must be a divisor of n={n}")
    if g is None:
        g = build_gamma(n)
    elif g.n != n:
        raise ValueError(f"graph is for n={g.n}, not n={n}")
    return _h_values(n, g, divisors(k))[k]


class Column(NamedTuple):
    k: int
    phi: int      # totient(n/k) = number of vertices with first coordinate k
    h: int        # classes per such vertex
    product: int  # phi * h


@dataclass(frozen=True)
class CountTable:
    """Per-divisor tally whose grand total is the class count for n."""

    n: int
    columns: tuple[Column, ...]
    total: int

    def to_text(self) -> str:
        labels = ("k|n", "phi(n/k)", "h(n,k)", "phi*h")
        rows = [
            [str(c.k) for c in self.columns],
            [str(c.phi) for c in self.columns],
            [str(c.h) for c in self.columns],
            [str(c.product) for c in self.columns],
        ]
        label_w = max(len(s) for s in labels)
        widths = [max(len(rows[r][j]) for r in range(4))
                  for j in range(len(self.columns))]
        lines = [
            label.ljust(label_w) + "  " +
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths))
            for label, row in zip(labels, rows)
        ]
        lines.append(f"|Q_{self.n}| = {self.total}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        # counts grow fast, so they travel as decimal strings
        doc = {
            "n": self.n,
            "columns": [
                {"k": c.k, "phi": str(c.phi), "h": str(c.h),
                 "product": str(c.product)}
                for c in self.columns
            ],
            "total": str(self.total),
        }
        return json.dumps(doc)


def count_table(n: int) -> CountTable:
    """The full tally for n: one column per divisor, graph built once."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    g = build_gamma(n)
    ks = divisors(n)
    h = _h_values(n, g, ks)
    cols = []
    for k in ks:
        phi = totient(n // k)
        cols.append(Column(k, phi, h[k], phi * h[k]))
    return CountTable(n, tuple(cols), sum(c.product for c in cols))


def q_count(n: int) -> int:
    """Number of equivalence classes of S_n under two-sided shift powers."""
    return count_table(n).total


def predicted_size_histogram(n: int) -> dict[int, int]:
    """Class sizes with multiplicities implied by the tally.

    A vertex with first coordinate k < n carries classes of size k*n, and
    the maximal vertex carries the relation-free classes of size n*n.
    """
    hist: dict[int, int] = {}
    for col in count_table(n).columns:
        size = col.k * n if col.k < n else n * n
        if col.product:
            hist[size] = hist.get(size, 0) + col.product
    return dict(sorted(hist.items()))


def q_prime(n: int) -> int:
    """Closed form for prime n: ((n-1)! + (n-1)**2) / n.

    The division is exact precisely because n is prime (Wilson), so a
    remainder is impossible for valid input and raises if it ever appears.
    """
    if not is_prime(n):
        raise NotPrime(f"{n} is not prime")
    numerator = factorial(n - 1) + (n - 1) ** 2
    q, rem = divmod(numerator, n)
    if rem:
        raise InexactDivision(
            f"({n-1})! + ({n-1})^2 = {numerator} not divisible by {n}")
    return q


def wilson_check(n: int) -> bool:
    """True when (n-1)! + 1 == 0 mod n, which holds exactly for primes."""
    if n < 2:
        raise ValueError(f"wilson_check needs n >= 2, got {n}")
    acc = 1
    for i in range(2, n):
        acc = acc * i % n
    return (acc + 1) % n == 0
