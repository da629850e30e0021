"""Coloured permutations and their substring/prefix reversals.

An m-coloured permutation on n letters is a pair (chi, psi): psi is a
permutation of {1, ..., n} written in one-line notation and chi assigns
each position a colour in {0, ..., m-1}.  We render elements in coloured
one-line notation, e.g. ``(2^1, 1^0, 3^2)`` for psi = (2, 1, 3),
chi = (1, 0, 2).

A substring reversal flips a contiguous block of the one-line notation
and shifts every colour inside the block by +1 or -1 (mod m); a prefix
reversal is the special case where the block starts at position 1 (a
"pancake flip").  Positions in this API are 1-based, matching one-line
notation; storage is 0-based internally.

The module also provides a rank/unrank bijection between elements and
integers in [0, m^n * n!), used as vertex indices by the graph layer:
the permutation's lexicographic (Lehmer) rank occupies the high digits
and the colours form a little-endian base-m number below it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "GroupParams",
    "ColouredPermutation",
    "identity_element",
    "substring_reversal",
    "prefix_reversal",
    "compose",
    "rank",
    "unrank",
    "permutation_rank",
    "permutation_unrank",
    "validate_element",
]


@dataclass(frozen=True)
class GroupParams:
    """Number of colours ``m`` and number of letters ``n``."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"number of colours m must be a positive integer, got {self.m!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"number of letters n must be a positive integer, got {self.n!r}")

    @property
    def order(self) -> int:
        """Number of coloured permutations, m**n * n!."""
        return self.m ** self.n * math.factorial(self.n)


@dataclass(frozen=True)
class ColouredPermutation:
    """A coloured permutation in one-line notation.

    ``psi[t]`` is the letter at position t+1 and ``chi[t]`` its colour.
    Instances are immutable and hashable, so they can be used as dict
    keys and shared freely between workers.
    """

    chi: tuple[int, ...]
    psi: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ", ".join(f"{v}^{c}" for v, c in zip(self.psi, self.chi)) + ")"


def validate_element(sigma: ColouredPermutation, p: GroupParams) -> None:
    """Raise ValueError unless ``sigma`` is a valid element for (m, n)."""
    if len(sigma.psi) != p.n or len(sigma.chi) != p.n:
        raise ValueError(
            f"element has {len(sigma.psi)} letters / {len(sigma.chi)} colours, expected n={p.n}"
        )
    if sorted(sigma.psi) != list(range(1, p.n + 1)):
        raise ValueError(f"psi={sigma.psi} is not a permutation of 1..{p.n}")
    bad = [c for c in sigma.chi if not (isinstance(c, int) and 0 <= c < p.m)]
    if bad:
        raise ValueError(f"colours {bad} lie outside 0..{p.m - 1}")


def identity_element(p: GroupParams) -> ColouredPermutation:
    """The identity: psi(t) = t and chi(t) = 0 for all t."""
    return ColouredPermutation((0,) * p.n, tuple(range(1, p.n + 1)))


def _check_shift(eps: int) -> None:
    if eps not in (1, -1):
        raise ValueError(f"colour shift must be +1 or -1, got {eps!r}")


def substring_reversal(sigma: ColouredPermutation, i: int, j: int, eps: int,
                       p: GroupParams) -> ColouredPermutation:
    """Reverse positions i..j (1-based, inclusive) and shift their colours.

    The letter that ends up at position t (for i <= t <= j) is the one
    that was at position i+j-t, and its colour is increased by ``eps``
    modulo m.  Positions outside [i, j] are untouched.
    """
    _check_shift(eps)
    n = len(sigma.psi)
    if not (1 <= i <= j <= n):
        raise ValueError(f"positions must satisfy 1 <= i <= j <= n={n}, got i={i}, j={j}")
    a, b = i - 1, j - 1
    m = p.m
    psi = list(sigma.psi)
    chi = list(sigma.chi)
    for t in range(a, b + 1):
        s = a + b - t
        psi[t] = sigma.psi[s]
        chi[t] = (sigma.chi[s] + eps) % m
    return ColouredPermutation(tuple(chi), tuple(psi))


def prefix_reversal(sigma: ColouredPermutation, k: int, eps: int,
                    p: GroupParams) -> ColouredPermutation:
    """Flip the length-k prefix: reverse positions 1..k and shift their colours."""
    n = len(sigma.psi)
    if not (1 <= k <= n):
        raise ValueError(f"prefix length must satisfy 1 <= k <= n={n}, got k={k}")
    return substring_reversal(sigma, 1, k, eps, p)


def compose(a: ColouredPermutation, b: ColouredPermutation,
            p: GroupParams) -> ColouredPermutation:
    """Group multiplication a*b, where b acts on positions first, then a.

    With this convention, applying the prefix reversal r to sigma's
    one-line notation equals ``compose(sigma, r_applied_to_identity)``.
    Used only for consistency checks; the graph layer applies reversals
    directly.
    """
    validate_element(a, p)
    validate_element(b, p)
    psi = tuple(a.psi[b.psi[t] - 1] for t in range(p.n))
    chi = tuple((a.chi[b.psi[t] - 1] + b.chi[t]) % p.m for t in range(p.n))
    return ColouredPermutation(chi, psi)


@lru_cache(maxsize=None)
def _factorials(n: int) -> tuple[int, ...]:
    out = [1]
    for k in range(1, n + 1):
        out.append(out[-1] * k)
    return tuple(out)


def permutation_rank(psi: tuple[int, ...]) -> int:
    """Lexicographic rank of a one-line permutation of 1..n (identity -> 0)."""
    n = len(psi)
    fact = _factorials(n)
    r = 0
    for t in range(n):
        smaller_later = sum(1 for s in range(t + 1, n) if psi[s] < psi[t])
        r += smaller_later * fact[n - 1 - t]
    return r


def permutation_unrank(r: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`permutation_rank` for permutations of 1..n."""
    fact = _factorials(n)
    if not 0 <= r < fact[n]:
        raise ValueError(f"permutation rank {r} out of range [0, {fact[n]})")
    remaining = list(range(1, n + 1))
    out = []
    for t in range(n):
        d, r = divmod(r, fact[n - 1 - t])
        out.append(remaining.pop(d))
    return tuple(out)


def rank(sigma: ColouredPermutation, p: GroupParams) -> int:
    """Vertex index of ``sigma``: permutation rank above base-m colour digits.

    rank = permutation_rank(psi) * m**n + sum_t chi(t) * m**(t-1).
    """
    if len(sigma.psi) != p.n or len(sigma.chi) != p.n:
        raise ValueError(f"element size {len(sigma.psi)} does not match n={p.n}")
    colour_val = 0
    for c in reversed(sigma.chi):
        colour_val = colour_val * p.m + c
    return permutation_rank(sigma.psi) * p.m ** p.n + colour_val


def unrank(v: int, p: GroupParams) -> ColouredPermutation:
    """Inverse of :func:`rank`; rejects indices outside [0, m**n * n!)."""
    order = p.order
    if not 0 <= v < order:
        raise ValueError(f"vertex index {v} out of range [0, {order})")
    perm_r, colour_val = divmod(v, p.m ** p.n)
    chi = []
    for _ in range(p.n):
        colour_val, c = divmod(colour_val, p.m)
        chi.append(c)
    return ColouredPermutation(tuple(chi), permutation_unrank(perm_r, p.n))
