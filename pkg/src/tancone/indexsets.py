"""Index combinatorics for the Lagrangian Grassmannian.

Fixed-point indices are strictly increasing d-tuples drawn from
{1, ..., 2d}.  ``I(d, 2d)`` is the full set of d-subsets; the isotropic
subset ``I(d)`` consists of those v with v and v* disjoint, where
j* = 2d+1-j.  All functions work with plain sorted tuples of ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

Index = tuple[int, ...]


def star(j: int, d: int) -> int:
    """Mirror index j* = 2d+1-j.  Involution on [1, 2d]."""
    if not 1 <= j <= 2 * d:
        raise ValueError(f"index {j} outside [1, {2 * d}]")
    return 2 * d + 1 - j


def star_set(v, d: int) -> Index:
    """Apply ``star`` to every entry, returning a sorted tuple."""
    return tuple(sorted(star(j, d) for j in v))


def is_isotropic(v, d: int) -> bool:
    """True when v is disjoint from its own mirror v*."""
    return not set(v) & set(star_set(v, d))


@lru_cache(maxsize=None)
def enumerate_indices(d: int, ambient_only: bool = False) -> tuple[Index, ...]:
    """All of I(d,2d) (``ambient_only``) or its isotropic subset I(d).

    Lexicographic order; cached since the sets are reused constantly.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    allsets = combinations(range(1, 2 * d + 1), d)
    if ambient_only:
        return tuple(allsets)
    return tuple(v for v in allsets if is_isotropic(v, d))


def parse_index(text: str, d: int) -> Index:
    """Parse the textual form "1,3" into a validated tuple."""
    try:
        entries = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse index {text!r}") from None
    if len(entries) != d:
        raise ValueError(f"index {text!r} must have {d} entries")
    if list(entries) != sorted(set(entries)):
        raise ValueError(f"index {text!r} must be strictly increasing")
    if entries and not (1 <= entries[0] and entries[-1] <= 2 * d):
        raise ValueError(f"index {text!r} has entries outside [1, {2 * d}]")
    return entries


def format_index(v) -> str:
    return ",".join(str(j) for j in v)


def bruhat_leq(v, w) -> bool:
    """Componentwise order on sorted tuples: v <= w iff v_i <= w_i."""
    if len(v) != len(w):
        raise ValueError("cannot compare indices of different lengths")
    return all(a <= b for a, b in zip(v, w))


def join_meet(v, w) -> tuple[Index, Index]:
    """Componentwise (max, min) of two sorted tuples; both stay sorted."""
    if len(v) != len(w):
        raise ValueError("cannot combine indices of different lengths")
    join = tuple(max(a, b) for a, b in zip(v, w))
    meet = tuple(min(a, b) for a, b in zip(v, w))
    return join, meet


def sharp(theta, d: int) -> Index:
    """The involution theta -> (complement of theta)* on I(d,2d).

    Its fixed points are exactly the isotropic indices.
    """
    comp = [j for j in range(1, 2 * d + 1) if j not in set(theta)]
    return star_set(comp, d)


@dataclass(frozen=True)
class AdmissiblePair:
    """A pair top >= bot in I(d) realised by a sharp-orbit {theta, theta#}.

    ``rep`` is the lexicographically smaller orbit representative; the
    minor attached to the pair is computed from it.
    """

    top: Index
    bot: Index
    rep: Index
    d: int

    @property
    def orbit(self) -> tuple[Index, Index]:
        return (self.rep, sharp(self.rep, self.d))

    def beta_degree(self, beta) -> int:
        return len(set(self.rep) - set(beta))

    def is_diagonal(self) -> bool:
        return self.top == self.bot


@lru_cache(maxsize=None)
def admissible_pairs(d: int) -> tuple[AdmissiblePair, ...]:
    """One AdmissiblePair per distinct (join, meet) of a sharp-orbit.

    From d = 4 on, distinct orbits can share their (join, meet) pair (the
    orbit minors then satisfy one linear relation on the Grassmannian),
    so pairs are deduplicated by their ends and the orbit with the lex
    smallest representative is kept as canonical.  Lex order of reps.
    """
    by_ends: dict[tuple[Index, Index], Index] = {}
    seen = set()
    for theta in enumerate_indices(d, ambient_only=True):
        if theta in seen:
            continue
        mate = sharp(theta, d)
        seen.add(theta)
        seen.add(mate)
        rep = min(theta, mate)
        ends = join_meet(theta, mate)
        if ends not in by_ends or rep < by_ends[ends]:
            by_ends[ends] = rep
    return tuple(
        AdmissiblePair(top=top, bot=bot, rep=rep, d=d)
        for (top, bot), rep in sorted(by_ends.items(), key=lambda kv: kv[1])
    )


@lru_cache(maxsize=None)
def admissible_pair_by_ends(d: int) -> dict[tuple[Index, Index], AdmissiblePair]:
    """Lookup (top, bot) -> pair.  Not every top >= bot is admissible."""
    return {(p.top, p.bot): p for p in admissible_pairs(d)}


def pair_leq(w1: AdmissiblePair, w2: AdmissiblePair) -> bool:
    """Order used in standard-monomial chains: w1 <= w2 iff top(w1) <= bot(w2)."""
    return bruhat_leq(w1.top, w2.bot)
