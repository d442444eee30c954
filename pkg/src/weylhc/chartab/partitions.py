"""Partitions, beta-sets and Murnaghan-Nakayama recursions."""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from collections import Counter

Partition = tuple[int, ...]


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order ((n) first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    """Ordered pairs (alpha, beta) with |alpha| + |beta| = n; ((n), ()) first."""
    out = []
    for a in range(n, -1, -1):
        for alpha in partitions(a):
            for beta in partitions(n - a):
                out.append((alpha, beta))
    return out


def centralizer_order(cycle_type: Partition) -> int:
    """|C_{S_n}(w)| for w of the given cycle type."""
    counts = Counter(cycle_type)
    return prod(k**m * factorial(m) for k, m in counts.items())


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for part in la if part > i) for i in range(la[0]))


def format_partition(la: Partition) -> str:
    return "[" + ",".join(str(x) for x in la) + "]"


def _beta(la: Partition) -> tuple[int, ...]:
    k = len(la)
    return tuple(la[i] + (k - 1 - i) for i in range(k))


def _from_beta(beads) -> Partition:
    beads = sorted(beads, reverse=True)
    k = len(beads)
    return tuple(p for p in (beads[i] - (k - 1 - i) for i in range(k)) if p > 0)


def rim_hooks(la: Partition, r: int) -> list[tuple[Partition, int]]:
    """All (la minus an r-rim hook, leg length) pairs, via bead moves on the beta-set."""
    beads = set(_beta(la))
    out = []
    for b in sorted(beads, reverse=True):
        if b - r < 0 or (b - r) in beads:
            continue
        leg = sum(1 for x in beads if b - r < x < b)
        out.append((_from_beta((beads - {b}) | {b - r}), leg))
    return out


@lru_cache(maxsize=None)
def mn_character(la: Partition, mu: Partition) -> int:
    """chi^la at a permutation of cycle type mu (Murnaghan-Nakayama)."""
    if not mu:
        return 1 if not la else 0
    r, rest = mu[0], mu[1:]
    total = 0
    for smaller, leg in rim_hooks(la, r):
        total += (-1) ** leg * mn_character(smaller, rest)
    return total


@lru_cache(maxsize=None)
def mn_bicharacter(alpha: Partition, beta: Partition, pos: Partition, neg: Partition) -> int:
    """chi^(alpha;beta) of the hyperoctahedral group at signed cycle type (pos; neg).

    A cycle of length r is removed as an r-rim hook from either alpha or beta;
    removals from beta pick up the cycle's sign.
    """
    if not pos and not neg:
        return 1 if not alpha and not beta else 0
    if pos:
        r, sign, pos, neg = pos[0], 1, pos[1:], neg
    else:
        r, sign, pos, neg = neg[0], -1, pos, neg[1:]
    total = 0
    for smaller, leg in rim_hooks(alpha, r):
        total += (-1) ** leg * mn_bicharacter(smaller, beta, pos, neg)
    for smaller, leg in rim_hooks(beta, r):
        total += sign * (-1) ** leg * mn_bicharacter(alpha, smaller, pos, neg)
    return total


def cycle_type(perm: list[int]) -> Partition:
    """Cycle type of a permutation given as an image list."""
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        n, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def signed_cycle_type(images: list[int], signs: list[int]) -> tuple[Partition, Partition]:
    """(positive cycles, negative cycles) of the signed permutation e_i -> signs[i] e_images[i]."""
    seen = [False] * len(images)
    pos, neg = [], []
    for i in range(len(images)):
        if seen[i]:
            continue
        n, j, s = 0, i, 1
        while not seen[j]:
            seen[j] = True
            s *= signs[j]
            j = images[j]
            n += 1
        (pos if s > 0 else neg).append(n)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))
