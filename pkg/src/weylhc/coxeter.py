"""Finite Coxeter groups realised as permutations of their root systems.

Every element is stored as the permutation it induces on the full root
list (positive roots first, then their negatives in the same order).  The
action is faithful, so equality of elements is equality of rows; for
lookups an element is keyed by the images of the simple roots alone.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .rootdata import (
    CartanType,
    InvalidTypeError,
    RootDatum,
    build_root_datum,
    parse_cartan_type,
    recognize,
    enumerate_positive_roots,
    coxeter_matrix_from_cartan,
)

__all__ = [
    "DEFAULT_BOUND",
    "MAX_BOUND",
    "BoundExceededError",
    "CoxeterGroup",
    "ConjugacyClasses",
    "RelativeWeylGroup",
    "coxeter_group",
    "enumerate_group",
    "conjugacy_classes",
    "parabolic_subgroup",
    "relative_weyl_group",
    "normalizer_splitting_check",
    "predicted_order",
    "parse_parabolic",
]

log = logging.getLogger(__name__)

DEFAULT_BOUND = 200_000
MAX_BOUND = 10_000_000
DOCUMENTED_ONLY = {("E", 7), ("E", 8)}


class BoundExceededError(RuntimeError):
    """The group is larger than the configured enumeration bound."""

    def __init__(self, cartan_type, order: int, bound: int, reason: str = ""):
        self.cartan_type = cartan_type
        self.order = order
        self.bound = bound
        msg = reason or f"|W({cartan_type})| = {order} exceeds the enumeration bound {bound}"
        super().__init__(msg)


def _factorial(n):
    return math.factorial(n)


_ORDER_FORMULA = {
    "A": ("(n+1)!", lambda n, m: _factorial(n + 1)),
    "B": ("2^n n!", lambda n, m: 2**n * _factorial(n)),
    "C": ("2^n n!", lambda n, m: 2**n * _factorial(n)),
    "D": ("2^(n-1) n!", lambda n, m: 2 ** (n - 1) * _factorial(n)),
    "E": ("product of degrees", lambda n, m: {6: 51840, 7: 2903040, 8: 696729600}[n]),
    "F": ("product of degrees", lambda n, m: 1152),
    "G": ("2m", lambda n, m: 12),
    "H": ("product of degrees", lambda n, m: {3: 120, 4: 14400}[n]),
    "I": ("2m", lambda n, m: 2 * m),
}


def predicted_order(t: CartanType) -> int:
    return math.prod(_ORDER_FORMULA[c.family][1](c.rank, c.m) for c in t.components)


def resolve_bound(bound: int | None = None) -> int:
    """Explicit bound, else $WEYLHC_BOUND, else the default; capped at MAX_BOUND."""
    if bound is None:
        env = os.environ.get("WEYLHC_BOUND")
        bound = int(env) if env else DEFAULT_BOUND
    if bound < 1:
        raise ValueError("enumeration bound must be positive")
    return min(bound, MAX_BOUND)


def check_bound(t: CartanType, bound: int | None = None) -> int:
    bound = resolve_bound(bound)
    order = predicted_order(t)
    for c in t.components:
        if (c.family, c.rank) in DOCUMENTED_ONLY:
            raise BoundExceededError(
                t, order, bound,
                f"W({c}) has order {order} ({_ORDER_FORMULA['E'][0]}); E7 and E8 are documented-only "
                f"and never enumerated (bound {bound})",
            )
    if order > bound:
        raise BoundExceededError(t, order, bound)
    return order


@dataclass
class ConjugacyClasses:
    """Classes in canonical order: by minimal length, then by minimal element."""

    representatives: np.ndarray  # element indices
    sizes: np.ndarray
    class_of: np.ndarray  # element index -> class index

    def __len__(self):
        return len(self.representatives)

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(r), int(s)) for r, s in zip(self.representatives, self.sizes)]


class CoxeterGroup:
    """A finite Coxeter group with all of its elements enumerated.

    ``parent_labels[i]`` is the index of generator i in the group this one
    was cut out of (the identity map for a top-level group).
    """

    def __init__(self, datum: RootDatum, bound: int | None = None, parent_labels: Sequence[int] | None = None):
        self.datum = datum
        self.rank = datum.rank
        self.parent_labels = tuple(parent_labels) if parent_labels is not None else tuple(range(self.rank))
        self.cartan_type = datum.cartan_type
        self.bound = resolve_bound(bound)
        self._build_roots()
        self._enumerate()

    # -- construction ---------------------------------------------------
    def _build_roots(self):
        pos = list(self.datum.positive_roots)
        self.N = len(pos)
        neg = [tuple(-x for x in r) for r in pos]
        self.roots = pos + neg
        index = {r: k for k, r in enumerate(self.roots)}
        self.root_index = index
        n2 = 2 * self.N
        gens = np.empty((self.rank, n2), dtype=np.int32)
        for i in range(self.rank):
            for k, r in enumerate(self.roots):
                gens[i, k] = index[self.datum.reflect(i, r)]
        self.gens = gens
        self.simple_index = np.arange(self.rank)
        self._base = n2
        if n2 ** max(self.rank, 1) >= 2**62:
            raise InvalidTypeError("rank too large for element keys")
        self._weights = np.array([n2**j for j in range(self.rank)], dtype=np.int64)

    def _keys(self, perms: np.ndarray) -> np.ndarray:
        if perms.ndim == 1:
            perms = perms[None, :]
        return perms[:, : self.rank].astype(np.int64) @ self._weights

    def _enumerate(self):
        t = self.cartan_type
        if t.components:
            expected = check_bound(t, self.bound)
        else:
            expected = 1
        n2 = 2 * self.N
        dtype = np.int16 if n2 < 2**15 else np.int32
        ident = np.arange(n2, dtype=dtype)[None, :]
        levels = [ident]
        parents = [np.array([-1])]
        pgens = [np.array([-1])]
        offset = 0
        cur = ident
        while True:
            cand, par, gen = [], [], []
            for i in range(self.rank):
                mask = cur[:, i] < self.N
                if not mask.any():
                    continue
                rows = np.nonzero(mask)[0]
                cand.append(cur[rows][:, self.gens[i]])
                par.append(rows + offset)
                gen.append(np.full(len(rows), i))
            if not cand:
                break
            cand = np.concatenate(cand)
            par = np.concatenate(par)
            gen = np.concatenate(gen)
            keys = self._keys(cand)
            _, first = np.unique(keys, return_index=True)
            offset += len(cur)
            cur = cand[first].astype(dtype)
            levels.append(cur)
            parents.append(par[first])
            pgens.append(gen[first])
            if offset + len(cur) > self.bound:
                raise BoundExceededError(t, expected, self.bound)
        self.perms = np.concatenate(levels)
        self.parent = np.concatenate(parents)
        self.parent_gen = np.concatenate(pgens)
        self.lengths = np.concatenate([np.full(len(l), k) for k, l in enumerate(levels)])
        self.order = len(self.perms)
        if t.components and self.order != expected:
            raise AssertionError(f"enumerated {self.order} elements of W({t}), expected {expected}")
        keys = self._keys(self.perms)
        self._key_order = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._key_order]
        log.debug("enumerated W(%s): %d elements", t, self.order)

    # -- element access -------------------------------------------------
    def __len__(self):
        return self.order

    def __repr__(self):
        return f"CoxeterGroup({self.cartan_type}, order={self.order})"

    @property
    def identity(self) -> int:
        return 0

    def lookup(self, perms: np.ndarray) -> np.ndarray | int:
        """Element indices of one or many permutations; raises KeyError if absent."""
        single = perms.ndim == 1
        keys = self._keys(perms)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.order - 1)
        found = self._sorted_keys[pos] == keys
        if not found.all():
            raise KeyError("permutation is not an element of this group")
        idx = self._key_order[pos]
        return int(idx[0]) if single else idx

    def element(self, word: Iterable[int]) -> np.ndarray:
        """Permutation of s_{w1} s_{w2} ... (generators 0-based)."""
        perm = np.arange(2 * self.N)
        for i in word:
            perm = perm[self.gens[i]]
        return perm

    def index_of_word(self, word: Iterable[int]) -> int:
        return self.lookup(self.element(word))

    def word(self, index: int) -> tuple[int, ...]:
        """Reduced word (from the enumeration tree), generators 0-based."""
        out = []
        while index > 0:
            out.append(int(self.parent_gen[index]))
            index = int(self.parent[index])
        return tuple(reversed(out))

    def length(self, index: int) -> int:
        return int(self.lengths[index])

    def inversion_count(self, index: int) -> int:
        """Number of positive roots sent to negative roots."""
        return int((self.perms[index, : self.N] >= self.N).sum())

    @cached_property
    def inverses(self) -> np.ndarray:
        """Permutation array of all inverse elements (row k is the inverse of element k)."""
        inv = np.empty_like(self.perms)
        cols = np.broadcast_to(np.arange(self.perms.shape[1], dtype=self.perms.dtype), self.perms.shape)
        np.put_along_axis(inv, self.perms.astype(np.int64), cols, axis=1)
        return inv

    @cached_property
    def inverse_index(self) -> np.ndarray:
        return self.lookup(self.inverses)

    def multiply(self, a: int, b: int) -> int:
        """Index of the product (element a) * (element b)."""
        return self.lookup(self.perms[a][self.perms[b]])

    def longest_element(self) -> int:
        return int(np.argmax(self.lengths))

    def poincare_coefficients(self) -> list[int]:
        return np.bincount(self.lengths).tolist()

    # -- conjugacy ------------------------------------------------------
    @cached_property
    def classes(self) -> ConjugacyClasses:
        return conjugacy_classes(self)

    def class_of_word(self, word: Iterable[int]) -> int:
        return int(self.classes.class_of[self.index_of_word(word)])

    def class_words(self) -> list[tuple[int, ...]]:
        return [self.word(int(r)) for r in self.classes.representatives]

    # -- reflection representation --------------------------------------
    def reflection_matrix(self, word: Iterable[int]) -> list[list]:
        n = self.rank
        mat = [[int(i == j) for j in range(n)] for i in range(n)]
        for i in word:
            s = self._gen_matrices[i]
            mat = [[sum(mat[r][k] * s[k][c] for k in range(n) if s[k][c] != 0) for c in range(n)] for r in range(n)]
        return mat

    @cached_property
    def _gen_matrices(self):
        return [self.datum.reflection_matrix(i) for i in range(self.rank)]

    def root_subsystem(self, J: Sequence[int]) -> np.ndarray:
        """Indices of roots in the span of the simple roots in J."""
        Jset = set(J)
        out = []
        for k, r in enumerate(self.roots):
            if all(r[i] == 0 for i in range(self.rank) if i not in Jset):
                out.append(k)
        return np.array(out, dtype=np.int64)


def coxeter_group(t, bound: int | None = None) -> CoxeterGroup:
    """Build and enumerate W for a type string or CartanType."""
    if isinstance(t, str):
        t = parse_cartan_type(t)
    if isinstance(t, CartanType):
        check_bound(t, bound)
        datum = build_root_datum(t)
    else:
        datum = t
    return CoxeterGroup(datum, bound=bound)


enumerate_group = coxeter_group


def conjugacy_classes(W: CoxeterGroup) -> ConjugacyClasses:
    """Orbits of conjugation by the simple reflections.

    Each element is joined to s_i w s_i for every i; the connected
    components of that graph are the conjugacy classes.
    """
    n = W.order
    src = np.arange(n)
    if W.rank == 0:
        return ConjugacyClasses(representatives=src.copy(), sizes=np.ones(1, dtype=np.int64), class_of=np.zeros(1, dtype=np.int64))
    rows, cols = [], []
    for i in range(W.rank):
        s = W.gens[i]
        conj = s[W.perms[:, s]]
        rows.append(src)
        cols.append(W.lookup(conj))
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    ncomp, labels = connected_components(graph, directed=False)
    # canonical order: by minimal element index (elements sorted by length, then key)
    first = np.full(ncomp, n, dtype=np.int64)
    np.minimum.at(first, labels, src)
    order = np.argsort(first)
    relabel = np.empty(ncomp, dtype=np.int64)
    relabel[order] = np.arange(ncomp)
    class_of = relabel[labels]
    sizes = np.bincount(class_of, minlength=ncomp)
    return ConjugacyClasses(representatives=first[order], sizes=sizes, class_of=class_of)


def parse_parabolic(spec: str | Iterable[int] | None, rank: int, one_based: bool = True) -> tuple[int, ...]:
    """Normalise a parabolic subset; strings like ``"1,3"`` are 1-based."""
    if spec is None or spec == "":
        return ()
    if isinstance(spec, str):
        items = [int(x) for x in spec.replace(" ", "").split(",") if x]
    else:
        items = list(spec)
    if one_based:
        items = [i - 1 for i in items]
    if any(i < 0 or i >= rank for i in items):
        raise InvalidTypeError(f"parabolic subset {spec!r} out of range for rank {rank}")
    return tuple(sorted(set(items)))


def parabolic_datum(datum: RootDatum, J: Sequence[int]) -> RootDatum:
    J = tuple(J)
    a = datum.cartan_matrix
    sub = tuple(tuple(a[i][j] for j in J) for i in J)
    if not J:
        return RootDatum(CartanType(()), (), (), (), datum.field)
    if datum.crystallographic or all(isinstance(x, int) for row in sub for x in row):
        comps, _ = recognize(sub)
        cox = coxeter_matrix_from_cartan(sub)
        fld = None
    else:
        cox = [[datum.coxeter_matrix[i][j] for j in J] for i in J]
        comps, _ = recognize(cox, coxeter=True)
        fld = datum.field
    # the datum keeps the J ordering; cartan_type records the isomorphism type
    return RootDatum(
        cartan_type=CartanType(tuple(comps)),
        cartan_matrix=sub,
        coxeter_matrix=tuple(tuple(r) for r in cox),
        positive_roots=tuple(enumerate_positive_roots(sub)),
        field=fld,
    )


def parabolic_subgroup(W: CoxeterGroup, J: Sequence[int]) -> CoxeterGroup:
    """W_J as a Coxeter group in its own right; generator k is s_{J[k]} of W."""
    J = tuple(sorted(J))
    labels = tuple(W.parent_labels[j] for j in J)
    return CoxeterGroup(parabolic_datum(W.datum, J), bound=W.bound, parent_labels=labels)


def embed_word(sub: CoxeterGroup, word: Iterable[int], parent: CoxeterGroup) -> tuple[int, ...]:
    """Translate a word in the generators of ``sub`` into generators of ``parent``.

    Both groups record their generators as labels in a common top-level group.
    """
    lookup = {lab: k for k, lab in enumerate(parent.parent_labels)}
    return tuple(lookup[sub.parent_labels[i]] for i in word)


def parabolic_elements(W: CoxeterGroup, J: Sequence[int]) -> np.ndarray:
    """Indices (in W) of the elements of W_J: those fixing every simple root outside J setwise-positively.

    w lies in W_J iff it maps every root of the subsystem outside J... (computed by closure instead).
    """
    members = {0}
    frontier = [0]
    gens_idx = [W.index_of_word([j]) for j in J]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens_idx:
                b = W.multiply(a, g)
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return np.array(sorted(members), dtype=np.int64)


@dataclass
class RelativeWeylGroup:
    """N_W(W_J)/W_J, represented by the complement {w : w(Delta_J) = Delta_J}."""

    ambient: CoxeterGroup
    J: tuple[int, ...]
    coset_reps: np.ndarray  # element indices of W
    multiplication_table: np.ndarray
    normalizer_order: int
    parabolic_order: int

    @property
    def order(self) -> int:
        return len(self.coset_reps)

    def words(self) -> list[tuple[int, ...]]:
        return [self.ambient.word(int(r)) for r in self.coset_reps]


def normalizer_elements(W: CoxeterGroup, J: Sequence[int]) -> np.ndarray:
    """Indices of N_W(W_J) = {w : w(Phi_J) = Phi_J}."""
    sub = W.root_subsystem(J)
    if len(sub) == 0:
        return np.arange(W.order)
    inside = np.zeros(2 * W.N, dtype=bool)
    inside[sub] = True
    ok = inside[W.perms[:, sub]].all(axis=1)
    return np.nonzero(ok)[0]


def _delta_stabilizer(W: CoxeterGroup, J: Sequence[int]) -> np.ndarray:
    J = list(J)
    if not J:
        return np.arange(W.order)
    simple = np.zeros(2 * W.N, dtype=bool)
    simple[J] = True
    ok = simple[W.perms[:, J]].all(axis=1)
    return np.nonzero(ok)[0]


def relative_weyl_group(W: CoxeterGroup, J: Sequence[int]) -> RelativeWeylGroup:
    J = tuple(sorted(J))
    normalizer = normalizer_elements(W, J)
    reps = _delta_stabilizer(W, J)
    par_order = len(parabolic_elements(W, J)) if J else 1
    if len(reps) * par_order != len(normalizer):
        raise AssertionError("complement does not have the index of W_J in its normaliser")
    pos = {int(r): k for k, r in enumerate(reps)}
    table = np.empty((len(reps), len(reps)), dtype=np.int64)
    for a, ra in enumerate(reps):
        prods = W.lookup(W.perms[ra][W.perms[reps]])
        table[a] = [pos[int(p)] for p in np.atleast_1d(prods)]
    return RelativeWeylGroup(W, J, reps, table, len(normalizer), par_order)


@dataclass
class SplittingResult:
    splits: bool
    section: np.ndarray | None  # element indices of a complement to W_J in N_W(W_J)
    method: str


def _is_complement(W: CoxeterGroup, cand: np.ndarray, parabolic: set[int], quotient_order: int) -> bool:
    cset = set(int(x) for x in cand)
    if len(cset) != quotient_order or 0 not in cset:
        return False
    if len(cset & parabolic) != 1:
        return False
    for a in cset:
        prods = W.lookup(W.perms[a][W.perms[np.array(sorted(cset))]])
        if not set(int(p) for p in np.atleast_1d(prods)) <= cset:
            return False
    return True


def _closure(W: CoxeterGroup, gens: list[int], limit: int) -> set[int] | None:
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = W.multiply(a, g)
                if b not in members:
                    members.add(b)
                    if len(members) > limit:
                        return None
                    nxt.append(b)
        frontier = nxt
    return members


def normalizer_splitting_check(W: CoxeterGroup, J: Sequence[int], exhaustive: bool = False) -> SplittingResult:
    """Does 1 -> W_J -> N_W(W_J) -> N_W(W_J)/W_J -> 1 split?

    The Delta_J-stabiliser is tried first; with ``exhaustive=True`` (or if
    it fails) complements are searched by lifting generators of the
    quotient through every coset.
    """
    J = tuple(sorted(J))
    normalizer = normalizer_elements(W, J)
    parabolic = set(int(x) for x in parabolic_elements(W, J)) if J else {0}
    quotient_order = len(normalizer) // len(parabolic)
    if not exhaustive:
        cand = _delta_stabilizer(W, J)
        if _is_complement(W, cand, parabolic, quotient_order):
            return SplittingResult(True, cand, "delta-stabiliser")
    # cosets of W_J in N
    par_arr = np.array(sorted(parabolic))
    coset_of: dict[int, int] = {}
    cosets: list[list[int]] = []
    for w in normalizer:
        w = int(w)
        if w in coset_of:
            continue
        members = W.lookup(W.perms[w][W.perms[par_arr]])
        members = [int(x) for x in np.atleast_1d(members)]
        for x in members:
            coset_of[x] = len(cosets)
        cosets.append(members)
    if quotient_order == 1:
        return SplittingResult(True, np.array([0]), "exhaustive")
    # generators of the quotient: greedily add cosets until the image is everything
    reps = [c[0] for c in cosets]
    qgens: list[int] = []
    image = {coset_of[0]}
    for c_idx, r in enumerate(reps):
        if c_idx in image:
            continue
        qgens.append(c_idx)
        closure = _closure(W, [reps[g] for g in qgens], len(normalizer))
        image = {coset_of[x] for x in closure}
        if len(image) == quotient_order:
            break

    def search(chosen: list[int]) -> set[int] | None:
        if len(chosen) == len(qgens):
            sub = _closure(W, chosen, quotient_order)
            if sub is not None and len(sub) == quotient_order and len(sub & parabolic) == 1:
                return sub
            return None
        for lift in cosets[qgens[len(chosen)]]:
            partial = _closure(W, chosen + [lift], quotient_order)
            if partial is None or len(partial & parabolic) != 1:
                continue
            found = search(chosen + [lift])
            if found is not None:
                return found
        return None

    found = search([])
    if found is None:
        return SplittingResult(False, None, "exhaustive")
    return SplittingResult(True, np.array(sorted(found)), "exhaustive")
