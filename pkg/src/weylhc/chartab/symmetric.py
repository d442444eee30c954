"""Type A: symmetric-group tables from the Murnaghan-Nakayama rule."""

from __future__ import annotations

from math import factorial

from ..coxeter import BoundExceededError, CoxeterGroup, coxeter_group
from .core import CharacterTable, standard_generator_map
from .partitions import centralizer_order, cycle_type, format_partition, mn_character, partitions

MAX_POINTS = 12


def permutation_of_word(word, to_std, n_points: int) -> list[int]:
    perm = list(range(n_points))
    for g in word:
        k = to_std[g]
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
    return perm


def _from_group(W: CoxeterGroup) -> CharacterTable:
    comp, to_std = standard_generator_map(W)
    if comp.family != "A":
        raise ValueError(f"W({W.cartan_type}) is not of type A")
    npts = comp.rank + 1
    words = W.class_words()
    types = [cycle_type(permutation_of_word(w, to_std, npts)) for w in words]
    labels = partitions(npts)
    values = [[mn_character(la, mu) for mu in types] for la in labels]
    return CharacterTable(
        group=W,
        class_sizes=tuple(int(s) for s in W.classes.sizes),
        class_words=tuple(words),
        class_names=tuple(format_partition(mu) for mu in types),
        values=tuple(map(tuple, values)),
        labels=tuple(format_partition(la) for la in labels),
        method="murnaghan-nakayama",
        order=W.order,
    )


def _without_group(n: int) -> CharacterTable:
    npts = n + 1
    # identity class [1,...,1] first, as in enumerated tables
    classes = partitions(npts)[::-1]
    labels = partitions(npts)
    words = []
    for mu in classes:
        word, start = [], 0
        for part in mu:
            word.extend(range(start, start + part - 1))
            start += part
        words.append(tuple(word))
    return CharacterTable(
        group=None,
        class_sizes=tuple(factorial(npts) // centralizer_order(mu) for mu in classes),
        class_words=tuple(words),
        class_names=tuple(format_partition(mu) for mu in classes),
        values=tuple(tuple(mn_character(la, mu) for mu in classes) for la in labels),
        labels=tuple(format_partition(la) for la in labels),
        method="murnaghan-nakayama",
        order=factorial(npts),
        type_name=f"A{n}",
    )


def char_table_symmetric(n: int, W: CoxeterGroup | None = None, bound: int | None = None) -> CharacterTable:
    """Character table of W(A_n) = S_{n+1}.

    Columns follow the class order of the enumerated group when it fits in
    the bound; otherwise classes are indexed by cycle type.
    """
    if not 1 <= n + 1 <= MAX_POINTS:
        raise ValueError(f"symmetric tables are supported for 1 <= n+1 <= {MAX_POINTS}")
    if W is None:
        if n == 0:
            return _without_group(0)
        try:
            W = coxeter_group(f"A{n}", bound=bound)
        except BoundExceededError:
            return _without_group(n)
    return _from_group(W)
