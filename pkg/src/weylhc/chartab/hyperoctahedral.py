"""Types B/C and D: bipartition-labelled tables of signed permutation groups."""

from __future__ import annotations

from ..coxeter import CoxeterGroup, coxeter_group
from .core import CharacterTable, standard_generator_map
from .partitions import (
    bipartitions,
    format_partition,
    mn_bicharacter,
    mn_character,
    signed_cycle_type,
)


def _generator_action(family: str, k: int, n: int) -> tuple[list[int], list[int]]:
    """Images and signs of the coordinate vectors e_0..e_{n-1} under standard generator k."""
    images, signs = list(range(n)), [1] * n
    if family in "BC":
        if k == 0:
            signs[0] = -1
        else:
            images[k - 1], images[k] = k, k - 1
    elif family == "D":
        if k == 0:
            images[0], images[1] = 1, 0
            signs[0] = signs[1] = -1
        elif k == 1:
            images[0], images[1] = 1, 0
        else:
            images[k - 1], images[k] = k, k - 1
    else:
        raise ValueError(family)
    return images, signs


def signed_permutation(word, family: str, to_std, n: int) -> tuple[list[int], list[int]]:
    gens = [_generator_action(family, k, n) for k in range(n)]
    images, signs = list(range(n)), [1] * n
    for g in reversed(word):
        gi, gs = gens[to_std[g]]
        for i in range(n):
            j = images[i]
            signs[i] *= gs[j]
            images[i] = gi[j]
    return images, signs


def _bilabel(alpha, beta) -> str:
    return f"({format_partition(alpha)},{format_partition(beta)})"


def _class_name(pos, neg) -> str:
    return f"({format_partition(pos)},{format_partition(neg)})"


def _from_group_b(W: CoxeterGroup) -> CharacterTable:
    comp, to_std = standard_generator_map(W)
    if comp.family not in "BC":
        raise ValueError(f"W({W.cartan_type}) is not of type B/C")
    n = comp.rank
    words = W.class_words()
    types = [signed_cycle_type(*signed_permutation(w, "B", to_std, n)) for w in words]
    labels = bipartitions(n)
    values = [[mn_bicharacter(a, b, pos, neg) for pos, neg in types] for a, b in labels]
    return CharacterTable(
        group=W,
        class_sizes=tuple(int(s) for s in W.classes.sizes),
        class_words=tuple(words),
        class_names=tuple(_class_name(*t) for t in types),
        values=tuple(map(tuple, values)),
        labels=tuple(_bilabel(a, b) for a, b in labels),
        method="murnaghan-nakayama",
        order=W.order,
    )


def char_table_hyperoctahedral(n: int, W: CoxeterGroup | None = None, bound: int | None = None) -> CharacterTable:
    """Character table of W(B_n), labelled by bipartitions (alpha, beta)."""
    if W is None:
        if n < 2:
            raise ValueError("type B needs rank >= 2")
        W = coxeter_group(f"B{n}", bound=bound)
    return _from_group_b(W)


def _standard_cycle_word(lengths) -> tuple[int, ...]:
    """Standard D_n generators producing disjoint positive cycles on consecutive coordinates."""
    word, start = [], 0
    for p in lengths:
        for j in range(start, start + p - 1):
            word.append(1 if j == 0 else j + 1)
        start += p
    return tuple(word)


def _from_group_d(W: CoxeterGroup) -> CharacterTable:
    comp, to_std = standard_generator_map(W)
    if comp.family == "A" and comp.rank == 3 and W.cartan_type.components[0].family == "D":
        # D3 is recognised as A3; the middle node of the path is the branch node 2 of D3
        to_std = [(0, 2, 1)[k] for k in to_std]
        comp = W.cartan_type.components[0]
    elif comp.family != "D":
        raise ValueError(f"W({W.cartan_type}) is not of type D")
    n = comp.rank
    from_std = [0] * n
    for g, k in enumerate(to_std):
        from_std[k] = g
    words = W.class_words()
    types = [signed_cycle_type(*signed_permutation(w, "D", to_std, n)) for w in words]
    # the "+" class of each split pair contains the standard unsigned permutation
    plus_class = {}
    for pos, neg in set(types):
        if not neg and all(p % 2 == 0 for p in pos):
            std_word = tuple(from_std[k] for k in _standard_cycle_word(pos))
            plus_class[pos] = W.class_of_word(std_word)
    names, split_sign = [], []
    for c, (pos, neg) in enumerate(types):
        if pos in plus_class and not neg:
            sgn = 1 if plus_class[pos] == c else -1
            names.append(_class_name(pos, neg) + ("+" if sgn > 0 else "-"))
            split_sign.append(sgn)
        else:
            names.append(_class_name(pos, neg))
            split_sign.append(0)

    labels, values = [], []
    done = set()
    for a, b in bipartitions(n):
        if (b, a) in done:
            continue
        done.add((a, b))
        row = [mn_bicharacter(a, b, pos, neg) for pos, neg in types]
        if a != b:
            labels.append(f"{format_partition(a)}.{format_partition(b)}")
            values.append(row)
            continue
        for sgn, tag in ((1, "+"), (-1, "-")):
            split = []
            for c, (pos, neg) in enumerate(types):
                delta = 0
                if split_sign[c]:
                    rho = tuple(p // 2 for p in pos)
                    delta = split_sign[c] * sgn * 2 ** len(rho) * mn_character(a, rho)
                total = row[c] + delta
                assert total % 2 == 0
                split.append(total // 2)
            labels.append(f"{format_partition(a)}.{tag}")
            values.append(split)
    return CharacterTable(
        group=W,
        class_sizes=tuple(int(s) for s in W.classes.sizes),
        class_words=tuple(words),
        class_names=tuple(names),
        values=tuple(map(tuple, values)),
        labels=tuple(labels),
        method="murnaghan-nakayama",
        order=W.order,
    )


def char_table_demihyperoctahedral(n: int, W: CoxeterGroup | None = None, bound: int | None = None) -> CharacterTable:
    """Character table of W(D_n): unordered bipartitions, with {a, a} split into a.+ and a.-."""
    if W is None:
        if n < 3:
            raise ValueError("type D needs rank >= 3")
        W = coxeter_group(f"D{n}", bound=bound)
    return _from_group_d(W)
