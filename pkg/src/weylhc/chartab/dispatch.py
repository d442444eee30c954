"""Choosing a table algorithm by type, and tables of reducible groups."""

from __future__ import annotations

from functools import reduce

from ..coxeter import CoxeterGroup, coxeter_group, parabolic_subgroup
from ..rootdata import CartanType, _components
from .core import CharacterTable, word_label
from .dihedral import _from_group as _dihedral
from .generic import char_table_generic
from .hyperoctahedral import _from_group_b, _from_group_d
from .symmetric import _from_group as _symmetric


def _irreducible_table(W: CoxeterGroup, method: str = "auto") -> CharacterTable:
    if method == "generic":
        return char_table_generic(W)
    comp = W.cartan_type.components[0]
    fam = comp.family
    if fam == "A":
        return _symmetric(W)
    if fam in "BC":
        return _from_group_b(W)
    if fam == "D":
        return _from_group_d(W)
    if fam in "GI":
        return _dihedral(W)
    return char_table_generic(W)


def _trivial_table(W: CoxeterGroup) -> CharacterTable:
    return CharacterTable(
        group=W,
        class_sizes=(1,),
        class_words=((),),
        class_names=("1",),
        values=((1,),),
        labels=("triv",),
        method="trivial",
        order=1,
        type_name="",
    )


def product_table(W: CoxeterGroup, method: str = "auto") -> CharacterTable:
    """Table of a reducible group as the tensor product of its component tables."""
    n = W.rank
    cox = W.datum.coxeter_matrix
    blocks = _components([[0 if i == j or cox[i][j] == 2 else 1 for j in range(n)] for i in range(n)])
    factors = []
    for block in blocks:
        sub = parabolic_subgroup(W, block)
        factors.append((block, character_table(sub, method)))
    words = W.class_words()
    # the component class of each class of W
    comp_classes = []
    for block, tab in factors:
        pos = {g: k for k, g in enumerate(block)}
        sub = tab.group
        comp_classes.append([sub.class_of_word([pos[g] for g in w if g in pos]) for w in words])
    rows, labels = [], []

    def combine(acc, item):
        out = []
        for labs, vals in acc:
            k, tab = item
            for lab, row in zip(tab.labels, tab.values):
                out.append((labs + [lab], [v * row[comp_classes[k][c]] for c, v in enumerate(vals)]))
        return out

    start = [([], [1] * len(words))]
    combos = reduce(combine, [(k, tab) for k, (_, tab) in enumerate(factors)], start)
    for labs, vals in combos:
        labels.append(" x ".join(labs))
        rows.append(vals)
    fields = [tab.field for _, tab in factors if tab.field is not None]
    return CharacterTable(
        group=W,
        class_sizes=tuple(int(s) for s in W.classes.sizes),
        class_words=tuple(words),
        class_names=tuple(word_label(w) for w in words),
        values=tuple(map(tuple, rows)),
        labels=tuple(labels),
        method="product(" + ",".join(tab.method for _, tab in factors) + ")",
        order=W.order,
        field=fields[0] if fields else None,
    )


def character_table(W, method: str = "auto", bound: int | None = None) -> CharacterTable:
    """Character table of W (a CoxeterGroup or a type string such as "B3" or "A2xA1").

    ``method="generic"`` forces the class-multiplication algorithm for every
    irreducible component.  Tables are cached on the group object.
    """
    if isinstance(W, (str, CartanType)):
        W = coxeter_group(W, bound=bound)
    cache = W.__dict__.setdefault("_chartabs", {})
    if method in cache:
        return cache[method]
    comps = W.cartan_type.components
    if not comps:
        table = _trivial_table(W)
    elif len(comps) == 1:
        table = _irreducible_table(W, method)
    else:
        table = product_table(W, method)
    cache[method] = table
    return table
