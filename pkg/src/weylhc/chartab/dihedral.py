"""Dihedral groups I2(m): closed-form tables with phi_{d,b} labels.

With r = s t, an element r^k s^f is stored as the pair (k mod m, f).  The
two-dimensional character rho_j takes the value 2cos(2 pi j k / m) on r^k
and 0 on reflections; its fake degree is q^j + q^(m-j), so b = j.
"""

from __future__ import annotations

from ..coxeter import CoxeterGroup, coxeter_group
from ..numfield import RealCyclotomicField
from .core import CharacterTable, standard_generator_map


def dihedral_pair(word, to_std, m: int) -> tuple[int, int]:
    """(k, f) with w = r^k s^f, r = s t, for a word in the standard generators s=0, t=1."""
    k, f = 0, 0
    for g in word:
        gk, gf = (0, 1) if to_std[g] == 0 else (-1, 1)
        k = (k + (gk if f == 0 else -gk)) % m
        f ^= gf
    return k, f


def _from_group(W: CoxeterGroup) -> CharacterTable:
    comp, to_std = standard_generator_map(W)
    if comp.family == "A" and comp.rank == 2:
        m = 3
    elif comp.family in "BC" and comp.rank == 2:
        m = 4
    elif comp.family == "G":
        m = 6
    elif comp.family == "I":
        m = comp.m
    else:
        raise ValueError(f"W({W.cartan_type}) is not dihedral")
    fld = RealCyclotomicField(m) if m not in (3, 4, 6) else None
    words = W.class_words()
    pairs = [dihedral_pair(w, to_std, m) for w in words]

    def cheb(n):
        # 2cos(2 pi n / m) = 2cos(pi (2n) / m)
        return RealCyclotomicField(m).chebyshev(2 * n)

    labels, rows = [], []
    labels.append("phi1,0")
    rows.append([1 for _ in pairs])
    if m % 2 == 0:
        # value on s (node 1) and on t (node 2)
        for lab, vs, vt in ((f"phi1,{m // 2}'", 1, -1), (f"phi1,{m // 2}''", -1, 1)):
            row = []
            for (k, f), w in zip(pairs, words):
                if f:
                    # reflections r^k s: conjugate to s when k even, to t when k odd
                    row.append(vs if k % 2 == 0 else vt)
                else:
                    row.append((-1) ** k)
            labels.append(lab)
            rows.append(row)
    labels.append(f"phi1,{m}")
    rows.append([(-1) ** (len(w) % 2) for w in words])
    for j in range(1, (m - 1) // 2 + 1):
        labels.append(f"phi2,{j}")
        rows.append([0 if f else cheb(j * k) for k, f in pairs])
    names = []
    for k, f in pairs:
        if f:
            names.append("s" if k % 2 == 0 or m % 2 else "t")
        else:
            names.append(f"r^{min(k, m - k)}" if k else "1")
    return CharacterTable(
        group=W,
        class_sizes=tuple(int(s) for s in W.classes.sizes),
        class_words=tuple(words),
        class_names=tuple(names),
        values=tuple(map(tuple, rows)),
        labels=tuple(labels),
        method="dihedral",
        order=W.order,
        field=fld,
    )


def char_table_dihedral(m: int, W: CoxeterGroup | None = None, bound: int | None = None) -> CharacterTable:
    """Character table of the dihedral group of order 2m (types A2, B2, G2 for m = 3, 4, 6)."""
    if W is None:
        if m < 3:
            raise ValueError("dihedral tables need m >= 3")
        W = coxeter_group(f"I2({m})", bound=bound)
    return _from_group(W)
