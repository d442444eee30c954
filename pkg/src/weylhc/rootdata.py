"""Cartan types, root systems and the duality between a root datum and its dual.

Conventions.  Roots are integer (or Z[c]) vectors in the basis of simple
roots.  The Cartan matrix is ``A[i][j] = <alpha_i, alpha_j^vee>`` and the
simple reflections act by ``s_i(alpha_j) = alpha_j - A[j][i] * alpha_i``.
Node numbering (1-based in type strings, 0-based internally):

* ``A_n``: a path ``1 - 2 - ... - n``.
* ``B_n``: ``1 => 2 - ... - n`` with alpha_1 = e_1 the unique short simple
  root; ``C_n`` is its dual (alpha_1 = 2 e_1 long).
* ``D_n``: nodes 1 and 2 both attached to 3, then ``3 - 4 - ... - n``.
* ``E_n``, ``F_4``, ``G_2``: Bourbaki numbering (G2 with alpha_1 short).
* ``H_3``, ``H_4``: ``1 -5- 2 - 3 (- 4)``; ``I2(m)``: ``1 -m- 2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .numfield import RealCyclotomicField, FieldElement

__all__ = [
    "InvalidTypeError",
    "CartanComponent",
    "CartanType",
    "RootDatum",
    "DualityMap",
    "parse_cartan_type",
    "build_root_datum",
    "dualize",
    "recognize",
    "standard_cartan_matrix",
    "coxeter_matrix_from_cartan",
]


class InvalidTypeError(ValueError):
    """Raised for malformed or out-of-range Cartan type descriptions."""


CRYSTALLOGRAPHIC = set("ABCDEFG")


@dataclass(frozen=True, order=True)
class CartanComponent:
    family: str
    rank: int
    m: int | None = None  # dihedral order, I2 only

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
            "H": n in (3, 4),
            "I": n == 2 and self.m is not None and self.m >= 3,
        }.get(f)
        if not ok:
            raise InvalidTypeError(f"invalid Cartan type {self}")

    @property
    def crystallographic(self) -> bool:
        return self.family in CRYSTALLOGRAPHIC

    def __str__(self):
        if self.family == "I":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanType:
    components: tuple[CartanComponent, ...]

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def crystallographic(self) -> bool:
        return all(c.crystallographic for c in self.components)

    @property
    def irreducible(self) -> bool:
        return len(self.components) == 1

    def offsets(self) -> list[int]:
        out, total = [], 0
        for c in self.components:
            out.append(total)
            total += c.rank
        return out

    def __str__(self):
        return "x".join(str(c) for c in self.components) or "trivial"


_COMPONENT_RE = re.compile(r"^\s*(?:(I)2\((\d+)\)|([A-HA-h])(\d+))\s*$", re.IGNORECASE)


def parse_cartan_type(text: str) -> CartanType:
    """Parse strings like ``"A3"``, ``"B2xA1"``, ``"i2(8)"``."""
    if not isinstance(text, str) or not text.strip():
        raise InvalidTypeError(f"empty Cartan type {text!r}")
    comps = []
    for part in re.split(r"[xX×]", text):
        # "x" separates components; I2(m) carries no x so the split is safe
        mt = _COMPONENT_RE.match(part)
        if not mt:
            raise InvalidTypeError(f"cannot parse Cartan type {text!r} (component {part!r})")
        if mt.group(1):
            comps.append(CartanComponent("I", 2, int(mt.group(2))))
        else:
            comps.append(CartanComponent(mt.group(3).upper(), int(mt.group(4))))
    return CartanType(tuple(comps))


def _as_type(t) -> CartanType:
    if isinstance(t, CartanType):
        return t
    if isinstance(t, CartanComponent):
        return CartanType((t,))
    return parse_cartan_type(t)


def _path_cartan(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


@lru_cache(maxsize=None)
def _standard_cartan(comp: CartanComponent) -> tuple[tuple[int, ...], ...]:
    f, n = comp.family, comp.rank
    if f == "A":
        a = _path_cartan(n)
    elif f in "BC":
        a = _path_cartan(n)
        if f == "B":
            a[1][0] = -2
        else:
            a[0][1] = -2
    elif f == "D":
        a = _path_cartan(n)
        a[0][1] = a[1][0] = 0
        a[0][2] = a[2][0] = -1
    elif f == "E":
        a = [[0] * n for _ in range(n)]
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i in range(n):
            a[i][i] = 2
        for i, j in edges:
            a[i][j] = a[j][i] = -1
    elif f == "F":
        a = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    elif f == "G":
        a = [[2, -1], [-3, 2]]
    else:
        raise InvalidTypeError(f"{comp} has no integral Cartan matrix")
    return tuple(tuple(r) for r in a)


def standard_cartan_matrix(t) -> list[list]:
    """Block-diagonal Cartan matrix (entries in Z[2cos(pi/m)] for H and I2)."""
    t = _as_type(t)
    n = t.rank
    field_ = _coefficient_field(t)
    a = [[0] * n for _ in range(n)]
    for comp, off in zip(t.components, t.offsets()):
        if comp.crystallographic:
            block = _standard_cartan(comp)
        else:
            block = _noncrystallographic_cartan(comp)
        for i, row in enumerate(block):
            for j, v in enumerate(row):
                a[off + i][off + j] = v if field_ is None or isinstance(v, int) else field_(v)
    return a


def _coefficient_field(t: CartanType) -> RealCyclotomicField | None:
    ms = [_component_field_m(c) for c in t.components if not c.crystallographic]
    ms = [m for m in ms if m is not None]
    if not ms:
        return None
    return RealCyclotomicField(lcm(*ms))


def _component_field_m(comp: CartanComponent) -> int | None:
    if comp.family == "H":
        return 5
    if comp.family == "I" and comp.m not in (2, 3):
        return comp.m
    return None


def _noncrystallographic_cartan(comp: CartanComponent):
    # symmetric geometric realisation: <alpha_i, alpha_j^vee> = -2cos(pi/m_ij)
    cox = _standard_coxeter(comp)
    m_all = _component_field_m(comp)
    field_ = RealCyclotomicField(m_all) if m_all else None
    n = comp.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                a[i][j] = 2
            elif cox[i][j] == 3:
                a[i][j] = -1
            elif cox[i][j] > 2:
                mij = cox[i][j]
                # 2cos(pi/mij) = chebyshev(M/mij) in Q(2cos(pi/M))
                a[i][j] = -field_.chebyshev(field_.m // mij)
    return a


@lru_cache(maxsize=None)
def _standard_coxeter(comp: CartanComponent) -> tuple[tuple[int, ...], ...]:
    n = comp.rank
    if comp.crystallographic:
        return tuple(tuple(r) for r in coxeter_matrix_from_cartan(_standard_cartan(comp)))
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
    if comp.family == "I":
        m[0][1] = m[1][0] = comp.m
    else:  # H3, H4
        m[0][1] = m[1][0] = 5
        for i in range(1, n - 1):
            m[i][i + 1] = m[i + 1][i] = 3
    return tuple(tuple(r) for r in m)


_PRODUCT_TO_M = {0: 2, 1: 3, 2: 4, 3: 6}


def coxeter_matrix_from_cartan(a) -> list[list[int]]:
    n = len(a)
    m = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                prod = a[i][j] * a[j][i]
                if prod not in _PRODUCT_TO_M:
                    raise InvalidTypeError(f"Cartan entries ({i},{j}) give no finite Coxeter order")
                m[i][j] = _PRODUCT_TO_M[prod]
    return m


def standard_coxeter_matrix(t) -> list[list[int]]:
    t = _as_type(t)
    n = t.rank
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
    for comp, off in zip(t.components, t.offsets()):
        block = _standard_coxeter(comp)
        for i, row in enumerate(block):
            for j, v in enumerate(row):
                m[off + i][off + j] = v
    return m


@dataclass(frozen=True, eq=False)
class RootDatum:
    """A based root system together with the lattice data needed for duality.

    ``cartan_matrix`` may carry field elements for the non-crystallographic
    types, in which case ``coroot`` duality is trivial (the form is symmetric).
    """

    cartan_type: CartanType
    cartan_matrix: tuple[tuple, ...]
    coxeter_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple, ...]
    field: RealCyclotomicField | None = None

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def simple_roots(self) -> list[list[int]]:
        n = self.rank
        return [[int(i == j) for j in range(n)] for i in range(n)]

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def crystallographic(self) -> bool:
        return self.field is None

    def reflect(self, i: int, v: tuple) -> tuple:
        """s_i(v) for v in simple-root coordinates."""
        a = self.cartan_matrix
        pairing = sum(v[j] * a[j][i] for j in range(self.rank) if v[j])
        if not pairing:
            return v
        out = list(v)
        out[i] = v[i] - pairing
        return tuple(out)

    def reflection_matrix(self, i: int) -> list[list]:
        """Matrix of s_i on simple-root coordinates (columns are images of alpha_j)."""
        n = self.rank
        cols = [self.reflect(i, tuple(int(k == j) for k in range(n))) for j in range(n)]
        return [[cols[j][r] for j in range(n)] for r in range(n)]

    def coroots(self) -> list[tuple]:
        """Positive coroots in the simple-coroot basis, in the same order as the roots.

        alpha = sum c_j alpha_j has coroot sum c_j (|alpha_j|^2 / |alpha|^2) alpha_j^vee.
        """
        if not self.crystallographic:
            return list(self.positive_roots)
        a = self.cartan_matrix
        half = _root_lengths(a)  # (alpha_j, alpha_j)/2 up to scale
        n = self.rank
        out = []
        for root in self.positive_roots:
            # (alpha, alpha)/2 = 1/2 sum_ij c_i c_j a_ij half_j
            norm = sum(root[i] * root[j] * a[i][j] * half[j] for i in range(n) for j in range(n)) / 2
            coroot = tuple(root[j] * half[j] / norm for j in range(n))
            assert all(x.denominator == 1 for x in coroot)
            out.append(tuple(int(x) for x in coroot))
        return out

    def dual(self) -> "RootDatum":
        if not self.crystallographic:
            return self
        transpose = tuple(tuple(self.cartan_matrix[j][i] for j in range(self.rank)) for i in range(self.rank))
        comps, _ = recognize(transpose)
        return _datum_from_matrix(CartanType(tuple(comps)), transpose, None)


def _root_lengths(a) -> list:
    """Half squared lengths (alpha_i, alpha_i)/2, normalised so the minimum per component is 1."""
    from fractions import Fraction

    n = len(a)
    norms: list = [None] * n
    for start in range(n):
        if norms[start] is not None:
            continue
        norms[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] and norms[j] is None:
                    # a[i][j] = 2(ai,aj)/(aj,aj), a[j][i] = 2(ai,aj)/(ai,ai)
                    norms[j] = norms[i] * Fraction(a[j][i], a[i][j])
                    stack.append(j)
    # rescale per component so the smallest is 1
    comps = _components(a)
    for comp in comps:
        mn = min(norms[i] for i in comp)
        for i in comp:
            norms[i] = norms[i] / mn
    return norms


def _components(a) -> list[list[int]]:
    n = len(a)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and a[i][j] != 0 and i != j:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def enumerate_positive_roots(cartan) -> list[tuple]:
    """Close the simple roots under s_i(beta) for beta != alpha_i.

    s_i permutes the positive roots other than alpha_i, so this closure is
    exactly the positive system and needs no sign test.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = {r: None for r in simple}
    queue = list(simple)
    k = 0
    while k < len(queue):
        beta = queue[k]
        k += 1
        for i in range(n):
            if beta == simple[i]:
                continue
            pairing = sum(beta[j] * cartan[j][i] for j in range(n) if beta[j])
            if not pairing:
                continue
            gamma = list(beta)
            gamma[i] = beta[i] - pairing
            gamma = tuple(gamma)
            if gamma not in seen:
                seen[gamma] = None
                queue.append(gamma)
                if len(queue) > 10**5:
                    raise InvalidTypeError("root closure did not terminate: not a finite root system")
    # simple roots first in node order, the rest by height then lexicographically
    rest = sorted(queue[n:], key=lambda r: (_height_key(r), _lex_key(r)))
    return simple + rest


def _height_key(r):
    total = sum(r)
    return total.to_float() if isinstance(total, FieldElement) else total


def _lex_key(r):
    return tuple(x.sort_key() if isinstance(x, FieldElement) else (x,) for x in r)


def _datum_from_matrix(t: CartanType, cartan, field_) -> RootDatum:
    cartan = tuple(tuple(r) for r in cartan)
    if field_ is None:
        cox = coxeter_matrix_from_cartan(cartan)
    else:
        cox = standard_coxeter_matrix(t)
    return RootDatum(
        cartan_type=t,
        cartan_matrix=cartan,
        coxeter_matrix=tuple(tuple(r) for r in cox),
        positive_roots=tuple(enumerate_positive_roots(cartan)),
        field=field_,
    )


def build_root_datum(t) -> RootDatum:
    t = _as_type(t)
    return _datum_from_matrix(t, standard_cartan_matrix(t), _coefficient_field(t))


# ---------------------------------------------------------------------------
# type recognition


def _coxeter_graph(cox) -> dict[int, dict[int, int]]:
    n = len(cox)
    return {i: {j: cox[i][j] for j in range(n) if j != i and cox[i][j] > 2} for i in range(n)}


def _is_short(cartan, x: int, y: int) -> bool:
    # for a multiple edge x-y: x short iff |a[x][y]| < |a[y][x]|
    return abs(cartan[x][y]) < abs(cartan[y][x])


def _walk(graph, start: int, avoid=()) -> list[int]:
    path, prev, cur = [start], None, start
    while True:
        nxt = [j for j in graph[cur] if j != prev and j not in avoid]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def _recognize_component(nodes: list[int], cox, cartan) -> tuple[CartanComponent, list[int]]:
    """Identify one connected component; returns (type, order) with order[k] = original node of standard node k."""
    sub = {i: {j: m for j, m in _coxeter_graph(cox)[i].items() if j in nodes} for i in nodes}
    n = len(nodes)
    crystal = cartan is not None
    if n == 1:
        return CartanComponent("A", 1), list(nodes)
    degrees = {i: len(sub[i]) for i in nodes}
    branch = [i for i in nodes if degrees[i] == 3]
    if branch:
        b = branch[0]
        arms = sorted((_walk(sub, j, avoid=(b,)) for j in sorted(sub[b])), key=lambda arm: (len(arm), arm[0]))
        lens = [len(a) for a in arms]
        if lens[0] == lens[1] == 1:
            return CartanComponent("D", n), [arms[0][0], arms[1][0], b] + arms[2]
        if lens[0] == 1 and lens[1] == 2:
            # E_n: 1 - 3 - 4 - 5 ..., 2 attached to 4
            long_arm = arms[2]
            return CartanComponent("E", n), [arms[1][1], arms[0][0], arms[1][0], b] + long_arm
        raise InvalidTypeError("Coxeter graph with a branch point is not of type D or E")
    ends = sorted(i for i in nodes if degrees[i] <= 1)
    labels_from = {}
    for e in ends:
        path = _walk(sub, e)
        labels_from[e] = [sub[path[k]][path[k + 1]] for k in range(n - 1)]
    e0 = ends[0]
    labels = labels_from[e0]
    if all(l == 3 for l in labels):
        return CartanComponent("A", n), _walk(sub, e0)
    if n == 2:
        m = labels[0]
        x, y = nodes
        if not crystal:
            if m == 4:
                return CartanComponent("B", 2), [x, y]
            if m == 6:
                return CartanComponent("G", 2), [x, y]
            return CartanComponent("I", 2, m), [x, y]
        if m == 4:
            # B2 and C2 differ only by numbering; keep the given order
            return CartanComponent("B" if _is_short(cartan, x, y) else "C", 2), [x, y]
        if m == 6:
            return CartanComponent("G", 2), ([x, y] if _is_short(cartan, x, y) else [y, x])
        raise InvalidTypeError(f"unexpected crystallographic rank-2 label {m}")
    for e in ends:
        labs = labels_from[e]
        path = _walk(sub, e)
        if labs[0] == 4 and all(l == 3 for l in labs[1:]):
            if not crystal or _is_short(cartan, path[0], path[1]):
                return CartanComponent("B", n), path
            return CartanComponent("C", n), path
        if labs[0] == 5 and all(l == 3 for l in labs[1:]) and n in (3, 4):
            return CartanComponent("H", n), path
        if labs == [3, 4, 3]:
            # F4 standard: nodes 1, 2 long
            if not crystal or not _is_short(cartan, path[1], path[2]):
                return CartanComponent("F", 4), path
    raise InvalidTypeError("Coxeter graph is not of finite type")


def recognize(matrix, coxeter: bool = False) -> tuple[list[CartanComponent], list[int]]:
    """Recognise a Cartan (or Coxeter) matrix.

    Returns the components in order of their smallest node and the list
    ``order`` such that standard node k of the concatenated standard type
    corresponds to original node ``order[k]``.  The matrix reindexed by
    ``order`` equals the standard matrix of the returned type.
    """
    if coxeter:
        cox, cartan = [list(r) for r in matrix], None
    else:
        is_int = all(isinstance(x, int) for row in matrix for x in row)
        cartan = [list(r) for r in matrix] if is_int else None
        cox = coxeter_matrix_from_cartan(matrix) if is_int else _coxeter_from_field_cartan(matrix)
    n = len(cox)
    comps, order = [], []
    for nodes in _components([[cox[i][j] - 2 if i != j else 0 for j in range(n)] for i in range(n)]):
        comp, sub_order = _recognize_component(nodes, cox, cartan)
        comps.append(comp)
        order.extend(sub_order)
    t = CartanType(tuple(comps))
    std = standard_coxeter_matrix(t)
    if any(std[a][b] != cox[order[a]][order[b]] for a in range(n) for b in range(n)):
        raise InvalidTypeError("type recognition failed to reproduce the Coxeter matrix")
    if cartan is not None:
        stdc = standard_cartan_matrix(t)
        if any(stdc[a][b] != cartan[order[a]][order[b]] for a in range(n) for b in range(n)):
            raise InvalidTypeError("type recognition failed to reproduce the Cartan matrix")
    return comps, order


def _coxeter_from_field_cartan(a) -> list[list[int]]:
    # a[i][j]*a[j][i] = 4cos^2(pi/m)
    import math

    n = len(a)
    m = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            prod = a[i][j] * a[j][i]
            val = prod.to_float() if isinstance(prod, FieldElement) else float(prod)
            if abs(val) < 1e-12:
                m[i][j] = 2
            else:
                mm = round(math.pi / math.acos(math.sqrt(val) / 2))
                if not (prod == 4 * _cos2(mm)):
                    raise InvalidTypeError("non-Coxeter Cartan entry")
                m[i][j] = mm
    return m


def _cos2(m: int):
    # cos^2(pi/m) exactly in Q(2cos(pi/m))
    if m == 2:
        return 0
    if m == 3:
        from fractions import Fraction

        return Fraction(1, 4)
    f = RealCyclotomicField(m)
    c = f.gen
    return c * c / 4


# ---------------------------------------------------------------------------
# duality


@dataclass(frozen=True, eq=False)
class DualityMap:
    """delta: W(source) -> W(target), s_i -> s_{generator_map[i]}."""

    source: RootDatum
    target: RootDatum
    generator_map: tuple[int, ...]

    def check(self) -> bool:
        """Transpose and Coxeter-matrix invariants."""
        a, b = self.source.cartan_matrix, self.target.cartan_matrix
        g = self.generator_map
        n = len(g)
        transpose_ok = all(b[g[i]][g[j]] == a[j][i] for i in range(n) for j in range(n))
        cox_ok = all(
            self.target.coxeter_matrix[g[i]][g[j]] == self.source.coxeter_matrix[i][j]
            for i in range(n) for j in range(n)
        )
        return transpose_ok and cox_ok

    def map_word(self, word) -> tuple[int, ...]:
        return tuple(self.generator_map[i] for i in word)


def dualize(datum: RootDatum) -> DualityMap:
    """Dual datum in standard form with the induced map on simple reflections."""
    n = datum.rank
    if not datum.crystallographic:
        return DualityMap(datum, datum, tuple(range(n)))
    transpose = [[datum.cartan_matrix[j][i] for j in range(n)] for i in range(n)]
    comps, order = recognize(transpose)
    target = build_root_datum(CartanType(tuple(comps)))
    gmap = [0] * n
    for k, orig in enumerate(order):
        gmap[orig] = k
    return DualityMap(datum, target, tuple(gmap))
