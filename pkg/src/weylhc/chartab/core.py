"""Character tables, class functions, fusion, restriction and induction."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from ..coxeter import CoxeterGroup, embed_word, parabolic_subgroup
from ..numfield import FieldElement, RealCyclotomicField, as_rational
from ..rootdata import CartanComponent, recognize

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "class_fusion",
    "restrict",
    "induce",
    "inner_product",
    "standard_generator_map",
    "format_value",
    "word_label",
]


def format_value(x) -> str:
    x = as_rational(x)
    return str(x)


def word_label(word: Sequence[int]) -> str:
    """1-based word string such as "s1s2"; the identity is "1"."""
    return "".join(f"s{i + 1}" for i in word) or "1"


def standard_generator_map(W: CoxeterGroup) -> tuple[CartanComponent, list[int]]:
    """For irreducible W: its type and the map generator index -> standard node index."""
    d = W.datum
    if d.crystallographic:
        comps, order = recognize(d.cartan_matrix)
    else:
        comps, order = recognize(d.coxeter_matrix, coxeter=True)
    if len(comps) != 1:
        raise ValueError(f"expected an irreducible group, got {W.cartan_type}")
    to_std = [0] * W.rank
    for k, orig in enumerate(order):
        to_std[orig] = k
    return comps[0], to_std


@dataclass(eq=False)
class CharacterTable:
    """Irreducible characters (rows) on conjugacy classes (columns).

    Columns follow the canonical class order of ``group``; values are ints
    or exact elements of a real cyclotomic field.
    """

    group: CoxeterGroup | None
    class_sizes: tuple[int, ...]
    class_words: tuple[tuple[int, ...], ...]
    class_names: tuple[str, ...]
    values: tuple[tuple, ...]
    labels: tuple[str, ...]
    method: str
    order: int
    field: RealCyclotomicField | None = None
    type_name: str = ""
    _parabolics: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.values = tuple(tuple(as_rational(v) for v in row) for row in self.values)
        if not self.type_name and self.group is not None:
            self.type_name = str(self.group.cartan_type)

    # -- basic access ---------------------------------------------------
    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)

    def __len__(self):
        return len(self.values)

    @property
    def degrees(self) -> list[int]:
        return [int(row[0]) for row in self.values]

    @property
    def irreducibles(self) -> list["ClassFunction"]:
        return [ClassFunction(self, row) for row in self.values]

    def index(self, label: str) -> int:
        if label in self.labels:
            return self.labels.index(label)
        phi = self.phi_labels
        if label in phi:
            return phi.index(label)
        raise KeyError(f"no character labelled {label!r} in W({self.type_name})")

    def character(self, label_or_index) -> "ClassFunction":
        i = label_or_index if isinstance(label_or_index, int) else self.index(label_or_index)
        return ClassFunction(self, self.values[i])

    @property
    def trivial(self) -> "ClassFunction":
        return ClassFunction(self, (1,) * self.num_classes)

    @property
    def sign(self) -> "ClassFunction":
        return ClassFunction(self, tuple((-1) ** len(w) for w in self.class_words))

    @cached_property
    def fake_degrees(self) -> list:
        from ..hecke import fake_degrees

        return fake_degrees(self)

    @cached_property
    def b_invariants(self) -> list[int]:
        return [fd.b_invariant for fd in self.fake_degrees]

    @cached_property
    def phi_labels(self) -> tuple[str, ...]:
        """Labels phi_{d,b} from degree and b-invariant, primed when repeated."""
        keys = [(d, b) for d, b in zip(self.degrees, self.b_invariants)]
        seen: dict = {}
        out = []
        for k in keys:
            seen[k] = seen.get(k, 0) + 1
        used: dict = {}
        for d, b in keys:
            base = f"phi{d},{b}"
            if seen[(d, b)] > 1:
                used[(d, b)] = used.get((d, b), 0) + 1
                base += "'" * used[(d, b)]
            out.append(base)
        return tuple(out)

    # -- structure checks -----------------------------------------------
    def inner(self, a: Sequence, b: Sequence):
        total = sum(s * x * y for s, x, y in zip(self.class_sizes, a, b))
        return as_rational(total / self.order) if isinstance(total, FieldElement) else as_rational(Fraction(total, self.order))

    def check_row_orthogonality(self) -> bool:
        n = len(self.values)
        return all(
            self.inner(self.values[i], self.values[j]) == (1 if i == j else 0) for i in range(n) for j in range(i, n)
        )

    def check_column_orthogonality(self) -> bool:
        r = self.num_classes
        for a in range(r):
            for b in range(a, r):
                s = as_rational(sum(row[a] * row[b] for row in self.values))
                expect = Fraction(self.order, self.class_sizes[a]) if a == b else 0
                if s != expect:
                    return False
        return True

    def check_degree_sum(self) -> bool:
        return sum(d * d for d in self.degrees) == self.order

    def is_valid(self) -> bool:
        return (
            len(self.values) == self.num_classes
            and sum(self.class_sizes) == self.order
            and self.check_row_orthogonality()
            and self.check_column_orthogonality()
            and self.check_degree_sum()
        )

    def same_characters(self, other: "CharacterTable") -> bool:
        """Equality up to ordering of rows (columns must already agree)."""
        if self.class_sizes != other.class_sizes or len(self) != len(other):
            return False
        key = lambda row: tuple(str(v) for v in row)
        return sorted(map(key, self.values)) == sorted(map(key, other.values))

    def row_permutation(self, other: "CharacterTable") -> list[int]:
        """perm with other.values[perm[i]] == self.values[i]."""
        index = {tuple(str(v) for v in row): k for k, row in enumerate(other.values)}
        return [index[tuple(str(v) for v in row)] for row in self.values]

    # -- parabolic subgroups --------------------------------------------
    def parabolic(self, J: Iterable[int]) -> tuple["CharacterTable", list[int]]:
        """(table of W_J, fusion map of its classes into ours); J is 0-based."""
        J = tuple(sorted(J))
        if J not in self._parabolics:
            from .dispatch import character_table

            if self.group is None:
                raise ValueError("parabolic restriction needs an enumerated group")
            if J == tuple(range(self.group.rank)):
                sub_table, fusion = self, list(range(self.num_classes))
            else:
                sub = parabolic_subgroup(self.group, J)
                sub_table = character_table(sub)
                fusion = class_fusion(sub, self.group)
            self._parabolics[J] = (sub_table, fusion)
        return self._parabolics[J]

    # -- serialisation --------------------------------------------------
    def to_json(self) -> dict:
        out = {
            "format": "chartab-v1",
            "type": self.type_name,
            "order": str(self.order),
            "method": self.method,
            "classes": [
                {"index": k, "name": self.class_names[k], "representative": word_label(w), "size": str(s)}
                for k, (w, s) in enumerate(zip(self.class_words, self.class_sizes))
            ],
            "characters": [
                {"label": lab, "degree": str(row[0]), "values": [format_value(v) for v in row]}
                for lab, row in zip(self.labels, self.values)
            ],
        }
        if self.field is not None:
            out["field"] = self.field.describe()
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)

    def to_tsv(self) -> str:
        lines = ["\t".join(["label"] + list(self.class_names))]
        lines.append("\t".join(["size"] + [str(s) for s in self.class_sizes]))
        for lab, row in zip(self.labels, self.values):
            lines.append("\t".join([lab] + [format_value(v) for v in row]))
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        cells = [["", *self.class_names], ["size", *map(str, self.class_sizes)]]
        cells += [[lab, *map(format_value, row)] for lab, row in zip(self.labels, self.values)]
        widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
        head = f"W({self.type_name}): order {self.order}, {self.num_classes} classes ({self.method})"
        body = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
        return "\n".join([head, *body]) + "\n"


@dataclass(frozen=True, eq=False)
class ClassFunction:
    table: CharacterTable
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_rational(v) for v in self.values))

    def _check(self, other):
        if other.table is not self.table and other.table.class_sizes != self.table.class_sizes:
            raise ValueError("class functions live on different groups")

    def __add__(self, other: "ClassFunction"):
        self._check(other)
        return ClassFunction(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction"):
        self._check(other)
        return ClassFunction(self.table, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, c):
        if isinstance(c, ClassFunction):
            self._check(c)
            return ClassFunction(self.table, tuple(a * b for a, b in zip(self.values, c.values)))
        return ClassFunction(self.table, tuple(a * c for a in self.values))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.table.class_sizes == other.table.class_sizes and self.values == other.values

    def __hash__(self):
        return hash(tuple(str(v) for v in self.values))

    @property
    def degree(self):
        return self.values[0]

    def inner(self, other: "ClassFunction"):
        self._check(other)
        return self.table.inner(self.values, other.values)

    def decompose(self) -> list:
        """Multiplicities of the irreducibles of the owning table."""
        return [self.table.inner(self.values, row) for row in self.table.values]

    def is_character(self) -> bool:
        return all(isinstance(m, int) and m >= 0 for m in self.decompose())

    def restrict(self, J: Iterable[int]) -> "ClassFunction":
        return restrict(self, J)

    def __repr__(self):
        return f"ClassFunction({self.table.type_name}: {', '.join(format_value(v) for v in self.values)})"


def class_fusion(sub: CoxeterGroup, sup: CoxeterGroup) -> list[int]:
    """Class of sup containing each class representative of sub."""
    out = []
    for r in sub.classes.representatives:
        word = embed_word(sub, sub.word(int(r)), sup)
        out.append(sup.class_of_word(word))
    return out


def restrict(chi: ClassFunction, J: Iterable[int]) -> ClassFunction:
    sub_table, fusion = chi.table.parabolic(J)
    return ClassFunction(sub_table, tuple(chi.values[f] for f in fusion))


def induce(phi: ClassFunction, table: CharacterTable, J: Iterable[int]) -> ClassFunction:
    """Ind from W_J to W, where ``phi`` lives on the table of W_J inside ``table``."""
    sub_table, fusion = table.parabolic(J)
    if phi.table.class_sizes != sub_table.class_sizes:
        raise ValueError("phi is not a class function on the given parabolic subgroup")
    index = Fraction(table.order, sub_table.order)
    acc: list = [0] * table.num_classes
    for c, C in enumerate(fusion):
        acc[C] = acc[C] + sub_table.class_sizes[c] * phi.values[c]
    vals = tuple(a * index / table.class_sizes[k] if a else 0 for k, a in enumerate(acc))
    return ClassFunction(table, vals)


def inner_product(chi: ClassFunction, psi: ClassFunction):
    return chi.inner(psi)
