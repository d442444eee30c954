"""Checker for characters that agree on every proper parabolic subgroup.

For an irreducible W the checker lists all pairs of distinct irreducible
characters whose restrictions to every proper standard parabolic W_J agree,
then tries to tell them apart by degree and by Schur element.  Checking the maximal proper J suffices, since
restriction is transitive; ``all_parabolics=True`` checks every proper J.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .chartab import CharacterTable, character_table
from .chartab.core import restrict
from .chartab.dihedral import _from_group as dihedral_table
from .coxeter import BoundExceededError, CoxeterGroup, coxeter_group
from .cyclo import cyclotomic, zsigmondy
from .hecke import G2_LEVELS, DomainError, HeckeParams, schur_A1, schur_dihedral, schur_G2
from .rootdata import CartanType, InvalidTypeError, parse_cartan_type

__all__ = [
    "ExceptionalFamilyRecord",
    "EXCEPTIONAL_FAMILIES",
    "PairReport",
    "AmbiguityReport",
    "restriction_signature",
    "pairs_equal_on_proper_parabolics",
    "separate_pair",
    "check_type",
    "run_proposition_check",
    "reducible_factor_check",
    "g2_separation_witness",
    "DEFAULT_TYPES",
]

log = logging.getLogger(__name__)

GP_CITATION = (
    "M. Geck and G. Pfeiffer, Characters of finite Coxeter groups and Iwahori-Hecke algebras, "
    "Oxford University Press (2000), 6.3.6"
)

VERDICTS = ("separated-by-degree", "separated-by-schur", "unresolved", "documented-exception")


@dataclass(frozen=True)
class ExceptionalFamilyRecord:
    ambient_type: str
    dimension: int
    citation: str = GP_CITATION

    def __post_init__(self):
        if self.ambient_type not in ("E7", "E8") or self.dimension not in (512, 4096):
            raise ValueError("exceptional families live in E7 (dimension 512) or E8 (dimension 4096)")

    def to_json(self) -> dict:
        return {"type": self.ambient_type, "dimension": self.dimension, "citation": self.citation}


EXCEPTIONAL_FAMILIES = {
    "E7": ExceptionalFamilyRecord("E7", 512),
    "E8": ExceptionalFamilyRecord("E8", 4096),
}

DEFAULT_TYPES = (
    ["A1"]
    + [f"A{n}" for n in range(2, 8)]
    + [f"B{n}" for n in range(2, 7)]
    + [f"D{n}" for n in range(4, 7)]
    + ["G2", "F4", "H3", "H4"]
    + [f"I2({m})" for m in range(5, 13)]
)


@dataclass
class PairReport:
    labels: tuple[str, str]
    verdict: str
    discriminator: str
    degrees: tuple[int, int]
    witnesses: tuple[str, str] | None = None
    note: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(self.verdict)
        if self.verdict == "separated-by-schur" and (self.witnesses is None or self.witnesses[0] == self.witnesses[1]):
            raise ValueError("a Schur separation needs two distinct witness polynomials")

    def to_json(self) -> dict:
        out = {
            "pair": list(self.labels),
            "verdict": self.verdict,
            "discriminator": self.discriminator,
            "degrees": list(self.degrees),
        }
        if self.witnesses:
            out["witnesses"] = list(self.witnesses)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class AmbiguityReport:
    type_name: str
    pairs_passing_1prime: list[tuple[str, str]]
    separations: list[PairReport]
    expected_pairs: list[tuple[str, str]] | None
    k: int | None = None
    exceptional: ExceptionalFamilyRecord | None = None
    restriction_vectors: dict | None = None
    error: str | None = None
    seconds: float = 0.0

    @property
    def matches_expectation(self) -> bool:
        if self.error:
            return False
        if self.exceptional is not None:
            return True
        if self.expected_pairs is None:
            return False
        want = {frozenset(p) for p in self.expected_pairs}
        got = {frozenset(p) for p in self.pairs_passing_1prime}
        if want != got:
            return False
        # every expected pair is either Schur-separated or (with no parameters) left unresolved
        for sep in self.separations:
            if sep.verdict == "unresolved" and self.k is not None:
                return False
        return True

    @property
    def all_resolved(self) -> bool:
        return all(s.verdict != "unresolved" for s in self.separations)

    def to_json(self) -> dict:
        out = {
            "format": "hcreport-v1",
            "type": self.type_name,
            "k": self.k,
            "pairs_passing_1prime": [list(p) for p in self.pairs_passing_1prime],
            "separations": [s.to_json() for s in self.separations],
            "matches_expectation": self.matches_expectation,
        }
        if self.exceptional is not None:
            out["documented_exception"] = self.exceptional.to_json()
        if self.restriction_vectors is not None:
            out["restriction_vectors"] = self.restriction_vectors
        if self.error:
            out["error"] = self.error
        return out

    def to_text(self) -> str:
        head = f"{self.type_name}: {len(self.pairs_passing_1prime)} pair(s) with equal parabolic restrictions"
        if self.k is not None:
            head += f", k={self.k}"
        if self.exceptional is not None:
            head = (
                f"{self.type_name}: documented exceptional family of dimension "
                f"{self.exceptional.dimension} [{self.exceptional.citation}]"
            )
        if self.error:
            head = f"{self.type_name}: error: {self.error}"
        lines = [head + ("" if self.matches_expectation else "  [UNEXPECTED]")]
        for s in self.separations:
            line = f"  {{{s.labels[0]}, {s.labels[1]}}} -> {s.verdict}"
            if s.witnesses:
                line += f" ({s.witnesses[0]} vs {s.witnesses[1]})"
            if s.note:
                line += f"; {s.note}"
            lines.append(line)
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# equal restrictions


def _proper_subsets(rank: int, all_parabolics: bool) -> list[tuple[int, ...]]:
    if all_parabolics:
        return [J for k in range(rank) for J in itertools.combinations(range(rank), k)]
    if rank == 0:
        return []
    return list(itertools.combinations(range(rank), rank - 1))


def _table_for_check(W: CoxeterGroup) -> CharacterTable:
    comps = W.cartan_type.components
    if len(comps) == 1 and W.rank == 2:
        # dihedral labels phi_{d,b} for every rank-two type
        return dihedral_table(W)
    return character_table(W)


def restriction_signature(table: CharacterTable, J: Sequence[int]) -> list[tuple]:
    """Decomposition of each irreducible restricted to W_J."""
    out = []
    for chi in table.irreducibles:
        out.append(tuple(restrict(chi, J).decompose()))
    return out


def pairs_equal_on_proper_parabolics(
    W, all_parabolics: bool = False, return_vectors: bool = False
):
    """Unordered pairs of distinct irreducibles with equal restriction to every proper W_J."""
    if isinstance(W, CharacterTable):
        table = W
    else:
        if isinstance(W, str):
            W = coxeter_group(W)
        table = _table_for_check(W)
    rank = table.group.rank
    subsets = _proper_subsets(rank, all_parabolics)
    sigs = [[] for _ in table.values]
    vectors = {}
    for J in subsets:
        for i, dec in enumerate(restriction_signature(table, J)):
            sigs[i].append(dec)
        if return_vectors:
            key = ",".join(str(j + 1) for j in J) or "-"
            vectors[key] = {lab: [str(x) for x in dec] for lab, dec in zip(table.labels, (s[-1] for s in sigs))}
    pairs = []
    n = len(table.values)
    for a in range(n):
        for b in range(a + 1, n):
            if sigs[a] == sigs[b]:
                pairs.append((table.labels[a], table.labels[b]))
    return (pairs, vectors) if return_vectors else pairs


# ---------------------------------------------------------------------------
# separation by degree and Schur element


def _schur_elements(W: CoxeterGroup, table: CharacterTable, k: int) -> dict[str, object] | None:
    comps = W.cartan_type.components
    if len(comps) != 1:
        return None
    c = comps[0]
    if c.family == "A" and c.rank == 1:
        triv, sign = schur_A1(k)
        out = {}
        for lab, row in zip(table.labels, table.values):
            out[lab] = triv if row[-1] == 1 else sign
        return out
    if W.rank == 2:
        m = {"A": 3, "B": 4, "C": 4, "G": 6}.get(c.family, c.m)
        params = HeckeParams.g2(k) if c.family == "G" else HeckeParams.equal(2, k)
        from .chartab.core import standard_generator_map

        _, to_std = standard_generator_map(W)
        if to_std[0] != 0:
            params = HeckeParams(params.exponents[::-1])
        if c.family == "G":
            if k not in G2_LEVELS:
                raise DomainError(f"G2 parameters (q, q^(2k-1)) are only considered for k in {G2_LEVELS}")
            out = dict(schur_dihedral(m, params, W))
            for b in (1, 2):
                closed = schur_G2(k, b)
                if closed.value != out[f"phi2,{b}"].value:
                    raise ArithmeticError("dihedral and closed-form G2 Schur elements disagree")
                out[f"phi2,{b}"] = closed
            return out
        return schur_dihedral(m, params, W)
    return None


def separate_pair(W, pair: tuple[str, str], k: int | None = None, table: CharacterTable | None = None) -> PairReport:
    """Degree test, then Schur elements for the parameters attached to k (if any)."""
    if isinstance(W, str):
        W = coxeter_group(W)
    table = table or _table_for_check(W)
    i, j = table.index(pair[0]), table.index(pair[1])
    d = (table.degrees[i], table.degrees[j])
    if d[0] != d[1]:
        return PairReport(pair, "separated-by-degree", "degree", d)
    if k is None:
        return PairReport(pair, "unresolved", "none", d, note="no Hecke parameters supplied")
    schur = _schur_elements(W, table, k)
    if schur is None:
        return PairReport(pair, "unresolved", "none", d, note=f"no Schur elements implemented for {W.cartan_type}")
    a, b = schur[pair[0]], schur[pair[1]]
    wa = str(a.factored) if a.factored is not None else str(a.value)
    wb = str(b.factored) if b.factored is not None else str(b.value)
    if a.value != b.value:
        return PairReport(pair, "separated-by-schur", "schur", d, (wa, wb))
    return PairReport(pair, "unresolved", "schur", d, (wa, wb), note="Schur elements coincide")


# ---------------------------------------------------------------------------
# expectations and batch runs


def expected_pairs(t: CartanType) -> list[tuple[str, str]] | None:
    """Pairs the case analysis predicts: {triv, sign} for A1, {phi2,1, phi2,2} for G2, none otherwise."""
    comps = t.components
    if len(comps) != 1:
        return []
    c = comps[0]
    if c.family == "A" and c.rank == 1:
        return [("[2]", "[1,1]")]
    if c.family == "G":
        return [("phi2,1", "phi2,2")]
    return []


def _documented(t: CartanType) -> ExceptionalFamilyRecord | None:
    if len(t.components) == 1 and str(t) in EXCEPTIONAL_FAMILIES:
        return EXCEPTIONAL_FAMILIES[str(t)]
    return None


def check_type(
    type_spec,
    k: int | None = None,
    bound: int | None = None,
    all_parabolics: bool = False,
    emit_vectors: bool = False,
) -> AmbiguityReport:
    t = parse_cartan_type(type_spec) if isinstance(type_spec, str) else type_spec
    name = str(t)
    start = time.perf_counter()
    doc = _documented(t)
    if doc is not None:
        return AmbiguityReport(name, [], [], None, k=k, exceptional=doc)
    W = coxeter_group(t, bound=bound)
    table = _table_for_check(W)
    if emit_vectors:
        pairs, vectors = pairs_equal_on_proper_parabolics(table, all_parabolics, return_vectors=True)
    else:
        pairs, vectors = pairs_equal_on_proper_parabolics(table, all_parabolics), None
    kk = k
    comps = t.components
    if k is not None and len(comps) == 1 and comps[0].family == "G" and k not in G2_LEVELS:
        raise DomainError(f"k must be one of {G2_LEVELS} for G2")
    seps = [separate_pair(W, p, kk, table) for p in pairs]
    return AmbiguityReport(
        name,
        pairs,
        seps,
        expected_pairs(t),
        k=k,
        restriction_vectors=vectors,
        seconds=time.perf_counter() - start,
    )


def run_proposition_check(
    types: Iterable[str] | None = None,
    k: int | None = None,
    bound: int | None = None,
    include_e6: bool = False,
    all_parabolics: bool = False,
    emit_vectors: bool = False,
) -> list[AmbiguityReport]:
    """One report per type, in request order; per-type failures are recorded, not raised."""
    types = list(types) if types is not None else list(DEFAULT_TYPES) + (["E6"] if include_e6 else [])
    reports = []
    for spec in types:
        try:
            t = parse_cartan_type(spec)
            reports.append(check_type(t, k, bound, all_parabolics, emit_vectors))
        except (InvalidTypeError, BoundExceededError, DomainError) as exc:
            reports.append(AmbiguityReport(str(spec), [], [], None, k=k, error=f"{type(exc).__name__}: {exc}"))
    return reports


def reducible_factor_check(W) -> bool:
    """Every restriction-equal pair of a product must agree on each factor (so it is no pair at all)."""
    if isinstance(W, str):
        W = coxeter_group(W)
    if len(W.cartan_type.components) < 2:
        return True
    table = character_table(W)
    pairs = pairs_equal_on_proper_parabolics(table)
    for a, b in pairs:
        if a.split(" x ") != b.split(" x "):
            return False
    return True


# ---------------------------------------------------------------------------
# G2 separation at specific q


def g2_separation_witness(k: int, q_value: int) -> dict:
    """Why c_{phi2,1}(q) != c_{phi2,2}(q): a primitive prime divisor, or direct evaluation at q = 2."""
    c1, c2 = schur_G2(k, 1), schur_G2(k, 2)
    v1, v2 = c1.value(q_value), c2.value(q_value)
    out = {"k": k, "q": q_value, "c_phi2,1": str(v1), "c_phi2,2": str(v2), "distinct": v1 != v2}
    f1, f2 = dict(c1.factored.factors), dict(c2.factored.factors)
    diff = sorted(n for n in set(f1) | set(f2) if f1.get(n, 0) != f2.get(n, 0))
    n = max(diff)
    r = zsigmondy(q_value, n)
    if r is not None:
        # r divides Phi_n(q) and no Phi_m(q), m < n; so its valuation differs between the two sides
        def val(fac):
            total = 0
            for d, mult in fac.items():
                x = abs(cyclotomic(d)(q_value))
                while x % r == 0:
                    x //= r
                    total += mult
            return total

        out.update({"method": "zsigmondy", "n": n, "prime": r, "valuations": [val(f1), val(f2)]})
    else:
        out.update({"method": "direct evaluation", "n": n})
    return out
