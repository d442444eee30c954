"""Batch command line: ``weylhc <command> [options]``.

Exit codes: 0 success, 1 unexpected ambiguity or a mismatch in the G2
factorisation table, 2 bad type or parabolic subset, 3 enumeration bound
exceeded.

Option precedence, highest first: command-line flags, the WEYLHC_BOUND
environment variable (bound only), the ``--config`` file (key = value
lines), built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__
from .chartab import character_table
from .chartab.core import restrict
from .coxeter import (
    DEFAULT_BOUND,
    BoundExceededError,
    coxeter_group,
    normalizer_splitting_check,
    parse_parabolic,
    relative_weyl_group,
)
from .hecke import (
    G2_LEVELS,
    DomainError,
    HeckeParams,
    schur_A1,
    schur_dihedral,
    schur_linear,
    verify_table1,
)
from .rootdata import InvalidTypeError, parse_cartan_type

log = logging.getLogger("weylhc")

EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3
FORMATS = ("json", "tsv", "text")


@dataclass
class RunConfig:
    command: str
    types: list[str] = field(default_factory=list)
    bound: int | None = None
    format: str = "json"
    out: str | None = None
    k: int | None = None
    include_e6: bool = False
    emit_vectors: bool = False
    all_parabolics: bool = False
    J: str | None = None
    method: str = "auto"
    figures: str | None = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, not {self.format!r}")
        if self.bound is not None and self.bound < 1:
            raise ValueError("bound must be at least 1")


# ---------------------------------------------------------------------------
# config handling


def read_config(path: str) -> dict[str, str]:
    """key = value lines; '#' starts a comment; quotes around values are stripped."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line or line.startswith("["):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (x.strip() for x in line.split("=", 1))
            out[key.replace("-", "_")] = value.strip("'\"")
    return out


def _truthy(v: str) -> bool:
    return str(v).lower() in ("1", "true", "yes", "on")


def build_config(ns: argparse.Namespace) -> RunConfig:
    file_cfg = read_config(ns.config) if ns.config else {}
    env_bound = os.environ.get("WEYLHC_BOUND")

    def pick(name, conv=str, default=None):
        val = getattr(ns, name, None)
        if val is not None:
            return val
        if name == "bound" and env_bound:
            return int(env_bound)
        if name in file_cfg:
            return conv(file_cfg[name])
        return default

    types = list(getattr(ns, "types", None) or [])
    if not types and "types" in file_cfg:
        types = [t for t in file_cfg["types"].replace(",", " ").split() if t]
    return RunConfig(
        command=ns.command,
        types=types,
        bound=pick("bound", int),
        format=pick("format", str, "json"),
        out=pick("out"),
        k=pick("k", int),
        include_e6=bool(getattr(ns, "include_e6", False)) or _truthy(file_cfg.get("include_e6", "")),
        emit_vectors=bool(getattr(ns, "emit_vectors", False)) or _truthy(file_cfg.get("emit_vectors", "")),
        all_parabolics=bool(getattr(ns, "all_parabolics", False)) or _truthy(file_cfg.get("all_parabolics", "")),
        J=pick("J"),
        method=pick("method", str, "auto"),
        figures=pick("figures"),
    )


# ---------------------------------------------------------------------------
# output helpers


def _emit(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.out:
        os.makedirs(os.path.dirname(cfg.out) or ".", exist_ok=True)
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _tsv(rows: Sequence[Sequence]) -> str:
    return "\n".join("\t".join(str(c) for c in r) for r in rows)


def _figure_path(cfg: RunConfig, name: str) -> str:
    return os.path.join(cfg.figures, name)


def _safe(name: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in name).strip("_")


def _one_type(cfg: RunConfig) -> str:
    if len(cfg.types) != 1:
        raise InvalidTypeError(f"{cfg.command} takes exactly one type, got {len(cfg.types)}")
    return cfg.types[0]


# ---------------------------------------------------------------------------
# commands


def cmd_chartab(cfg: RunConfig) -> int:
    W = coxeter_group(_one_type(cfg), bound=cfg.bound)
    table = character_table(W, method=cfg.method)
    if cfg.format == "tsv":
        _emit(cfg, table.to_tsv())
    elif cfg.format == "text":
        _emit(cfg, table.to_text())
    else:
        _emit(cfg, table.dumps())
    if cfg.figures:
        from .plots import character_table_heatmap

        character_table_heatmap(table, _figure_path(cfg, f"chartab_{_safe(table.type_name)}.png"))
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    from .hcseries import DEFAULT_TYPES, check_type

    types = cfg.types or list(DEFAULT_TYPES)
    if cfg.include_e6 and "E6" not in types:
        types = types + ["E6"]
    reports = []
    for spec in types:
        t = parse_cartan_type(spec)
        kk = cfg.k
        if kk is not None and any(c.family == "G" for c in t.components) and kk not in G2_LEVELS:
            raise DomainError(f"k must be one of {G2_LEVELS} for G2")
        reports.append(check_type(t, kk, cfg.bound, cfg.all_parabolics, cfg.emit_vectors))
    if cfg.format == "json":
        _emit(cfg, _dump({"format": "hcreport-v1", "reports": [r.to_json() for r in reports]}))
    elif cfg.format == "tsv":
        rows = [("type", "pair", "verdict", "discriminator", "expected")]
        for r in reports:
            if r.exceptional is not None:
                rows.append((r.type_name, "-", "documented-exception", f"dimension {r.exceptional.dimension}", "yes"))
            for s in r.separations:
                rows.append((r.type_name, "{%s}" % ", ".join(s.labels), s.verdict, s.discriminator,
                             "yes" if r.matches_expectation else "no"))
            if not r.separations and r.exceptional is None:
                rows.append((r.type_name, "-", "none", "-", "yes" if r.matches_expectation else "no"))
        _emit(cfg, _tsv(rows))
    else:
        _emit(cfg, "".join(r.to_text() for r in reports))
    for r in reports:
        if not r.matches_expectation:
            log.error("unexpected ambiguity for %s: %s", r.type_name, r.pairs_passing_1prime)
    if cfg.figures:
        from .plots import pair_count_plot

        pair_count_plot(reports, _figure_path(cfg, "check_pairs.png"))
    return EXIT_OK if all(r.matches_expectation for r in reports) else EXIT_UNEXPECTED


def cmd_table1(cfg: RunConfig) -> int:
    cells = verify_table1(cfg.k)
    if cfg.format == "json":
        _emit(cfg, _dump({
            "format": "table1-v1",
            "cells": [
                {"k": c.k, "b": c.b, "expression": c.expression, "claimed": c.claimed.pretty(),
                 "computed": c.computed.pretty(), "holds": c.holds}
                for c in cells
            ],
        }))
    elif cfg.format == "tsv":
        rows = [("k", "b", "expression", "claimed", "computed", "holds")]
        rows += [(c.k, c.b, c.expression, c.claimed.pretty(), c.computed.pretty(), c.holds) for c in cells]
        _emit(cfg, _tsv(rows))
    else:
        _emit(cfg, "\n".join(c.line() for c in cells))
    if cfg.figures:
        from .plots import g2_schur_plot

        g2_schur_plot(_figure_path(cfg, "g2_schur.png"), levels=[cfg.k] if cfg.k else G2_LEVELS)
    ok = all(c.holds for c in cells)
    if not ok:
        log.error("G2 factorisation table mismatch")
    return EXIT_OK if ok else EXIT_UNEXPECTED


def cmd_relweyl(cfg: RunConfig) -> int:
    W = coxeter_group(_one_type(cfg), bound=cfg.bound)
    J = parse_parabolic(cfg.J, W.rank)
    rel = relative_weyl_group(W, J)
    split = normalizer_splitting_check(W, J)
    report = {
        "format": "relweyl-v1",
        "type": str(W.cartan_type),
        "J": [j + 1 for j in J],
        "parabolic_order": rel.parabolic_order,
        "normalizer_order": rel.normalizer_order,
        "quotient_order": rel.order,
        "splits": split.splits,
        "method": split.method,
        "coset_representatives": ["".join(f"s{g + 1}" for g in w) or "1" for w in rel.words()],
    }
    if cfg.format == "json":
        _emit(cfg, _dump(report))
    else:
        keys = ["type", "J", "parabolic_order", "normalizer_order", "quotient_order", "splits"]
        sep = "\t" if cfg.format == "tsv" else ": "
        _emit(cfg, "\n".join(f"{key}{sep}{report[key]}" for key in keys))
    return EXIT_OK


def _schur_for(W, k: int) -> dict:
    comps = W.cartan_type.components
    c = comps[0]
    if len(comps) == 1 and c.family == "A" and c.rank == 1:
        table = character_table(W)
        triv, sign = schur_A1(k)
        return {table.labels[0]: triv, table.labels[1]: sign} if table.values[0][-1] == 1 else {
            table.labels[0]: sign, table.labels[1]: triv}
    if len(comps) == 1 and W.rank == 2:
        from .chartab.core import standard_generator_map
        from .hecke import _dihedral_m

        if c.family == "G" and k not in G2_LEVELS:
            raise DomainError(f"k must be one of {G2_LEVELS} for G2")
        params = HeckeParams.g2(k) if c.family == "G" else HeckeParams.equal(2, k)
        _, to_std = standard_generator_map(W)
        if to_std[0] != 0:
            params = HeckeParams(params.exponents[::-1])
        return schur_dihedral(_dihedral_m(W), params, W)
    # beyond rank two only the trivial and sign characters are offered
    params = HeckeParams.equal(W.rank, k)
    triv = schur_linear(W, params, [1] * W.rank)
    sign = schur_linear(W, params, [-1] * W.rank)
    from .hecke import SchurElement, _factored

    return {"triv": SchurElement("triv", triv, _factored(triv)), "sign": SchurElement("sign", sign, _factored(sign))}


def cmd_schur(cfg: RunConfig) -> int:
    W = coxeter_group(_one_type(cfg), bound=cfg.bound)
    k = cfg.k if cfg.k is not None else 1
    schur = _schur_for(W, k)
    if cfg.format == "json":
        _emit(cfg, _dump({"format": "schur-v1", "type": str(W.cartan_type), "k": k,
                          "schur_elements": [s.to_json() for s in schur.values()]}))
    else:
        sep = "\t" if cfg.format == "tsv" else ": "
        lines = []
        for lab, s in schur.items():
            lines.append(f"{lab}{sep}{s.factored if s.factored is not None else s.value}")
        _emit(cfg, "\n".join(lines))
    return EXIT_OK


def cmd_fakedeg(cfg: RunConfig) -> int:
    W = coxeter_group(_one_type(cfg), bound=cfg.bound)
    table = character_table(W)
    fds = table.fake_degrees
    if cfg.format == "json":
        _emit(cfg, _dump({"format": "fakedeg-v1", "type": table.type_name,
                          "fake_degrees": [fd.to_json() for fd in fds]}))
    else:
        sep = "\t" if cfg.format == "tsv" else "  "
        _emit(cfg, "\n".join(f"{fd.label}{sep}{fd.b_invariant}{sep}{fd.polynomial}" for fd in fds))
    return EXIT_OK


def cmd_restrict(cfg: RunConfig) -> int:
    W = coxeter_group(_one_type(cfg), bound=cfg.bound)
    J = parse_parabolic(cfg.J, W.rank)
    table = character_table(W)
    sub, _ = table.parabolic(J)
    rows = []
    for lab, chi in zip(table.labels, table.irreducibles):
        dec = restrict(chi, J).decompose()
        rows.append((lab, [str(x) for x in dec]))
    if cfg.format == "json":
        _emit(cfg, _dump({"format": "restrict-v1", "type": table.type_name, "J": [j + 1 for j in J],
                          "parabolic_labels": list(sub.labels),
                          "decompositions": {lab: dec for lab, dec in rows}}))
    else:
        sep = "\t" if cfg.format == "tsv" else "  "
        lines = [sep.join(["label", *sub.labels])]
        lines += [sep.join([lab, *dec]) for lab, dec in rows]
        _emit(cfg, "\n".join(lines))
    return EXIT_OK


COMMANDS = {
    "chartab": cmd_chartab,
    "check": cmd_check,
    "table1": cmd_table1,
    "relweyl": cmd_relweyl,
    "schur": cmd_schur,
    "fakedeg": cmd_fakedeg,
    "restrict": cmd_restrict,
}


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="output format (default json)")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--bound", type=int, default=None, help=f"enumeration bound (default {DEFAULT_BOUND})")
    common.add_argument("--config", default=None, help="key = value file with default options")
    common.add_argument("--figures", default=None, metavar="DIR", help="also render PNG figures into DIR")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="weylhc", description="Coxeter group and Hecke algebra computations.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chartab", parents=[common], help="character table of W")
    s.add_argument("types", nargs="*", metavar="TYPE")
    s.add_argument("--method", choices=("auto", "generic"), default=None)

    s = sub.add_parser("check", parents=[common], help="pairs of irreducibles with equal parabolic restrictions")
    s.add_argument("types", nargs="*", metavar="TYPE")
    s.add_argument("--k", type=int, default=None, help="Hecke parameter level")
    s.add_argument("--include-e6", action="store_true", dest="include_e6")
    s.add_argument("--emit-vectors", action="store_true", dest="emit_vectors")
    s.add_argument("--all-parabolics", action="store_true", dest="all_parabolics")

    s = sub.add_parser("table1", parents=[common], help="verify the G2 cyclotomic factorisation table")
    s.add_argument("--k", type=int, default=None)

    for name, helptext in (("relweyl", "relative Weyl group N(W_J)/W_J"), ("restrict", "restrictions to W_J")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("types", nargs="*", metavar="TYPE")
        s.add_argument("--J", default=None, help="1-based simple reflections, e.g. 1,3")

    s = sub.add_parser("schur", parents=[common], help="Schur elements")
    s.add_argument("types", nargs="*", metavar="TYPE")
    s.add_argument("--k", type=int, default=None)

    s = sub.add_parser("fakedeg", parents=[common], help="fake degrees and b-invariants")
    s.add_argument("types", nargs="*", metavar="TYPE")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        cfg = build_config(ns)
        return COMMANDS[cfg.command](cfg)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InvalidTypeError, DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
