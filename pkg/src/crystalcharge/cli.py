"""
Command-line front end: compute, export, verify.

Verbs:

    kostka    one Kostka-Foulkes polynomial (text or JSON)
    crystal   dump a crystal with its operator tables
    atoms     the atomic decomposition of a crystal
    graph     a twisted Bruhat graph (text, DOT or JSON)
    recharge  recharge values of all elements at one stage
    hecke     atomic expansion coefficients
    verify    property sweeps; exits 1 when any check fails

Weights are entered as comma-separated partitions and the rank is
always explicit, since the same partition means different crystals at
different ranks.  Output is deterministic: identical invocations
produce byte-identical results.  Exit codes: 0 success, 1 verification
failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .affine_graph import STAGE_INFINITY, Stage, build_graph
from .atoms import decompose
from .charge_kostka import (
    KOSTKA_METHODS,
    hecke_atomic_expansion,
    kostka,
    recharge_table,
)
from .crystal import DEFAULT_MAX_ELEMENTS, Crystal, normalize_shape
from .root_data import is_dominant
from .verify import SUITES, run_verify


def _fmt(mu) -> str:
    return ",".join(str(v) for v in mu)


def _parse_csv(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}")


def _parse_stage(text: str) -> Stage:
    if text == "inf":
        return STAGE_INFINITY
    try:
        stage = int(text)
    except ValueError:
        raise ValueError(f"stage must be a nonnegative integer or 'inf', got {text!r}")
    if stage < 0:
        raise ValueError(f"stage must be nonnegative, got {stage}")
    return stage


def _stage_json(stage: Stage):
    return "inf" if stage == STAGE_INFINITY else stage


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _load_crystal(args) -> Crystal:
    lam = normalize_shape(_parse_csv(args.weight), args.rank)
    cache_dir = getattr(args, "cache", None)
    if cache_dir is None:
        return Crystal.generate(lam, args.rank, args.max_elements)
    path = Path(cache_dir) / f"crystal_r{args.rank}_{'-'.join(map(str, lam))}.json"
    if path.exists():
        return Crystal.from_json_dict(json.loads(path.read_text(encoding="utf-8")))
    crystal = Crystal.generate(lam, args.rank, args.max_elements)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_dumps(crystal.to_json_dict()), encoding="utf-8")
    return crystal


# -- verb handlers -------------------------------------------------------------


def _cmd_kostka(args) -> tuple[str, int]:
    mu = _parse_csv(args.mu)
    crystal = _load_crystal(args)
    poly = kostka(crystal.shape, args.rank, mu, args.method, crystal=crystal)
    if args.format == "json":
        payload = {
            "rank": args.rank,
            "lambda": list(crystal.shape),
            "mu": list(mu) + [0] * (args.rank + 1 - len(mu)),
            "method": args.method,
            "kostka": poly.to_json_dict(),
            "text": poly.text(),
        }
        return _dumps(payload), 0
    return poly.text() + "\n", 0


def _cmd_crystal(args) -> tuple[str, int]:
    crystal = _load_crystal(args)
    if args.format == "json":
        return _dumps(crystal.to_json_dict()), 0
    lines = [
        f"# crystal rank={crystal.rank} shape={_fmt(crystal.shape)} elements={crystal.size}"
    ]
    for x, rows in enumerate(crystal.elements):
        rows_text = json.dumps([list(row) for row in rows], separators=(",", ":"))
        lines.append(f"{x}\t{rows_text}\t{_fmt(crystal.weights[x])}")
    return "\n".join(lines) + "\n", 0


def _cmd_atoms(args) -> tuple[str, int]:
    crystal = _load_crystal(args)
    dec = decompose(crystal)
    if args.format == "json":
        payload = {
            "rank": crystal.rank,
            "shape": list(crystal.shape),
            "atoms": [atom.to_json_dict() for atom in dec.atoms],
        }
        return _dumps(payload), 0
    lines = []
    for atom in dec.atoms:
        lines.append(
            f"highest_weight={_fmt(atom.highest_weight)} size={atom.size} z={atom.z}"
        )
    return "\n".join(lines) + "\n", 0


def _cmd_graph(args) -> tuple[str, int]:
    lam = normalize_shape(_parse_csv(args.weight), args.rank)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    stage = _parse_stage(args.stage)
    graph = build_graph(lam, stage, args.rank)
    if args.format == "json":
        payload = {
            "base": list(graph.base),
            "stage": _stage_json(stage),
            "vertices": [list(mu) for mu in graph.vertices],
            "edges": [
                {"src": list(src), "dst": list(dst), "label": label.to_json_dict()}
                for src, dst, label in graph.edges
            ],
        }
        return _dumps(payload), 0
    if args.format == "dot":
        lines = [f'digraph "{_fmt(lam)} stage {_stage_json(stage)}" {{']
        for mu in graph.vertices:
            lines.append(f'  "{_fmt(mu)}";')
        for src, dst, label in graph.edges:
            lines.append(f'  "{_fmt(src)}" -> "{_fmt(dst)}" [label="{label.render()}"];')
        lines.append("}")
        return "\n".join(lines) + "\n", 0
    lines = [f"# graph base={_fmt(lam)} stage={_stage_json(stage)} vertices={len(graph.vertices)}"]
    for src, dst, label in graph.edges:
        lines.append(f"{_fmt(src)} -> {_fmt(dst)}\t{label.render()}")
    return "\n".join(lines) + "\n", 0


def _cmd_recharge(args) -> tuple[str, int]:
    crystal = _load_crystal(args)
    stage = _parse_stage(args.stage)
    dec = decompose(crystal)
    table = recharge_table(crystal, dec, stage)
    if args.format == "json":
        doubled = {}
        for x in range(crystal.size):
            value = 2 * table.values[x]
            assert value.denominator == 1
            doubled[str(x)] = int(value)
        payload = {
            "rank": crystal.rank,
            "shape": list(crystal.shape),
            "stage": _stage_json(stage),
            "recharge_doubled": doubled,
        }
        return _dumps(payload), 0
    lines = [f"# recharge shape={_fmt(crystal.shape)} stage={_stage_json(stage)}"]
    for x in range(crystal.size):
        lines.append(f"{x}\t{_fmt(crystal.weights[x])}\t{table.values[x]}")
    return "\n".join(lines) + "\n", 0


def _cmd_hecke(args) -> tuple[str, int]:
    crystal = _load_crystal(args)
    expansion = hecke_atomic_expansion(crystal)
    if args.format == "json":
        payload = {
            "rank": crystal.rank,
            "shape": list(crystal.shape),
            "coeffs": [
                {"mu": list(mu), "coeff": poly.to_json_dict()}
                for mu, poly in expansion.coeffs.items()
            ],
        }
        return _dumps(payload), 0
    lines = []
    for mu, poly in expansion.coeffs.items():
        lines.append(f"mu={_fmt(mu)}\ta={poly.text('v')}")
    return "\n".join(lines) + "\n", 0


def _cmd_verify(args) -> tuple[str, int]:
    report = run_verify(args.suite, args.rank, args.max_weight, args.max_elements)
    lines = []
    for failure in report.failures:
        lines.append(f"FAIL {failure.case}: expected {failure.expected}, got {failure.actual}")
    lines.append(
        f"suite={report.suite} rank={args.rank} max_weight={args.max_weight} "
        f"cases={report.cases} failures={len(report.failures)}"
    )
    return "\n".join(lines) + "\n", report.exit_status


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystalcharge",
        description="Exact charge statistics and Kostka-Foulkes polynomials on type-A crystals.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, fmt_choices=("text", "json"), with_crystal=True):
        p.add_argument("--rank", type=int, required=True, help="rank n of the root system A_n")
        p.add_argument("--weight", type=str, required=True, help="partition, e.g. 2,1,0")
        p.add_argument("--format", choices=fmt_choices, default="text")
        p.add_argument("--out", type=str, default=None, help="write output to a file")
        if with_crystal:
            p.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
            p.add_argument("--cache", type=str, default=None, help="crystal cache directory")

    p = sub.add_parser("kostka", help="Kostka-Foulkes polynomial K_{lambda,mu}(q)")
    add_common(p)
    p.add_argument("--mu", type=str, required=True, help="dominant weight, e.g. 1,1,1")
    p.add_argument("--method", choices=KOSTKA_METHODS, default="new")
    p.set_defaults(handler=_cmd_kostka)

    p = sub.add_parser("crystal", help="dump a crystal and its operator tables")
    add_common(p)
    p.set_defaults(handler=_cmd_crystal)

    p = sub.add_parser("atoms", help="atomic decomposition of a crystal")
    add_common(p)
    p.set_defaults(handler=_cmd_atoms)

    p = sub.add_parser("graph", help="twisted Bruhat graph over a dominant weight")
    add_common(p, fmt_choices=("text", "dot", "json"), with_crystal=False)
    p.add_argument("--stage", type=str, default="0", help="stage: nonnegative integer or 'inf'")
    p.set_defaults(handler=_cmd_graph)

    p = sub.add_parser("recharge", help="stagewise recharge values of all elements")
    add_common(p)
    p.add_argument("--stage", type=str, default="0", help="stage: nonnegative integer or 'inf'")
    p.set_defaults(handler=_cmd_recharge)

    p = sub.add_parser("hecke", help="atomic expansion coefficients a_{mu,lambda}(v)")
    add_common(p)
    p.set_defaults(handler=_cmd_hecke)

    p = sub.add_parser("verify", help="run property sweeps")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "rank", 1) < 1:
        print("error: rank must be >= 1", file=sys.stderr)
        return 2
    try:
        text, status = args.handler(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out_path = getattr(args, "out", None)
    if out_path is not None:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
