"""Command-line front end: pipeline subcommands plus a 2-D SVG emitter.

Exit codes: 0 success, 1 usage error, 2 input format error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from .channels import min_channel_decomposition
from .ctc import build_ctc
from .draw import DominanceDrawing, kd_draw, make_distinct, verify_dominance
from .errors import (
    DomDrawError,
    MalformedInput,
    MissingVertexCoordinates,
    NotTwoDimensional,
)
from .graph import Dag, StGraph, parse_edge_list, to_st_graph, topological_order
from .modular import (
    CongruencePartition,
    dimensional_neck,
    find_congruence_partition,
    module_induced_graphs,
    nd_draw,
    quotient_graph,
    validate_partition,
)
from .query import batch_query, build_index

DEFAULT_CELL = 40
DEFAULT_VERIFY_LIMIT = 2000


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input: Path | None = None
    drawing: Path | None = None
    method: str = "kd"
    distinct: bool = False
    partition: Path | None = None
    pairs: Path | None = None
    output: Path | None = None
    verify: bool = False
    include_virtual: bool = False
    oracle_limit: int = DEFAULT_VERIFY_LIMIT


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit code 1, not argparse's default 2
        raise _UsageError(message)


def render_svg(drawing: DominanceDrawing, g: Dag, cell: int = DEFAULT_CELL) -> str:
    """Deterministic SVG of a 2-D drawing; dominance points up and right."""
    if drawing.k != 2:
        raise NotTwoDimensional("render requires a 2-dimensional drawing")
    missing = [v for v in g.vertex_ids if v not in drawing.coords]
    if missing:
        raise MissingVertexCoordinates(f"no coordinates for {missing}")
    span_x = max((c[0] for c in drawing.coords.values()), default=0)
    span_y = max((c[1] for c in drawing.coords.values()), default=0)
    margin = cell
    width = span_x * cell + 2 * margin
    height = span_y * cell + 2 * margin

    def point(v: str) -> tuple[int, int]:
        x, y = drawing.coords[v]
        return margin + x * cell, margin + (span_y - y) * cell

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
    ]
    for u, v in g.edges():
        (x1, y1), (x2, y2) = point(u), point(v)
        parts.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="#555555" stroke-width="1"/>'
        )
    for v in g.vertex_ids:
        x, y = point(v)
        parts.append(
            f'<circle cx="{x}" cy="{y}" r="14" fill="white" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x}" y="{y}" text-anchor="middle" dy="4" '
            f'font-family="monospace" font-size="12">{escape(v)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _build_parser() -> _Parser:
    parser = _Parser(prog="domdraw", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def graph_cmd(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", type=Path, help="edge-list file")
        p.add_argument("--output", type=Path, help="write result here instead of stdout")
        p.add_argument(
            "--include-virtual",
            action="store_true",
            help="keep virtual endpoint vertices in the output",
        )
        return p

    graph_cmd("width", "print the width (minimum channel count)")
    graph_cmd("channels", "emit a minimum channel decomposition as JSON")
    graph_cmd("ctc", "emit the compressed transitive closure as JSON")

    p = graph_cmd("draw", "emit a dominance drawing as JSON")
    p.add_argument("--method", choices=("kd", "nd"), default="kd")
    p.add_argument("--distinct", action="store_true", help="re-rank to distinct coordinates")
    p.add_argument("--partition", type=Path, help="partition JSON for --method nd")
    p.add_argument("--verify", action="store_true", help="oracle-check the drawing")
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_VERIFY_LIMIT)

    p = graph_cmd("modules", "emit a congruence partition and its neck profile")
    p.add_argument("--partition", type=Path, help="validate this partition instead")

    p = sub.add_parser("query", help="answer reachability pairs from a drawing")
    p.add_argument("drawing", type=Path, help="drawing JSON file")
    p.add_argument("--pairs", type=Path, required=True, help="file of 'u v' lines")
    p.add_argument("--output", type=Path)

    p = sub.add_parser("verify", help="oracle-check a drawing against a graph")
    p.add_argument("input", type=Path, help="edge-list file")
    p.add_argument("drawing", type=Path, help="drawing JSON file")
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_VERIFY_LIMIT)

    p = sub.add_parser("render", help="render a 2-D drawing to SVG")
    p.add_argument("input", type=Path, help="edge-list file")
    p.add_argument("drawing", type=Path, help="drawing JSON file")
    p.add_argument("--output", type=Path)
    return parser


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from None


def _load_drawing(path: Path) -> DominanceDrawing:
    try:
        obj = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: {exc}") from None
    return DominanceDrawing.from_json_obj(obj)


def _load_partition(path: Path, st: StGraph) -> CongruencePartition:
    try:
        obj = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: {exc}") from None
    partition = CongruencePartition.from_json_obj(obj)
    covered = {v for block in partition.blocks for v in block}
    extra = [
        (v,) for v in st.virtual_ids() if v not in covered
    ]  # virtual endpoints become singleton blocks automatically
    if extra:
        partition = CongruencePartition(partition.blocks + tuple(extra))
    return partition


def _parse_pairs(text: str) -> list[tuple[str, str]]:
    pairs = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedInput(f"pairs line {line_no}: expected two tokens")
        pairs.append((tokens[0], tokens[1]))
    return pairs


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _view(st: StGraph, include_virtual: bool, original: Dag) -> Dag:
    return st.dag if include_virtual else original


def run(cfg: RunConfig) -> int:
    """Execute one subcommand; returns the process exit status."""
    if cfg.subcommand == "query":
        drawing = _load_drawing(cfg.drawing)
        pairs = _parse_pairs(_read_text(cfg.pairs))
        index = build_index(drawing)
        answers = batch_query(index, pairs)
        lines = [
            f"{u} {v} {'yes' if ans else 'no'}"
            for (u, v), ans in zip(pairs, answers)
        ]
        _emit("".join(line + "\n" for line in lines), cfg.output)
        return 0

    if cfg.subcommand == "verify":
        dag = parse_edge_list(_read_text(cfg.input))
        if dag.n > cfg.oracle_limit:
            raise _UsageError(
                f"graph has {dag.n} vertices; raise --oracle-limit to verify"
            )
        drawing = _load_drawing(cfg.drawing)
        report = verify_dominance(dag, drawing)
        _emit(("" if report.ok else str(report) + "\n"), cfg.output)
        return 0 if report.ok else 3

    if cfg.subcommand == "render":
        dag = parse_edge_list(_read_text(cfg.input))
        drawing = _load_drawing(cfg.drawing)
        _emit(render_svg(drawing, dag), cfg.output)
        return 0

    dag = parse_edge_list(_read_text(cfg.input))
    st = to_st_graph(dag)
    strip = st.virtual_ids() if not cfg.include_virtual else frozenset()

    if cfg.subcommand == "width":
        _emit(f"{min_channel_decomposition(st).size}\n", cfg.output)
        return 0

    if cfg.subcommand == "channels":
        d = min_channel_decomposition(st)
        _emit(_json_text(d.to_json_obj(exclude=strip)), cfg.output)
        return 0

    if cfg.subcommand == "ctc":
        d = min_channel_decomposition(st)
        table = build_ctc(st, d)
        _emit(_json_text(table.to_json_obj(exclude=strip)), cfg.output)
        return 0

    if cfg.subcommand == "draw":
        if cfg.method == "kd":
            d = min_channel_decomposition(st)
            drawing = kd_draw(st, d, build_ctc(st, d))
        else:
            partition = (
                _load_partition(cfg.partition, st)
                if cfg.partition
                else find_congruence_partition(st)
            )
            drawing = nd_draw(st, partition)
        view = _view(st, cfg.include_virtual, dag)
        if strip:
            drawing = drawing.restricted(set(view.vertex_ids))
        if cfg.distinct:
            drawing = make_distinct(drawing, topological_order(view))
        if cfg.verify:
            if view.n > cfg.oracle_limit:
                raise _UsageError(
                    f"graph has {view.n} vertices; raise --oracle-limit to verify"
                )
            report = verify_dominance(view, drawing)
            if not report.ok:
                sys.stderr.write(str(report) + "\n")
                return 3
        _emit(_json_text(drawing.to_json_obj()), cfg.output)
        return 0

    if cfg.subcommand == "modules":
        partition = (
            _load_partition(cfg.partition, st)
            if cfg.partition
            else find_congruence_partition(st)
        )
        report = validate_partition(st, partition)
        if not report.ok:
            raise MalformedInput(f"not a congruence partition:\n{report}")
        quotient = quotient_graph(st, partition)
        members = module_induced_graphs(st, partition)
        profile = dimensional_neck(quotient, members)
        blocks = [
            [v for v in block if v not in strip]
            for block in partition.blocks
        ]
        obj = {
            "blocks": [b for b in blocks if b],
            "neck": profile.to_json_obj(),
        }
        _emit(_json_text(obj), cfg.output)
        return 0

    raise _UsageError(f"unknown subcommand {cfg.subcommand!r}")


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    get = lambda name, default=None: getattr(args, name, default)
    return RunConfig(
        subcommand=args.subcommand,
        input=get("input"),
        drawing=get("drawing"),
        method=get("method", "kd"),
        distinct=bool(get("distinct", False)),
        partition=get("partition"),
        pairs=get("pairs"),
        output=get("output"),
        verify=bool(get("verify", False)),
        include_virtual=bool(get("include_virtual", False)),
        oracle_limit=get("oracle_limit", DEFAULT_VERIFY_LIMIT),
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return run(_config_from_args(args))
    except _UsageError as exc:
        sys.stderr.write(f"domdraw: {exc}\n")
        return 1
    except NotTwoDimensional as exc:
        sys.stderr.write(f"domdraw: {exc}\n")
        return 1
    except DomDrawError as exc:
        sys.stderr.write(f"domdraw: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
