"""Command-line interface: deterministic JSON reports over gem files.

Exit codes: 0 ok (including "no bound" verdicts), 1 usage error, 2 invalid
input, 3 internal assertion failure.  JSON is the machine interface; pass
--pretty for a human-readable rendering.  Half-integer genus values are
emitted as strings "k" or "k/2", never floating point.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core, gems, genus, moves, trisection
from .errors import DisconnectedGraphError, GemError


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _genus_str(value) -> str:
    return genus.format_half_integer(value)


def _load(path: str) -> core.ColoredGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GemError(f"cannot read {path}: {exc.strerror}") from exc
    return core.parse(text)


def _star_payload(star) -> dict:
    if star is None:
        return {"holds": False, "ordering": None, "witnesses": None}
    return {
        "holds": True,
        "ordering": [list(e) for e in star.edges],
        "witnesses": list(star.witnesses),
    }


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_validate(args) -> tuple[dict, list[str]]:
    graph = _load(args.path)
    payload = {
        "valid": True,
        "dimension": graph.dimension,
        "order": graph.order,
        "edges": (graph.dimension + 1) * graph.half_order,
        "connected": graph.is_connected(),
    }
    return payload, []


def cmd_info(args) -> tuple[dict, list[str]]:
    graph = _load(args.path)
    diagnostics = []
    connected = graph.is_connected()
    payload = {
        "dimension": graph.dimension,
        "order": graph.order,
        "connected": connected,
        "bipartite": None,
        "orientability": None,
        "residue_counts": None,
        "euler_characteristic": None,
        "betti": None,
        "classification": None,
    }
    counts = {}
    for c in graph.colors:
        other = [d for d in graph.colors if d != c]
        counts[str(c)] = core.residue_count(graph, other)
    payload["residue_counts"] = counts
    if not connected:
        diagnostics.append(
            "graph is disconnected: bipartiteness, Euler characteristic, "
            "Betti numbers and classification are omitted")
        return payload, diagnostics
    bipartite, _ = core.is_bipartite(graph)
    payload["bipartite"] = bipartite
    payload["orientability"] = gems.orientability(graph)
    payload["euler_characteristic"] = core.euler_characteristic(graph)
    payload["betti"] = list(gems.z2_betti(graph))
    if graph.dimension == 4:
        cls = gems.classify(graph)
        payload["classification"] = {
            "crystallization": cls.crystallization,
            "in_class_gs": cls.in_class_gs,
            "sphere_certification": {
                str(c): list(statuses)
                for c, statuses in cls.sphere_certification.items()},
            "singular_color_candidates": list(cls.singular_color_candidates),
        }
    else:
        diagnostics.append(
            f"classification is specific to dimension 4 "
            f"(input has dimension {graph.dimension})")
    return payload, diagnostics


def _genus_section(graph, mode) -> dict:
    if mode == "all":
        table = [{"permutation": list(perm.colors), "genus": _genus_str(value)}
                 for perm, value in genus.genus_table(graph)]
        return {"table": table}
    value, witness = genus.regular_genus_min(graph)
    return {"minimum": {"genus": _genus_str(value),
                        "witness": list(witness.colors)}}


def cmd_genus(args) -> tuple[dict, list[str]]:
    graph = _load(args.path)
    mode = "all" if args.all else "min"
    payload = {"dimension": graph.dimension, "order": graph.order, "mode": mode}
    if args.residue is None:
        payload.update(_genus_section(graph, mode))
        return payload, []
    c = args.residue
    if c not in graph.colors:
        raise GemError(f"--residue color {c} out of range 0..{graph.dimension}")
    other = [d for d in graph.colors if d != c]
    parts = core.residues(graph, other)
    entries = []
    for index, part in enumerate(parts):
        entry = {"index": index, "order": part.induced_graph.order,
                 "vertices": list(part.vertices)}
        entry.update(_genus_section(part.induced_graph, mode))
        entries.append(entry)
    payload["residue"] = {"color": c, "residues": entries}
    return payload, []


def cmd_trisect(args) -> tuple[dict, list[str]]:
    graph = _load(args.path)
    diagnostics = []
    cls = gems.classify(graph)
    star = trisection.condition_star(graph)
    payload = {
        "order": graph.order,
        "classification": {
            "crystallization": cls.crystallization,
            "in_class_gs": cls.in_class_gs,
            "singular_color_candidates": list(cls.singular_color_candidates),
        },
        "condition_star": _star_payload(star),
        "reports": None,
        "ggt_upper_bound": None,
        "closed_certified": None,
        "betti_lower_bound": None,
        "verdict": None,
    }
    closed = trisection.is_closed_certified(graph)
    payload["closed_certified"] = closed
    if closed:
        payload["betti_lower_bound"] = trisection.betti_lower_bound(graph)
    if not cls.in_class_gs:
        payload["verdict"] = "not in class G_s: no report from this gem"
        return payload, diagnostics
    if star is None:
        payload["verdict"] = "no bound from this gem (condition (*) fails)"
        return payload, diagnostics
    reports = []
    for order4 in trisection.HAT4_ORDERS:
        report = trisection.trisection_report(graph, order4 + (4,))
        reports.append({
            "epsilon": list(report.epsilon),
            "genus_h1": report.genus_h1,
            "genus_h2": report.genus_h2,
            "central_surface_euler": report.central_surface_euler,
            "central_surface_rho": _genus_str(report.central_surface_rho),
            "orientable": report.orientable,
            "surface_genus": report.surface_genus,
            "ggt_upper_bound": _genus_str(report.ggt_upper_bound),
        })
    payload["reports"] = reports
    value, witness = trisection.ggt_upper_bound(graph)
    payload["ggt_upper_bound"] = {"genus": _genus_str(value),
                                  "witness": list(witness)}
    payload["verdict"] = "bound"
    return payload, diagnostics


# --- moves -----------------------------------------------------------------

def _default_output(path: str, suffix: str) -> str:
    base = path[:-4] if path.endswith(".gem") else path
    return f"{base}.{suffix}.gem"


def _log_path(out: str) -> str:
    base = out[:-4] if out.endswith(".gem") else out
    return f"{base}.log"


def _write_move_output(graph, out_path: str, records) -> dict:
    core.save(graph, out_path)
    log = _log_path(out_path)
    with open(log, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(record.to_line() + "\n")
    return {"output": out_path, "log": log,
            "fingerprint": moves.fingerprint(graph)}


def _parse_vertex_pair(text: str, flag: str) -> tuple[int, int]:
    try:
        u, v = (int(t) for t in text.split(","))
    except ValueError:
        raise GemError(f"{flag} expects 'u,v' with two integers") from None
    return u, v


def cmd_moves_rho_list(args) -> tuple[dict, list[str]]:
    graph = _load(args.path)
    required = ()
    if args.involving:
        try:
            required = tuple(int(t) for t in args.involving.split(","))
        except ValueError:
            raise GemError("--involving expects a comma-separated color list") from None
    pairs = moves.find_rho_pairs(graph, args.color, required)
    payload = {
        "color": args.color,
        "required_involved": list(required),
        "pairs": [{"edge_a": list(p.edge_a), "edge_b": list(p.edge_b),
                   "involved": list(p.involved), "h": p.h}
                  for p in pairs],
    }
    return payload, []


def cmd_moves_rho_switch(args) -> tuple[dict, list[str]]:
    graph = _load(args.path)
    edge_a = _parse_vertex_pair(args.edge_a, "--edge-a")
    edge_b = _parse_vertex_pair(args.edge_b, "--edge-b")
    edge_a = tuple(sorted(edge_a))
    edge_b = tuple(sorted(edge_b))
    involved = moves.involved_colors(graph, args.color, edge_a, edge_b)
    pair = moves.RhoPair(args.color, edge_a, edge_b, involved)
    variant_used = moves.resolve_switch_variant(graph, pair, args.variant)
    result = moves.switch_rho_pair(graph, pair, args.variant)
    record = moves.MoveRecord(
        kind="rho-switch",
        params={"color": args.color, "edge_a": list(edge_a),
                "edge_b": list(edge_b), "variant": args.variant,
                "variant_used": variant_used},
        fingerprint=moves.fingerprint(result),
        meta={"involved": list(involved)},
    )
    out = args.output or _default_output(args.path, "switch1")
    payload = {"color": args.color, "edge_a": list(edge_a),
               "edge_b": list(edge_b), "involved": list(involved),
               "variant": args.variant, "variant_used": variant_used,
               "order": result.order}
    payload.update(_write_move_output(result, out, [record]))
    return payload, []


def cmd_moves_dipole_list(args) -> tuple[dict, list[str]]:
    graph = _load(args.path)
    dipoles = moves.find_dipoles(graph, args.size)
    payload = {
        "size": args.size,
        "dipoles": [{"u": d.u, "v": d.v, "colors": list(d.colors),
                     "proper": d.proper}
                    for d in dipoles],
    }
    return payload, []


def cmd_moves_dipole_cancel(args) -> tuple[dict, list[str]]:
    graph = _load(args.path)
    u, v = _parse_vertex_pair(args.vertices, "--vertices")
    spec = moves._dipole_at(graph, u, v)
    if spec is None:
        raise GemError(f"vertices {u},{v} do not form a dipole")
    result = moves.cancel_dipole(graph, spec)
    record = moves.MoveRecord(
        kind="dipole-cancel",
        params={"u": u, "v": v, "colors": list(spec.colors)},
        fingerprint=moves.fingerprint(result),
    )
    out = args.output or _default_output(args.path, "cancel1")
    payload = {"u": u, "v": v, "colors": list(spec.colors),
               "order": result.order}
    payload.update(_write_move_output(result, out, [record]))
    return payload, []


def cmd_moves_consum(args) -> tuple[dict, list[str]]:
    graph1 = _load(args.path)
    graph2 = _load(args.path2)
    v1, v2 = 0, 0
    if args.at:
        v1, v2 = _parse_vertex_pair(args.at, "--at")
    result = moves.connected_sum(graph1, v1, graph2, v2)
    record = moves.MoveRecord(
        kind="connected-sum",
        params={"v1": v1, "v2": v2, "other": moves.fingerprint(graph2)},
        fingerprint=moves.fingerprint(result),
    )
    out = args.output or _default_output(args.path, "sum")
    payload = {"v1": v1, "v2": v2, "order": result.order}
    payload.update(_write_move_output(result, out, [record]))
    return payload, []


def cmd_moves_pipeline(args) -> tuple[dict, list[str]]:
    graph = _load(args.path)
    record = moves.rho1_pipeline(graph, args.color, args.switches)
    prefix = args.output or (
        args.path[:-4] if args.path.endswith(".gem") else args.path)
    outputs = []
    current = graph
    for k, step in enumerate(record.steps, start=1):
        current = moves.replay(current, [step])
        out = f"{prefix}.pipe{k}.gem"
        core.save(current, out)
        outputs.append(out)
    log = f"{prefix}.pipeline.log"
    with open(log, "w", encoding="utf-8") as fh:
        for step in record.steps:
            fh.write(step.to_line() + "\n")
    payload = {
        "color": record.color,
        "switches": record.switch_count,
        "base_residue_genus": {
            ",".join(map(str, o)): _genus_str(v)
            for o, v in sorted(record.base_residue_genus.items())},
        "final_residue_genus": {
            ",".join(map(str, o)): _genus_str(v)
            for o, v in sorted(record.final_residue_genus.items())},
        "steps": [{"step": s.meta["step"], "deltas": s.meta["deltas"],
                   "params": s.params, "fingerprint": s.fingerprint}
                  for s in record.steps],
        "in_class_gs": record.in_class_gs,
        "condition_star": _star_payload(record.star),
        "bound": _genus_str(record.bound) if record.bound_available else None,
        "bound_available": record.bound_available,
        "notes": list(record.notes),
        "outputs": outputs,
        "log": log,
    }
    diagnostics = []
    if not record.bound_available:
        diagnostics.append(
            "bound unavailable: final graph fails the class or condition-(*) "
            "checks")
    return payload, diagnostics


def cmd_bounds(args) -> tuple[dict, list[str]]:
    s, c = args.crossings, args.components
    if s < 0:
        raise GemError(f"crossing number must be >= 0, got {s}")
    if c < 1:
        raise GemError(f"component count must be >= 1, got {c}")
    diagnostics = []
    bounds = {"from_crossings": s + c}
    alpha = args.alpha_regions
    if alpha is not None and alpha < 1:
        raise GemError(f"alpha-region count must be >= 1, got {alpha}")
    if args.dotted and alpha is not None:
        diagnostics.append(
            "alpha-region bound suppressed: it requires a diagram with no "
            "dotted components")
        alpha = None
    if not args.dotted and alpha is not None:
        bounds["from_alpha_regions"] = alpha + c - 1
    payload = {
        "crossings": s,
        "components": c,
        "dotted": args.dotted,
        "alpha_regions": alpha,
        "bounds": bounds,
        "best": min(bounds.values()),
    }
    return payload, diagnostics


# ---------------------------------------------------------------------------
# Output rendering and entry point
# ---------------------------------------------------------------------------

def _render_pretty(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in value:
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_pretty(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_pretty(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _scalar(item) -> str:
    if item is None:
        return "-"
    if isinstance(item, bool):
        return "yes" if item else "no"
    if isinstance(item, list):
        return "[]"
    if isinstance(item, dict):
        return "{}"
    return str(item)


def _print_result(result: dict, pretty: bool) -> None:
    if pretty:
        print(f"status: {result['status']}  command: {result['command']}")
        for line in _render_pretty(result["payload"]):
            print(line)
        for note in result["diagnostics"]:
            print(f"note: {note}")
    else:
        print(json.dumps(result, sort_keys=True, indent=2))


def build_parser() -> _Parser:
    parser = _Parser(prog="gemkit",
                     description="Analyze edge-colored graphs encoding "
                                 "4-manifolds: validation, genus, moves and "
                                 "trisection bounds.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true",
                        help="human-readable output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="parse a gem file and check all invariants")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate, command_name="validate")

    p = sub.add_parser("info", parents=[common],
                       help="structural summary: residues, homology, class")
    p.add_argument("path")
    p.set_defaults(func=cmd_info, command_name="info")

    p = sub.add_parser("genus", parents=[common],
                       help="regular genus per permutation or minimized")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true",
                       help="table over all canonical permutations")
    group.add_argument("--min", action="store_true",
                       help="minimum with witness (default)")
    p.add_argument("--residue", type=int, default=None, metavar="C",
                   help="compute on the residues missing color C instead")
    p.set_defaults(func=cmd_genus, command_name="genus")

    p = sub.add_parser("trisect", parents=[common],
                       help="condition (*), trisection reports and bounds")
    p.add_argument("path")
    p.set_defaults(func=cmd_trisect, command_name="trisect")

    mv = sub.add_parser("moves", help="apply or list combinatorial moves")
    mvsub = mv.add_subparsers(dest="subcommand", required=True)

    p = mvsub.add_parser("rho-list", parents=[common],
                         help="list pairs of same-colored edges sharing cycles")
    p.add_argument("path")
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--involving", default=None,
                   help="comma-separated colors the pairs must involve")
    p.set_defaults(func=cmd_moves_rho_list, command_name="moves rho-list")

    p = mvsub.add_parser("rho-switch", parents=[common],
                         help="switch one pair and write the result")
    p.add_argument("path")
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--edge-a", required=True, metavar="U,V")
    p.add_argument("--edge-b", required=True, metavar="X,Y")
    p.add_argument("--variant", choices=("A", "B", "canonical"),
                   default="canonical")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_moves_rho_switch, command_name="moves rho-switch")

    p = mvsub.add_parser("dipole-list", parents=[common],
                         help="list dipoles of a given size with properness")
    p.add_argument("path")
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=cmd_moves_dipole_list, command_name="moves dipole-list")

    p = mvsub.add_parser("dipole-cancel", parents=[common],
                         help="cancel a proper dipole and write the result")
    p.add_argument("path")
    p.add_argument("--vertices", required=True, metavar="U,V")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_moves_dipole_cancel,
                   command_name="moves dipole-cancel")

    p = mvsub.add_parser("consum", parents=[common],
                         help="graph connected sum of two gem files")
    p.add_argument("path")
    p.add_argument("path2")
    p.add_argument("--at", default=None, metavar="V1,V2",
                   help="vertices to remove (default 0,0)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_moves_consum, command_name="moves consum")

    p = mvsub.add_parser("pipeline", parents=[common],
                         help="switch pairs involving color 4 and report the "
                              "trisection-genus bound")
    p.add_argument("path")
    p.add_argument("--color", type=int, required=True)
    p.add_argument("-m", "--switches", type=int, required=True)
    p.add_argument("-o", "--output", default=None,
                   help="prefix for step outputs and log")
    p.set_defaults(func=cmd_moves_pipeline, command_name="moves pipeline")

    p = sub.add_parser("bounds", parents=[common],
                       help="trisection-genus bounds from surgery-diagram "
                            "counts")
    p.add_argument("--crossings", "-s", type=int, required=True)
    p.add_argument("--components", "-c", type=int, default=1)
    p.add_argument("--dotted", action="store_true",
                   help="the diagram has dotted components")
    p.add_argument("--alpha-regions", type=int, default=None,
                   help="regions of the unbounded color in a chess-board "
                        "coloration (diagrams with no dotted components)")
    p.set_defaults(func=cmd_bounds, command_name="bounds")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    pretty = getattr(args, "pretty", False)
    command = getattr(args, "command_name", args.command)
    try:
        payload, diagnostics = args.func(args)
    except DisconnectedGraphError as exc:
        _print_result({"status": "error", "command": command,
                       "payload": {"error": str(exc)},
                       "diagnostics": []}, pretty)
        return 2
    except GemError as exc:
        payload = {"error": str(exc)}
        line = getattr(exc, "line", None)
        if line is not None:
            payload["line"] = line
        _print_result({"status": "error", "command": command,
                       "payload": payload, "diagnostics": []}, pretty)
        return 2
    except Exception as exc:  # internal failure, distinct exit code
        print(f"gemkit: internal error: {exc}", file=sys.stderr)
        return 3
    _print_result({"status": "ok", "command": command,
                   "payload": payload, "diagnostics": diagnostics}, pretty)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
