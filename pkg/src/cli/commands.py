"""Subcommand registration and handlers. Handlers return a CommandResult; nothing here exits."""

from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from ..actions.documents import GroupDocument, load_action, read_json
from ..actions.groups import direct_product, group_by_name
from ..common.config import LabConfig
from ..common.errors import ConsistencyFailure, InputError
from ..crossed.construction import crossed_summary, feldman_moore_check
from ..groupvna.certificates import free_subgroup_witness, icc_certificate
from ..groupvna.oracles import oracle_by_name
from ..groupvna.regular import regular_block_check
from ..itpfi.documents import load_spec
from ..itpfi.models import ITPFISpec
from ..itpfi.series import powers_lattice_grid, tset_scan
from ..mekler.centralizer import brute_force_centralizer, char_support_centralizer
from ..mekler.fingerprint import graph_fingerprint
from ..mekler.graphs import load_graph
from ..mekler.group import DEFAULT_PRIME, mekler_group
from ..mekler.iso import mekler_iso_report
from ..mekler.niceness import LITERAL, STRICT, is_nice, nice_catalog
from ..mekler.semidirect import copies_semidirect
from ..redux.harness import harness_names, run_harness
from .acceptance import SUITES, acceptance_frame, run_acceptance

LOGGER = logging.getLogger(__name__)


@dataclass
class CommandResult:
    payload: Any
    frame: Optional[pd.DataFrame] = None
    exit_code: int = 0
    default_format: str = "json"


# ============================================================================
# helpers
# ============================================================================


def parse_grid(text: str, spec: ITPFISpec) -> List[float]:
    """``lattice:M0:M1`` (Powers specs), ``linspace:A:B:N``, or a comma-separated list."""
    kind, _, rest = text.partition(":")
    if kind == "lattice":
        lam = spec.powers_ratio()
        if lam is None:
            raise InputError("a lattice grid needs a Powers spec (one constant two-eigenvalue state)")
        try:
            low, high = (int(part) for part in rest.split(":"))
        except ValueError as exc:
            raise InputError(f"expected lattice:M0:M1, got '{text}'") from exc
        return powers_lattice_grid(lam, range(low, high + 1))
    if kind == "linspace":
        try:
            start, stop, count = rest.split(":")
            return [float(t) for t in np.linspace(float(start), float(stop), int(count))]
        except ValueError as exc:
            raise InputError(f"expected linspace:A:B:N, got '{text}'") from exc
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"cannot parse grid '{text}'") from exc


def _consistency_exit(ok: bool) -> int:
    return 0 if ok else ConsistencyFailure.exit_code


# ============================================================================
# handlers
# ============================================================================


def _crossed(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    summary = crossed_summary(load_action(args.action, config), config)
    return CommandResult(summary.as_dict(), pd.DataFrame([summary.as_row()]))


def _fm_check(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    first, second = load_action(args.first, config), load_action(args.second, config)
    result = feldman_moore_check(first, second, config)
    payload = {"first": first.name, "second": second.name, **result.as_dict()}
    return CommandResult(payload, pd.DataFrame([payload]), _consistency_exit(result.consistent))


def _groupvna(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    payload = read_json(args.group)
    try:
        document = GroupDocument.model_validate(payload)
    except ValueError as exc:
        raise InputError(f"{args.group}: invalid group document: {exc}") from exc
    check = regular_block_check(document.build(), config)
    row = {k: v for k, v in check.as_dict().items() if k != "blocks"}
    return CommandResult(check.as_dict(), pd.DataFrame([row]), _consistency_exit(check.passed))


def _icc(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    oracle = oracle_by_name(args.oracle)
    certificate = icc_certificate(oracle, args.r, args.R, args.threshold, config)
    payload = certificate.as_dict()
    if args.free_radius is not None:
        payload["freeWitness"] = free_subgroup_witness(oracle, args.free_radius, config).as_dict()
    row = {k: v for k, v in payload.items() if not isinstance(v, dict)}
    return CommandResult(payload, pd.DataFrame([row]))


def _mekler_graph(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    graph = load_graph(args.graph)
    group = mekler_group(graph, args.p)
    payload: Dict[str, Any] = {"graph": graph.as_dict(), "p": args.p}
    payload.update(is_nice(graph).as_dict())
    payload["orderExp"] = group.order_exponent
    payload["fingerprint"] = graph_fingerprint(graph, args.p, config).as_dict()
    row = {"graph": graph.name, "n": graph.n, "edges": len(graph.edges), "nice": payload["nice"], "orderExp": group.order_exponent}
    return CommandResult(payload, pd.DataFrame([row]))


def _mekler_iso(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    first, second = load_graph(args.first), load_graph(args.second)
    payload = {"first": first.name, "second": second.name, "p": args.p}
    payload.update(mekler_iso_report(first, second, args.p, config).as_dict())
    return CommandResult(payload, pd.DataFrame([payload]))


def _mekler_centralizer(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    group = group_by_name(args.group)
    if args.copies_graph is not None:
        extension = copies_semidirect(load_graph(args.copies_graph), args.copies, args.p, config)
        group = direct_product(group, extension)
    report = char_support_centralizer(group, config)
    payload = report.as_dict()
    exit_code = 0
    if args.check:
        brute = brute_force_centralizer(group, config)
        agrees = set(brute) == set(report.centralizer)
        payload["bruteForceAgrees"] = agrees
        exit_code = _consistency_exit(agrees)
    row = {k: v for k, v in payload.items() if k != "centralizer"}
    return CommandResult(payload, pd.DataFrame([row]), exit_code)


def _itpfi_scan(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    spec = load_spec(args.spec)
    table = tset_scan(spec, parse_grid(args.grid, spec), config)
    payload = {"spec": spec.as_dict(), "rows": [{"t": row.t, **row.verdict.as_dict()} for row in table.rows]}
    return CommandResult(payload, table.to_frame(), default_format="csv")


def _reduce(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    report = run_harness(args.harness, config, quick=args.quick)
    frame = pd.DataFrame([c.as_dict() for c in report.counterexamples], columns=["first", "second", "side"])
    exit_code = 0 if report.holds or not report.asserted else ConsistencyFailure.exit_code
    return CommandResult(report.as_dict(), frame, exit_code)


def _catalog_nice(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    predicate = STRICT if args.strict else LITERAL
    graphs = nice_catalog(args.max_n, labeled=args.labeled, predicate=predicate)
    counts: Dict[int, int] = {n: 0 for n in range(1, args.max_n + 1)}
    for graph in graphs:
        counts[graph.n] += 1
    payload = {
        "maxN": args.max_n,
        "labeled": args.labeled,
        "predicate": "strict" if args.strict else "literal",
        "counts": {str(n): c for n, c in counts.items()},
        "total": len(graphs),
        "graphs": [graph.as_dict() for graph in graphs],
    }
    frame = pd.DataFrame(
        [{"n": g.n, "edges": " ".join(f"{u}-{v}" for u, v in sorted(g.edges)), "name": g.name} for g in graphs],
        columns=["n", "edges", "name"],
    )
    return CommandResult(payload, frame)


def _acceptance(args: argparse.Namespace, config: LabConfig) -> CommandResult:
    results = run_acceptance(config, suites=args.suite or None, quick=args.quick)
    payload = {"quick": args.quick, "passed": all(r.passed for r in results), "suites": [r.as_dict() for r in results]}
    return CommandResult(payload, acceptance_frame(results), _consistency_exit(payload["passed"]))


# ============================================================================
# registration
# ============================================================================


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", "-o", type=Path, help="Write the report here instead of stdout.")
    parser.add_argument("--format", choices=["json", "csv"], help="Report format (default depends on the command).")


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def register_commands(sub: argparse._SubParsersAction) -> None:
    crossed = sub.add_parser("crossed", help="Build and analyze L∞(X) ⋊ G for an action document.")
    crossed.add_argument("action", type=Path)
    crossed.set_defaults(handler=_crossed)

    fm = sub.add_parser("fm-check", help="Orbit equivalence against Cartan-inclusion equality.")
    fm.add_argument("first", type=Path)
    fm.add_argument("second", type=Path)
    fm.set_defaults(handler=_fm_check)

    groupvna = sub.add_parser("groupvna", help="Block structure of the left regular algebra L(G).")
    groupvna.add_argument("group", type=Path)
    groupvna.set_defaults(handler=_groupvna)

    icc = sub.add_parser("icc", help="Finite ICC certificate for a group oracle (F2, Z2, SL3Z, SL2Z:A,B, ...).")
    icc.add_argument("oracle")
    icc.add_argument("--r", type=int, default=1, help="Radius of the elements tested.")
    icc.add_argument("--R", type=int, default=2, help="Radius of the conjugators.")
    icc.add_argument("--threshold", type=int, default=5)
    icc.add_argument("--free-radius", type=int, help="Also compare the ball with reduced-word counts.")
    icc.set_defaults(handler=_icc)

    mekler = sub.add_parser("mekler", help="Mekler groups of graphs.")
    mekler_sub = mekler.add_subparsers(dest="mekler_command", required=True)
    graph = mekler_sub.add_parser("graph", help="Niceness, order and fingerprint of G(Γ).")
    graph.add_argument("graph", type=Path)
    graph.set_defaults(handler=_mekler_graph)
    iso = mekler_sub.add_parser("iso", help="Compare G(Γ₁) and G(Γ₂).")
    iso.add_argument("first", type=Path)
    iso.add_argument("second", type=Path)
    iso.set_defaults(handler=_mekler_iso)
    centralizer = mekler_sub.add_parser("centralizer", help="Centralizer of the character support.")
    centralizer.add_argument("group", help="Table group or product, e.g. A5xZ2.")
    centralizer.add_argument("--copies-graph", type=Path, help="Append G(k copies of Γ) ⋊ Z/k as a direct factor.")
    centralizer.add_argument("--copies", type=_positive_int, default=2)
    centralizer.add_argument("--check", action="store_true", help="Cross-check with the brute-force centralizer.")
    centralizer.set_defaults(handler=_mekler_centralizer)
    for parser in (graph, iso, centralizer):
        parser.add_argument("--p", type=int, default=DEFAULT_PRIME)
        _add_output_options(parser)

    itpfi = sub.add_parser("itpfi", help="ITPFI T-set scans.")
    itpfi_sub = itpfi.add_subparsers(dest="itpfi_command", required=True)
    scan = itpfi_sub.add_parser("scan", help="Membership verdict per grid point.")
    scan.add_argument("spec", type=Path)
    scan.add_argument("--grid", required=True, help="lattice:M0:M1, linspace:A:B:N, or t1,t2,...")
    scan.set_defaults(handler=_itpfi_scan)
    _add_output_options(scan)

    reduce = sub.add_parser("reduce", help="Run a reduction harness.")
    reduce.add_argument("harness", choices=harness_names())
    reduce.add_argument("--quick", action="store_true")
    reduce.set_defaults(handler=_reduce)

    catalog = sub.add_parser("catalog", help="Generated catalogs.")
    catalog_sub = catalog.add_subparsers(dest="catalog_command", required=True)
    nice = catalog_sub.add_parser("nice", help="Nice graphs on at most --max-n vertices.")
    nice.add_argument("--max-n", type=_positive_int, default=5)
    nice.add_argument("--labeled", action="store_true")
    nice.add_argument("--strict", action="store_true", help="Witness in the separation clause must differ from v.")
    nice.set_defaults(handler=_catalog_nice)
    _add_output_options(nice)

    acceptance = sub.add_parser("acceptance", help="Run the acceptance suites.")
    acceptance.add_argument("--suite", action="append", choices=list(SUITES), help="Repeatable; default: all.")
    acceptance.add_argument("--quick", action="store_true", help="Shrink catalogs for a smoke run.")
    acceptance.set_defaults(handler=_acceptance)

    for parser in (crossed, fm, groupvna, icc, reduce, acceptance):
        _add_output_options(parser)

