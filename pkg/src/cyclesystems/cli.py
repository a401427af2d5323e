"""Command-line front end.

Exit codes: 0 ok, 1 internal error, 2 parse error, 3 budget exhausted,
4 invalid cycle system.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import random
import sys
import time
from pathlib import Path

from . import bijection, coparking
from .tutte import check_main_theorem, f_vector, h_vector, tutte
from .cycle_system import (
    Budget,
    CycleSystem,
    InvalidCycleSystem,
    find_fundamental_circuit_system,
    firing_matrix,
    is_m_matrix,
    search_circuit_systems,
)
from .io import ParseError, load_cycle_system, load_matroid, parse_graph6, read_graph6_file
from .matroid import BudgetExceeded, GraphicMatroid, Matroid, circuit_space_rank

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_BUDGET, EXIT_INVALID = 0, 1, 2, 3, 4

CENSUS_HEADER = "graph6\tcorank\tcircuits\thas_circuit_system\thas_fundamental\telapsed_s"


def _budget(args) -> Budget:
    ms = getattr(args, "budget_ms", None)
    return Budget(seconds=None if ms is None else ms / 1000)


def _labels(m: Matroid, text: str) -> list:
    by_str = {str(lab): lab for lab in m.labels}
    out = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        if tok not in by_str:
            raise ParseError(f"unknown element {tok!r}")
        out.append(by_str[tok])
    return out


def _vector(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise ParseError(f"bad vector {text!r}") from exc


def _fmt(m: Matroid, elements) -> list:
    mask = m.to_mask(elements)
    return m.to_list(mask)


def _system(args, m: Matroid) -> CycleSystem:
    """The ``--system`` file, or the first system a search finds."""
    if args.system:
        return load_cycle_system(m, args.system)
    cs = find_fundamental_circuit_system(m, _budget(args))
    if cs is None:
        found = search_circuit_systems(m, "first", _budget(args)).systems
        if not found:
            raise InvalidCycleSystem("no circuit system exists; pass --system")
        cs = found[0]
    return cs


def _ordering(args, m: Matroid):
    return _labels(m, args.ordering) if args.ordering else None


def _emit(out, text: str):
    out.write(text if text.endswith("\n") else text + "\n")


# -- commands -----------------------------------------------------------------------


def cmd_circuits(args, out):
    m = load_matroid(args.input)
    if args.format == "tsv":
        for c in m.circuit_masks:
            _emit(out, ",".join(map(str, m.to_list(c))))
    else:
        for c in m.circuit_masks:
            _emit(out, json.dumps(m.to_list(c)))


def cmd_search(args, out):
    m = load_matroid(args.input)
    mode = "count" if args.count else args.mode
    result = search_circuit_systems(m, mode, _budget(args), args.checkpoint)
    if args.check_theorems:
        for cs in result.systems:
            if m.is_connected() and any(c not in m.circuit_masks for c in cs.cycles):
                raise RuntimeError("connected matroid with a non-circuit member")
            if isinstance(m, GraphicMatroid) and circuit_space_rank(m, cs.sets()) != cs.g:
                raise RuntimeError("circuit-space rank differs from corank")
    if mode == "count":
        _emit(out, str(result.count))
        return
    for cs in result.systems:
        _emit(out, json.dumps(cs.to_json()))


def _load_census_checkpoint(directory) -> dict[str, str]:
    done: dict[str, str] = {}
    if directory is None:
        return done
    path = Path(directory) / "census.tsv"
    if path.exists():
        for line in path.read_text().splitlines()[1:]:
            if line.strip():
                done[line.split("\t", 1)[0]] = line
    return done


def census_row(token: str, graph, budget_ms: float | None) -> str:
    if isinstance(graph, Exception):
        return f"{token}\terror\terror\terror\terror\t0"
    m = GraphicMatroid(graph)
    start = time.monotonic()
    budget = Budget(seconds=None if budget_ms is None else budget_ms / 1000)
    n_circuits = len(m.circuit_masks)
    try:
        fundamental = find_fundamental_circuit_system(m, budget) is not None
        has = fundamental or search_circuit_systems(m, "first", budget).count > 0
        has_s, fund_s = str(has).lower(), str(fundamental).lower()
    except BudgetExceeded:
        has_s = fund_s = "unknown"
    elapsed = time.monotonic() - start
    return f"{token}\t{m.corank}\t{n_circuits}\t{has_s}\t{fund_s}\t{elapsed:.3f}"


def _census_token(job: tuple[str, float | None]) -> str:
    token, budget_ms = job
    try:
        graph = parse_graph6(token)
    except ParseError as exc:
        graph = exc
    return census_row(token, graph, budget_ms)


def cmd_census(args, out):
    done = _load_census_checkpoint(args.checkpoint)
    ckpt = None
    if args.checkpoint:
        os.makedirs(args.checkpoint, exist_ok=True)
        path = Path(args.checkpoint) / "census.tsv"
        fresh = not path.exists()
        ckpt = path.open("a")
        if fresh:
            ckpt.write(CENSUS_HEADER + "\n")
    _emit(out, CENSUS_HEADER)
    tokens = [token for _, token, _ in read_graph6_file(args.input)]
    pending = [(t, args.budget_ms) for t in dict.fromkeys(tokens) if t not in done]
    pool = multiprocessing.Pool(args.jobs) if args.jobs > 1 and len(pending) > 1 else None
    try:
        # imap keeps input order, so rows stream out as in a serial run
        rows = pool.imap(_census_token, pending) if pool else map(_census_token, pending)
        fresh_rows = iter(rows)
        for token in tokens:
            row = done.get(token)
            if row is None:
                row = next(fresh_rows)
                done[token] = row
                if ckpt is not None:
                    ckpt.write(row + "\n")
                    ckpt.flush()
            _emit(out, row)
    finally:
        if pool is not None:
            pool.terminate()
        if ckpt is not None:
            ckpt.close()


def build_report(m: Matroid, cs: CycleSystem, ordering=None) -> dict:
    poly = tutte(m)
    functions = coparking.enumerate_coparking(cs)
    degrees = coparking.degree_vector(cs, functions)
    lmat = firing_matrix(cs)
    root = bijection.build_dc_tree(cs, ordering)
    table = [
        {"basis": _fmt(m, leaf.basis), "coparking": list(leaf.coparking), "degree": leaf.degree}
        for leaf in bijection.leaves(root)
    ]
    return {
        "ground": [str(x) for x in m.elements],
        "cycles": cs.lists(),
        "tutte": poly.to_json(),
        "h_vector": h_vector(m, poly),
        "degree_vector": degrees,
        "pure": coparking.is_pure(cs, functions),
        "num_coparking": len(functions),
        "main_theorem": check_main_theorem(m, cs, degrees),
        "firing_matrix": lmat.tolist(),
        "m_matrix": is_m_matrix(lmat),
        "bijection": table,
    }


def cmd_report(args, out):
    m = load_matroid(args.input)
    cs = _system(args, m)
    _emit(out, json.dumps(build_report(m, cs, _ordering(args, m)), default=str))


def cmd_coparking(args, out):
    m = load_matroid(args.input)
    cs = _system(args, m)
    if args.action == "verify":
        if not args.vector:
            raise ParseError("--vector is required")
        rng = None if args.seed is None else random.Random(args.seed)
        result = coparking.burn(cs, _vector(args.vector), rng)
        payload = {"coparking": result.is_coparking}
        if result.is_coparking:
            payload["order"] = list(result.order)
        else:
            payload["witness"] = sorted(result.stuck)
        _emit(out, json.dumps(payload))
        return
    functions = coparking.enumerate_coparking(cs)
    if args.format == "dot":
        _emit(out, coparking.hasse_dot(functions))
    else:
        out.write(coparking.to_jsonl(functions))


def cmd_bijection(args, out):
    m = load_matroid(args.input)
    cs = _system(args, m)
    xi = _ordering(args, m)
    if args.action == "to-coparking":
        if not args.basis:
            raise ParseError("--basis is required")
        _emit(out, json.dumps(list(bijection.basis_to_coparking(cs, _labels(m, args.basis), xi))))
    else:
        if not args.vector:
            raise ParseError("--vector is required")
        basis = bijection.coparking_to_basis(cs, _vector(args.vector), xi)
        _emit(out, json.dumps([str(x) for x in _fmt(m, basis)]))


def cmd_tutte(args, out):
    m = load_matroid(args.input)
    poly = tutte(m)
    if args.format == "tsv":
        _emit(out, str(poly))
        return
    _emit(
        out,
        json.dumps(
            {"tutte": poly.to_json(), "h_vector": h_vector(m, poly), "f_vector": f_vector(m)}
        ),
    )


def cmd_dctree(args, out):
    m = load_matroid(args.input)
    cs = _system(args, m)
    root = bijection.build_dc_tree(cs, _ordering(args, m))
    if args.format == "tsv":
        out.write(bijection.leaves_tsv(root))
    elif args.format == "dot":
        out.write(bijection.tree_dot(root))
    else:
        for leaf in bijection.leaves(root):
            _emit(out, json.dumps({"basis": [str(x) for x in _fmt(m, leaf.basis)], "coparking": list(leaf.coparking)}))


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "dot"), default="json")
    common.add_argument("--budget-ms", type=float, default=None)
    common.add_argument("--checkpoint", default=None, metavar="DIR")
    common.add_argument("--seed", type=int, default=None, help="randomize removal order in verify")
    common.add_argument("--ordering", default=None, metavar="LABELS", help="comma-separated ground order, smallest first")
    common.add_argument("--output", "-o", default=None)

    system = argparse.ArgumentParser(add_help=False)
    system.add_argument("--system", default=None, help="cycle-system JSON; searched for when omitted")

    parser = argparse.ArgumentParser(prog="cyclesystems", description="Cycle systems and coparking functions of matroids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("circuits", parents=[common], help="list circuits")
    p.add_argument("input")
    p.set_defaults(func=cmd_circuits)

    p = sub.add_parser("search", parents=[common], help="search for circuit systems")
    p.add_argument("input")
    p.add_argument("--mode", choices=("first", "all", "count"), default="all")
    p.add_argument("--count", action="store_true")
    p.add_argument("--check-theorems", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("census", parents=[common], help="per-graph census of a graph6 file")
    p.add_argument("input")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("report", parents=[common, system], help="full JSON report")
    p.add_argument("input")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("coparking", parents=[common, system], help="verify or enumerate coparking functions")
    p.add_argument("action", choices=("verify", "enumerate"))
    p.add_argument("input")
    p.add_argument("--vector", default=None, help="comma-separated entries")
    p.set_defaults(func=cmd_coparking)

    p = sub.add_parser("bijection", parents=[common, system], help="basis <-> coparking")
    p.add_argument("action", choices=("to-coparking", "to-basis"))
    p.add_argument("input")
    p.add_argument("--basis", default=None, help="comma-separated labels")
    p.add_argument("--vector", default=None)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("tutte", parents=[common], help="Tutte polynomial, h- and f-vectors")
    p.add_argument("input")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("dctree", parents=[common, system], help="deletion/contraction tree")
    p.add_argument("input")
    p.set_defaults(func=cmd_dctree)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        args.func(args, out)
        return EXIT_OK
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        level = f" (last completed level {exc.last_level})" if exc.last_level is not None else ""
        print(f"budget exhausted: {exc}{level}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidCycleSystem as exc:
        sigma = f"; failing sigma {sorted(exc.sigma)}" if exc.sigma is not None else ""
        print(f"invalid cycle system: {exc}{sigma}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
