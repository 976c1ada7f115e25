"""Command line front end.

Verbs: ``expand``, ``hamiltonian``, ``run``, ``compare``, ``schedule``. Each
reads an instance file given by ``--spec`` and writes to ``--out`` (stdout
when omitted). Exit status is 0 on success or PASS, 1 on a failed
comparison, 2 for invalid input and 3 for other computation errors; errors
are reported on stderr as a one-line JSON object with a ``category``.
"""

import argparse
import io
import json
import sys

import numpy as np

from . import __version__
from .coined import dtqw_run
from .compare import compare_engines, regular_grover_applicable
from .ctqw import (
    REGULAR_GROVER,
    WEIGHTED,
    HamiltonianPair,
    ctqw_run,
    ctqw_run_regular_grover,
    hamiltonian_pair,
    percolation_schedule,
)
from .errors import PercwalkError, SpecError
from .expansion import coin_subgraph, shift_subgraph
from .instance import load_instance, write_atomic

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_COMPUTE = 3

ENGINES = ("dtqw", "ctqw", "ctqw-regular")


def fmt(x):
    return format(float(x), ".17g")


def fmt_complex(z):
    return f"{fmt(z.real)}{'+' if z.imag >= 0 or np.isnan(z.imag) else '-'}{fmt(abs(z.imag))}j"


def format_matrices(named):
    """Dense row-major text export; each entry is a Python-parsable complex literal."""
    buf = io.StringIO()
    buf.write("# percwalk matrix export; entries are re+imj with 17 significant digits\n")
    for name, m in named:
        buf.write(f"[{name}] {m.shape[0]} {m.shape[1]}\n")
        for row in np.asarray(m, dtype=np.complex128):
            buf.write(" ".join(fmt_complex(z) for z in row) + "\n")
    return buf.getvalue()


def read_matrices(text):
    """Inverse of :func:`format_matrices`: ``{name: ndarray}``."""
    out = {}
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    i = 0
    while i < len(lines):
        head = lines[i].split()
        name, rows, cols = head[0].strip("[]"), int(head[1]), int(head[2])
        data = [[complex(tok) for tok in lines[i + 1 + r].split()] for r in range(rows)]
        out[name] = np.array(data, dtype=np.complex128).reshape(rows, cols)
        i += rows + 1
    return out


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        write_atomic(out, text)


def _steps(args, inst):
    return inst.steps if args.steps is None else args.steps


def cmd_expand(args):
    inst = load_instance(args.spec)
    x = inst.expanded()
    edges = {e.id: e for e in x.graph.edges}

    def edge_list(ids):
        return [[edges[i].u, edges[i].v] for i in sorted(ids)]

    report = {
        "vertices": inst.graph.n_vertices,
        "edges": inst.graph.n_edges,
        "expanded_vertices": x.dim,
        "gamma": [{"index": k, "v": p.v, "j": p.j} for k, p in enumerate(x.gamma.pairs)],
        "vertex_blocks": [list(b) for b in x.gamma.vertex_blocks],
        "clique_edges": edge_list(x.clique_edges),
        "pair_edges": edge_list(x.pair_edges),
        "coin_subgraph": {"edges": len(x.clique_edges), "components": coin_subgraph(x).components()},
        "shift_subgraph": {"edges": len(x.pair_edges), "components": shift_subgraph(x).components()},
    }
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_hamiltonian(args):
    inst = load_instance(args.spec)
    pair = hamiltonian_pair(inst.expanded(), inst.coins)
    _emit(format_matrices([("H_C", pair.coin), ("H_S", pair.shift), ("H", pair.full)]), args.out)
    return EXIT_OK


def trace_csv(traj):
    buf = io.StringIO()
    buf.write("step,kind,index,re,im\n")
    for t, (psi, probs) in enumerate(zip(traj.states, traj.vertex_probs)):
        for k, z in enumerate(psi):
            buf.write(f"{t},amp,{k},{fmt(z.real)},{fmt(z.imag)}\n")
        for v, p in enumerate(probs):
            buf.write(f"{t},prob,{v},{fmt(p)},\n")
    return buf.getvalue()


def cmd_run(args):
    inst = load_instance(args.spec)
    x = inst.expanded()
    psi0 = inst.initial_state(x)
    steps = _steps(args, inst)
    if args.engine == "dtqw":
        traj = dtqw_run(x, inst.coins, psi0, steps)
    elif args.engine == "ctqw":
        traj = ctqw_run(x, inst.coins, psi0, steps)
    else:
        traj = ctqw_run_regular_grover(x, psi0, steps, coins=inst.coins)
    _emit(trace_csv(traj), args.out)
    return EXIT_OK


def cmd_compare(args):
    inst = load_instance(args.spec)
    x = inst.expanded()
    psi0 = inst.initial_state(x)
    steps = _steps(args, inst)
    if args.engine == "auto":
        engines = ["ctqw"] + (["ctqw-regular"] if regular_grover_applicable(x, inst.coins) else [])
    else:
        engines = [args.engine]
    pair = None
    if args.perturb:
        pair = hamiltonian_pair(x, inst.coins)
        coin = pair.coin.copy()
        coin[0, 0] += args.perturb
        pair = HamiltonianPair(coin, pair.shift)
    results = compare_engines(x, inst.coins, psi0, steps, engines, hamiltonians=pair, threshold=args.threshold)
    passed = all(r.passed for r in results)
    report = {
        "steps": steps,
        "threshold": results[0].threshold if results else args.threshold,
        "perturbation": args.perturb,
        "engines": [r.as_dict() for r in results],
        "verdict": "PASS" if passed else "FAIL",
    }
    if args.out not in (None, "-"):
        write_atomic(args.out, json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    for r in results:
        line = f"{r.engine}: max state distance {r.max_state_distance:.3e}, max TV distance {r.max_tv_distance:.3e}"
        if not r.passed:
            line += f", first failing step {r.first_failure}"
        print(line, file=sys.stderr)
    print(report["verdict"], file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_schedule(args):
    inst = load_instance(args.spec)
    x = inst.expanded()
    sched = percolation_schedule(x, _steps(args, inst), args.mode)
    buf = io.StringIO()
    buf.write("time,phase,active_edge_count\n")
    for i, (t, active) in enumerate(sched):
        phase = "off" if i == len(sched) - 1 else ("coin", "shift")[i % 2]
        buf.write(f"{fmt(t)},{phase},{len(active)}\n")
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="percwalk", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def verb(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--spec", required=True, help="instance file (JSON)")
        sp.add_argument("--out", help="output path (default: stdout)")
        sp.set_defaults(func=func)
        return sp

    verb("expand", cmd_expand, "report the pair basis and expanded graph")
    verb("hamiltonian", cmd_hamiltonian, "export coin, shift and combined Hamiltonians")
    sp = verb("run", cmd_run, "write a state/probability trace CSV")
    sp.add_argument("--engine", choices=ENGINES, default="dtqw")
    sp.add_argument("--steps", type=int)
    sp = verb("compare", cmd_compare, "compare the coined walk with its continuous-time simulation")
    sp.add_argument("--engine", choices=("auto", "ctqw", "ctqw-regular"), default="auto")
    sp.add_argument("--steps", type=int)
    sp.add_argument("--threshold", type=float, default=None)
    sp.add_argument("--perturb", type=float, default=0.0, help=argparse.SUPPRESS)
    sp = verb("schedule", cmd_schedule, "write the edge switching schedule CSV")
    sp.add_argument("--mode", choices=(WEIGHTED, REGULAR_GROVER), default=WEIGHTED)
    sp.add_argument("--steps", type=int)
    return p


def _error(exc, code, category=None):
    payload = {"category": category or getattr(exc, "category", "error"), "message": str(exc)}
    print(json.dumps({"error": payload}), file=sys.stderr)
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "steps", None) is not None and args.steps < 0:
        return _error(SpecError("must be non-negative", field="--steps"), EXIT_INPUT)
    try:
        return args.func(args)
    except SpecError as exc:
        return _error(exc, EXIT_INPUT)
    except OSError as exc:
        return _error(exc, EXIT_INPUT, "io_error")
    except PercwalkError as exc:
        return _error(exc, EXIT_COMPUTE)


if __name__ == "__main__":
    sys.exit(main())
