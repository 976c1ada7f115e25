"""Instance files: graph, coins, initial state and step count as JSON.

Layout::

    {
      "vertices": 3,
      "edges": [[0, 1], [0, 2], [1, 2]],
      "coins": {"0": "grover", "1": "search", "*": "grover"},
      "initial": {"pair": [0, 0]},
      "steps": 10
    }

Edge ids are list positions. A coin descriptor is one of ``"grover"``,
``"search"``, ``"hadamard2"``, ``"hadamard4"``, ``{"reflection": [alpha, ...]}``
or ``{"matrix": rows}``; complex numbers are ``[re, im]`` pairs (plain reals
are accepted too). The ``"*"`` key sets the coin of every vertex not listed.
``initial`` is ``{"pair": [v, j]}``, ``{"amplitudes": [...]}`` or
``"uniform"``. Keys starting with ``_`` are ignored.
"""

import json
import os
import tempfile
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import tolerances as tol
from .coins import Grover, Hadamard2, Hadamard4, Reflection, Search, coin_from_matrix, validate_assignment
from .errors import PercwalkError, SpecError
from .expansion import ExpandedGraph, PortPair, expand
from .graph import Graph

__all__ = [
    "Instance",
    "load_instance",
    "parse_instance",
    "dump_instance",
    "instance_to_dict",
    "write_atomic",
    "builtin_instance_path",
]

_NAMED = {"grover": Grover, "search": Search, "hadamard2": Hadamard2, "hadamard4": Hadamard4}


@dataclass(frozen=True)
class Instance:
    graph: Graph
    coins: dict
    initial: tuple  # ("pair", v, j) | ("amplitudes", (complex, ...)) | ("uniform",)
    steps: int

    def expanded(self) -> ExpandedGraph:
        return expand(self.graph)

    def initial_state(self, x: ExpandedGraph = None):
        x = x or self.expanded()
        kind = self.initial[0]
        if kind == "pair":
            key = PortPair(self.initial[1], self.initial[2])
            if key not in x.gamma.index:
                raise SpecError(f"vertex {key.v} is not an endpoint of edge {key.j}", field="initial.pair")
            psi = np.zeros(x.dim, dtype=np.complex128)
            psi[x.gamma.index[key]] = 1.0
            return psi
        if kind == "uniform":
            return np.full(x.dim, 1 / np.sqrt(x.dim), dtype=np.complex128)
        psi = np.array(self.initial[1], dtype=np.complex128)
        if psi.shape[0] != x.dim:
            raise SpecError(f"expected {x.dim} amplitudes, got {psi.shape[0]}", field="initial.amplitudes")
        return psi


def _complex(value, field):
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(z, (int, float)) and not isinstance(z, bool) for z in value
    ):
        return complex(value[0], value[1])
    raise SpecError("expected a number or a [re, im] pair", field=field)


def _vector(values, field):
    if not isinstance(values, list):
        raise SpecError("expected a list", field=field)
    return tuple(_complex(z, f"{field}[{i}]") for i, z in enumerate(values))


def _coin(desc, field):
    if isinstance(desc, str):
        try:
            return _NAMED[desc.lower()]()
        except KeyError:
            raise SpecError(f"unknown coin {desc!r}; expected one of {sorted(_NAMED)}", field=field) from None
    if isinstance(desc, dict) and len(desc) == 1:
        (kind, body), = desc.items()
        if kind == "reflection":
            if not isinstance(body, list):
                raise SpecError("expected a list of alpha vectors", field=f"{field}.reflection")
            return Reflection(tuple(_vector(a, f"{field}.reflection[{k}]") for k, a in enumerate(body)))
        if kind == "matrix":
            if not isinstance(body, list):
                raise SpecError("expected a list of rows", field=f"{field}.matrix")
            rows = [_vector(r, f"{field}.matrix[{i}]") for i, r in enumerate(body)]
            if len({len(r) for r in rows}) > 1:
                raise SpecError("matrix rows have unequal length", field=f"{field}.matrix")
            try:
                return coin_from_matrix(np.array(rows, dtype=np.complex128))
            except PercwalkError as exc:
                raise SpecError(str(exc), field=f"{field}.matrix", category=exc.category) from exc
    raise SpecError("coin must be a name, {'reflection': [...]} or {'matrix': [...]}", field=field)


def _int(value, field, minimum=0):
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise SpecError(f"expected an integer >= {minimum}", field=field)
    return value


def parse_instance(doc) -> Instance:
    if not isinstance(doc, dict):
        raise SpecError("top level must be an object")
    for key in ("vertices", "edges", "coins", "initial"):
        if key not in doc:
            raise SpecError("missing required field", field=key)
    known = {"vertices", "edges", "coins", "initial", "steps"}
    for key in doc:
        if key not in known and not key.startswith("_"):
            raise SpecError("unknown field", field=key)
    n = _int(doc["vertices"], "vertices")
    if not isinstance(doc["edges"], list):
        raise SpecError("expected a list of [u, v] pairs", field="edges")
    pairs = []
    for i, e in enumerate(doc["edges"]):
        if not (isinstance(e, list) and len(e) == 2):
            raise SpecError("expected [u, v]", field=f"edges[{i}]")
        pairs.append((_int(e[0], f"edges[{i}][0]"), _int(e[1], f"edges[{i}][1]")))
    try:
        graph = Graph.from_edge_list(n, pairs)
    except PercwalkError as exc:
        raise SpecError(str(exc), field="edges") from exc

    raw = doc["coins"]
    if isinstance(raw, str):
        raw = {"*": raw}
    if not isinstance(raw, dict):
        raise SpecError("expected an object mapping vertex -> coin", field="coins")
    default = _coin(raw["*"], "coins.*") if "*" in raw else None
    coins = {}
    for key, desc in raw.items():
        if key == "*" or key.startswith("_"):
            continue
        try:
            v = int(key)
        except ValueError:
            raise SpecError("coin keys must be vertex ids", field=f"coins.{key}") from None
        if not 0 <= v < n:
            raise SpecError(f"vertex {v} out of range", field=f"coins.{key}")
        coins[v] = _coin(desc, f"coins.{key}")
    if default is not None:
        for v in range(n):
            coins.setdefault(v, default)
    coins = dict(sorted(coins.items()))
    try:
        validate_assignment(graph.degrees().astype(int), coins)
    except PercwalkError as exc:
        raise SpecError(str(exc), field="coins", category=exc.category) from exc

    init = doc["initial"]
    if init == "uniform":
        initial = ("uniform",)
    elif isinstance(init, dict) and "pair" in init:
        p = init["pair"]
        if not (isinstance(p, list) and len(p) == 2):
            raise SpecError("expected [v, j]", field="initial.pair")
        initial = ("pair", _int(p[0], "initial.pair[0]"), _int(p[1], "initial.pair[1]"))
    elif isinstance(init, dict) and "amplitudes" in init:
        amps = np.array(_vector(init["amplitudes"], "initial.amplitudes"), dtype=np.complex128)
        nrm = np.linalg.norm(amps)
        if abs(nrm - 1) > tol.SPEC_STATE_NORM:
            raise SpecError(f"initial state norm {nrm:.12g} is not 1", field="initial.amplitudes")
        if nrm != 1.0:
            amps = amps / nrm
        initial = ("amplitudes", tuple(complex(z) for z in amps))
    else:
        raise SpecError("expected {'pair': [v, j]}, {'amplitudes': [...]} or 'uniform'", field="initial")

    steps = _int(doc.get("steps", 0), "steps")
    inst = Instance(graph, coins, initial, steps)
    if initial[0] != "uniform" and graph.n_edges:
        inst.initial_state()
    return inst


def load_instance(path) -> Instance:
    with open(path) as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc.msg} (column {exc.colno})", line=exc.lineno) from None
    return parse_instance(doc)


def _pair(z):
    return [z.real, z.imag]


def _coin_to_json(coin):
    if isinstance(coin, Reflection):
        return {"reflection": [[_pair(z) for z in a] for a in coin.alphas]}
    return coin.name


def instance_to_dict(inst: Instance) -> dict:
    kind = inst.initial[0]
    if kind == "pair":
        initial = {"pair": [inst.initial[1], inst.initial[2]]}
    elif kind == "uniform":
        initial = "uniform"
    else:
        initial = {"amplitudes": [_pair(z) for z in inst.initial[1]]}
    return {
        "vertices": inst.graph.n_vertices,
        "edges": [[e.u, e.v] for e in inst.graph.edges],
        "coins": {str(v): _coin_to_json(c) for v, c in inst.coins.items()},
        "initial": initial,
        "steps": inst.steps,
    }


def write_atomic(path, text):
    """Write ``text`` to a sibling temporary file, then rename over ``path``."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".percwalk-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_instance(inst: Instance, path):
    write_atomic(path, json.dumps(instance_to_dict(inst), indent=2) + "\n")


def builtin_instance_path(name="mixed_coin_example"):
    return resources.files("percwalk").joinpath("data", f"{name}.json")
