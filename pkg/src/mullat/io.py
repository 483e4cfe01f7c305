"""JSON and DOT formats.

Lattice JSON: ``{"n": int, "leq": [[0|1]*n]*n, "mult": [[int]*n]*n}``.
Morphism JSON: ``{"source": <lattice or path>, "target": <lattice or path>, "f": [int]*n}``.
Algebra JSON: ``{"kind", "n", "add"?, "mul", "zero"?, "one"?}``.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

from .errors import LatticeError
from .instances import AlgebraTable, algebra_from_dict, algebra_to_dict
from .lattice import MulLattice, new_mul_lattice
from .morphisms import Adjunction, mk_adjunction
from .order import validate_order


class InputError(LatticeError):
    """Malformed input document."""


def read_text(src: str) -> str:
    """Contents of a path, or of stdin when ``src`` is ``-``."""
    if src == "-":
        return sys.stdin.read()
    try:
        return Path(src).read_text()
    except OSError as e:
        raise InputError(f"cannot read {src}: {e}") from e


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e}") from e


def lattice_to_dict(L: MulLattice) -> dict:
    return {
        "n": L.n,
        "leq": L.order.leq.astype(int).tolist(),
        "mult": L.mult.tolist(),
    }


def lattice_to_json(L: MulLattice) -> str:
    return json.dumps(lattice_to_dict(L))


def lattice_from_dict(d) -> MulLattice:
    """Validate the order, then the multiplication axiom."""
    if not isinstance(d, dict) or set(d) != {"n", "leq", "mult"}:
        raise InputError('lattice JSON must have exactly the keys "n", "leq", "mult"')
    n = d["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("n must be a positive integer")
    for key in ("leq", "mult"):
        rows = d[key]
        if (not isinstance(rows, list) or len(rows) != n
                or any(not isinstance(r, list) or len(r) != n for r in rows)
                or any(not isinstance(v, int) or isinstance(v, bool) for r in rows for v in r)):
            raise InputError(f"{key} must be an {n}x{n} integer matrix")
    if any(v not in (0, 1) for r in d["leq"] for v in r):
        raise InputError("leq entries must be 0 or 1")
    order = validate_order([[bool(v) for v in r] for r in d["leq"]])
    return new_mul_lattice(order, d["mult"])


def lattice_from_json(text: str) -> MulLattice:
    return lattice_from_dict(_load_json(text))


def load_lattice(src: str) -> MulLattice:
    return lattice_from_json(read_text(src))


def algebra_from_json(text: str) -> AlgebraTable:
    d = _load_json(text)
    if not isinstance(d, dict) or not {"kind", "n", "mul"} <= set(d):
        raise InputError('algebra JSON needs "kind", "n" and "mul"')
    extra = set(d) - {"kind", "n", "add", "mul", "zero", "one"}
    if extra:
        raise InputError(f"unexpected algebra keys: {sorted(extra)}")
    return algebra_from_dict(d)


def algebra_to_json(A: AlgebraTable) -> str:
    return json.dumps(algebra_to_dict(A))


def load_algebra(src: str) -> AlgebraTable:
    return algebra_from_json(read_text(src))


def _lattice_ref(v, base: Path | None) -> MulLattice:
    if isinstance(v, str):
        p = Path(v)
        if base is not None and not p.is_absolute():
            p = base / p
        return load_lattice(str(p))
    return lattice_from_dict(v)


def morphism_from_json(text: str, base: Path | None = None) -> Adjunction:
    """Source/target may be inline lattice objects or paths (relative to ``base``)."""
    d = _load_json(text)
    if not isinstance(d, dict) or set(d) != {"source", "target", "f"}:
        raise InputError('morphism JSON must have exactly the keys "source", "target", "f"')
    X, Y = _lattice_ref(d["source"], base), _lattice_ref(d["target"], base)
    f = d["f"]
    if not isinstance(f, list) or any(not isinstance(v, int) or isinstance(v, bool) for v in f):
        raise InputError("f must be a list of integers")
    if len(f) != X.n or any(not 0 <= v < Y.n for v in f):
        raise InputError("f must map each source element to a target element")
    return mk_adjunction(X, Y, f)


def load_morphism(src: str) -> Adjunction:
    base = None if src == "-" else Path(src).parent
    return morphism_from_json(read_text(src), base)


def morphism_to_dict(adj: Adjunction) -> dict:
    return {"source": lattice_to_dict(adj.source), "target": lattice_to_dict(adj.target), "f": list(adj.f)}


def hasse_dot(L: MulLattice, name: str = "lattice") -> str:
    """Graphviz source of the covering relation, bottom to top, with labels."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in range(L.n):
        lines.append(f'  "{x}" [label="{L.label(x)}"];')
    for a, b in L.order.covers:
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
