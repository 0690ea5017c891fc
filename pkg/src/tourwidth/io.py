"""Text formats for digraphs, patterns, orderings, decompositions and certificates.

Digraph (``.scd``)::

    n
    0110...     # n rows of n characters, character j of row i is 1 iff arc (i, j)

Pattern files use the same layout preceded by a ``PATTERN`` line and skip the
semi-completeness check.  Decompositions: ``r`` followed by one line of
space-separated vertices per bag.  Orderings: one line of vertices.
Certificates start with a header line naming the obstacle kind.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .decomposition import PathDecomposition
from .digraph import SemiCompleteDigraph, VertexOrdering, build
from .errors import InputError, ShapeError
from .obstacles import BackwardTangle, DegreeTangle, MatchingTangle, Obstacle, Pattern, ShortJungle


def _lines(text: str) -> list[str]:
    return text.splitlines()


def _matrix(rows: list[str], n: int) -> np.ndarray:
    if len(rows) < n:
        raise ShapeError(f"expected {n} matrix rows, found {len(rows)}")
    m = np.zeros((n, n), dtype=bool)
    for i, row in enumerate(rows[:n]):
        row = row.strip()
        if len(row) != n or set(row) - {"0", "1"}:
            raise ShapeError(f"row {i} must be {n} characters from {{0,1}}, got {row!r}")
        m[i] = [c == "1" for c in row]
    if any(r.strip() for r in rows[n:]):
        raise ShapeError("trailing content after the matrix")
    return m


def _header_int(line: str, what: str) -> int:
    try:
        value = int(line.strip())
    except ValueError:
        raise ShapeError(f"expected {what}, got {line!r}") from None
    if value < 0:
        raise ShapeError(f"{what} must be non-negative, got {value}")
    return value


def parse_scd(text: str, *, tournament: bool = False) -> SemiCompleteDigraph:
    lines = _lines(text)
    if not lines:
        raise ShapeError("empty digraph file")
    n = _header_int(lines[0], "vertex count")
    return build(n, _matrix(lines[1:], n), tournament=tournament)


def format_scd(T: SemiCompleteDigraph) -> str:
    rows = ["".join("1" if x else "0" for x in row) for row in T.matrix]
    return "\n".join([str(T.n)] + rows) + "\n"


def parse_pattern(text: str) -> Pattern:
    lines = _lines(text)
    if not lines or lines[0].strip() != "PATTERN":
        raise ShapeError("pattern files start with a PATTERN line")
    if len(lines) < 2:
        raise ShapeError("missing vertex count")
    n = _header_int(lines[1], "vertex count")
    m = _matrix(lines[2:], n)
    if np.diagonal(m).any():
        raise ShapeError("pattern has a loop")
    return Pattern(n, tuple((int(a), int(b)) for a, b in np.argwhere(m)))


def format_pattern(H: Pattern) -> str:
    m = np.zeros((H.k, H.k), dtype=bool)
    for a, b in H.arcs:
        m[a, b] = True
    rows = ["".join("1" if x else "0" for x in row) for row in m]
    return "\n".join(["PATTERN", str(H.k)] + rows) + "\n"


def parse_ordering(text: str) -> VertexOrdering:
    try:
        return tuple(int(x) for x in text.split())
    except ValueError as exc:
        raise ShapeError(f"bad ordering: {exc}") from None


def format_ordering(pi) -> str:
    return " ".join(map(str, pi)) + "\n"


def parse_decomposition(text: str) -> PathDecomposition:
    lines = _lines(text)
    if not lines:
        raise ShapeError("empty decomposition file")
    r = _header_int(lines[0], "bag count")
    body = lines[1 : r + 1]
    body += [""] * (r - len(body))
    try:
        return PathDecomposition(tuple(frozenset(int(x) for x in line.split()) for line in body))
    except ValueError as exc:
        raise ShapeError(f"bad bag: {exc}") from None


def format_decomposition(W: PathDecomposition) -> str:
    return "\n".join([str(len(W))] + [" ".join(map(str, sorted(b))) for b in W.bags]) + "\n"


def _ints(line: str) -> list[int]:
    try:
        return [int(x) for x in line.split()]
    except ValueError:
        raise ShapeError(f"expected integers, got {line!r}") from None


def format_certificate(obs: Obstacle) -> str:
    if isinstance(obs, DegreeTangle):
        return f"DEGREE_TANGLE {obs.k} {obs.ell}\n{' '.join(map(str, sorted(obs.X)))}\n"
    if isinstance(obs, MatchingTangle):
        return f"MATCHING_TANGLE {obs.k} {obs.ell}\n" + "".join(f"{a} {b}\n" for a, b in obs.pairs)
    if isinstance(obs, BackwardTangle):
        return f"BACKWARD_TANGLE {obs.k}\n{' '.join(map(str, sorted(obs.X)))}\n{' '.join(map(str, sorted(obs.Y)))}\n"
    if isinstance(obs, ShortJungle):
        out = [f"JUNGLE {obs.k} {obs.d} {obs.kind}", " ".join(map(str, sorted(obs.X)))]
        for (v, w), family in sorted(obs.paths.items()):
            out.append(f"PAIR {v} {w}")
            out.extend(" ".join(map(str, p)) for p in family)
        return "\n".join(out) + "\n"
    raise TypeError(f"not a certificate: {obs!r}")


def parse_certificate(text: str) -> Obstacle:
    lines = _lines(text)
    if not lines:
        raise ShapeError("empty certificate")
    head = lines[0].split()
    kind, params = head[0], head[1:]
    try:
        if kind == "DEGREE_TANGLE":
            k, ell = map(int, params)
            return DegreeTangle(frozenset(_ints(lines[1]) if len(lines) > 1 else ()), k, ell)
        if kind == "MATCHING_TANGLE":
            k, ell = map(int, params)
            pairs = []
            for line in lines[1:]:
                if line.strip():
                    a, b = _ints(line)
                    pairs.append((a, b))
            return MatchingTangle(tuple(pairs), k, ell)
        if kind == "BACKWARD_TANGLE":
            (k,) = map(int, params)
            X = _ints(lines[1]) if len(lines) > 1 else []
            Y = _ints(lines[2]) if len(lines) > 2 else []
            return BackwardTangle(frozenset(X), frozenset(Y), k)
        if kind == "JUNGLE":
            k, d, jkind = int(params[0]), int(params[1]), params[2]
            if jkind not in ("vertex_disjoint", "edge_disjoint"):
                raise ShapeError(f"unknown jungle kind {jkind!r}")
            X = _ints(lines[1]) if len(lines) > 1 else []
            paths: dict[tuple[int, int], list[tuple[int, ...]]] = {}
            cur = None
            for line in lines[2:]:
                if not line.strip():
                    continue
                if line.startswith("PAIR"):
                    _, v, w = line.split()
                    cur = (int(v), int(w))
                    paths[cur] = []
                elif cur is None:
                    raise ShapeError("path line before any PAIR header")
                else:
                    paths[cur].append(tuple(_ints(line)))
            return ShortJungle(frozenset(X), k, d, jkind, {p: tuple(f) for p, f in paths.items()})
    except (ValueError, IndexError) as exc:
        raise ShapeError(f"malformed {kind} header: {lines[0]!r}") from exc
    raise ShapeError(f"unknown certificate kind {kind!r}")


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def load_scd(path: str | Path, **kw) -> SemiCompleteDigraph:
    return parse_scd(read_text(path), **kw)


def load_pattern(path: str | Path) -> Pattern:
    return parse_pattern(read_text(path))
