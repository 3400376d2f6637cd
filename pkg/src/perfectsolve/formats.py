"""Line-based text formats: the trigraph format and DIMACS edge files.

Trigraph format (1-indexed)::

    c comment
    p tri <n>
    w <v> <weight>
    e <u> <v>
    s <u> <v>

``e`` lines are strong edges, ``s`` lines switchable pairs; unlisted pairs
are strong antiedges and unlisted weights are 1. DIMACS files use
``p edge <n> <m>`` and ``e <u> <v>``, with optional ``n <v> <weight>``
vertex weights; every DIMACS edge is strong.
"""

from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

from .errors import ParseError, PreconditionError
from .trigraph import Trigraph

Format = Literal["tri", "dimacs"]

_DIMACS_SUFFIXES = {".dimacs", ".col", ".clq"}


def _ints(fields: List[str], count: int, line: int) -> List[int]:
    if len(fields) != count:
        raise ParseError(f"expected {count} numbers, got {len(fields)}", line)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"not an integer in {' '.join(fields)!r}", line)


def _vertex(value: int, n: int, line: int) -> int:
    if not 1 <= value <= n:
        raise ParseError(f"vertex {value} out of range 1..{n}", line)
    return value - 1


def parse_tri(text: str) -> Trigraph:
    """Parse the trigraph format."""
    n: Optional[int] = None
    weights: Dict[int, int] = {}
    pairs: Dict[Tuple[int, int], str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag, rest = fields[0], fields[1:]
        if tag == "p":
            if n is not None:
                raise ParseError("second header line", number)
            if not rest or rest[0] != "tri":
                raise ParseError("header must read 'p tri <n>'", number)
            (n,) = _ints(rest[1:], 1, number)
            if n < 0:
                raise ParseError("vertex count must be nonnegative", number)
            continue
        if n is None:
            raise ParseError(f"'{tag}' line before the 'p tri' header", number)
        if tag == "w":
            v, w = _ints(rest, 2, number)
            v = _vertex(v, n, number)
            if v in weights:
                raise ParseError(f"duplicate weight for vertex {v + 1}", number)
            if w < 0:
                raise ParseError(f"negative weight {w}", number)
            weights[v] = w
        elif tag in ("e", "s"):
            u, v = (_vertex(x, n, number) for x in _ints(rest, 2, number))
            if u == v:
                raise ParseError(f"loop at vertex {u + 1}", number)
            key = (min(u, v), max(u, v))
            if key in pairs:
                raise ParseError(f"duplicate pair {u + 1} {v + 1}", number)
            pairs[key] = tag
        else:
            raise ParseError(f"unknown line type {tag!r}", number)
    if n is None:
        raise ParseError("missing 'p tri <n>' header")
    return Trigraph.from_edges(
        n,
        strong=[p for p, tag in pairs.items() if tag == "e"],
        switchable=[p for p, tag in pairs.items() if tag == "s"],
        weights=[weights.get(v, 1) for v in range(n)]
    )


def emit_tri(t: Trigraph, comment: Optional[str] = None) -> str:
    """Normalized trigraph text: weights other than 1, then strong edges, then switchable pairs."""
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p tri {t.n}")
    lines.extend(f"w {v + 1} {w}" for v, w in enumerate(t.weights) if w != 1)
    lines.extend(f"e {u + 1} {v + 1}" for u, v in t.strong_edges())
    lines.extend(f"s {u + 1} {v + 1}" for u, v in t.switchable_pairs())
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Trigraph:
    """Parse a DIMACS edge file; repeated edges are merged."""
    n: Optional[int] = None
    weights: Dict[int, int] = {}
    edges = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag, rest = fields[0], fields[1:]
        if tag == "p":
            if n is not None:
                raise ParseError("second header line", number)
            if not rest or rest[0] not in ("edge", "col"):
                raise ParseError("header must read 'p edge <n> <m>'", number)
            n, _ = _ints(rest[1:], 2, number)
            continue
        if n is None:
            raise ParseError(f"'{tag}' line before the 'p edge' header", number)
        if tag == "e":
            u, v = (_vertex(x, n, number) for x in _ints(rest, 2, number))
            if u == v:
                raise ParseError(f"loop at vertex {u + 1}", number)
            edges.add((min(u, v), max(u, v)))
        elif tag == "n":
            v, w = _ints(rest, 2, number)
            if w < 0:
                raise ParseError(f"negative weight {w}", number)
            weights[_vertex(v, n, number)] = w
        else:
            raise ParseError(f"unknown line type {tag!r}", number)
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' header")
    return Trigraph.from_edges(n, strong=sorted(edges), weights=[weights.get(v, 1) for v in range(n)])


def emit_dimacs(t: Trigraph) -> str:
    if not t.is_graph:
        raise PreconditionError("DIMACS files cannot hold switchable pairs")
    edges = t.strong_edges()
    lines = [f"p edge {t.n} {len(edges)}"]
    lines.extend(f"n {v + 1} {w}" for v, w in enumerate(t.weights) if w != 1)
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def guess_format(path: Path) -> Format:
    return "dimacs" if path.suffix.lower() in _DIMACS_SUFFIXES else "tri"


def parse(text: str, fmt: Format = "tri") -> Trigraph:
    return parse_dimacs(text) if fmt == "dimacs" else parse_tri(text)


def emit(t: Trigraph, fmt: Format = "tri") -> str:
    return emit_dimacs(t) if fmt == "dimacs" else emit_tri(t)


def read_trigraph(path, fmt: Optional[Format] = None) -> Trigraph:
    """Read a file, choosing the format from its suffix unless ``fmt`` is given."""
    path = Path(path)
    return parse(path.read_text(), fmt or guess_format(path))


def write_trigraph(t: Trigraph, path, fmt: Optional[Format] = None) -> None:
    path = Path(path)
    path.write_text(emit(t, fmt or guess_format(path)))
