"""Line-oriented text formats for instances and JSON for certificates.

    ORC2 N      then N-1 rows of R/B, row i covering pairs (i, i+1..N)
    ORC3 N      then one R/B string over triples in lexicographic order, wrapped at 80
    LAB N n     then N-1 rows of space-separated labels, row i covering (i, i+1..N)
    CHI M q n   then q rows of M space-separated values
"""

import json
from dataclasses import dataclass
from math import comb
from typing import Self

from .enums import Color
from .exceptions import FormatError, InputError
from .models import FunctionFamily, PairLabeling, TripleColoring, TwoColoring, iter_triples
from .witness import Certificate, Instance

ORC2 = "ORC2"
ORC3 = "ORC3"
LAB = "LAB"
CHI = "CHI"

WRAP = 80

_ARITY = {ORC2: 1, ORC3: 1, LAB: 2, CHI: 3}


@dataclass(frozen=True, slots=True)
class Header:
    """First line of a text instance: magic word and integer fields."""

    magic: str
    fields: tuple[int, ...]

    @classmethod
    def parse(cls, line: str) -> Self:
        tokens = line.split()
        if not tokens or tokens[0] not in _ARITY:
            raise FormatError(f"Unknown header {line!r}")
        magic = tokens[0]
        if len(tokens) != _ARITY[magic] + 1:
            raise FormatError(f"Header {line!r} needs {_ARITY[magic]} fields")
        try:
            fields = tuple(int(tok) for tok in tokens[1:])
        except ValueError:
            raise FormatError(f"Non-integer header field in {line!r}") from None
        if any(f < 0 for f in fields) or (magic != CHI and fields[0] < 1):
            raise FormatError(f"Header {line!r} has out-of-range fields")
        return cls(magic, fields)

    def render(self) -> str:
        return " ".join((self.magic, *(str(f) for f in self.fields)))


def _symbol(ch: str) -> Color:
    try:
        return Color(ch)
    except ValueError:
        raise FormatError(f"Invalid symbol {ch!r}") from None


def _int_row(line: str, expected: int, row: int) -> list[int]:
    tokens = line.split()
    if len(tokens) != expected:
        raise FormatError(f"Row {row} has {len(tokens)} values, expected {expected}")
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise FormatError(f"Row {row} has a non-integer value") from None


# --- Serialization ---


def dumps(instance: Instance) -> str:
    match instance:
        case TwoColoring():
            return _dump_two(instance)
        case TripleColoring():
            return _dump_three(instance)
        case PairLabeling():
            return _dump_labels(instance)
        case FunctionFamily():
            return _dump_functions(instance)
    raise TypeError(f"Cannot serialize {type(instance).__name__}")


def _dump_two(g: TwoColoring) -> str:
    n = g.n_vertices
    lines = [Header(ORC2, (n,)).render()]
    for i in range(1, n):
        lines.append("".join(g.color(i, j).value for j in range(i + 1, n + 1)))
    return "\n".join(lines) + "\n"


def _dump_three(h: TripleColoring) -> str:
    n = h.n_vertices
    symbols = "".join(h.color(*tri).value for tri in iter_triples(n))
    lines = [Header(ORC3, (n,)).render()]
    lines.extend(symbols[k : k + WRAP] for k in range(0, len(symbols), WRAP))
    return "\n".join(lines) + "\n"


def _dump_labels(lab: PairLabeling) -> str:
    n = lab.n_vertices
    lines = [Header(LAB, (n, lab.n_colors)).render()]
    for i in range(1, n):
        lines.append(" ".join(str(lab.labels[i][j]) for j in range(i + 1, n + 1)))
    return "\n".join(lines) + "\n"


def _dump_functions(fam: FunctionFamily) -> str:
    lines = [Header(CHI, (fam.size, fam.depth, fam.n_values)).render()]
    lines.extend(" ".join(str(x) for x in row[1:]) for row in fam.values)
    return "\n".join(lines) + "\n"


# --- Parsing ---


def loads(text: str) -> Instance:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise FormatError("Empty input")
    header = Header.parse(lines[0])
    body = lines[1:]
    try:
        match header.magic:
            case "ORC2":
                return _parse_two(header.fields[0], body)
            case "ORC3":
                return _parse_three(header.fields[0], body)
            case "LAB":
                return _parse_labels(header.fields[0], header.fields[1], body)
            case _:
                return _parse_functions(*header.fields, body)
    except InputError as e:
        raise FormatError(str(e)) from e


def _parse_two(n: int, body: list[str]) -> TwoColoring:
    if len(body) != n - 1:
        raise FormatError(f"ORC2 {n} needs {n - 1} rows, got {len(body)}")
    pairs: list[tuple[int, int]] = []
    for i, row in enumerate(body, start=1):
        row = row.strip()
        if len(row) != n - i:
            raise FormatError(f"Row {i} has {len(row)} symbols, expected {n - i}")
        pairs.extend((i, i + 1 + k) for k, ch in enumerate(row) if _symbol(ch) is Color.BLUE)
    return TwoColoring.from_blue_pairs(n, pairs)


def _parse_three(n: int, body: list[str]) -> TripleColoring:
    symbols = "".join(row.strip() for row in body)
    if len(symbols) != comb(n, 3):
        raise FormatError(f"ORC3 {n} needs {comb(n, 3)} symbols, got {len(symbols)}")
    blue = [
        tri
        for tri, ch in zip(iter_triples(n), symbols, strict=True)
        if _symbol(ch) is Color.BLUE
    ]
    return TripleColoring.from_blue_triples(n, blue)


def _parse_labels(n: int, n_colors: int, body: list[str]) -> PairLabeling:
    if n_colors < 1:
        raise FormatError("LAB needs at least one color")
    if len(body) != n - 1:
        raise FormatError(f"LAB {n} needs {n - 1} rows, got {len(body)}")
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for i, line in enumerate(body, start=1):
        for k, value in enumerate(_int_row(line, n - i, i)):
            if not 1 <= value <= n_colors:
                raise FormatError(f"Label {value} out of range 1..{n_colors}")
            rows[i][i + 1 + k] = value
    return PairLabeling(n, n_colors, tuple(tuple(r) for r in rows))


def _parse_functions(size: int, q: int, n_values: int, body: list[str]) -> FunctionFamily:
    if len(body) != q:
        raise FormatError(f"CHI needs {q} rows, got {len(body)}")
    rows = [_int_row(line, size, d) for d, line in enumerate(body)]
    return FunctionFamily(size, n_values, tuple((0, *row) for row in rows))


# --- Certificates ---


def dump_certificate(cert: Certificate) -> str:
    return json.dumps(cert.to_raw(), indent=2, sort_keys=True) + "\n"


def load_certificate(text: str) -> Certificate:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"Certificate is not JSON: {e}") from e
    if not isinstance(raw, dict):
        raise FormatError("Certificate must be a JSON object")
    return Certificate.from_raw(raw)
