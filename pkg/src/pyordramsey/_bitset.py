"""Vertex sets as Python ints: bit v is set iff vertex v belongs to the set."""

from collections.abc import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def first_bits(mask: int, k: int) -> list[int]:
    out: list[int] = []
    for v in iter_bits(mask):
        if len(out) == k:
            break
        out.append(v)
    return out


def below(v: int) -> int:
    """Vertices 1..v-1."""
    return ((1 << v) - 1) & ~1


def between(u: int, v: int) -> int:
    """Vertices strictly between u and v."""
    return below(v) & ~((1 << (u + 1)) - 1)


def full(n: int) -> int:
    """Vertices 1..n."""
    return ((1 << (n + 1)) - 1) & ~1
