"""Integer-backed subsets of a ground set {1..n}.

Bit ``i`` of a mask stands for element ``i + 1``.  Masks are plain Python
ints so they hash, compare and combine cheaply.
"""

from typing import Iterable, List, Union

SubsetLike = Union[int, Iterable[int]]


def popcount(x: int) -> int:
    return x.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def elements(mask: int) -> List[int]:
    """Sorted 1-based element list of ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def bits(mask: int) -> List[int]:
    """Sorted 0-based bit positions of ``mask``."""
    return [e - 1 for e in elements(mask)]


def from_elements(elems: Iterable[int]) -> int:
    mask = 0
    for e in elems:
        if e < 1:
            raise ValueError(f"element {e} is not a positive index")
        mask |= 1 << (e - 1)
    return mask


def as_mask(x: SubsetLike) -> int:
    """Accept a mask or an iterable of 1-based elements."""
    if isinstance(x, int):
        if x < 0:
            raise ValueError("negative mask")
        return x
    return from_elements(x)


def subset_key(mask: int):
    """Sort key giving lexicographic order of the sorted element lists."""
    return tuple(elements(mask))


def family_key(family: Iterable[int]):
    return tuple(subset_key(m) for m in family)


def canonical(family: Iterable[int]) -> List[int]:
    """Deduplicated family sorted lexicographically by element lists."""
    return sorted(set(family), key=subset_key)


def fmt(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


def fmt_family(family: Iterable[int]) -> str:
    return "[" + ", ".join(fmt(m) for m in family) + "]"
