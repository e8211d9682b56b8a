"""Brute-force enumeration of placements, the ground truth for every formula.

A placement state is a tuple of m per-box triples ``(u, v, w)``: how many
objects of the first, second and third kind sit in each box. Unused kinds
stay 0. Nothing here is clever on purpose; the only optimisation is pruning
branches whose remaining objects cannot fit in the remaining capacity.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .arith import DomainError

LINEAR = "linear"
CIRCULAR = "circular"

State = tuple  # tuple[tuple[int, int, int], ...]


class ResourceError(RuntimeError):
    """Listing would exceed the state guard."""


def _check(m: int, caps: Sequence[int], counts: Sequence[int]) -> None:
    if m < 1:
        raise DomainError(f"need m >= 1 boxes, got {m}")
    if len(caps) != m:
        raise DomainError(f"need {m} caps, got {len(caps)}")
    if any(c < 0 for c in caps) or any(c < 0 for c in counts):
        raise DomainError("caps and kind counts must be >= 0")


def iter_states(m: int, caps: Sequence[int], n1: int, n2: int = 0, n3: int = 0) -> Iterator[State]:
    """Every placement respecting the per-box caps, in lexicographic order."""
    caps = list(caps)
    _check(m, caps, (n1, n2, n3))
    room_after = [0] * (m + 1)
    for q in range(m - 1, -1, -1):
        room_after[q] = room_after[q + 1] + caps[q]
    prefix: list = []

    def rec(q, r1, r2, r3):
        if q == m:
            if r1 == r2 == r3 == 0:
                yield tuple(prefix)
            return
        cap = caps[q]
        spill = r1 + r2 + r3 - room_after[q + 1]
        for u in range(min(r1, cap) + 1):
            for v in range(min(r2, cap - u) + 1):
                for w in range(min(r3, cap - u - v) + 1):
                    if u + v + w < spill:
                        continue
                    prefix.append((u, v, w))
                    yield from rec(q + 1, r1 - u, r2 - v, r3 - w)
                    prefix.pop()

    return rec(0, n1, n2, n3)


def oracle_linear(m: int, caps: Sequence[int], n1: int, n2: int = 0, n3: int = 0) -> int:
    return sum(1 for _ in iter_states(m, caps, n1, n2, n3))


def min_rotation(seq: Sequence) -> tuple:
    seq = tuple(seq)
    return min(seq[i:] + seq[:i] for i in range(len(seq))) if seq else seq


def canonical(state: State, caps: Sequence[int], caps_rotate: bool = False) -> tuple:
    """Rotation class key.

    With ``caps_rotate`` the caps travel with the box contents, so only rotations
    that map the cap pattern onto itself identify states. Otherwise the caps stay
    put and two states are identified whenever their contents are rotations of
    each other. Uniform caps make the two identical.
    """
    if caps_rotate:
        return min_rotation(tuple(zip(caps, state)))
    return min_rotation(state)


def _classes(m, caps, n1, n2, n3, caps_rotate):
    reps = {}
    for s in iter_states(m, caps, n1, n2, n3):
        key = canonical(s, caps, caps_rotate)
        if key not in reps:
            reps[key] = s
    return reps


def oracle_circular(m: int, caps: Sequence[int], n1: int, n2: int = 0, n3: int = 0,
                    caps_rotate: bool = False) -> int:
    """Number of placements up to rotation of the circle of boxes."""
    return len(_classes(m, caps, n1, n2, n3, caps_rotate))


def oracle_list(m: int, caps: Sequence[int], n1: int, n2: int = 0, n3: int = 0,
                arrangement: str = LINEAR, caps_rotate: bool = False,
                limit: int = 10**6) -> list:
    """Sorted listing of states; in the circular case, the smallest state of each rotation class."""
    if arrangement not in (LINEAR, CIRCULAR):
        raise DomainError(f"unknown arrangement {arrangement!r}")
    out = {}
    for seen, s in enumerate(iter_states(m, caps, n1, n2, n3), start=1):
        if seen > limit:
            raise ResourceError(f"more than {limit} states; refusing to list")
        key = canonical(s, caps, caps_rotate) if arrangement == CIRCULAR else s
        # states arrive in increasing order, so the first one seen is the class minimum
        out.setdefault(key, s)
    return sorted(out.values())


def format_state(state: State, kinds: int = 2) -> str:
    """``3,0|0,2``: boxes separated by ``|``, kinds within a box by ``,``."""
    return "|".join(",".join(str(x) for x in box[:kinds]) for box in state)


def format_listing(states: Sequence[State], kinds: int = 2) -> str:
    return "".join(format_state(s, kinds) + "\n" for s in states)


def format_tuple(state: State, kinds: int = 2) -> str:
    """``(3, 0 | 0, 2)``, the parenthesised style of the worked two-box example."""
    return "(" + " | ".join(", ".join(str(x) for x in box[:kinds]) for box in state) + ")"
