"""Semantics names plus the shared brute-force extension engine.

Both the ABA and the SETAF side reduce extension enumeration to the same
combinatorial core: a set of n indexed items and a list of collective attacks
(tail mask, head index).  Subsets are bitmasks, so the 2^n sweep stays cheap
at desk scale.  The enumeration guard (default 20, overridable through the
``SPLITKIT_GUARD`` environment variable) keeps accidental blowups out.
"""

from __future__ import annotations

import os
from enum import Enum
from typing import Iterable, Sequence

from splitkit.errors import GuardExceeded

DEFAULT_GUARD = 20


class Semantics(Enum):
    CF = "cf"
    ADM = "adm"
    COM = "com"
    GRD = "grd"
    PREF = "prf"
    STB = "stb"

    @classmethod
    def from_token(cls, token: str) -> "Semantics":
        for sem in cls:
            if sem.value == token:
                return sem
        raise ValueError(f"unknown semantics token {token!r}")


# Closed-set stable variant, stored alongside the plain families.
STB_CLOSED = "stb_closed"


def resolve_guard(guard: int | None) -> int:
    if guard is not None:
        return guard
    env = os.environ.get("SPLITKIT_GUARD")
    if env is not None:
        return int(env)
    return DEFAULT_GUARD


def check_guard(size: int, guard: int | None) -> None:
    limit = resolve_guard(guard)
    if size > limit:
        raise GuardExceeded(size, limit)


def attacked_mask(mask: int, attacks: Sequence[tuple[int, int]]) -> int:
    """Items attacked by the subset ``mask``: heads of attacks whose tail fits."""
    acc = 0
    for tail, head in attacks:
        if tail & mask == tail:
            acc |= 1 << head
    return acc


def minimal_masks(masks: Iterable[int]) -> list[int]:
    ms = list(masks)
    return [m for m in ms if not any(o != m and o & m == o for o in ms)]


def maximal_masks(masks: Iterable[int]) -> list[int]:
    ms = list(masks)
    return [m for m in ms if not any(o != m and o & m == m for o in ms)]


def compute_families(
    n: int,
    attacks: Sequence[tuple[int, int]],
    closure: Sequence[tuple[int, int]] = (),
) -> dict:
    """All six extension families of an n-item attack structure.

    ``closure`` lists derivations (tail mask, derived item) used only for the
    closed-set stable variant; for flat inputs it may be left empty, making
    ``stb`` and ``stb_closed`` coincide.
    """
    full = (1 << n) - 1
    size = 1 << n
    attacked = [0] * size
    for mask in range(size):
        attacked[mask] = attacked_mask(mask, attacks)

    per_item_attacks: list[list[int]] = [[] for _ in range(n)]
    for tail, head in attacks:
        per_item_attacks[head].append(tail)

    cf: list[int] = []
    adm: list[int] = []
    com: list[int] = []
    stb: list[int] = []
    stb_closed: list[int] = []
    for mask in range(size):
        att = attacked[mask]
        if att & mask:
            continue
        cf.append(mask)
        if mask | att == full:
            stb.append(mask)
            if not closure or not (derived_mask(mask, closure) & ~mask):
                stb_closed.append(mask)
        defended_ok = True
        for tail, head in attacks:
            if (1 << head) & mask and not (tail & att):
                defended_ok = False
                break
        if not defended_ok:
            continue
        adm.append(mask)
        complete = True
        for item in range(n):
            bit = 1 << item
            if bit & mask:
                continue
            if all(tail & att for tail in per_item_attacks[item]):
                complete = False  # defended but excluded
                break
        if complete:
            com.append(mask)

    return {
        Semantics.CF: cf,
        Semantics.ADM: adm,
        Semantics.COM: com,
        Semantics.GRD: minimal_masks(com),
        Semantics.PREF: maximal_masks(com),
        Semantics.STB: stb,
        STB_CLOSED: stb_closed,
    }


def derived_mask(mask: int, closure: Sequence[tuple[int, int]]) -> int:
    acc = 0
    for tail, item in closure:
        if tail & mask == tail:
            acc |= 1 << item
    return acc


def mask_of(items: Iterable[int], index: dict) -> int:
    mask = 0
    for it in items:
        mask |= 1 << index[it]
    return mask


def unmask(mask: int, order: Sequence) -> frozenset:
    return frozenset(order[i] for i in range(len(order)) if mask >> i & 1)


def canonical_sets(sets: Iterable[frozenset]) -> tuple[frozenset, ...]:
    """Deterministic family order: lexicographic on the sorted member ids."""
    return tuple(sorted(set(sets), key=lambda s: tuple(sorted(s))))
