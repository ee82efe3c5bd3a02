"""Divide-and-conquer solving of SETAFs via splittings.

A splitting separates the arguments into a bottom part A1 and a top part A2
such that every attack touching both parts points into A2 (the links).  The
bottom is solved first; each of its extensions is propagated into the top by
the reduct (deleting defeated arguments and simplifying links) and the
modification (turning undecided links into set-self-attacks).  Combining
bottom and top extensions yields exactly the extensions of the whole SETAF.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from splitkit.errors import InvalidSplit
from splitkit.semantics import Semantics, canonical_sets
from splitkit.setaf import (
    Attack,
    Setaf,
    attacked_args,
    enumerate_extensions,
    induced,
)

SubSolver = Callable[[Setaf, Semantics], Iterable[frozenset[int]]]

SPLIT_SEMANTICS = (Semantics.STB, Semantics.ADM, Semantics.COM, Semantics.PREF, Semantics.GRD)


@dataclass(eq=False)
class SetafSplitting:
    base: Setaf
    a1: frozenset[int]
    a2: frozenset[int]
    r1: tuple[Attack, ...]
    r2: tuple[Attack, ...]
    r3: tuple[Attack, ...]

    _cache: dict = field(init=False, repr=False, default_factory=dict)

    # -- bottom -------------------------------------------------------------

    def bottom(self) -> tuple[Setaf, tuple[int, ...]]:
        if "bottom" not in self._cache:
            self._cache["bottom"] = induced(self.base, self.a1)
        return self._cache["bottom"]

    def bottom_extensions(
        self, semantics: Semantics, guard: Optional[int] = None,
        sub_solver: Optional[SubSolver] = None,
    ) -> tuple[frozenset[int], ...]:
        sub, order = self.bottom()
        solver = sub_solver or (lambda f, s: enumerate_extensions(f, s, guard))
        return canonical_sets(
            frozenset(order[i] for i in ext) for ext in solver(sub, semantics)
        )

    # -- reduct / modification ----------------------------------------------

    def _reduct_parts(self, e1: frozenset[int]) -> tuple[frozenset[int], tuple[Attack, ...]]:
        key = ("reduct", e1)
        if key not in self._cache:
            defeated = frozenset(h for t, h in self.r3 if t <= e1)
            args = self.a2 - defeated
            attacks: list[Attack] = [
                (t, h) for t, h in self.r2 if t <= args and h in args
            ]
            for t, h in self.r3:
                rest = t - self.a1
                if rest and t & self.a1 <= e1 and not t & defeated and h in args:
                    attacks.append((rest, h))
            self._cache[key] = (args, tuple(attacks))
        return self._cache[key]

    def reduct(self, e1: Iterable[int]) -> Setaf:
        args, attacks = self._reduct_parts(self._check_e1(e1))
        return _dense(self.base, args, attacks)[0]

    def undecided_links(self, e1: Iterable[int]) -> tuple[Attack, ...]:
        e1 = self._check_e1(e1)
        plus_r1r3 = attacked_args(self.base, e1, self.r1 + self.r3)
        range_r1 = e1 | attacked_args(self.base, e1, self.r1)
        return tuple(
            (t, h)
            for t, h in self.r3
            if not t & plus_r1r3 and t & (self.a1 - range_r1)
        )

    def _modification_parts(self, e1: frozenset[int]) -> tuple[frozenset[int], tuple[Attack, ...]]:
        key = ("mod", e1)
        if key not in self._cache:
            args, attacks = self._reduct_parts(e1)
            extra = [
                ((t & args) | {h}, h)
                for t, h in self.undecided_links(e1)
                if h in args
            ]
            self._cache[key] = (args, attacks + tuple(extra))
        return self._cache[key]

    def modification(self, e1: Iterable[int]) -> Setaf:
        args, attacks = self._modification_parts(self._check_e1(e1))
        return _dense(self.base, args, attacks)[0]

    # -- the incremental solver ----------------------------------------------

    def solve(
        self,
        semantics: Semantics,
        guard: Optional[int] = None,
        sub_solver: Optional[SubSolver] = None,
    ) -> tuple[frozenset[int], ...]:
        if semantics not in SPLIT_SEMANTICS:
            raise ValueError(f"split solving does not cover {semantics.value}")
        solver = sub_solver or (lambda f, s: enumerate_extensions(f, s, guard))
        results: set[frozenset[int]] = set()
        for e1 in self.bottom_extensions(semantics, guard, sub_solver):
            args, attacks = self._modification_parts(e1)
            top, order = _dense(self.base, args, attacks)
            for ext in solver(top, semantics):
                results.add(e1 | frozenset(order[i] for i in ext))
        return canonical_sets(results)

    def _check_e1(self, e1: Iterable[int]) -> frozenset[int]:
        s = frozenset(e1)
        if not s <= self.a1:
            raise ValueError("bottom extension must be a subset of A1")
        return s


def _dense(base: Setaf, args: frozenset[int], attacks: tuple[Attack, ...]) -> tuple[Setaf, tuple[int, ...]]:
    order = tuple(sorted(args))
    remap = {a: i for i, a in enumerate(order)}
    dense_attacks = tuple(
        (frozenset(remap[t] for t in tail), remap[head]) for tail, head in attacks
    )
    return Setaf(tuple(base.names[a] for a in order), dense_attacks), order


def make_splitting(sf: Setaf, a1: Iterable[int]) -> SetafSplitting:
    """Partition the attacks around A1, or fail on an attack entering A1."""
    a1 = frozenset(a1)
    if not a1 <= sf.args:
        raise ValueError("A1 must be a set of arguments")
    a2 = sf.args - a1
    r1, r2, r3 = [], [], []
    for tail, head in sf.attacks:
        if head in a1:
            if tail <= a1:
                r1.append((tail, head))
            else:
                raise InvalidSplit((tail, head))
        elif tail <= a2:
            r2.append((tail, head))
        else:
            r3.append((tail, head))
    return SetafSplitting(sf, a1, a2, tuple(r1), tuple(r2), tuple(r3))


def reduct(sp: SetafSplitting, e1: Iterable[int]) -> Setaf:
    return sp.reduct(e1)


def undecided_links(sp: SetafSplitting, e1: Iterable[int]) -> tuple[Attack, ...]:
    return sp.undecided_links(e1)


def modification(sp: SetafSplitting, e1: Iterable[int]) -> Setaf:
    return sp.modification(e1)


def split_solve(
    sf: Setaf,
    a1: Iterable[int],
    semantics: Semantics,
    guard: Optional[int] = None,
    sub_solver: Optional[SubSolver] = None,
) -> tuple[frozenset[int], ...]:
    return make_splitting(sf, a1).solve(semantics, guard, sub_solver)
