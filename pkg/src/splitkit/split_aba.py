"""Splitting ABA frameworks on the knowledge-base level.

A splitting set S cuts the rule set into a bottom (heads inside S) and a top
(the rest) such that nothing relevant to the bottom is derived up top.  Each
bottom extension E is pushed into the top in two steps: the E-reduct deletes
rules whose bottom-side body atoms E cannot derive and strips derived atoms
from the remaining bodies; the E-modification then re-adds, guarded by one
fresh self-attacking assumption, the rules that were lost only because their
bodies stayed undecided.

Quasi-splittings relax the cut: bottom rule bodies may mention assumptions
outside S ("vulnerabilities") whose contraries are derived up top.  The
bottom is then enlarged with one marker assumption per vulnerability that
forces a guess on it, and the top is constrained with a fact or a loop rule
enforcing the guess.  This route is exact for stable semantics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from splitkit.aba import (
    Abaf,
    Rule,
    all_supports,
    atom_closure,
    enumerate_extensions,
    minimal_supports,
    theory_closure,
)
from splitkit.errors import (
    HeadInBodyOut,
    NonAssumptionBodyOut,
    NotAtomClosed,
)
from splitkit.semantics import Semantics, canonical_sets

SubSolver = Callable[[Abaf, Semantics], Iterable[frozenset[int]]]

SPLIT_SEMANTICS = (Semantics.STB, Semantics.ADM, Semantics.COM, Semantics.PREF, Semantics.GRD)


@dataclass(frozen=True)
class ModifiedTop:
    abaf: Abaf
    fresh: Optional[tuple[int, int]]  # (undecided assumption, its contrary), if added


@dataclass(eq=False)
class AbaSplitting:
    base: Abaf
    s: frozenset[int]
    bottom: Abaf
    r1: tuple[Rule, ...]
    r2: tuple[Rule, ...]
    a1: frozenset[int]
    a2: frozenset[int]

    _cache: dict = field(init=False, repr=False, default_factory=dict)

    def reduct(self, e: Iterable[int]) -> Abaf:
        e = self._check_e(e)
        key = ("reduct", e)
        if key not in self._cache:
            th = theory_closure(self.bottom, e)
            rules = tuple(
                Rule(r.head, r.body - th)
                for r in self.r2
                if r.body & self.s <= th
            )
            contrary = {a: self.base.contrary[a] for a in self.a2}
            self._cache[key] = Abaf(self.base.names, rules, self.a2, contrary)
        return self._cache[key]

    def undecided(self, e: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
        return undecided_theory(self.bottom, self._check_e(e))

    def incompatible(self, e: Iterable[int]) -> frozenset[int]:
        """Bottom sentences that cannot become true once ``e`` is chosen.

        A sentence is ruled out when every assumption set deriving it contains
        an assumption defeated by ``e`` (vacuously so for underivable ones),
        and so are the contraries of accepted assumptions.  Ruling out merely
        everything derivable from the defeated assumptions would be wrong in
        both directions: facts are derivable from any set yet never ruled
        out, and a sentence with one defeated and one untouched derivation is
        still reachable.
        """
        e = self._check_e(e)
        th = theory_closure(self.bottom, e)
        defeated = frozenset(a for a in self.a1 if self.base.contrary[a] in th)
        sup = minimal_supports(self.bottom)
        blocked = frozenset(
            p for p in self.s if all(t & defeated for t in sup[p])
        )
        return blocked | frozenset(self.base.contrary[a] for a in e)

    def modification(self, e: Iterable[int]) -> ModifiedTop:
        e = self._check_e(e)
        key = ("mod", e)
        if key not in self._cache:
            red = self.reduct(e)
            ua, ut = self.undecided(e)
            if not ua:
                self._cache[key] = ModifiedTop(red, None)
            else:
                inc = self.incompatible(e)
                names, xu, cu = _with_fresh_pair(self.base.names, "_u", "_cu")
                rules = list(red.rules)
                rules.append(Rule(cu, frozenset({xu})))
                for r in self.r2:
                    if not r.body & inc and r.body & ut:
                        rules.append(Rule(r.head, (r.body - self.s) | {xu}))
                contrary = {a: self.base.contrary[a] for a in self.a2}
                contrary[xu] = cu
                top = Abaf(names, tuple(rules), self.a2 | {xu}, contrary)
                self._cache[key] = ModifiedTop(top, (xu, cu))
        return self._cache[key]

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
        for e1 in solver(self.bottom, semantics):
            top = self.modification(e1).abaf
            for e2 in solver(top, semantics):
                results.add(frozenset(e1) | (frozenset(e2) & self.a2))
        return canonical_sets(results)

    def _check_e(self, e: Iterable[int]) -> frozenset[int]:
        s = frozenset(e)
        if not s <= self.a1:
            raise ValueError("bottom extension must be a subset of the bottom assumptions")
        return s


def make_splitting(abaf: Abaf, sentence_set: Iterable[int]) -> AbaSplitting:
    s = frozenset(sentence_set)
    if not s <= abaf.atoms:
        raise ValueError("splitting set must contain known atoms")
    missing = atom_closure(abaf, s) - s
    if missing:
        raise NotAtomClosed(abaf.names[min(missing)])
    r1, r2 = [], []
    for r in abaf.rules:
        if r.head in s:
            if not r.body <= s:
                raise HeadInBodyOut(r)
            r1.append(r)
        else:
            r2.append(r)
    a1 = s & abaf.assumptions
    a2 = abaf.assumptions - s
    bottom = Abaf(abaf.names, tuple(r1), a1, {a: abaf.contrary[a] for a in a1})
    return AbaSplitting(abaf, s, bottom, tuple(r1), tuple(r2), a1, a2)


def undecided_theory(d1: Abaf, e: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Undecided assumptions of the bottom, and every sentence they reach.

    A sentence is undecided when some derivation of it has a leaf set that
    touches an undecided assumption and contains no defeated one.  The leaf
    sets here are the exact ones of derivation trees, not the minimal
    supports: a tree may force extra assumptions in, and those decide
    membership.
    """
    e = frozenset(e)
    th = theory_closure(d1, e)
    ua = frozenset(a for a in d1.assumptions if a not in e and d1.contrary[a] not in th)
    if not ua:
        return ua, frozenset()
    sup = all_supports(d1)
    ut = frozenset(
        p
        for p in range(d1.n_atoms)
        for t in sup[p]
        if t & ua and not any(d1.contrary[b] in th for b in t)
    )
    return ua, ut


def reduct(sp: AbaSplitting, e: Iterable[int]) -> Abaf:
    return sp.reduct(e)


def incompatible_sentences(sp: AbaSplitting, e: Iterable[int]) -> frozenset[int]:
    return sp.incompatible(e)


def modification(sp: AbaSplitting, e: Iterable[int]) -> ModifiedTop:
    return sp.modification(e)


def split_solve(
    abaf: Abaf,
    sentence_set: Iterable[int],
    semantics: Semantics,
    guard: Optional[int] = None,
    sub_solver: Optional[SubSolver] = None,
) -> tuple[frozenset[int], ...]:
    return make_splitting(abaf, sentence_set).solve(semantics, guard, sub_solver)


# -- parametrised (quasi) splitting ------------------------------------------


@dataclass(eq=False)
class QuasiSplitting:
    base: Abaf
    s: frozenset[int]
    vulnerabilities: frozenset[int]
    l1: frozenset[int]
    bottom: Abaf
    r1: tuple[Rule, ...]
    r2: tuple[Rule, ...]
    a1: frozenset[int]
    a2: frozenset[int]

    _cache: dict = field(init=False, repr=False, default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.vulnerabilities)

    def expanded(self) -> tuple[Abaf, dict[int, int]]:
        """The bottom with one choice marker per vulnerability."""
        if "expanded" not in self._cache:
            names = list(self.base.names)
            taken = set(names)
            marker_of: dict[int, int] = {}
            marker_contrary: dict[int, int] = {}
            for b in sorted(self.vulnerabilities):
                m_name = _fresh(taken, f"{self.base.names[b]}'")
                marker_of[b] = len(names)
                names.append(m_name)
                c_name = _fresh(taken, f"c_{m_name}")
                marker_contrary[b] = len(names)
                names.append(c_name)
            rules = [Rule(r.head, r.body & self.l1) for r in self.r1]
            for b in sorted(self.vulnerabilities):
                rules.append(Rule(self.base.contrary[b], frozenset({marker_of[b]})))
                rules.append(Rule(marker_contrary[b], frozenset({b})))
            assumptions = self.a1 | set(marker_of.values())
            contrary = {a: self.base.contrary[a] for a in self.a1}
            for b, m in marker_of.items():
                contrary[m] = marker_contrary[b]
            self._cache["expanded"] = (
                Abaf(tuple(names), tuple(rules), frozenset(assumptions), contrary),
                marker_of,
            )
        return self._cache["expanded"]

    def top_for(self, e1: Iterable[int]) -> Abaf:
        """Reduct of the top w.r.t. a bottom choice, plus the enforcing rules.

        The theory used for the reduct is taken in the expanded bottom, so
        accepted vulnerabilities and the contraries of rejected ones count as
        settled.  Accepting a vulnerability adds it as a fact (which may make
        the result non-flat); rejecting it adds a loop rule on it.
        """
        e1 = frozenset(e1)
        key = ("top", e1)
        if key not in self._cache:
            exp, marker_of = self.expanded()
            if not e1 <= exp.assumptions:
                raise ValueError("expected an extension of the expanded bottom")
            th = theory_closure(exp, e1)
            # Only splitting-set atoms are settled by the bottom choice.  A
            # guessed contrary lives in the top's own vocabulary and must be
            # derived up there for real, so it stays in the bodies; deleting
            # it would let a circular rule confirm its own guess.
            rules = [
                Rule(r.head, r.body - (th & self.s))
                for r in self.r2
                if r.body & self.s <= th
            ]
            for b in sorted(e1 & self.vulnerabilities):
                rules.append(Rule(b, frozenset()))
            for b in sorted(self.vulnerabilities):
                if marker_of[b] in e1:
                    rules.append(Rule(self.base.contrary[b], frozenset({b})))
            contrary = {a: self.base.contrary[a] for a in self.a2}
            self._cache[key] = Abaf(self.base.names, tuple(rules), self.a2, contrary)
        return self._cache[key]

    def solve(
        self, guard: Optional[int] = None, sub_solver: Optional[SubSolver] = None
    ) -> tuple[frozenset[int], ...]:
        """Stable extensions of the base framework, via the quasi-splitting."""
        exp, _ = self.expanded()
        solver = sub_solver or (lambda f, s: enumerate_extensions(f, s, guard))
        results: set[frozenset[int]] = set()
        for e1 in solver(exp, Semantics.STB):
            top = self.top_for(e1)
            for e2 in solver(top, Semantics.STB):
                results.add((frozenset(e1) & self.s) | (frozenset(e2) & self.a2))
        return canonical_sets(results)

    def witness_bottom(self, extension: Iterable[int]) -> frozenset[int]:
        """Bottom choice recovering a stable extension of the base framework:
        keep its bottom assumptions and mark every rejected vulnerability."""
        ext = frozenset(extension)
        _, marker_of = self.expanded()
        markers = frozenset(marker_of[b] for b in self.vulnerabilities - ext)
        return (ext & self.a1) | markers


def make_quasi_splitting(abaf: Abaf, sentence_set: Iterable[int]) -> QuasiSplitting:
    s = frozenset(sentence_set)
    if not s <= abaf.atoms:
        raise ValueError("quasi-splitting set must contain known atoms")
    missing = atom_closure(abaf, s) - s
    if missing:
        raise NotAtomClosed(abaf.names[min(missing)])
    r1, r2 = [], []
    for r in abaf.rules:
        if r.head in s:
            if not (r.body - abaf.assumptions) <= s:
                raise NonAssumptionBodyOut(r)
            r1.append(r)
        else:
            r2.append(r)
    heads = {r.head for r in abaf.rules}
    vulnerable = frozenset(
        b
        for r in r1
        for b in r.body & abaf.assumptions
        if b not in s
        and abaf.contrary[b] in heads
        and any(r2_.head == abaf.contrary[b] and r2_ != r for r2_ in abaf.rules)
    )
    l1 = s | vulnerable | frozenset(abaf.contrary[b] for b in vulnerable)
    a1 = (s & abaf.assumptions) | vulnerable
    a2 = abaf.assumptions - s
    bottom = Abaf(abaf.names, tuple(r1), a1, {a: abaf.contrary[a] for a in a1})
    return QuasiSplitting(
        abaf, s, vulnerable, l1, bottom, tuple(r1), tuple(r2), a1, a2
    )


def bottom_expansion(q: QuasiSplitting) -> Abaf:
    return q.expanded()[0]


def top_constrained(q: QuasiSplitting, e1: Iterable[int]) -> Abaf:
    return q.top_for(e1)


def param_split_solve(
    abaf: Abaf,
    sentence_set: Iterable[int],
    guard: Optional[int] = None,
    sub_solver: Optional[SubSolver] = None,
) -> tuple[frozenset[int], ...]:
    return make_quasi_splitting(abaf, sentence_set).solve(guard, sub_solver)


def _fresh(taken: set[str], base: str) -> str:
    name = base
    k = 2
    while name in taken:
        name = f"{base}{k}"
        k += 1
    taken.add(name)
    return name


def _with_fresh_pair(names: tuple[str, ...], first: str, second: str) -> tuple[tuple[str, ...], int, int]:
    taken = set(names)
    a = _fresh(taken, first)
    b = _fresh(taken, second)
    return names + (a, b), len(names), len(names) + 1
