"""Assumption-based argumentation frameworks.

An ``Abaf`` bundles a deductive system (atoms plus rules) with a distinguished
assumption set and a total contrary map.  Atoms are dense integer ids with
display names; subsets of assumptions are plain ``frozenset[int]``.

Everything here is immutable after construction and every operation is a pure
function of its inputs, so frameworks can be shared freely across workers.
The brute-force enumerator is the reference oracle for the split solvers; it
is deliberately exhaustive and protected by the enumeration guard.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence

from splitkit.errors import NonFlatError, NotAtomClosed, ValidationError
from splitkit.semantics import (
    STB_CLOSED,
    Semantics,
    canonical_sets,
    check_guard,
    compute_families,
    mask_of,
    unmask,
)

MAX_SUPPORTS_PER_ATOM = 200_000


@dataclass(frozen=True)
class Rule:
    """A rule ``head <- body``; an empty body makes the rule a fact."""

    head: int
    body: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "body", frozenset(self.body))


@dataclass(eq=True)
class Abaf:
    names: tuple[str, ...]
    rules: tuple[Rule, ...]
    assumptions: frozenset[int]
    contrary: dict[int, int]  # assumption -> contrary atom, total on assumptions

    flat: bool = field(init=False, compare=False, repr=False, default=True)
    _cache: dict = field(init=False, compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        self.names = tuple(self.names)
        n = len(self.names)
        if any(not name for name in self.names):
            raise ValidationError("atom names must be nonempty")
        self.assumptions = frozenset(self.assumptions)
        if not all(0 <= a < n for a in self.assumptions):
            raise ValidationError("assumption id out of range")
        self.contrary = dict(self.contrary)
        if set(self.contrary) != self.assumptions:
            raise ValidationError("contrary map must be total on assumptions and nothing else")
        if not all(0 <= c < n for c in self.contrary.values()):
            raise ValidationError("contrary id out of range")
        seen: set[Rule] = set()
        deduped = []
        for r in self.rules:
            if not isinstance(r, Rule):
                r = Rule(*r)
            if r.head < 0 or r.head >= n or any(b < 0 or b >= n for b in r.body):
                raise ValidationError("rule mentions an atom id out of range")
            if r not in seen:
                seen.add(r)
                deduped.append(r)
        self.rules = tuple(deduped)
        self.flat = not any(r.head in self.assumptions for r in self.rules)

    # -- small conveniences -------------------------------------------------

    @property
    def n_atoms(self) -> int:
        return len(self.names)

    @property
    def atoms(self) -> frozenset[int]:
        return frozenset(range(len(self.names)))

    def name(self, atom: int) -> str:
        return self.names[atom]

    def atom_id(self, name: str) -> int:
        return self.names.index(name)

    def name_set(self, atoms: Iterable[int]) -> frozenset[str]:
        return frozenset(self.names[a] for a in atoms)

    def rule_names(self, rule: Rule) -> tuple[str, frozenset[str]]:
        return self.names[rule.head], self.name_set(rule.body)

    def rules_by_name(self) -> frozenset[tuple[str, frozenset[str]]]:
        return frozenset(self.rule_names(r) for r in self.rules)

    def is_loop_rule(self, rule: Rule) -> bool:
        return any(
            b in self.assumptions and self.contrary[b] == rule.head for b in rule.body
        )

    def alpha(self, atom: int) -> frozenset[int]:
        """Assumptions whose contrary is ``atom`` (may be several, may be none)."""
        return frozenset(a for a, c in self.contrary.items() if c == atom)

    @classmethod
    def from_names(
        cls,
        assumptions: Mapping[str, str],
        rules: Sequence[tuple[str, Sequence[str]]],
        extra_atoms: Sequence[str] = (),
    ) -> "Abaf":
        """Build a framework from display names; ids follow first mention."""
        names: list[str] = []
        index: dict[str, int] = {}

        def intern(name: str) -> int:
            if name not in index:
                index[name] = len(names)
                names.append(name)
            return index[name]

        assumption_ids = {intern(a) for a in assumptions}
        contrary = {index[a]: intern(c) for a, c in assumptions.items()}
        for extra in extra_atoms:
            intern(extra)
        rule_objs = [
            Rule(intern(head), frozenset(intern(b) for b in body))
            for head, body in rules
        ]
        return cls(tuple(names), tuple(rule_objs), frozenset(assumption_ids), contrary)


@dataclass(frozen=True)
class ValidationReport:
    flat: bool
    non_flat_rules: tuple[Rule, ...]
    dummy_rules: tuple[Rule, ...]
    contrary_total: bool = True  # enforced at construction

    @property
    def ok(self) -> bool:
        return self.flat and not self.dummy_rules


def validate(abaf: Abaf) -> ValidationReport:
    """Diagnose flatness and dummy rules (bodies never derivable)."""
    non_flat = tuple(r for r in abaf.rules if r.head in abaf.assumptions)
    everything = theory_closure(abaf, abaf.assumptions)
    dummies = tuple(r for r in abaf.rules if not r.body <= everything)
    return ValidationReport(flat=not non_flat, non_flat_rules=non_flat, dummy_rules=dummies)


def strip_dummy_rules(abaf: Abaf) -> tuple[Abaf, tuple[Rule, ...]]:
    dummies = validate(abaf).dummy_rules
    if not dummies:
        return abaf, ()
    kept = tuple(r for r in abaf.rules if r not in set(dummies))
    return Abaf(abaf.names, kept, abaf.assumptions, dict(abaf.contrary)), dummies


# -- atom closure -----------------------------------------------------------


def atom_closure(abaf: Abaf, atoms: Iterable[int]) -> frozenset[int]:
    """Least superset closed under assumption/contrary pairing (both ways)."""
    closed = set(atoms)
    changed = True
    while changed:
        changed = False
        for a in list(closed):
            if a in abaf.assumptions and abaf.contrary[a] not in closed:
                closed.add(abaf.contrary[a])
                changed = True
        for a, c in abaf.contrary.items():
            if c in closed and a not in closed:
                closed.add(a)
                changed = True
    return frozenset(closed)


def is_atom_closed(abaf: Abaf, atoms: Iterable[int]) -> bool:
    s = frozenset(atoms)
    return atom_closure(abaf, s) == s


# -- derivations ------------------------------------------------------------


def theory_closure(
    abaf: Abaf, assumption_set: Iterable[int], rules: Optional[Sequence[Rule]] = None
) -> frozenset[int]:
    """Forward-chaining fixpoint: everything derivable from the given assumptions."""
    s = frozenset(assumption_set)
    if not s <= abaf.assumptions:
        raise ValueError("theory_closure expects a set of assumptions")
    rs = abaf.rules if rules is None else tuple(rules)
    derived = set(s)
    changed = True
    while changed:
        changed = False
        for r in rs:
            if r.head not in derived and r.body <= derived:
                derived.add(r.head)
                changed = True
    return frozenset(derived)


def _support_fixpoint(abaf: Abaf, rules: Sequence[Rule], minimal: bool) -> list[set[int]]:
    """Per-atom sets of deriving assumption sets, as masks over sorted assumptions.

    With ``minimal`` the lists are kept subset-minimal; otherwise every exact
    leaf set of some derivation tree is recorded.
    """
    order = sorted(abaf.assumptions)
    index = {a: i for i, a in enumerate(order)}
    sup: list[set[int]] = [set() for _ in range(abaf.n_atoms)]
    for a in abaf.assumptions:
        sup[a].add(1 << index[a])

    def add(atom: int, mask: int) -> bool:
        bucket = sup[atom]
        if mask in bucket:
            return False
        if minimal:
            if any(m & mask == m for m in bucket):
                return False
            bucket.difference_update({m for m in bucket if m & mask == mask})
        bucket.add(mask)
        if len(bucket) > MAX_SUPPORTS_PER_ATOM:
            raise ValidationError("support table exceeds the safety cap")
        return True

    changed = True
    while changed:
        changed = False
        for r in rules:
            body_sups = [sup[b] for b in r.body]
            if any(not bs for bs in body_sups):
                continue
            if not body_sups:
                if add(r.head, 0):
                    changed = True
                continue
            for combo in product(*[sorted(bs) for bs in body_sups]):
                mask = 0
                for m in combo:
                    mask |= m
                if add(r.head, mask):
                    changed = True
    return sup


def _assumption_order(abaf: Abaf) -> tuple[list[int], dict[int, int]]:
    order = sorted(abaf.assumptions)
    return order, {a: i for i, a in enumerate(order)}


def minimal_supports(
    abaf: Abaf, rules: Optional[Sequence[Rule]] = None
) -> dict[int, tuple[frozenset[int], ...]]:
    """For every atom, its subset-minimal deriving assumption sets."""
    key = ("minsup", None if rules is None else tuple(rules))
    if key not in abaf._cache:
        rs = abaf.rules if rules is None else tuple(rules)
        order, _ = _assumption_order(abaf)
        table = _support_fixpoint(abaf, rs, minimal=True)
        abaf._cache[key] = {
            atom: canonical_sets(unmask(m, order) for m in masks)
            for atom, masks in enumerate(table)
        }
    return abaf._cache[key]


def all_supports(
    abaf: Abaf, rules: Optional[Sequence[Rule]] = None, guard: Optional[int] = None
) -> dict[int, tuple[frozenset[int], ...]]:
    """Every exact derivation leaf set, not just the minimal ones.

    Distinct from the minimal table: a tree may force extra assumptions into
    its leaf set, and several notions (undecidedness, influence) quantify over
    those exact sets.
    """
    key = ("allsup", None if rules is None else tuple(rules))
    if key not in abaf._cache:
        check_guard(len(abaf.assumptions), guard)
        rs = abaf.rules if rules is None else tuple(rules)
        order, _ = _assumption_order(abaf)
        table = _support_fixpoint(abaf, rs, minimal=False)
        abaf._cache[key] = {
            atom: canonical_sets(unmask(m, order) for m in masks)
            for atom, masks in enumerate(table)
        }
    return abaf._cache[key]


def attacked_assumptions(
    abaf: Abaf, assumption_set: Iterable[int], rules: Optional[Sequence[Rule]] = None
) -> frozenset[int]:
    s = frozenset(assumption_set)
    sup = minimal_supports(abaf, rules)
    return frozenset(
        a for a in abaf.assumptions if any(t <= s for t in sup[abaf.contrary[a]])
    )


def attack_range(
    abaf: Abaf, assumption_set: Iterable[int], rules: Optional[Sequence[Rule]] = None
) -> tuple[frozenset[int], frozenset[int]]:
    """Assumptions attacked by the set, and the set united with them."""
    s = frozenset(assumption_set)
    if not s <= abaf.assumptions:
        raise ValueError("attack_range expects a set of assumptions")
    attacked = attacked_assumptions(abaf, s, rules)
    return attacked, s | attacked


# -- semantics --------------------------------------------------------------


def _resolve_closed(abaf: Abaf, nonflat_stable: Optional[bool]) -> bool:
    return (not abaf.flat) if nonflat_stable is None else bool(nonflat_stable)


def extension_families(abaf: Abaf, guard: Optional[int] = None) -> dict:
    """All six families at once (masks resolved to assumption sets), cached."""
    if "families" not in abaf._cache:
        check_guard(len(abaf.assumptions), guard)
        order, index = _assumption_order(abaf)
        sup = minimal_supports(abaf)
        attacks = [
            (mask_of(t, index), index[a])
            for a in order
            for t in sup[abaf.contrary[a]]
        ]
        closure = []
        if not abaf.flat:
            closure = [
                (mask_of(t, index), index[a]) for a in order for t in sup[a]
            ]
        fams = compute_families(len(order), attacks, closure)
        abaf._cache["families"] = {
            key: canonical_sets(unmask(m, order) for m in masks)
            for key, masks in fams.items()
        }
    return abaf._cache["families"]


def enumerate_extensions(
    abaf: Abaf,
    semantics: Semantics,
    guard: Optional[int] = None,
    nonflat_stable: Optional[bool] = None,
) -> tuple[frozenset[int], ...]:
    closed = _resolve_closed(abaf, nonflat_stable)
    if not abaf.flat and semantics not in (Semantics.CF, Semantics.STB):
        raise NonFlatError(
            f"{semantics.value} extensions are only supported on flat frameworks"
        )
    fams = extension_families(abaf, guard)
    if semantics is Semantics.STB and closed:
        return fams[STB_CLOSED]
    return fams[semantics]


def check_extension(
    abaf: Abaf,
    assumption_set: Iterable[int],
    semantics: Semantics,
    nonflat_stable: Optional[bool] = None,
    guard: Optional[int] = None,
) -> bool:
    """Exact per-definition decision for a single candidate set."""
    s = frozenset(assumption_set)
    if not s <= abaf.assumptions:
        raise ValueError("extension candidates must contain assumptions only")
    th = theory_closure(abaf, s)
    cf = not any(abaf.contrary[a] in th for a in s)
    if semantics is Semantics.CF:
        return cf
    if semantics is Semantics.STB:
        if not cf:
            return False
        attacked = frozenset(a for a in abaf.assumptions if abaf.contrary[a] in th)
        if s | attacked != abaf.assumptions:
            return False
        if _resolve_closed(abaf, nonflat_stable):
            return all(a in s for a in th & abaf.assumptions)
        return True
    if semantics in (Semantics.GRD, Semantics.PREF):
        return s in enumerate_extensions(abaf, semantics, guard, nonflat_stable)
    # admissible / complete, via subset-minimal attackers
    if not abaf.flat:
        raise NonFlatError(
            f"{semantics.value} checks are only supported on flat frameworks"
        )
    if not cf:
        return False
    sup = minimal_supports(abaf)
    attacked = frozenset(a for a in abaf.assumptions if abaf.contrary[a] in th)

    def defends(a: int) -> bool:
        return all(t & attacked for t in sup[abaf.contrary[a]])

    if not all(defends(a) for a in s):
        return False
    if semantics is Semantics.ADM:
        return True
    if semantics is Semantics.COM:
        return not any(defends(a) for a in abaf.assumptions - s)
    raise ValueError(f"unsupported semantics {semantics}")


# -- projection and influence ------------------------------------------------


def projection(abaf: Abaf, sentence_set: Iterable[int]) -> Abaf:
    """Induced sub-framework on an atom-closed sentence set."""
    s = frozenset(sentence_set)
    missing = atom_closure(abaf, s) - s
    if missing:
        raise NotAtomClosed(abaf.names[min(missing)])
    order = sorted(s)
    remap = {a: i for i, a in enumerate(order)}
    rules = tuple(
        Rule(remap[r.head], frozenset(remap[b] for b in r.body))
        for r in abaf.rules
        if r.head in s and r.body <= s
    )
    assumptions = frozenset(remap[a] for a in abaf.assumptions & s)
    contrary = {remap[a]: remap[abaf.contrary[a]] for a in abaf.assumptions & s}
    return Abaf(tuple(abaf.names[a] for a in order), rules, assumptions, contrary)


def is_uninfluenced(abaf: Abaf, u: Iterable[int], guard: Optional[int] = None) -> bool:
    """True iff every derivation of a contrary of a member stays inside ``u``."""
    us = frozenset(u)
    if not us <= abaf.assumptions:
        raise ValueError("is_uninfluenced expects a set of assumptions")
    sup = all_supports(abaf, guard=guard)
    return all(t <= us for b in us for t in sup[abaf.contrary[b]])
