"""Seeded random instances, always flat and dummy-free by construction."""

from __future__ import annotations

import random
from typing import Union

from splitkit.aba import Abaf, Rule
from splitkit.setaf import Setaf

RngLike = Union[int, random.Random]


def _rng(seed: RngLike) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_abaf(
    seed: RngLike,
    max_assumptions: int = 7,
    max_rules: int = 10,
    max_body: int = 3,
    max_extra: int = 2,
) -> Abaf:
    """Rule bodies are drawn from the already-derivable pool, so no rule is
    dummy, and heads are never assumptions, so the result is flat.  Every body
    contains at least one assumption, keeping all derivation leaf sets
    nonempty; the instances therefore always have a SETAF instantiation."""
    rng = _rng(seed)
    n_assumptions = rng.randint(1, max_assumptions)
    n_extra = rng.randint(0, max_extra)
    n_rules = rng.randint(0, max_rules)

    names = [f"a{i + 1}" for i in range(n_assumptions)]
    names += [f"c_a{i + 1}" for i in range(n_assumptions)]
    names += [f"s{i + 1}" for i in range(n_extra)]
    assumptions = frozenset(range(n_assumptions))
    contrary = {i: n_assumptions + i for i in range(n_assumptions)}

    heads = list(range(n_assumptions, len(names)))
    derivable = list(range(n_assumptions))
    rules = []
    for _ in range(n_rules):
        head = rng.choice(heads)
        size = rng.randint(1, min(max_body, len(derivable)))
        body = frozenset(rng.sample(derivable, size - 1)) | {
            rng.randrange(n_assumptions)
        }
        rules.append(Rule(head, body))
        if head not in derivable:
            derivable.append(head)
    return Abaf(tuple(names), tuple(rules), assumptions, contrary)


def random_setaf(
    seed: RngLike,
    max_args: int = 8,
    max_attacks: int = 10,
    max_tail: int = 3,
) -> Setaf:
    rng = _rng(seed)
    n = rng.randint(1, max_args)
    m = rng.randint(0, max_attacks)
    attacks = []
    for _ in range(m):
        size = rng.randint(1, min(max_tail, n))
        tail = frozenset(rng.sample(range(n), size))
        attacks.append((tail, rng.randrange(n)))
    return Setaf(tuple(f"x{i + 1}" for i in range(n)), tuple(attacks))
