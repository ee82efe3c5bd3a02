#!/usr/bin/env python3
"""Time direct enumeration against split solving on layered instances.

Two random blocks are stacked so that all cross influences run upward; the
balanced splitting then cuts the instance roughly in half, turning one 2^n
sweep into two 2^(n/2) sweeps per bottom extension."""

import argparse
import random
import time

from splitkit.aba import Abaf, Rule, enumerate_extensions
from splitkit.finder import find_balanced_splitting
from splitkit.generate import random_abaf
from splitkit.semantics import Semantics
from splitkit.split_aba import split_solve


def full_block(rng: random.Random, block: int) -> Abaf:
    while True:  # reject draws that came out smaller than the block size
        d = random_abaf(rng, max_assumptions=block, max_rules=block + 2, max_extra=1)
        if len(d.assumptions) == block:
            return d


def layered(seed: int, block: int) -> Abaf:
    rng = random.Random(seed)
    lo = full_block(rng, block)
    hi = full_block(rng, block)
    shift = lo.n_atoms
    names = lo.names + tuple(f"t_{n}" for n in hi.names)
    rules = list(lo.rules)
    rules += [
        Rule(r.head + shift, frozenset(b + shift for b in r.body)) for r in hi.rules
    ]
    hi_contraries = sorted(set(hi.contrary.values()))
    for _ in range(block):  # upward links only: lower assumptions feed upper rules
        head = shift + rng.choice(hi_contraries)
        body = {rng.choice(sorted(lo.assumptions)), shift + rng.choice(sorted(hi.assumptions))}
        rules.append(Rule(head, frozenset(body)))
    assumptions = lo.assumptions | frozenset(a + shift for a in hi.assumptions)
    contrary = dict(lo.contrary)
    contrary.update({a + shift: c + shift for a, c in hi.contrary.items()})
    return Abaf(names, tuple(rules), assumptions, contrary)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--block", type=int, default=8, help="assumptions per layer")
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--semantics", default="stb")
    args = ap.parse_args()
    sem = Semantics.from_token(args.semantics)

    total_direct = total_split = 0.0
    for seed in range(args.seeds):
        d = layered(seed, args.block)
        s = find_balanced_splitting(d)

        t0 = time.perf_counter()
        direct = enumerate_extensions(d, sem, guard=len(d.assumptions))
        t1 = time.perf_counter()
        via = split_solve(d, s, sem, guard=len(d.assumptions))
        t2 = time.perf_counter()

        assert direct == via
        total_direct += t1 - t0
        total_split += t2 - t1
        print(
            f"seed {seed}: |A|={len(d.assumptions)} |R|={len(d.rules)} "
            f"direct {t1 - t0:6.3f}s split {t2 - t1:6.3f}s "
            f"({len(direct)} extensions)"
        )
    print(f"totals: direct {total_direct:.3f}s, split {total_split:.3f}s")


if __name__ == "__main__":
    main()
