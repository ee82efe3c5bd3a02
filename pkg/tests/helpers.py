"""Shared fixtures-as-functions and name-based comparison helpers."""

from __future__ import annotations

from splitkit.aba import Abaf
from splitkit.setaf import Setaf


def abaf7() -> Abaf:
    """Seven assumptions, one intermediate sentence, two collective attacks."""
    return Abaf.from_names(
        assumptions={
            "a": "a_c", "b": "b_c", "v": "v_c", "w": "w_c",
            "x": "x_c", "y": "y_c", "z": "z_c",
        },
        rules=[
            ("b_c", ["b"]),
            ("p", ["a"]),
            ("v_c", ["a"]),
            ("x_c", ["w", "p"]),
            ("y_c", ["x"]),
            ("y_c", ["b_c", "z"]),
        ],
    )


def setaf7() -> Setaf:
    """The attack graph matching abaf7, built directly (not via instantiation)."""
    return Setaf.from_names(
        ["a", "b", "v", "w", "x", "y", "z"],
        [
            (["b"], "b"),
            (["a"], "v"),
            (["a", "w"], "x"),
            (["x"], "y"),
            (["b", "z"], "y"),
        ],
    )


def abaf_vuln() -> Abaf:
    """Four assumptions; splitting off {a, d, p} leaves b as a vulnerability."""
    return Abaf.from_names(
        assumptions={"a": "a_c", "b": "b_c", "c": "c_c", "d": "d_c"},
        rules=[
            ("b_c", ["a"]),
            ("d_c", ["b"]),
            ("a_c", ["p", "c"]),
            ("p", ["b"]),
        ],
    )


def abaf_chain3() -> Abaf:
    """Three assumptions, a self-attacker, and a chain through three sentences."""
    return Abaf.from_names(
        assumptions={"a": "a_c", "b": "b_c", "c": "c_c"},
        rules=[
            ("c_c", ["s", "q"]),
            ("s", ["b"]),
            ("q", ["p"]),
            ("p", ["a"]),
            ("a_c", ["a"]),
        ],
    )


def ids(fw, *names) -> frozenset[int]:
    lookup = fw.atom_id if hasattr(fw, "atom_id") else fw.arg_id
    return frozenset(lookup(n) for n in names)


def nm(fw, atom_set) -> frozenset[str]:
    return frozenset(fw.names[a] for a in atom_set)


def fam(fw, extensions) -> frozenset[frozenset[str]]:
    return frozenset(nm(fw, e) for e in extensions)


def rules_nm(abaf) -> frozenset[tuple[str, frozenset[str]]]:
    return abaf.rules_by_name()


def attacks_nm(sf) -> frozenset[tuple[frozenset[str], str]]:
    return sf.attacks_by_name()
