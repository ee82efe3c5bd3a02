import pytest

from helpers import abaf7, abaf_vuln, ids, nm
from splitkit.aba import (
    Abaf,
    Rule,
    all_supports,
    atom_closure,
    attack_range,
    check_extension,
    enumerate_extensions,
    is_atom_closed,
    is_uninfluenced,
    minimal_supports,
    projection,
    strip_dummy_rules,
    theory_closure,
    validate,
)
from splitkit.errors import GuardExceeded, NonFlatError, NotAtomClosed, ValidationError
from splitkit.semantics import Semantics


def test_construction_checks():
    with pytest.raises(ValidationError):
        Abaf(("a", "ca"), (), frozenset({0}), {})  # contrary not total
    with pytest.raises(ValidationError):
        Abaf(("a", "ca"), (), frozenset({0}), {0: 1, 1: 0})  # contrary for non-assumption
    with pytest.raises(ValidationError):
        Abaf(("a", ""), (), frozenset({0}), {0: 1})  # empty name
    with pytest.raises(ValidationError):
        Abaf(("a", "ca"), (Rule(5, frozenset()),), frozenset({0}), {0: 1})


def test_duplicate_rules_are_collapsed():
    d = Abaf(("a", "ca"), (Rule(1, frozenset({0})), Rule(1, frozenset({0}))),
             frozenset({0}), {0: 1})
    assert len(d.rules) == 1


def test_flat_flag_and_loop_rule():
    d = abaf7()
    assert d.flat
    loop = next(r for r in d.rules if d.names[r.head] == "b_c")
    assert d.is_loop_rule(loop)
    plain = next(r for r in d.rules if d.names[r.head] == "p")
    assert not d.is_loop_rule(plain)


def test_validate_running_example_clean():
    report = validate(abaf7())
    assert report.flat and not report.dummy_rules and report.ok


def test_validate_detects_dummy_rule():
    d = Abaf.from_names(
        assumptions={"a": "ca"}, rules=[("q", ["r"])], extra_atoms=["q", "r"]
    )
    report = validate(d)
    assert len(report.dummy_rules) == 1
    stripped, dummies = strip_dummy_rules(d)
    assert not stripped.rules and len(dummies) == 1


def test_validate_detects_non_flat():
    d = Abaf.from_names(assumptions={"b": "cb"}, rules=[("b", [])])
    report = validate(d)
    assert not report.flat
    assert report.non_flat_rules == (d.rules[0],)


def test_theory_closure_examples():
    d = abaf7()
    assert nm(d, theory_closure(d, ids(d, "a"))) == {"a", "p", "v_c"}
    assert theory_closure(d, frozenset()) == frozenset()
    with pytest.raises(ValueError):
        theory_closure(d, ids(d, "p"))  # not an assumption


def test_theory_closure_is_monotone():
    d = abaf7()
    small = theory_closure(d, ids(d, "a"))
    big = theory_closure(d, ids(d, "a", "w"))
    assert small <= big


def test_minimal_supports_examples():
    d = abaf7()
    sup = minimal_supports(d)
    assert {nm(d, t) for t in sup[d.atom_id("x_c")]} == {frozenset({"a", "w"})}
    assert {nm(d, t) for t in sup[d.atom_id("y_c")]} == {
        frozenset({"x"}),
        frozenset({"b", "z"}),
    }
    assert {nm(d, t) for t in sup[d.atom_id("a")]} == {frozenset({"a"})}
    assert sup[d.atom_id("a_c")] == ()  # underivable


def test_all_supports_records_exact_leaf_sets():
    d = Abaf.from_names(
        assumptions={"a": "ca", "u": "cu", "z": "p"},
        rules=[("p", ["a"]), ("p", ["a", "u"])],
    )
    exact = all_supports(d)[d.atom_id("p")]
    assert {nm(d, t) for t in exact} == {frozenset({"a"}), frozenset({"a", "u"})}
    minimal = minimal_supports(d)[d.atom_id("p")]
    assert {nm(d, t) for t in minimal} == {frozenset({"a"})}


def test_attack_range_examples():
    d = abaf7()
    attacked, rng = attack_range(d, ids(d, "a"))
    assert nm(d, attacked) == {"v"} and nm(d, rng) == {"a", "v"}
    assert attack_range(d, frozenset())[0] == frozenset()
    attacked, _ = attack_range(d, ids(d, "b", "z"))
    assert {"y", "b"} <= nm(d, attacked)


def test_attack_range_honours_rule_filter():
    d = abaf7()
    bottom_rules = [r for r in d.rules if d.names[r.head] in ("b_c", "p")]
    attacked, _ = attack_range(d, ids(d, "a"), rules=bottom_rules)
    assert attacked == frozenset()  # v_c is not derivable in the filtered system


def test_check_extension_examples():
    d = abaf7()
    assert check_extension(d, ids(d, "a", "w", "z"), Semantics.PREF)
    assert check_extension(d, frozenset(), Semantics.CF)
    q = abaf_vuln()
    assert check_extension(q, ids(q, "b", "c"), Semantics.STB)
    assert check_extension(q, ids(q, "a", "c", "d"), Semantics.STB)
    assert not check_extension(q, ids(q, "a", "b"), Semantics.CF)
    with pytest.raises(ValueError):
        check_extension(d, ids(d, "p"), Semantics.CF)


def test_check_matches_enumeration_on_all_semantics():
    d = abaf_vuln()
    for sem in Semantics:
        family = set(enumerate_extensions(d, sem))
        for mask in range(1 << len(d.assumptions)):
            cand = frozenset(
                a for i, a in enumerate(sorted(d.assumptions)) if mask >> i & 1
            )
            assert check_extension(d, cand, sem) == (cand in family)


def test_enumerate_examples():
    d = abaf7()
    assert ids(d, "a", "w", "z") in enumerate_extensions(d, Semantics.PREF)
    empty = Abaf((), (), frozenset(), {})
    for sem in Semantics:
        assert enumerate_extensions(empty, sem) == (frozenset(),)


def test_enumerate_guard_error_names_limit():
    d = abaf7()
    with pytest.raises(GuardExceeded) as err:
        enumerate_extensions(d, Semantics.PREF, guard=3)
    assert "3" in str(err.value)


def test_guard_environment_override(monkeypatch):
    d = abaf7()
    monkeypatch.setenv("SPLITKIT_GUARD", "2")
    with pytest.raises(GuardExceeded):
        enumerate_extensions(d, Semantics.PREF)


def test_enumerate_rejects_non_flat_except_stable():
    d = Abaf.from_names(
        assumptions={"b": "cb", "e": "ce"}, rules=[("b", []), ("cb", ["e"])]
    )
    assert not d.flat
    with pytest.raises(NonFlatError):
        enumerate_extensions(d, Semantics.ADM)
    # stable on the non-flat framework demands closed sets: b is a consequence
    # of the empty set, so every extension contains it
    for ext in enumerate_extensions(d, Semantics.STB):
        assert d.atom_id("b") in ext


def test_projection_examples():
    d = abaf7()
    s = ids(d, "a", "b", "a_c", "b_c", "p")
    sub = projection(d, s)
    assert sub.rules_by_name() == {
        ("b_c", frozenset({"b"})),
        ("p", frozenset({"a"})),
    }
    assert nm(sub, sub.assumptions) == {"a", "b"}
    assert projection(d, d.atoms) == d
    tiny = projection(d, ids(d, "w", "w_c"))
    assert not tiny.rules and nm(tiny, tiny.assumptions) == {"w"}
    with pytest.raises(NotAtomClosed):
        projection(d, ids(d, "a"))


def test_atom_closure_multi_valued_alpha():
    d = Abaf.from_names(assumptions={"a": "q", "b": "q"}, rules=[])
    closed = atom_closure(d, ids(d, "a"))
    assert nm(d, closed) == {"a", "b", "q"}  # b shares the contrary q
    assert is_atom_closed(d, closed)
    assert not is_atom_closed(d, ids(d, "a", "q"))


def test_is_uninfluenced_examples():
    d = abaf7()
    assert is_uninfluenced(d, ids(d, "a", "b"))
    assert not is_uninfluenced(d, ids(d, "y"))
    assert is_uninfluenced(d, frozenset())


def test_semantics_lattice_on_examples():
    for d in (abaf7(), abaf_vuln()):
        fams = {sem: set(enumerate_extensions(d, sem)) for sem in Semantics}
        assert fams[Semantics.STB] <= fams[Semantics.PREF]
        assert fams[Semantics.PREF] <= fams[Semantics.COM]
        assert fams[Semantics.COM] <= fams[Semantics.ADM]
        assert fams[Semantics.ADM] <= fams[Semantics.CF]


def test_flat_grounded_is_singleton():
    for d in (abaf7(), abaf_vuln()):
        grd = enumerate_extensions(d, Semantics.GRD)
        assert len(grd) == 1
        com = enumerate_extensions(d, Semantics.COM)
        assert all(grd[0] <= e for e in com)


def test_theory_closure_in_expanded_quasi_bottom():
    from helpers import abaf_vuln
    from splitkit.split_aba import bottom_expansion, make_quasi_splitting

    d = abaf_vuln()
    q = make_quasi_splitting(d, ids(d, "a", "a_c", "d", "d_c", "p"))
    exp = bottom_expansion(q)
    th = theory_closure(exp, ids(exp, "b"))
    assert nm(exp, th) == {"b", "d_c", "c_b'", "p", "a_c"}
