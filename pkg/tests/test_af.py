import pytest
from hypothesis import given, settings, strategies as st

from sbaf import af, verify
from sbaf.errors import CapExceededError, PreconditionError
from sbaf.model import make_sbaf

from conftest import draw_subset, fs

pytestmark = pytest.mark.usefixtures("backend")


def test_conflict_free(fx):
    assert not af.is_conflict_free({"a4", "a5"}, fx["F1"])
    assert af.is_conflict_free(set(), fx["F1"])
    assert af.is_conflict_free({"a1", "a2", "a3", "a4"}, fx["F1"])


def test_defends(fx):
    assert af.defends({"a1", "a2", "a3", "a4"}, "a6", fx["F1"])
    assert af.defends(set(), "a1", fx["F1"])
    assert not af.defends(set(), "a2", fx["F2"])


def test_admissible_complete_preferred(fx):
    F0, F2 = fx["F0"], fx["F2"]
    assert af.is_admissible({"a3"}, F0)
    assert af.is_admissible(set(), F0)
    assert not af.is_complete(set(), F0)          # a1 is unattacked
    assert af.is_preferred({"a1"}, F2)
    assert not af.is_preferred(set(), F2)


def test_empty_set_complete_only_without_unattacked():
    sb = make_sbaf([("a1", {"s"}, "t"), ("a2", {"u"}, "v")], [("t", "u"), ("v", "s")])
    assert af.is_complete(set(), sb)


def test_enumerate_fixtures(fx):
    assert af.enumerate("preferred", fx["F0"]) == [{"a1", "a2", "a3", "a4"}, {"a1", "a2", "a3", "a5"}]
    assert af.enumerate("admissible", fx["F2"]) == [set(), {"a1"}]


def test_enumerate_without_arguments():
    sb = make_sbaf([], sentences=["s"])
    for tag in ("admissible", "complete", "preferred"):
        assert af.enumerate(tag, sb) == [frozenset()]


def test_no_attacks_admissible_is_powerset():
    sb = make_sbaf([("a1", {"s"}, "t"), ("a2", {"u"}, "v"), ("a3", {"w"}, "x")])
    assert af.enumerate("admissible", sb) == [set(), {"a1"}, {"a1", "a2"}, {"a1", "a2", "a3"},
                                              {"a1", "a3"}, {"a2"}, {"a2", "a3"}, {"a3"}]


def test_cap(fx):
    with pytest.raises(CapExceededError, match="--max-args"):
        af.enumerate("admissible", fx["F1"], max_args=3)
    assert af.enumerate("admissible", fx["F1"], max_args=None)


def test_restrict(fx):
    F1, F3 = fx["F1"], fx["F3"]
    sub = af.restrict(F3, {"a1"})
    assert sub.ids == ("a1",)
    assert af.restrict(F1, set(F1.ids)) == F1
    sub = af.restrict(F1, {"a6", "a7"})
    assert sub.attack == {("a6", "a7")}
    assert not any(a.premises <= sub["a6"].sentences for a in sub.arguments if a.id == "a7")


def test_restrict_side_condition(fx):
    with pytest.raises(PreconditionError):
        af.restrict(fx["F1"], {"a6"}, check=True)
    af.restrict(fx["F3"], {"a1"}, check=True)


def test_violation_messages(fx):
    assert af.violation("admissible", {"a4", "a5"}, fx["F1"]) == "not conflict-free: a4 attacks a5"
    assert af.violation("admissible", {"a2"}, fx["F2"]) == "not admissible: a1 attacks a2 and no member attacks a1"
    assert af.violation("complete", set(), fx["F2"]) == "not complete: a1 is defended but not a member"
    assert af.violation("preferred", set(), fx["F2"]).startswith("not preferred")
    assert af.violation("admissible", set(), fx["F2"]) is None


def _family(tag, sb):
    return fs(*af.enumerate(tag, sb))


gen = st.builds(verify.GenConfig, seed=st.integers(0, 10**6), min_args=st.just(0), max_args=st.integers(0, 8),
                density=st.floats(0, 0.4), naming=st.floats(0, 0.6))


@settings(max_examples=40, deadline=None)
@given(gen)
def test_enumeration_matches_brute_force(config):
    sb = verify.gen_sbaf(config)
    for tag in ("conflict-free", "admissible", "complete", "preferred"):
        assert _family(tag, sb) == verify.oracle_semantics(tag, sb)


@settings(max_examples=40, deadline=None)
@given(gen)
def test_hierarchy_and_order(config):
    sb = verify.gen_sbaf(config)
    cf, adm, comp, pref = (af.enumerate(t, sb) for t in af.TAGS)
    assert set(comp) <= set(adm) <= set(cf)
    assert all(any(E <= P for P in pref) for E in adm)
    for fam in (cf, adm, comp, pref):
        keys = [sorted(sb.index[a] for a in E) for E in fam]
        assert keys == sorted(keys) and len(set(map(tuple, keys))) == len(keys)
        assert fam == af.enumerate(af.TAGS[[cf, adm, comp, pref].index(fam)], sb)


@settings(max_examples=30, deadline=None)
@given(gen, st.data())
def test_predicates_match_enumeration(config, data):
    sb = verify.gen_sbaf(config)
    E = draw_subset(data, sb.ids)
    assert af.is_admissible(E, sb) == (E in _family("admissible", sb))
    assert af.is_complete(E, sb) == (E in _family("complete", sb))
    assert af.is_preferred(E, sb) == (E in _family("preferred", sb))
    assert (af.violation("complete", E, sb) is None) == af.is_complete(E, sb)
