import pytest
from hypothesis import given, settings, strategies as st

from sbaf import coherence, fixtures, verify
from sbaf.bipolar import (BAF, baf_from_sbaf, complex_attacks, d_violation, enumerate_d,
                          is_d_admissible, is_d_complete, is_d_preferred, mediated_attack,
                          supported_attack)
from sbaf.errors import ConfigError, UnknownIdError
from sbaf.model import make_sbaf

from conftest import draw_subset, fs

pytestmark = pytest.mark.usefixtures("backend")


@pytest.fixture
def b1():
    return fixtures.b1()


def test_supported_and_mediated(b1):
    assert mediated_attack("a1", "a3", b1)
    assert supported_attack("a3", "a4", b1)
    assert not supported_attack("a1", "a3", b1)
    plain = BAF(b1.arguments, b1.attack)
    assert not any(supported_attack(a, b, plain) or mediated_attack(a, b, plain)
                   for a in plain.arguments for b in plain.arguments)


def test_complex_attacks_b1(b1):
    assert complex_attacks(b1) - b1.attack == {("a1", "a3"), ("a3", "a4")}
    assert complex_attacks(BAF(b1.arguments, b1.attack)) == b1.attack


def test_complex_attacks_chain():
    baf = BAF(("a", "b", "c", "d"), {("c", "d")}, {("a", "b"), ("b", "c")})
    assert complex_attacks(baf) == {("c", "d"), ("b", "d"), ("a", "d")}


def test_d_semantics_b1(b1):
    assert fs(*enumerate_d("d-admissible", b1)) == fs(set(), {"a5"}, {"a2", "a5"}, {"a2", "a3", "a5"})
    assert enumerate_d("d-complete", b1) == [{"a2", "a3", "a5"}]
    assert enumerate_d("d-preferred", b1) == [{"a2", "a3", "a5"}]
    assert not is_d_admissible({"a3", "a5"}, b1)
    assert d_violation("d-admissible", {"a3", "a5"}, b1) == "not closed under support: a3 supports a2, which is missing"
    assert is_d_complete({"a2", "a3", "a5"}, b1) and is_d_preferred({"a2", "a3", "a5"}, b1)


def test_baf_from_sbaf_rules(fx):
    assert baf_from_sbaf(fx["F0"]).support == {("a1", "a2"), ("a3", "a4")}
    assert baf_from_sbaf(fx["F0"], "singleton").support == {("a1", "a2"), ("a3", "a4")}
    assert baf_from_sbaf(fx["F4"]).support == frozenset()
    assert baf_from_sbaf(fx["F4"], "singleton").support == {("a1", "a2"), ("a2", "a1")}
    # the two-way support between a1 and a4 drawn for F1 only appears under singleton
    assert {("a1", "a4"), ("a4", "a1")} <= baf_from_sbaf(fx["F1"], "singleton").support
    with pytest.raises(ConfigError):
        baf_from_sbaf(fx["F0"], "necessary")


def test_f4_conclusion_rule(fx):
    baf = baf_from_sbaf(fx["F4"])
    assert is_d_admissible({"a1"}, baf)
    assert not coherence.is_strongly_coherent({"a1"}, fx["F4"])
    assert not is_d_admissible({"a1"}, baf_from_sbaf(fx["F4"], "singleton"))


def test_no_shared_sentences_no_support():
    sb = make_sbaf([("a1", {"s"}, "t"), ("a2", {"u"}, "v")])
    assert baf_from_sbaf(sb).support == baf_from_sbaf(sb, "singleton").support == frozenset()


def test_baf_validation():
    with pytest.raises(UnknownIdError):
        BAF(("a",), {("a", "b")})
    with pytest.raises(ConfigError):
        enumerate_d("d-stable", fixtures.b1())


def test_d_admissible_not_implied_by_strong_coherence_converse():
    # unique single premises and no undercuts, yet a2 only survives a5
    # through the mediated attack a2 -> a5 (a5 supports a1, a2 attacks a1)
    sb = make_sbaf([("a1", {"s8"}, "s6"), ("a2", {"s4"}, "s7"), ("a5", {"s1"}, "s8")],
                   [("s4", "s8"), ("s6", "s7")])
    assert verify.prop12_hypotheses(sb) == (True, True)
    baf = baf_from_sbaf(sb)
    assert ("a2", "a5") in baf.complex_attack and ("a2", "a5") not in sb.attack
    assert is_d_admissible({"a2"}, baf)
    assert not coherence.is_strongly_coherent({"a2"}, sb)


bafs = st.builds(verify.GenConfig, seed=st.integers(0, 10**6), min_args=st.just(0), max_args=st.integers(0, 7))


@settings(max_examples=40, deadline=None)
@given(bafs, st.floats(0, 0.5), st.floats(0, 0.5))
def test_complex_attacks_match_chain_oracle(config, pa, ps):
    baf = verify.gen_baf(config, pa, ps)
    co = complex_attacks(baf)
    assert co == verify.oracle_complex_attacks(baf)
    again = BAF(baf.arguments, co, baf.support)
    assert complex_attacks(again) == co


def _af_over(baf, relation):
    return lambda E: (not any((a, b) in relation for a in E for b in E)
                      and all(any((c, b) in relation for c in E) for (b, t) in relation if t in E))


@settings(max_examples=40, deadline=None)
@given(bafs, st.floats(0, 0.5), st.floats(0, 0.5))
def test_d_semantics_match_brute_force(config, pa, ps):
    baf = verify.gen_baf(config, pa, ps)
    co = verify.oracle_complex_attacks(baf)
    adm = {E for E in verify.subsets(baf.arguments) if _af_over(baf, co)(E)}
    closed = {E for E in adm if all(b in E for a, b in baf.support if a in E)}
    assert fs(*enumerate_d("d-admissible", baf)) == closed
    assert fs(*enumerate_d("d-preferred", baf)) == verify.oracle_maximal(adm)


@settings(max_examples=30, deadline=None)
@given(bafs, st.floats(0, 0.5), st.floats(0, 0.5), st.data())
def test_d_violation_agrees_with_predicates(config, pa, ps, data):
    baf = verify.gen_baf(config, pa, ps)
    E = draw_subset(data, baf.arguments)
    assert (d_violation("d-admissible", E, baf) is None) == is_d_admissible(E, baf)
    assert (d_violation("d-complete", E, baf) is None) == is_d_complete(E, baf)
    assert (d_violation("d-preferred", E, baf) is None) == is_d_preferred(E, baf)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_rules_agree_under_unique_single_premises(seed):
    sb = verify.gen_sbaf(verify.GenConfig(seed=seed, shape="unique-premise", max_args=8))
    assert baf_from_sbaf(sb).support == baf_from_sbaf(sb, "singleton").support
