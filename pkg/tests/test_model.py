import pytest
from hypothesis import given, settings, strategies as st

from sbaf import verify
from sbaf.errors import DomainError, SBAFError, UnknownIdError
from sbaf.model import (Argument, Language, SBAF, attacks, is_saturated, is_strongly_saturated,
                        add_minimal_arguments, make_sbaf, minimal_sentences, sent,
                        strong_saturation_sentences, strongly_saturate, supports, undercut_info)

from conftest import draw_subset


def test_sent_of_two_arguments(fx):
    assert sent({"a2", "a3"}, fx["F1"]) == {"u", "v", "w", "x"}
    assert sent({"a1"}, fx["F0"]) == {"Ale", "Str"}
    assert sent(set(), fx["F1"]) == frozenset()


def test_sent_unknown_id(fx):
    with pytest.raises(UnknownIdError):
        sent({"a9"}, fx["F1"])
    with pytest.raises(KeyError):
        sent({"a9"}, fx["F1"])


def test_attacks_rebut_and_undercut(fx):
    F1 = fx["F1"]
    assert attacks("a5", "a6", F1)      # r clashes with a6's name
    assert attacks("a6", "a7", F1)      # z clashes with premise p
    assert not attacks("a1", "a2", F1)


def test_f1_attack_relation_exhaustive(fx):
    assert fx["F1"].attack == {("a4", "a5"), ("a5", "a4"), ("a5", "a6"), ("a6", "a7")}


def test_supports(fx):
    F1 = fx["F1"]
    assert supports({"a2", "a3"}, "a5", F1)
    assert not supports({"a2"}, "a5", F1)
    assert supports({"a1"}, "a4", F1)
    assert not any(supports(set(), a, F1) for a in F1.ids)


def test_undercut_info(fx):
    F1 = fx["F1"]
    assert undercut_info({"a5"}, "a6", F1)
    assert not undercut_info(set(), "a6", F1)
    assert not undercut_info({"a1", "a2", "a3", "a4"}, "a6", F1)
    assert not undercut_info({"a5"}, "a5", F1)   # unnamed: never undercut


def test_saturation_flags(fx):
    F1 = fx["F1"]
    assert (is_saturated(F1), is_strongly_saturated(F1)) == (False, False)
    half = add_minimal_arguments(F1, ["r", "z"])
    assert (is_saturated(half), is_strongly_saturated(half)) == (True, False)
    plain = make_sbaf([("a1", {"s"}, "t"), ("a2", {"t"}, "u")])
    assert (is_saturated(plain), is_strongly_saturated(plain)) == (True, True)


def test_strongly_saturate_f1_adds_t_r_z_p(fx):
    F1 = fx["F1"]
    sat = strongly_saturate(F1)
    added = {a.conclusion for a in sat.arguments if a.id not in F1}
    assert added == {"t", "r", "z", "p"}
    assert all(a.is_minimal and sat.language.name_of(a.id) is None for a in sat.arguments if a.id not in F1)
    assert is_strongly_saturated(sat)
    assert strongly_saturate(sat) == sat


def test_strongly_saturate_f0_adds_ann_hil(fx):
    sat = strongly_saturate(fx["F0"])
    assert {a.conclusion for a in sat.arguments if a.id not in fx["F0"]} == {"Ann", "Hil"}


def test_strong_saturation_sentences_empty_when_saturated(fx):
    assert strong_saturation_sentences(strongly_saturate(fx["F1"])) == []
    assert set(strong_saturation_sentences(fx["F1"])) == {"t", "r", "z", "p"}


def test_minimal_sentences(fx):
    assert minimal_sentences(fx["F1"]) == {"s"}


def test_language_symmetry_enforced():
    lang = Language({"a", "b", "c"}, [("a", "b")])
    assert lang.incompatible("b") == {"a"}
    assert lang.incompatible("c") == frozenset()
    lang = Language({"a", "b"}, {"a": {"b"}})
    assert "a" in lang.incompatible("b")


def test_language_rejects_undeclared_and_empty():
    with pytest.raises(DomainError):
        Language({"a"}, [("a", "z")])
    with pytest.raises(SBAFError):
        Language(set())


def test_argument_needs_premises():
    with pytest.raises(SBAFError):
        Argument("a", frozenset(), "c")
    assert str(Argument("a1", frozenset({"t", "s"}), "c")) == "a1: {s, t} -> c"


def test_named_minimal_argument_with_incompatible_name_rejected():
    lang = Language({"s", "n", "t"}, [("n", "t")], {"a1": "n"})
    with pytest.raises(SBAFError):
        SBAF(lang, [Argument("a1", frozenset({"s"}), "s")])


def test_shared_names_allowed():
    sb = make_sbaf([("a1", {"s"}, "t"), ("a2", {"u"}, "v"), ("a3", {"w"}, "x")],
                   [("n", "x")], names={"a1": "n", "a2": "n"})
    assert attacks("a3", "a1", sb) and attacks("a3", "a2", sb)


def test_self_attack_permitted():
    sb = make_sbaf([("a1", {"s"}, "t")], [("s", "t")])
    assert attacks("a1", "a1", sb)


def test_duplicate_ids_rejected():
    with pytest.raises(SBAFError):
        make_sbaf([("a1", {"s"}, "t"), ("a1", {"u"}, "v")])


def test_sentence_mask_rejects_outside_universe(fx):
    with pytest.raises(DomainError):
        fx["F1"].sentence_mask({"n6"})   # declared, but not used by any argument


def test_name_sentence_not_in_universe(fx):
    assert "n6" in fx["F1"].language.sentences
    assert "n6" not in fx["F1"].universe


configs = st.builds(verify.GenConfig, seed=st.integers(0, 10**6), density=st.floats(0, 0.5),
                    naming=st.floats(0, 1), max_args=st.integers(2, 8))


@settings(max_examples=60, deadline=None)
@given(configs)
def test_attack_rederivable_and_symmetric(config):
    sb = verify.gen_sbaf(config)
    assert verify.well_formed(sb) == []


@settings(max_examples=60, deadline=None)
@given(configs, st.data())
def test_support_monotone(config, data):
    sb = verify.gen_sbaf(config)
    E = draw_subset(data, sb.ids)
    F = E | draw_subset(data, sb.ids)
    for a in sb.ids:
        assert not supports(E, a, sb) or supports(F, a, sb)


@settings(max_examples=60, deadline=None)
@given(configs)
def test_saturation_idempotent_and_implies_weak(config):
    sb = verify.gen_sbaf(config)
    sat = strongly_saturate(sb)
    assert strongly_saturate(sat) == sat
    assert is_strongly_saturated(sat) and is_saturated(sat)
    for a in sat.arguments:
        if a.id not in sb:
            assert a.is_minimal and not sat.language.undercutters(a.id)
