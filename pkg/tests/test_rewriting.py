import random

import pytest

from monoidlab import (
    Alphabet,
    AlphabetMismatch,
    NotConfluent,
    Presentation,
    PresentationSyntaxError,
    RewriteRule,
    Word,
    critical_pairs,
    enumerate_normal_forms,
    is_locally_confluent,
    knuth_bendix,
    load_presentation,
    load_system,
    normal_form,
    orient,
    parse_presentation,
    parse_word,
    preset_names,
)

import oracle

PRESETS = ("j-inf", "d-inf", "k-inf", "t", "i2c3", "c2")


def nf_text(rs, text):
    return normal_form(rs, parse_word(rs.generators, text)).text


class TestParsePresentation:
    def test_k_inf_format(self):
        p = parse_presentation(
            "# comment\n"
            "generators: e b\n"
            "relation: e e = e\n"
            "\n"
            "relation: b b = 1\n"
        )
        assert p.generators.symbols == ("e", "b")
        assert [(l.text, r.text) for l, r in p.relations] == [("e e", "e"), ("b b", "1")]

    def test_free_monogenic(self):
        p = parse_presentation("generators: x\n")
        assert p.generators.symbols == ("x",)
        assert p.relations == ()

    def test_undeclared_generator_reports_line(self):
        with pytest.raises(PresentationSyntaxError, match="line 3") as err:
            parse_presentation("# hi\ngenerators: e\nrelation: e z = e\n")
        assert err.value.line == 3
        assert "'z'" in str(err.value)

    def test_duplicate_generator(self):
        with pytest.raises(PresentationSyntaxError, match="duplicate"):
            parse_presentation("generators: e e\n")

    def test_duplicate_generators_line(self):
        with pytest.raises(PresentationSyntaxError, match="duplicate generators"):
            parse_presentation("generators: e\ngenerators: f\n")

    def test_relation_before_generators(self):
        with pytest.raises(PresentationSyntaxError, match="before"):
            parse_presentation("relation: e = e\ngenerators: e\n")

    def test_relation_needs_one_equals(self):
        with pytest.raises(PresentationSyntaxError, match="'='"):
            parse_presentation("generators: e\nrelation: e e\n")
        with pytest.raises(PresentationSyntaxError, match="'='"):
            parse_presentation("generators: e\nrelation: e = e = e\n")

    def test_unknown_directive(self):
        with pytest.raises(PresentationSyntaxError, match="unrecognized"):
            parse_presentation("generators: e\nrules: e e = e\n")

    def test_missing_generators(self):
        with pytest.raises(PresentationSyntaxError, match="no generators"):
            parse_presentation("# nothing here\n")

    def test_zero_generators_is_the_trivial_monoid(self):
        p = parse_presentation("generators:\n")
        assert p.generators.symbols == ()

    def test_presets_all_parse(self):
        assert set(PRESETS) == set(preset_names())
        for name in PRESETS:
            load_presentation(name)


class TestOrient:
    def test_k_inf_rules(self, kinf):
        assert [r.text for r in kinf.rules] == ["e e -> e", "b b -> 1"]

    def test_t_rules_sorted(self, tsys):
        assert [r.text for r in tsys.rules] == ["f f -> f", "g g -> 1", "f g f -> f"]

    def test_reversed_relation_still_orients(self):
        p = parse_presentation("generators: e\nrelation: e = e e\n")
        assert [r.text for r in orient(p).rules] == ["e e -> e"]

    def test_trivial_relation_dropped_with_warning(self):
        p = parse_presentation("generators: x\nrelation: x = x\n")
        rs = orient(p)
        assert rs.rules == ()
        assert len(rs.warnings) == 1 and "trivial" in rs.warnings[0]

    def test_rule_must_decrease(self):
        a = Alphabet(("x", "y"))
        with pytest.raises(ValueError):
            RewriteRule(parse_word(a, "x"), parse_word(a, "y x"))
        with pytest.raises(ValueError):
            RewriteRule(parse_word(a, "1"), parse_word(a, "1"))


class TestNormalForm:
    def test_k_inf_examples(self, kinf):
        assert nf_text(kinf, "e e") == "e"
        assert nf_text(kinf, "b b") == "1"
        assert nf_text(kinf, "e b b e") == "e"

    def test_d_inf_example(self, dinf):
        # frozen from the exhaustive-rewriting oracle below
        assert nf_text(dinf, "a b a b a a b a b a b a b") == "b a b"

    def test_alphabet_guard(self, kinf, dinf):
        with pytest.raises(AlphabetMismatch):
            normal_form(kinf, parse_word(dinf.generators, "a"))

    @pytest.mark.parametrize("name", PRESETS)
    def test_agrees_with_exhaustive_rewriting(self, name):
        rs = load_system(name)
        rules = oracle.rules_of(rs)
        for letters in oracle.all_letter_tuples(len(rs.generators), 8):
            endpoints = oracle.exhaustive_irreducibles(rules, letters)
            assert len(endpoints) == 1  # semantic confluence
            assert rs.reduce_letters(letters) == next(iter(endpoints))

    @pytest.mark.parametrize("name", PRESETS)
    def test_strategy_invariance(self, name):
        rs = load_system(name)
        rules = oracle.rules_of(rs)
        rng = random.Random(20817)
        for letters in oracle.all_letter_tuples(len(rs.generators), 8):
            leftmost = rs.reduce_letters(letters)
            assert oracle.reduce_rightmost(rules, letters) == leftmost
            assert oracle.reduce_random(rules, letters, rng) == leftmost

    @pytest.mark.parametrize("name", PRESETS)
    def test_relations_collapse(self, name):
        rs = load_system(name)
        for lhs, rhs in rs.presentation.relations:
            assert rs.reduce_letters(lhs.letters) == rs.reduce_letters(rhs.letters)


class TestCriticalPairs:
    def test_k_inf_self_overlaps(self, kinf):
        pairs = critical_pairs(kinf)
        assert sorted(cp.peak.text for cp in pairs) == ["b b b", "e e e"]
        assert all(cp.resolved for cp in pairs)

    def test_t_all_resolved(self, tsys):
        pairs = critical_pairs(tsys)
        assert pairs and all(cp.resolved for cp in pairs)

    def test_empty_rule_set(self):
        rs = orient(parse_presentation("generators: x\n"))
        assert critical_pairs(rs) == []

    def test_ambiguous_pair_detected(self):
        p = parse_presentation("generators: a b\nrelation: a b = a\nrelation: a b = b\n")
        rs = orient(p)
        ok, bad = is_locally_confluent(rs)
        assert not ok
        assert bad.peak.text == "a b"
        assert {bad.left.text, bad.right.text} == {"a", "b"}

    @pytest.mark.parametrize("name", PRESETS)
    def test_presets_locally_confluent(self, name):
        ok, bad = is_locally_confluent(load_system(name))
        assert ok and bad is None

    @pytest.mark.parametrize("name", PRESETS)
    def test_one_step_descendants_join(self, name):
        # semantic counterpart of the critical-pair criterion
        rs = load_system(name)
        rules = oracle.rules_of(rs)
        for letters in oracle.all_letter_tuples(len(rs.generators), 6):
            forms = {rs.reduce_letters(d) for d in oracle.one_step_rewrites(rules, letters)}
            assert len(forms) <= 1


class TestEnumerate:
    def test_k_inf_up_to_3(self, kinf):
        got = [w.text for w in enumerate_normal_forms(kinf, 3)]
        assert got == ["1", "e", "b", "e b", "b e", "e b e", "b e b"]
        assert len(got) == 7

    @pytest.mark.parametrize("name", PRESETS)
    def test_matches_bruteforce_filter(self, name):
        rs = load_system(name)
        rules = oracle.rules_of(rs)
        expected = sorted(
            (t for t in oracle.all_letter_tuples(len(rs.generators), 5)
             if oracle.is_irreducible(rules, t)),
            key=lambda t: (len(t), t),
        )
        assert [w.letters for w in enumerate_normal_forms(rs, 5)] == expected

    def test_max_len_zero(self, kinf):
        assert [w.text for w in enumerate_normal_forms(kinf, 0)] == ["1"]

    def test_d_inf_count_up_to_5(self, dinf):
        assert len(enumerate_normal_forms(dinf, 5)) == 11

    def test_alternating_counts_up_to_16(self):
        for name in ("j-inf", "d-inf", "k-inf"):
            words = enumerate_normal_forms(load_system(name), 16)
            by_len = {}
            for w in words:
                by_len[len(w)] = by_len.get(len(w), 0) + 1
            assert by_len[0] == 1
            assert all(by_len[n] == 2 for n in range(1, 17))

    def test_non_confluent_rejected(self):
        p = parse_presentation("generators: a b\nrelation: a b = a\nrelation: a b = b\n")
        with pytest.raises(NotConfluent):
            enumerate_normal_forms(orient(p), 3)


class TestKnuthBendix:
    def test_presets_already_complete(self):
        for name, n_rules in (("k-inf", 2), ("t", 3), ("d-inf", 2), ("i2c3", 2)):
            result = knuth_bendix(load_presentation(name))
            assert result.complete
            assert len(result.system.rules) == n_rules

    def test_free_monogenic_complete_empty(self):
        result = knuth_bendix(parse_presentation("generators: x\n"))
        assert result.complete and result.system.rules == ()

    def test_completion_adds_rules_and_solves_word_problem(self):
        p = parse_presentation(
            "generators: x y\n"
            "relation: x x x = 1\n"
            "relation: y y y = 1\n"
            "relation: x y x y x y = 1\n"
        )
        result = knuth_bendix(p)
        assert result.complete
        rs = result.system
        assert len(rs.rules) > 3  # genuinely derived consequences
        ok, _ = is_locally_confluent(rs)
        assert ok
        for lhs, rhs in p.relations:
            assert rs.reduce_letters(lhs.letters) == rs.reduce_letters(rhs.letters)
        # multiplying by a relator never changes the represented element
        rng = random.Random(5)
        relator = (0, 0, 0)
        for _ in range(50):
            word = tuple(rng.randrange(2) for _ in range(rng.randrange(9)))
            assert rs.reduce_letters(word + relator) == rs.reduce_letters(word)

    def test_rule_budget_gives_partial(self):
        p = parse_presentation(
            "generators: x y\n"
            "relation: x x x = 1\n"
            "relation: y y y = 1\n"
            "relation: x y x y x y = 1\n"
        )
        result = knuth_bendix(p, max_rules=3)
        assert not result.complete
        assert any("budget" in note for note in result.notes)

    def test_iteration_budget_gives_partial(self):
        p = parse_presentation(
            "generators: x y\n"
            "relation: x x x = 1\n"
            "relation: y y y = 1\n"
            "relation: x y x y x y = 1\n"
        )
        result = knuth_bendix(p, max_iterations=0)
        assert not result.complete

    def test_trivial_relations_noted(self):
        result = knuth_bendix(parse_presentation("generators: x\nrelation: x = x\n"))
        assert result.complete and result.system.rules == ()
        assert any("trivial" in n for n in result.notes)


def test_presentation_type_checks():
    eb = Alphabet(("e", "b"))
    with pytest.raises(ValueError, match="generator alphabet"):
        Presentation(Alphabet(("x",), "variables"), ())
    other = Alphabet(("x",))
    with pytest.raises(ValueError, match="declared generators"):
        Presentation(eb, ((Word(other, (0,)), Word(other)),))
