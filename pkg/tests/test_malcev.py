import pytest

from monoidlab import (
    PatternError,
    build_finite,
    class_commutative,
    classify,
    enumerate_normal_forms,
    image,
    make_hom,
    malcev_com_fin_evidence,
    match_class_descriptors,
    orient,
    parse_descriptor,
    parse_presentation,
    parse_word,
)

K_TO_T_DESCRIPTORS = (
    "class 1: singleton 1",
    "class f: pattern (e b)^k e, k>=0",
    "class g: singleton b",
    "class f g: pattern (e b)^k, k>0",
    "class g f: pattern (b e)^k, k>0",
    "class g f g: pattern (b e)^k b, k>0",
)


def k_t_descriptors(kinf, t_monoid):
    return [
        parse_descriptor(text, kinf.generators, t_monoid.source.generators)
        for text in K_TO_T_DESCRIPTORS
    ]


class TestClassify:
    def test_k_to_t_members_at_bound_4(self, k_to_t):
        classes = {c.quotient_element.text: c for c in classify(k_to_t, 4)}
        members = {name: [w.text for w in c.members] for name, c in classes.items()}
        assert members == {
            "1": ["1"],
            "f": ["e", "e b e"],
            "g": ["b"],
            "f g": ["e b", "e b e b"],
            "g f": ["b e", "b e b e"],
            "g f g": ["b e b"],
        }
        assert classes["g"].is_idempotent is False
        assert all(c.is_idempotent for name, c in classes.items() if name != "g")

    def test_every_word_lands_in_its_image_class(self, k_to_t, kinf):
        for cls in classify(k_to_t, 8):
            for member in cls.members:
                assert image(k_to_t, member) == cls.quotient_element

    def test_partition_covers_everything_once(self, k_to_t, kinf):
        classes = classify(k_to_t, 12)
        sizes = [len(c.members) for c in classes]
        assert sizes == [1, 6, 1, 6, 6, 5]
        assert sum(sizes) == len(enumerate_normal_forms(kinf, 12))
        seen = set()
        for c in classes:
            for member in c.members:
                assert member.letters not in seen
                seen.add(member.letters)

    def test_identity_hom_gives_singletons(self, tsys, t_monoid):
        gens = tsys.generators
        hom = make_hom(
            tsys, {"f": parse_word(gens, "f"), "g": parse_word(gens, "g")}, t_monoid
        )
        classes = classify(hom, 3)
        assert all(len(c.members) == 1 for c in classes)
        assert [c.members[0] for c in classes] == list(t_monoid.elements)


class TestDescriptors:
    def test_parse_singleton(self, kinf, t_monoid):
        d = parse_descriptor("class g: singleton b", kinf.generators, t_monoid.source.generators)
        assert d.image.text == "g" and d.singleton.text == "b"
        assert [w.text for w in d.instances(kinf.generators, 5)] == ["b"]

    def test_parse_pattern_with_trailing_symbol(self, kinf, t_monoid):
        d = parse_descriptor(
            "class f: pattern (e b)^k e, k>=0", kinf.generators, t_monoid.source.generators
        )
        assert [w.text for w in d.instances(kinf.generators, 5)] == [
            "e", "e b e", "e b e b e",
        ]

    def test_parse_pattern_without_tail(self, kinf, t_monoid):
        d = parse_descriptor(
            "class f g: pattern (e b)^k, k>0", kinf.generators, t_monoid.source.generators
        )
        assert [w.text for w in d.instances(kinf.generators, 6)] == [
            "e b", "e b e b", "e b e b e b",
        ]

    def test_parse_pattern_with_leading_symbol(self, kinf, t_monoid):
        d = parse_descriptor(
            "class g f g: pattern b (e b)^k, k>0", kinf.generators, t_monoid.source.generators
        )
        assert [w.text for w in d.instances(kinf.generators, 5)] == [
            "b e b", "b e b e b",
        ]

    def test_malformed_descriptors(self, kinf, t_monoid):
        source, target = kinf.generators, t_monoid.source.generators
        bad = (
            "f: singleton e",                      # no 'class' prefix
            "class f singleton e",                 # no colon
            "class f: members (e b)^k, k>=0",      # unknown body
            "class f: pattern (e b)^k e",          # missing k-range
            "class f: pattern (e b)^k e, k>=1",    # unknown k-range
            "class f: pattern e b^k, k>0",         # shape not recognized
            "class f: pattern b (e b)^k e, k>0",   # both ends decorated
            "class f: pattern (e z)^k, k>0",       # undeclared symbol
        )
        for text in bad:
            with pytest.raises(PatternError):
                parse_descriptor(text, source, target)

    def test_paper_class_formulas_match_at_bound_12(self, kinf, t_monoid, k_to_t):
        descriptors = k_t_descriptors(kinf, t_monoid)
        assert match_class_descriptors(k_to_t, 12, descriptors)
        for d in descriptors:
            assert match_class_descriptors(k_to_t, 12, [d])

    def test_misdeclared_class_detected(self, kinf, t_monoid, k_to_t):
        wrong = parse_descriptor(
            "class f: pattern (b e)^k e, k>=0", kinf.generators, t_monoid.source.generators
        )
        assert not match_class_descriptors(k_to_t, 12, [wrong])

    def test_d_inf_kernel_of_identity_is_even_alternating_words(self, d_to_c2, dinf, c2_monoid):
        source, target = dinf.generators, c2_monoid.source.generators
        descriptors = [
            parse_descriptor("class 1: singleton 1", source, target),
            parse_descriptor("class 1: pattern (a b)^k, k>0", source, target),
            parse_descriptor("class 1: pattern (b a)^k, k>0", source, target),
        ]
        assert match_class_descriptors(d_to_c2, 10, descriptors)


class TestClassCommutative:
    def test_f_class_commutes(self, k_to_t, t_monoid):
        verdict = class_commutative(k_to_t, t_monoid.elements[1], 10)
        assert verdict.commutative and verdict.members_checked == 5

    def test_identity_class_commutes(self, k_to_t, t_monoid):
        verdict = class_commutative(k_to_t, t_monoid.elements[0], 10)
        assert verdict.commutative and verdict.members_checked == 1

    def test_non_idempotent_class_rejected(self, k_to_t, t_monoid):
        with pytest.raises(ValueError, match="not a subsemigroup"):
            class_commutative(k_to_t, t_monoid.elements[2], 10)  # g

    def test_singleton_classes_of_identity_hom(self, tsys, t_monoid):
        gens = tsys.generators
        hom = make_hom(
            tsys, {"f": parse_word(gens, "f"), "g": parse_word(gens, "g")}, t_monoid
        )
        for element in ("1", "f", "f g", "g f", "g f g"):
            verdict = class_commutative(hom, parse_word(gens, element), 6)
            assert verdict.commutative


class TestMalcevEvidence:
    def test_k_inf_onto_t_passes(self, kinf, t_monoid):
        gens = t_monoid.source.generators
        gmap = {"e": parse_word(gens, "f"), "b": parse_word(gens, "g")}
        report = malcev_com_fin_evidence(kinf, t_monoid, gmap, 10)
        assert report.status == "PASS" and report.counterexample is None
        assert len(report.verdicts) == 5
        assert all(v.commutative for v in report.verdicts)
        assert [e.text for e in report.unchecked] == ["g"]

    def test_d_inf_onto_c2_passes(self, dinf, c2_monoid):
        gens = c2_monoid.source.generators
        c = parse_word(gens, "c")
        report = malcev_com_fin_evidence(dinf, c2_monoid, {"a": c, "b": c}, 10)
        assert report.status == "PASS"
        assert len(report.verdicts) == 1 and report.verdicts[0].members_checked == 11

    def test_free_monoid_onto_trivial_fails(self):
        free = orient(parse_presentation("generators: x y\n"))
        trivial = build_finite(orient(parse_presentation("generators:\n")))
        one = parse_word(trivial.source.generators, "1")
        report = malcev_com_fin_evidence(free, trivial, {"x": one, "y": one}, 4)
        assert report.status == "FAIL"
        element, u, v = report.counterexample
        assert element.text == "1" and (u.text, v.text) == ("x", "y")
        assert free.reduce_letters(u.letters + v.letters) != free.reduce_letters(
            v.letters + u.letters
        )

    def test_pass_is_stable_as_the_bound_grows(self, kinf, t_monoid):
        gens = t_monoid.source.generators
        gmap = {"e": parse_word(gens, "f"), "b": parse_word(gens, "g")}
        for bound in (4, 8, 12):
            assert malcev_com_fin_evidence(kinf, t_monoid, gmap, bound).status == "PASS"

    def test_bad_map_propagates(self, kinf, t_monoid):
        from monoidlab import RelationViolated

        gens = t_monoid.source.generators
        gmap = {"e": parse_word(gens, "g"), "b": parse_word(gens, "g")}
        with pytest.raises(RelationViolated):
            malcev_com_fin_evidence(kinf, t_monoid, gmap, 4)
