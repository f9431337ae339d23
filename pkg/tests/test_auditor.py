import pytest

from curvebracket.auditor import (
    ANTI_PRESERVING,
    PRESERVING,
    VIOLATING,
    ExcludedSurfaceError,
    SurfaceMap,
    apply_map,
    apply_map_element,
    audit_bracket,
    audit_intersection,
    enumerate_classes,
    fill_check,
    parse_map_file,
)
from curvebracket.goldman import BracketElement, bracket_classes
from curvebracket.linking import linked_pairs
from curvebracket.words import parse_word, primitive_root

from conftest import cls


def W(text):
    return parse_word(text)


@pytest.fixture
def identity_to_pants(torus, pants):
    return SurfaceMap(torus, pants, (W("a"), W("b")), expect_equivalence=True)


@pytest.fixture
def twist_ab(torus):
    return SurfaceMap(torus, torus, (W("ab"), W("b")))


@pytest.fixture
def twist_ba(torus):
    return SurfaceMap(torus, torus, (W("a"), W("ba")))


@pytest.fixture
def swap(torus):
    return SurfaceMap(torus, torus, (W("b"), W("a")))


@pytest.fixture
def joint_inverse(torus):
    return SurfaceMap(torus, torus, (W("A"), W("B")))


def test_apply_map_examples(torus):
    ident = SurfaceMap(torus, torus, (W("a"), W("b")))
    assert apply_map(ident, cls("aBab")) == cls("aBab")
    m = SurfaceMap(torus, torus, (W("ab"), W("b")))
    assert apply_map(m, cls("a")) == cls("ab")
    assert apply_map(m, cls("aB")) == cls("a")
    elem = BracketElement.of(cls("a"), 2) + BracketElement.of(cls("aB"), 1)
    image = apply_map_element(m, elem)
    assert image.coefficient(cls("ab")) == 2
    assert image.coefficient(cls("a")) == 1


def test_apply_map_collects_colliding_terms(torus):
    collapse = SurfaceMap(torus, torus, (W("a"), W("a")))
    elem = BracketElement.of(cls("a"), 1) + BracketElement.of(cls("b"), 1)
    assert apply_map_element(collapse, elem) == BracketElement.of(cls("a"), 2)


def test_map_validation(torus, pants):
    with pytest.raises(ValueError):
        SurfaceMap(torus, pants, (W("a"),))
    with pytest.raises(ValueError):
        SurfaceMap(torus, pants, (W("c"), W("b")))


def test_flagship_counterexample_bracket(identity_to_pants):
    report = audit_bracket(identity_to_pants, 2)
    assert report.verdict == VIOLATING
    cert = report.certificates[0]
    assert (cert.x, cert.y) == (cls("a"), cls("b"))
    assert cert.pushed == BracketElement.of(cls("ab"))
    assert cert.direct.is_zero


def test_flagship_counterexample_intersection(identity_to_pants):
    report = audit_intersection(identity_to_pants, 2, "zero_pattern")
    assert report.verdict == VIOLATING
    cert = report.certificates[0]
    assert (cert.x, cert.y) == (cls("a"), cls("b"))
    assert (cert.pushed, cert.direct) == (1, 0)


def test_excluded_target_rejected(torus, annulus):
    m = SurfaceMap(torus, annulus, (W("a"), W("a")))
    with pytest.raises(ExcludedSurfaceError):
        audit_bracket(m, 2)
    with pytest.raises(ExcludedSurfaceError):
        audit_intersection(m, 2)


def test_twists_preserve(twist_ab, twist_ba):
    for m in (twist_ab, twist_ba):
        assert audit_bracket(m, 4).verdict == PRESERVING
        assert audit_intersection(m, 4, "exact").verdict == PRESERVING


def test_swap_anti_preserves(swap):
    assert audit_bracket(swap, 4).verdict == ANTI_PRESERVING
    assert audit_intersection(swap, 4, "zero_pattern").verdict == PRESERVING


def test_homeomorphism_soundness_corpus(twist_ab, twist_ba, swap, joint_inverse):
    for m in (twist_ab, twist_ba, swap, joint_inverse):
        verdict = audit_bracket(m, 4).verdict
        assert verdict in (PRESERVING, ANTI_PRESERVING)


def test_bracket_preserving_implies_zero_pattern(twist_ab, twist_ba, joint_inverse, torus):
    ident = SurfaceMap(torus, torus, (W("a"), W("b")))
    for m in (twist_ab, twist_ba, joint_inverse, ident):
        if audit_bracket(m, 3).verdict == PRESERVING:
            assert audit_intersection(m, 3, "zero_pattern").verdict == PRESERVING


def test_violating_is_monotone_in_bound(identity_to_pants):
    for bound in (2, 3):
        assert audit_bracket(identity_to_pants, bound).verdict == VIOLATING
        assert (
            audit_intersection(identity_to_pants, bound, "zero_pattern").verdict
            == VIOLATING
        )


def test_identity_map_preserves_everything(torus, pants):
    for s in (torus, pants):
        ident = SurfaceMap(s, s, tuple(W(chr(ord("a") + k)) for k in range(s.rank)))
        assert audit_bracket(ident, 3).verdict == PRESERVING
        for mode in ("zero_pattern", "exact"):
            assert audit_intersection(ident, 3, mode).verdict == PRESERVING


def test_certificates_reverify(identity_to_pants):
    m = identity_to_pants
    report = audit_bracket(m, 2)
    for cert in report.certificates:
        pushed = apply_map_element(m, bracket_classes(m.source, cert.x, cert.y))
        direct = bracket_classes(m.target, apply_map(m, cert.x), apply_map(m, cert.y))
        assert pushed == cert.pushed
        assert direct == cert.direct
    report = audit_intersection(m, 2, "zero_pattern")
    for cert in report.certificates:
        assert cert.pushed == len(linked_pairs(m.source, cert.x, cert.y))
        fx, fy = apply_map(m, cert.x), apply_map(m, cert.y)
        assert cert.direct == len(linked_pairs(m.target, fx, fy))


def test_random_sampling_deterministic(identity_to_pants):
    a = audit_bracket(identity_to_pants, 3, sample=(40, 9))
    b = audit_bracket(identity_to_pants, 3, sample=(40, 9))
    assert a == b
    c = audit_bracket(identity_to_pants, 3, sample=(40, 10))
    assert c.sample_description != a.sample_description


def test_enumerate_classes(torus, pants):
    assert [str(c) for c in enumerate_classes(torus, 1)] == ["a", "A", "b", "B"]
    assert [str(c) for c in enumerate_classes(torus, 1, "simple")] == ["a", "A", "b", "B"]
    nonperiph = enumerate_classes(pants, 2, "nonperipheral")
    assert {str(c) for c in nonperiph} == {"aB", "Ab"}
    for text in ("a", "b", "A", "B", "ab", "AB"):
        assert cls(text) not in nonperiph


def test_fill_checks(torus, pants):
    assert fill_check(torus, [cls("a"), cls("b")], 6).passed
    report = fill_check(torus, [cls("a")], 4)
    assert not report.passed
    root, mult = primitive_root(report.counterexample)
    assert root == cls("a") and mult >= 1
    assert linked_pairs(torus, report.counterexample, cls("a")) == ()
    assert fill_check(pants, [cls("aB")], 6).passed


def test_fill_generator_systems(torus, pants, genus1b2):
    # the two core curves fill the punctured torus, but generator systems
    # containing only boundary-parallel circles (pants) or missing the
    # separating curve of the handle (genus 1, two boundary circles)
    # cannot fill; the counterexamples are the expected ones
    assert fill_check(torus, [cls("a"), cls("b")], 6).passed
    report = fill_check(pants, [cls("a"), cls("b")], 6)
    assert not report.passed and report.counterexample == cls("aB")
    report = fill_check(genus1b2, [cls("a"), cls("b"), cls("c")], 6)
    assert not report.passed and report.counterexample == cls("abAB")
    assert fill_check(pants, [cls("aB"), cls("a"), cls("b")], 6).passed


def test_map_file_round_trip(tmp_path, torus, pants):
    (tmp_path / "torus.srf").write_text("rank 2\norder a b A B\n")
    (tmp_path / "pants.srf").write_text("rank 2\norder a A b B\n")
    text = "source torus.srf\ntarget pants.srf\nexpect_equivalence\nmap a -> a\nmap b -> b\n"
    m = parse_map_file(text, tmp_path)
    assert m.source == torus
    assert m.target == pants
    assert m.images == (W("a"), W("b"))
    assert m.expect_equivalence


def test_map_file_errors(tmp_path):
    (tmp_path / "t.srf").write_text("rank 2\norder a b A B\n")
    with pytest.raises(Exception):
        parse_map_file("source t.srf\nmap a -> a\n", tmp_path)  # no target
    with pytest.raises(Exception):
        parse_map_file(
            "source t.srf\ntarget t.srf\nmap a -> a\n", tmp_path
        )  # missing image for b
