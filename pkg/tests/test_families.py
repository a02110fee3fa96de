import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lplab.errors import InvalidIntervalError, InvalidParameterError, InvalidRangeError, OverlapError
from lplab.families import (Interval, IntervalFamily, cascade, custom, dyadic, format_family,
                            load_family, parse_family, unit, validate)


def pairs(fam):
    return [(iv.lo, iv.hi) for iv in fam]


def test_dyadic_examples():
    assert pairs(dyadic(0, 1)) == [(-4, -2), (-2, -1), (1, 2), (2, 4)]
    assert pairs(dyadic(0, 0)) == [(-2, -1), (1, 2)]
    assert len(dyadic(-3, 3)) == 14
    with pytest.raises(InvalidRangeError):
        dyadic(2, 1)


def test_unit_examples():
    assert pairs(unit(0, 3)) == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert len(unit(-1, 1)) == 3
    assert validate(unit(0, 6), cover=(0, 7)).covers


def test_cascade_examples():
    assert pairs(cascade(2)) == [(0, 1), (1, 1.5), (1.5, 2)]
    assert len(cascade(5)) == sum(2 ** n for n in range(5))
    rep = validate(cascade(6), cover=(0, 6))
    assert rep.disjoint and rep.covers and rep.total_measure == 6
    with pytest.raises(InvalidParameterError):
        cascade(0)


@pytest.mark.parametrize("N", [1, 3, 7])
def test_cascade_levels(N):
    fam = cascade(N)
    for n in range(N):
        level = fam.level(n)
        assert len(level) == 2 ** n
        assert all(iv.length == 2.0 ** -n for iv in level)
        assert (level[0].lo, level[-1].hi) == (n, n + 1)


def test_validate_examples():
    rep = validate(cascade(4))
    assert rep.disjoint and rep.total_measure == 4
    bad = IntervalFamily("custom", ((0, 2), (1, 3)))
    rep = validate(bad)
    assert not rep.disjoint and rep.overlap_measure == 1 and rep.overlapping_pairs == ((0, 1),)
    assert validate(unit(0, 3), cover=(0, 4)).covers
    assert not validate(unit(0, 2), cover=(0, 4)).covers
    assert not validate(IntervalFamily("custom", ((0, 1), (1.5, 4))), cover=(0, 4)).covers


@given(st.integers(-10, 10), st.integers(0, 8), st.integers(1, 9))
@settings(max_examples=30, deadline=None)
def test_generated_families_are_disjoint_and_deterministic(lo, span, N):
    for make in (lambda: dyadic(lo, lo + span), lambda: unit(lo, lo + span),
                 lambda: cascade(N)):
        fam = make()
        assert validate(fam).disjoint
        assert make().intervals == fam.intervals


def test_custom_family_must_be_disjoint():
    fam = custom([(2, 3), (0, 1)])
    assert pairs(fam) == [(0, 1), (2, 3)]
    with pytest.raises(OverlapError):
        custom([(0, 2), (1, 3)])
    with pytest.raises(InvalidIntervalError):
        Interval(1, 1)


def test_text_format_roundtrip(tmp_path):
    text = "# custom bands\n0 0.5\n0.5 1   # second\n\n3 4\n"
    fam = parse_family(text)
    assert pairs(fam) == [(0, 0.5), (0.5, 1), (3, 4)]
    path = tmp_path / "fam.txt"
    path.write_text(format_family(cascade(3)))
    assert pairs(load_family(path)) == pairs(cascade(3))
    with pytest.raises(InvalidParameterError):
        parse_family("0 1 2\n")
    with pytest.raises(OverlapError):
        parse_family("0 2\n1 3\n")
