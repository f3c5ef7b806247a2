"""Milnor numbers: the standard-basis engine, the truncation oracle, and
the closed form for germs with a nondegenerate leading form."""

import pytest

from germinv.errors import InputError
from germinv.milnor import (
    METHOD_FAST,
    METHOD_ORACLE,
    METHOD_STANDARD_BASIS,
    is_critical_point,
    is_isolated,
    is_semihomogeneous,
    local_milnor_at,
    milnor_number,
    milnor_oracle,
    milnor_semihomogeneous,
    milnor_with_method,
    oracle_dmax_for,
    truncated_dim_oracle,
)
from germinv.poly import fermat, parse_poly

XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, names=XY):
    return parse_poly(text, names)


KNOWN = [
    ("x^2 + y^2", XY, 1),
    ("x^2 + y^3", XY, 2),
    ("x^2 + y^5", XY, 4),
    ("x^3 + y^3", XY, 4),
    ("x^2*y + y^4", XY, 5),
    ("x^2*y + y^5", XY, 6),
    ("x^3 + y^4", XY, 6),
    ("x^3 + x*y^3", XY, 7),
    ("x^3 + y^5", XY, 8),
    ("x^4 + y^5", XY, 12),
    ("x^5 + y^5 + x^2*y^2", XY, 11),
    ("x^5 + y^6 + x^2*y^2", XY, 12),
    ("x^2 + y^2 + z^3", XYZ, 2),
    ("x^3 + y^3 + z^4", XYZ, 12),
]


@pytest.mark.parametrize("text,names,mu", KNOWN)
def test_known_milnor_numbers(text, names, mu):
    f = parse_poly(text, names)
    result = milnor_number(f)
    assert result.mu == mu
    assert result.method == METHOD_STANDARD_BASIS
    assert result.isolated


@pytest.mark.parametrize("text,names,mu", KNOWN)
def test_oracle_agrees(text, names, mu):
    f = parse_poly(text, names)
    assert milnor_oracle(f, dmax=oracle_dmax_for(mu)) == mu


def test_regular_germ_has_mu_zero():
    result = milnor_number(P("x + y^5"))
    assert result.mu == 0
    assert result.isolated
    assert is_isolated(P("x + y^5"))


def test_non_isolated_germ():
    for text in ("x^2*y^2", "x^2"):
        result = milnor_number(P(text))
        assert result.mu is None
        assert not result.isolated
        assert not is_isolated(P(text))
    cylinder = parse_poly("x^2 + y^2", XYZ)
    assert milnor_number(cylinder).mu is None


def test_rejects_nonvanishing_or_zero_germs():
    with pytest.raises(InputError):
        milnor_number(P("1 + x"))
    with pytest.raises(InputError):
        milnor_number(P("0"))


def test_staircase_comes_back_with_the_engine():
    result = milnor_number(P("x^2 + y^3"))
    assert result.staircase == frozenset({(0, 0), (0, 1)})


def test_coordinate_invariance_under_linear_changes():
    # unimodular integer matrices, exact arithmetic keeps this strict
    changes = [
        ((1, 1), (0, 1)),
        ((1, 0), (2, 1)),
        ((2, 1), (1, 1)),
        ((1, -1), (1, 1)),
    ]
    for text, names, mu in KNOWN[:6]:
        f = parse_poly(text, names)
        for matrix in changes:
            assert milnor_number(f.linear_change(matrix)).mu == mu


def test_semihomogeneous_predicate():
    assert is_semihomogeneous(P("x^3 + y^3"))
    assert is_semihomogeneous(P("x^3 + y^3 + x^4"))
    assert is_semihomogeneous(P("x^2*y + y^3"))  # three distinct lines
    assert not is_semihomogeneous(P("x^2*y + y^4"))
    assert not is_semihomogeneous(P("x^2 + y^3"))  # parabola: square line
    with pytest.raises(InputError):
        is_semihomogeneous(P("x + y^2"))  # order 1 is outside the domain


def test_closed_form_matches_engine():
    for text, names in (
        ("x^3 + y^3 + x^4", XY),
        ("x^3 + 2*y^3 + x^2*y^2", XY),
        ("x^4 + x^2*y^2 + y^4 + y^5", XY),
        ("x^3 + y^3 + z^3 + z^4", XYZ),
    ):
        f = parse_poly(text, names)
        n = len(names)
        l = f.order()
        assert milnor_semihomogeneous(f) == (l - 1) ** n
        assert milnor_number(f).mu == (l - 1) ** n


def test_closed_form_refuses_degenerate_leading_forms():
    with pytest.raises(InputError):
        milnor_semihomogeneous(P("x^2*y + y^4"))


def test_degenerate_germs_exceed_the_closed_form():
    # strict inequality against (order - 1)^n characterises degeneracy
    for text, mu in (("x^2*y + y^4", 5), ("x^2 + y^3", 2), ("x^5 + y^5 + x^2*y^2", 11)):
        f = P(text)
        assert not is_semihomogeneous(f)
        assert milnor_number(f).mu == mu
        assert mu > (f.order() - 1) ** 2


def test_method_dispatch():
    f = P("x^3 + y^3 + x^4")
    assert milnor_with_method(f, METHOD_STANDARD_BASIS).mu == 4
    assert milnor_with_method(f, METHOD_ORACLE).mu == 4
    fast = milnor_with_method(f, METHOD_FAST)
    assert fast.mu == 4 and fast.method == METHOD_FAST
    with pytest.raises(InputError):
        milnor_with_method(f, "bogus")
    with pytest.raises(InputError):
        milnor_with_method(P("x^2*y + y^4"), METHOD_FAST)


def test_oracle_returns_none_when_unstable():
    f = P("x^2*y^2")
    assert milnor_oracle(f, dmax=12) is None
    assert truncated_dim_oracle(f.jacobian(), dmax=12) is None
    # too-small horizon on an isolated germ is also reported as unknown
    assert milnor_oracle(P("x^4 + y^5"), dmax=3) is None


def test_fermat_grid_small():
    for l in (2, 3, 4):
        for n in (2, 3):
            f = fermat(l, n)
            assert milnor_number(f).mu == (l - 1) ** n


def test_is_critical_point():
    f = P("x^3 + y^3 - 3*x - 3*y")
    assert is_critical_point(f, (1, 1))
    assert is_critical_point(f, (-1, 1))
    assert not is_critical_point(f, (0, 0))


def test_local_milnor_at_nondegenerate_points():
    f = P("x^3 + y^3 - 3*x - 3*y")
    for point in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        assert local_milnor_at(f, point).mu == 1
    assert sum(local_milnor_at(f, p).mu for p in
               ((1, 1), (1, -1), (-1, 1), (-1, -1))) == 4


def test_local_milnor_in_one_variable():
    f = parse_poly("x^3 - 3*x", ("x",))
    assert local_milnor_at(f, (-1,)).mu == 1
    assert local_milnor_at(f, (1,)).mu == 1


def test_local_milnor_rejects_noncritical_points():
    f = P("x^3 + y^3 - 3*x - 3*y")
    with pytest.raises(InputError):
        local_milnor_at(f, (0, 1))


def test_gaussian_coefficients():
    f = P("x^2 + i*y^2")
    result = milnor_number(f)
    assert result.mu == 1
    assert is_semihomogeneous(f)
