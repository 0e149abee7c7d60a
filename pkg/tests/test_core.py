import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ma2ident.core import (
    AcfTriple,
    BoundaryKind,
    Invertibility,
    Ma2Params,
    acf_from_params,
    anderson_lhs,
    boundary_tag,
    invertibility,
    params_from_acf_and_sigma2,
    roots_of_M,
    spectral_minimum,
)
from ma2ident.errors import CandidateInadmissible, DegenerateTheta2, DomainError

thetas = st.floats(-4, 4, allow_nan=False).filter(lambda t: abs(t) > 1e-3)
sigma2s = st.floats(1e-2, 1e2)


def params():
    return st.builds(Ma2Params, st.floats(-4, 4), thetas, sigma2s)


def close_rel(x, y, rtol):
    return abs(x - y) <= rtol * max(abs(x), abs(y), 1e-300)


class TestAcfFromParams:
    @pytest.mark.parametrize("theta, expected", [
        ((0.5, 0.3, 1.0), (1.34, -0.35, -0.3)),
        ((0.0, 0.5, 1.0), (1.25, 0.0, -0.5)),
        ((0.5, 2.0, 1.0), (5.25, 0.5, -2.0)),
    ])
    def test_examples(self, theta, expected):
        a = acf_from_params(Ma2Params(*theta))
        assert a.as_tuple() == pytest.approx(expected, rel=1e-15, abs=1e-15)

    def test_theta1_zero_gives_zero_lag_one(self):
        assert acf_from_params(Ma2Params(0.0, 0.5, 1.0)).gamma1 == 0

    @pytest.mark.parametrize("bad", [(0.5, 0.0, 1.0), (0.5, 0.3, 0.0), (0.5, 0.3, -1.0)])
    def test_rejects_domain_violations(self, bad):
        with pytest.raises(DomainError):
            acf_from_params(Ma2Params(*bad))

    def test_zero_theta2_is_degenerate(self):
        with pytest.raises(DegenerateTheta2, match="theta2 must be nonzero"):
            Ma2Params(0.5, 0.0, 1.0)

    @given(params())
    def test_output_is_a_valid_triple(self, p):
        acf_from_params(p).validate()


class TestParamsFromAcf:
    @pytest.mark.parametrize("acf, s2, expected", [
        ((1.34, -0.35, -0.3), 1.0, (0.5, 0.3)),
        ((1.25, 0.0, -0.5), 1.0, (0.0, 0.5)),
        ((5.25, 0.5, -2.0), 4.0, (-0.25, 0.5)),
    ])
    def test_examples(self, acf, s2, expected):
        p = params_from_acf_and_sigma2(AcfTriple(*acf), s2)
        assert (p.theta1, p.theta2) == pytest.approx(expected, rel=1e-14, abs=1e-15)

    def test_zero_denominator(self):
        with pytest.raises(CandidateInadmissible):
            params_from_acf_and_sigma2(AcfTriple(3.0, 0.0, -1.0), 1.0)

    @given(params().filter(lambda p: abs(1 - p.theta2) > 1e-3))
    def test_round_trip(self, p):
        q = params_from_acf_and_sigma2(acf_from_params(p), p.sigma2)
        # gamma1 and sigma2 + gamma2 both carry the factor 1 - theta2, so
        # theta1 loses digits in proportion to 1 / |1 - theta2|
        scale = 1.0 / abs(1.0 - p.theta2)
        assert abs(q.theta1 - p.theta1) <= 1e-12 * max(abs(p.theta1), 1.0) * max(scale, 1.0)
        assert close_rel(q.theta2, p.theta2, 1e-12)


class TestRoots:
    @pytest.mark.parametrize("theta, expected", [
        ((0.5, 2.0), {(0.5 + math.sqrt(8.25)) / 2, (0.5 - math.sqrt(8.25)) / 2}),
        ((3.0, -1.0), {(3 + math.sqrt(5)) / 2, (3 - math.sqrt(5)) / 2}),
    ])
    def test_real_examples(self, theta, expected):
        r = roots_of_M(Ma2Params(*theta, 1.0))
        assert r.is_real
        got = sorted([r.z1.real, r.z2.real])
        assert got == pytest.approx(sorted(expected), rel=1e-14)

    def test_unit_imaginary(self):
        r = roots_of_M(Ma2Params(0.0, -1.0, 1.0))
        assert {r.z1, r.z2} == {1j, -1j}

    @given(params())
    def test_vieta_and_conjugacy(self, p):
        r = roots_of_M(p)
        assert r.z1 != 0 and r.z2 != 0
        assert cmath.isclose(r.z1 * r.z2, -p.theta2, rel_tol=1e-12)
        assert abs((r.z1 + r.z2) - p.theta1) <= 1e-12 * max(abs(r.z1), abs(r.z2))
        assert r.is_real or r.z1 == r.z2.conjugate()

    @given(params())
    def test_agrees_with_numpy(self, p):
        ours = sorted([roots_of_M(p).z1, roots_of_M(p).z2], key=lambda z: (z.real, z.imag))
        ref = sorted(np.roots([1.0, -p.theta1, -p.theta2]), key=lambda z: (z.real, z.imag))
        for u, v in zip(ours, ref):
            assert abs(u - v) <= 1e-7 * max(1.0, abs(v))


class TestInvertibility:
    def test_examples(self):
        assert invertibility(Ma2Params(0.5, 0.3, 1)).status is Invertibility.INVERTIBLE
        assert invertibility(Ma2Params(0.5, 2, 1)).status is Invertibility.NON_INVERTIBLE
        res = invertibility(Ma2Params(0.5, 0.5, 1))
        assert res.status is Invertibility.BOUNDARY
        assert res.tag.kind is BoundaryKind.ROOT_AT_PLUS_ONE

    def test_boundary_kinds(self):
        assert boundary_tag(-0.5, 0.5).kind is BoundaryKind.ROOT_AT_MINUS_ONE
        tag = boundary_tag(1.0, -1.0)
        assert tag.kind is BoundaryKind.ROOT_ON_UNIT_CIRCLE_COMPLEX
        assert tag.lam == pytest.approx(math.pi / 3)
        assert boundary_tag(3.0, -1.0) is None

    @given(params())
    def test_triangle_agrees_with_root_moduli(self, p):
        res = invertibility(p)
        mods = roots_of_M(p).moduli()
        if res.status is Invertibility.BOUNDARY:
            assert min(abs(m - 1.0) for m in mods) < 1e-4
        elif res.status is Invertibility.INVERTIBLE:
            assert max(mods) < 1
        else:
            assert max(mods) > 1

    @given(st.floats(-np.pi, np.pi), sigma2s)
    def test_unit_circle_roots_are_boundary(self, lam, s2):
        t1 = 2 * math.cos(lam)
        p = Ma2Params(t1, -1.0, s2)
        assert invertibility(p).status is Invertibility.BOUNDARY
        assert min(abs(m - 1) for m in roots_of_M(p).moduli()) < 1e-7


class TestAnderson:
    @pytest.mark.parametrize("acf, z, expected", [
        ((1.34, -0.35, -0.3), 1.0, 0.04),
        ((1.25, 0.0, -0.5), 2.0, -0.875),
    ])
    def test_examples(self, acf, z, expected):
        assert anderson_lhs(AcfTriple(*acf), z) == pytest.approx(expected, rel=1e-13)

    @given(st.tuples(st.floats(1, 10), st.floats(-1, 1), st.floats(-1, 1)))
    def test_at_one_is_plain_sum(self, g):
        a = AcfTriple(*g)
        assert anderson_lhs(a, 1.0).real == pytest.approx(g[0] + 2 * g[1] + 2 * g[2], abs=1e-12)

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            anderson_lhs(AcfTriple(1, 0, 0.1), 0)

    @settings(max_examples=200)
    @given(params(), st.floats(0.2, 5), st.floats(-np.pi, np.pi))
    def test_identity(self, p, r, phi):
        z = cmath.rect(r, phi)
        poly = np.poly1d([1.0, -p.theta1, -p.theta2])
        rhs = p.sigma2 * poly(z) * poly(1 / z)
        lhs = anderson_lhs(acf_from_params(p), z)
        terms = p.sigma2 * (abs(z) + 1 / abs(z)) ** 2 * (1 + abs(p.theta1) + abs(p.theta2)) ** 2
        assert abs(lhs - rhs) <= 1e-10 * terms


class TestSpectralMinimum:
    @given(params())
    def test_matches_grid_minimum(self, p):
        a = acf_from_params(p)
        lam = np.linspace(0, np.pi, 20001)
        grid = a.gamma0 + 2 * a.gamma1 * np.cos(lam) + 2 * a.gamma2 * np.cos(2 * lam)
        assert spectral_minimum(a) <= grid.min() + 1e-12 * a.gamma0
        assert spectral_minimum(a) >= grid.min() - 1e-6 * a.gamma0

    def test_zero_on_boundary(self):
        assert spectral_minimum(acf_from_params(Ma2Params(1.0, -1.0, 2.0))) == pytest.approx(0, abs=1e-15)


class TestAcfTripleValidate:
    @pytest.mark.parametrize("bad", [(0, 0, 0), (1, 0, 0), (1, 1.5, 0.1), (1, 0.1, -1.2), (-1, 0, 0.1)])
    def test_invalid(self, bad):
        with pytest.raises(DomainError):
            AcfTriple(*bad).validate()
