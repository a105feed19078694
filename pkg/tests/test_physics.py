import numpy as np
import pytest

from fr1d.errors import ConfigError, EvaluationError
from fr1d.physics import (Burgers, LinearAdvection, ProblemSpec,
                          exact_solution, make_problem,
                          named_initial_condition, upwind_numflux)


def test_upwind_consistency_example():
    assert upwind_numflux(LinearAdvection(5.0), 2.0, 2.0) == pytest.approx(10.0, abs=0)


def test_upwind_takes_left_state_for_positive_speed():
    assert upwind_numflux(LinearAdvection(5.0), 1.0, 3.0) == pytest.approx(5.0, abs=1e-14)


def test_upwind_takes_right_state_for_negative_speed():
    # (a/2)(uL+uR) - (|a|/2)(uR-uL) with a=-2: -4 - 2 = -6.
    assert upwind_numflux(LinearAdvection(-2.0), 1.0, 3.0) == pytest.approx(-6.0, abs=1e-14)


def test_upwind_consistency_random_states():
    rng = np.random.default_rng(3)
    u = rng.uniform(-10, 10, 1000)
    for flux in (LinearAdvection(2.5), LinearAdvection(-1.2), Burgers()):
        f = upwind_numflux(flux, u, u)
        assert np.max(np.abs(f - flux.flux(u))) < 1e-12


def test_upwind_property_linear():
    rng = np.random.default_rng(4)
    ul = rng.uniform(-5, 5, 200)
    ur = rng.uniform(-5, 5, 200)
    pos = upwind_numflux(LinearAdvection(3.0), ul, ur)
    assert np.max(np.abs(pos - 3.0 * ul)) < 1e-13
    neg = upwind_numflux(LinearAdvection(-3.0), ul, ur)
    assert np.max(np.abs(neg - (-3.0) * ur)) < 1e-13


def test_rusanov_reduces_to_upwind_for_linear_speeds():
    # Applying the Rusanov form with dissipation |a| to f = a u matches the
    # linear upwind flux; this keeps one code path honest about the other.
    rng = np.random.default_rng(5)
    ul = rng.uniform(-5, 5, 100)
    ur = rng.uniform(-5, 5, 100)
    a = -2.5
    rusanov = 0.5 * (a * ul + a * ur) - 0.5 * abs(a) * (ur - ul)
    assert np.max(np.abs(rusanov - upwind_numflux(LinearAdvection(a), ul, ur))) < 1e-13


def test_burgers_rusanov_value():
    # lambda = max(|2|, |4|) = 4: (2 + 8)/2 - 2*(4-2) = 1.
    assert upwind_numflux(Burgers(), 2.0, 4.0) == pytest.approx(1.0, abs=1e-14)


def test_exact_solution_at_t0():
    p = make_problem("wavepacket", LinearAdvection(5.0))
    x = np.linspace(-1, 1, 11)
    assert exact_solution(p, x, 0.0) == pytest.approx(p.ic(x), abs=0)


def test_exact_solution_periodic_wrap_full_period():
    # a t = 5 * 0.4 = 2 is one domain length: the profile returns.
    p = make_problem("wavepacket", LinearAdvection(5.0))
    x = np.linspace(-1, 1, 23)
    assert np.max(np.abs(exact_solution(p, x, 0.4) - p.ic(x))) < 1e-12


def test_exact_solution_burgers_constant():
    p = ProblemSpec(flux=Burgers(), ic=lambda x: np.full_like(x, 1.5),
                    ic_deriv=lambda x: np.zeros_like(x))
    x = np.linspace(-1, 1, 9)
    assert exact_solution(p, x, 0.3) == pytest.approx(np.full(9, 1.5), abs=1e-13)


def test_exact_solution_burgers_characteristics_residual():
    p = make_problem("sine", Burgers())
    rng = np.random.default_rng(6)
    for t in (0.01, 0.05, 0.1):
        x = rng.uniform(-1, 1, 50)
        u = exact_solution(p, x, t)
        assert np.max(np.abs(u - p.ic(x - u * t))) < 1e-12


def test_exact_solution_burgers_near_shock_raises():
    # sine has shock time 1/(2 pi) ~ 0.159.
    p = make_problem("sine", Burgers())
    x = np.linspace(-1, 1, 201)
    with pytest.raises(EvaluationError):
        exact_solution(p, x, 0.2)


def test_dirichlet_requires_linear_flux():
    with pytest.raises(ConfigError):
        make_problem("sine", Burgers(), bc="dirichlet")
    with pytest.raises(ConfigError):
        make_problem("sine", LinearAdvection(0.0), bc="dirichlet")


def test_inflow_face_follows_speed_sign():
    left = make_problem("gauss", LinearAdvection(2.0), bc="dirichlet")
    right = make_problem("gauss", LinearAdvection(-2.0), bc="dirichlet")
    assert left.inflow_face == -1.0
    assert right.inflow_face == 1.0


def test_default_inflow_data_is_exact_trace():
    p = make_problem("gauss", LinearAdvection(2.0), bc="dirichlet")
    t = np.array([0.0, 0.1, 0.2])
    expected = p.ic(-1.0 - 2.0 * t)
    assert p.inflow_data(t) == pytest.approx(expected, abs=0)


def test_named_initial_conditions():
    x = np.linspace(-1, 1, 7)
    wp, wp_d = named_initial_condition("wavepacket")
    assert wp(np.array([0.0])) == pytest.approx([0.0], abs=1e-15)
    assert np.max(np.abs(wp(x) - np.exp(-10 * x**2) * np.sin(10 * np.pi * x))) == 0.0
    const, const_d = named_initial_condition("const:2.5")
    assert np.all(const(x) == 2.5)
    assert np.all(const_d(x) == 0.0)
    with pytest.raises(ConfigError):
        named_initial_condition("volcano")
    with pytest.raises(ConfigError):
        named_initial_condition("const:abc")


def test_named_ic_derivatives_match_finite_differences():
    x = np.linspace(-0.9, 0.9, 41)
    h = 1e-6
    for name in ("wavepacket", "sine", "gauss"):
        ic, ic_deriv = named_initial_condition(name)
        fd = (ic(x + h) - ic(x - h)) / (2 * h)
        assert np.max(np.abs(fd - ic_deriv(x))) < 1e-4


def test_unknown_bc_rejected():
    with pytest.raises(ConfigError):
        ProblemSpec(flux=LinearAdvection(1.0), ic=lambda x: x, bc="reflecting")
