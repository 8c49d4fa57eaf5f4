import cmath
import math

import numpy as np
import pytest

from zetaline import (DomainError, EvalConfig, OnPathZeroError,
                      OrdinateCollisionError, PathSpec, ResolutionError,
                      ZetaArgLine, arg_xi_at, arg_zeta_critical,
                      continuous_arg, probe_ordinate, riemann_siegel_theta,
                      zeta_euler_maclaurin)
from zetaline.arg_tracking import arg_xi_components

from oracles import FIRST_ZEROS


def quarter_circle_vertices(n=100):
    return tuple(cmath.exp(1j * (math.pi / 2) * k / n) for k in range(n + 1))


class TestPathSpec:
    def test_needs_two_vertices(self):
        with pytest.raises(DomainError):
            PathSpec((1.0 + 0j,))

    def test_rejects_repeated_vertices(self):
        with pytest.raises(DomainError):
            PathSpec((1.0 + 0j, 1.0 + 0j))

    def test_rejects_bad_step(self):
        with pytest.raises(DomainError):
            PathSpec((0j, 1.0 + 0j), max_step=0.0)


class TestContinuousArg:
    def test_identity_quarter_turn(self):
        path = PathSpec(quarter_circle_vertices(), initial_arg=0.0)
        trace = continuous_arg(lambda s: s, path)
        assert abs(trace.final_arg - math.pi / 2) < 1e-6

    def test_square_doubles_winding(self):
        path = PathSpec(quarter_circle_vertices(), initial_arg=0.0)
        trace = continuous_arg(lambda s: s * s, path)
        assert abs(trace.final_arg - math.pi) < 1e-6

    def test_zeta_path_gives_census_consistent_count(self, census100):
        cfg = EvalConfig().sized_for(100.0)
        path = PathSpec((2.0 + 0j, complex(2.0, 100.0), complex(0.5, 100.0)))
        trace = continuous_arg(lambda s: zeta_euler_maclaurin(s, cfg), path)
        s_of_t = trace.final_arg / math.pi
        assert abs(s_of_t) < 1.0
        x = 100.0 / (2.0 * math.pi)
        main = x * math.log(x) - x + 7.0 / 8.0
        assert round(main + s_of_t) == census100.report.n0

    def test_trace_invariant_and_consistency(self):
        cfg = EvalConfig().sized_for(50.0)
        fn = lambda s: zeta_euler_maclaurin(s, cfg)
        path = PathSpec((2.0 + 0j, complex(2.0, 50.0), complex(0.3, 50.0)))
        trace = continuous_arg(fn, path)
        trace.check_invariant()
        # unwrapped argument reproduces the function at every sample
        for pt, arg in trace.samples[:: max(1, len(trace.samples) // 60)]:
            val = fn(pt)
            recon = abs(val) * cmath.exp(1j * arg)
            assert abs(recon - val) <= 1e-9 * abs(val)

    def test_step_halving_stability(self):
        cfg = EvalConfig().sized_for(50.0)
        fn = lambda s: zeta_euler_maclaurin(s, cfg)
        vertices = (2.0 + 0j, complex(2.0, 50.0), complex(0.5, 50.0))
        coarse = continuous_arg(fn, PathSpec(vertices, max_step=0.25))
        fine = continuous_arg(fn, PathSpec(vertices, max_step=0.125))
        assert abs(coarse.final_arg - fine.final_arg) < 1e-8

    def test_exact_zero_on_sample(self):
        path = PathSpec((0j, 1.0 + 0j), max_step=0.25)
        with pytest.raises(OnPathZeroError):
            continuous_arg(lambda s: s - 0.5, path)

    def test_zero_adjacent_to_path_exhausts_refinement(self):
        path = PathSpec((0j, 1.0 + 0j), max_step=0.3)
        with pytest.raises(ResolutionError):
            continuous_arg(lambda s: s - complex(0.4, 1e-13), path)


class TestProbeOrdinate:
    def test_passes_off_ordinate(self, cfg):
        probe_ordinate(100.0, cfg)

    def test_detects_collision_from_probe(self, cfg):
        with pytest.raises(OrdinateCollisionError) as exc:
            probe_ordinate(14.134725, cfg)
        assert abs(exc.value.gamma - FIRST_ZEROS[0]) < 1e-5

    def test_detects_collision_from_known_list(self, cfg):
        with pytest.raises(OrdinateCollisionError):
            probe_ordinate(25.0108576, cfg, known_zeros=[25.010857580145688])


class TestArgZetaCritical:
    def test_small_height_is_principal_value(self, cfg):
        # no zero below t = 14, so no unwrapping can occur
        val = arg_zeta_critical(1.0, cfg)
        principal = cmath.phase(zeta_euler_maclaurin(complex(0.5, 1.0), cfg))
        assert abs(val - principal) < 1e-9
        assert abs(val) / math.pi < 0.5

    def test_census_consistency_at_100(self, census100):
        val = arg_zeta_critical(100.0)
        x = 100.0 / (2.0 * math.pi)
        main = x * math.log(x) - x + 7.0 / 8.0
        assert round(main + val / math.pi) == census100.report.n0

    def test_ordinate_collision(self, cfg):
        with pytest.raises(OrdinateCollisionError):
            arg_zeta_critical(14.134725, cfg)

    def test_path_independence(self, cfg):
        via_2 = arg_zeta_critical(100.0, cfg)
        scfg = cfg.sized_for(100.0)
        path = PathSpec((3.0 + 0j, complex(3.0, 100.0), complex(0.5, 100.0)))
        via_3 = continuous_arg(
            lambda s: zeta_euler_maclaurin(s, scfg), path).final_arg
        assert abs(via_2 - via_3) < 1e-8


class TestZetaArgLine:
    def test_matches_full_tracking(self, cfg):
        line = ZetaArgLine(50.0, cfg)
        direct = arg_zeta_critical(50.0, cfg)
        assert abs(line.eval(0.5) - direct) < 1e-9

    def test_cache_is_order_insensitive(self, cfg):
        line_a = ZetaArgLine(60.5, cfg)
        line_b = ZetaArgLine(60.5, cfg)
        sigmas = [0.3, 1.7, 0.45, 0.9, 0.31]
        for sg in sigmas:
            line_a.eval(sg)
        for sg in reversed(sigmas):
            line_b.eval(sg)
        for sg in sigmas:
            assert abs(line_a.eval(sg) - line_b.eval(sg)) < 1e-9


class TestArgXi:
    def test_matches_theta_plus_arg_zeta_on_line(self, cfg):
        # below the first zero the xi argument on the critical line is
        # exactly theta(T) + arg zeta(1/2 + iT)
        val = arg_xi_at(0.5, 10.0, cfg)
        expect = riemann_siegel_theta(10.0) + arg_zeta_critical(10.0, cfg)
        assert abs(val - expect) < 1e-9

    def test_antisymmetry_in_height(self, cfg):
        up = arg_xi_at(0.47, 50.0, cfg)
        down = arg_xi_at(0.47, -50.0, cfg)
        assert abs(up + down) < 1e-8

    def test_component_sum_agrees_with_direct_route(self, cfg):
        sigma, T = 0.45, 100.0
        components = arg_xi_at(sigma, T, cfg, route="components")
        direct = arg_xi_at(sigma, T, cfg, route="direct")
        assert abs(components - direct) < 1e-6

    def test_antisymmetry_grid(self, cfg):
        for T in (20.0, 50.0, 100.0):
            up_line = ZetaArgLine(T, cfg)
            down_line = ZetaArgLine(-T, cfg)
            for sigma in np.arange(0.1, 0.95, 0.1):
                up = sum(arg_xi_components(float(sigma), T, cfg,
                                           up_line).values())
                down = sum(arg_xi_components(float(sigma), -T, cfg,
                                             down_line).values())
                assert abs(up + down) < 1e-8

    def test_unknown_route(self, cfg):
        with pytest.raises(DomainError):
            arg_xi_at(0.4, 30.0, cfg, route="sideways")
