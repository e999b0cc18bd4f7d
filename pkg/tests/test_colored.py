import math

import pytest

from qinv.colored import (
    Color,
    Omega,
    chebyshev_table,
    evaluate_labeled_link,
    omega,
    quantum_dim,
    quantum_dim_poly,
    twist_eigen_check,
)
from qinv.diagram import braid_closure, distant_union, parse_braid, unknot
from qinv.ring import CyclotomicNumber, Level


def qdim_float(n, k):
    return (-1) ** n * math.sin((n + 1) * math.pi / k) / math.sin(math.pi / k)


class TestChebyshev:
    def test_first_rows(self):
        rows = chebyshev_table(3)
        assert rows[0] == (1,)
        assert rows[1] == (0, 1)
        assert rows[2] == (-1, 0, 1)       # x^2 - 1
        assert rows[3] == (0, -2, 0, 1)    # x^3 - 2x

    def test_recursion_exact(self):
        rows = chebyshev_table(12)
        for n in range(10):
            shifted = (0,) + rows[n + 1]
            expect = [shifted[i] - (rows[n][i] if i < len(rows[n]) else 0)
                      for i in range(len(shifted))]
            assert list(rows[n + 2]) == expect

    def test_sparsity_pattern(self):
        rows = chebyshev_table(9)
        for n, row in enumerate(rows):
            for m, c in enumerate(row):
                if m > n or (m - n) % 2 != 0:
                    assert c == 0

    def test_value_matches_chebyshev_u(self):
        # S_n(2cos t) = sin((n+1)t)/sin(t)
        rows = chebyshev_table(8)
        for n in range(9):
            for t in (0.3, 1.1, 2.0):
                x = 2 * math.cos(t)
                val = sum(c * x ** m for m, c in enumerate(rows[n]))
                assert abs(val - math.sin((n + 1) * t) / math.sin(t)) < 1e-9


class TestQuantumDim:
    def test_color_zero_is_one(self):
        for k in range(2, 9):
            assert quantum_dim(0, k) == CyclotomicNumber.one(Level(k))

    def test_color_one_k3(self):
        lv = Level(3)
        assert quantum_dim(1, 3) == CyclotomicNumber.from_int(lv, -1)

    @pytest.mark.parametrize("k", range(3, 9))
    def test_top_color_vanishes(self, k):
        assert quantum_dim(k - 1, k).is_zero()

    @pytest.mark.parametrize("k", range(2, 9))
    def test_matches_sine_formula(self, k):
        for n in range(k):
            approx = quantum_dim(n, k).complex_approx()
            assert abs(approx - qdim_float(n, k)) < 1e-9

    def test_poly_is_division_free_sum(self):
        assert quantum_dim_poly(1).as_dict() == {2: -1, -2: -1}
        assert quantum_dim_poly(2).as_dict() == {4: 1, 0: 1, -4: 1}


class TestOmega:
    def test_k3_coefficients(self):
        lv = Level(3)
        om = omega(3, "all")
        assert om.coefficients == (CyclotomicNumber.one(lv),
                                   CyclotomicNumber.from_int(lv, -1))
        assert omega(3, "even").coefficients == (CyclotomicNumber.one(lv),
                                                 CyclotomicNumber.zero(lv))
        assert omega(3, "odd").coefficients == (CyclotomicNumber.zero(lv),
                                                CyclotomicNumber.from_int(lv, -1))

    def test_k2_single_color(self):
        assert len(omega(2, "all").coefficients) == 1
        assert omega(2, "all").coefficients[0] == CyclotomicNumber.one(Level(2))

    @pytest.mark.parametrize("k", range(2, 8))
    def test_parity_parts_sum(self, k):
        alls = omega(k, "all").coefficients
        evens = omega(k, "even").coefficients
        odds = omega(k, "odd").coefficients
        for a, e, o in zip(alls, evens, odds):
            assert a == e + o


class TestLabeledEvaluation:
    def test_colored_unknot_matches_quantum_dim(self):
        for k in range(2, 6):
            for n in range(k):
                got = evaluate_labeled_link(unknot(0), (Color(n),), k)
                assert got == quantum_dim(n, k)

    def test_omega_unknot_k3(self):
        got = evaluate_labeled_link(unknot(0), (Omega("all"),), 3)
        assert got == CyclotomicNumber.from_int(Level(3), 2)

    def test_color_zero_equals_deletion(self):
        hopf = braid_closure(parse_braid("braid 2 : s1 s1"))
        for k in (3, 4):
            with_zero = evaluate_labeled_link(hopf, (Color(0), Color(1)), k)
            alone = evaluate_labeled_link(unknot(0), (Color(1),), k)
            assert with_zero == alone

    def test_top_color_split_component_kills_link(self):
        trefoil = braid_closure(parse_braid("braid 2 : s1 s1 s1"))
        for k in (3, 4, 5):
            d = distant_union(trefoil, unknot(0))
            got = evaluate_labeled_link(d, (Omega("all"), Color(k - 1)), k)
            assert got.is_zero()

    def test_linearity_via_omega_expansion(self):
        hopf = braid_closure(parse_braid("braid 2 : s1 s1"))
        for k in (3, 4):
            lv = Level(k)
            direct = evaluate_labeled_link(hopf, (Omega("all"), Color(1)), k)
            expanded = CyclotomicNumber.zero(lv)
            for n in range(k - 1):
                expanded = expanded + quantum_dim(n, k) * evaluate_labeled_link(
                    hopf, (Color(n), Color(1)), k)
            assert direct == expanded

    def test_parity_additivity(self):
        hopf = braid_closure(parse_braid("braid 2 : s1 s1"))
        for k in (3, 4, 5):
            full = evaluate_labeled_link(hopf, (Omega("all"), Omega("all")), k)
            pieces = [evaluate_labeled_link(hopf, (Omega(p1), Omega(p2)), k)
                      for p1 in ("even", "odd") for p2 in ("even", "odd")]
            total = pieces[0]
            for p in pieces[1:]:
                total = total + p
            assert full == total

    def test_label_count_checked(self):
        with pytest.raises(ValueError):
            evaluate_labeled_link(unknot(0), (), 3)

    def test_color_range_checked(self):
        with pytest.raises(ValueError):
            evaluate_labeled_link(unknot(0), (Color(4),), 3)

    def test_colored_hopf_matches_sine_formula(self):
        # <W_m W_n> on the 0-framed Hopf pair = (-1)^{m+n} [ (m+1)(n+1) ]
        hopf = braid_closure(parse_braid("braid 2 : s1 s1"))
        d = unknot(0)
        k = 5
        for m in range(k - 1):
            for n in range(k - 1):
                got = evaluate_labeled_link(hopf, (Color(m), Color(n)), k)
                expect = ((-1) ** (m + n)
                          * math.sin((m + 1) * (n + 1) * math.pi / k)
                          / math.sin(math.pi / k))
                assert abs(got.complex_approx() - expect) < 1e-9


class TestTwistFactor:
    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_all_colors(self, k):
        for n in range(k - 1):
            rec = twist_eigen_check(n, k)
            assert rec.ok, f"twist factor failed at n={n}, k={k}"

    def test_expected_ratios(self):
        lv = Level(5)
        assert twist_eigen_check(0, 5).expected_ratio == CyclotomicNumber.one(lv)
        assert twist_eigen_check(1, 5).expected_ratio == -CyclotomicNumber.zeta_pow(lv, 3)
        assert twist_eigen_check(2, 5).expected_ratio == CyclotomicNumber.zeta_pow(lv, 8)
