from fractions import Fraction as F

import pytest

from balines.config import build_am1n, from_alphas, random_type_m1n
from balines.errors import MissingExactData, OutOfRange, TailMismatch
from balines.locus import solve_general_locus
from balines.quasi import (am1n_hilbert_numerator, expand_numerator,
                           hilbert_coefficients, hilbert_rational_form,
                           is_gorenstein, is_quasi_invariant,
                           is_symmetric_slope_chart, product_invariant,
                           qi_dimension_exact, qi_dimension_numeric,
                           r_parameter, radial_invariant, rank_exact,
                           segment_oracles, segment_prediction)

from oracles import (brute_force_qi_dimension, config_to_oracle_lines,
                     series_times_denominator)


def test_orthogonal_pair_degree_two():
    c = from_alphas(1, [F(0)], kind="general")
    assert qi_dimension_exact(c, 2) == 2  # x^2 and y^2
    assert is_quasi_invariant(c, [F(1), F(0), F(0)])  # x^2
    assert is_quasi_invariant(c, [F(0), F(0), F(1)])  # y^2
    assert not is_quasi_invariant(c, [F(0), F(1), F(0)])  # xy


def test_exceptional_configuration_degree_six():
    c = build_am1n(2, 2, 256)
    assert qi_dimension_exact(c, 6) == 4


def test_generic_configuration_degree_six():
    c = random_type_m1n(2, 2, seed=1)
    assert qi_dimension_exact(c, 6) == 3


def test_brute_force_oracle_confirms_dimensions():
    # independent full-system solver at 512 bits, before trusting the ranks
    for m, n in [(1, 1), (2, 2), (1, 2)]:
        c = build_am1n(m, n, 512)
        lines = config_to_oracle_lines(c, 512)
        for d in range(0, 13):
            assert brute_force_qi_dimension(lines, d, 512) == \
                qi_dimension_exact(c, d), (m, n, d)


def test_exact_equals_numeric():
    for cfg in [build_am1n(2, 3, 256), build_am1n(4, 6, 256),
                random_type_m1n(3, 4, seed=9)]:
        for d in range(0, 15):
            assert qi_dimension_exact(cfg, d) == qi_dimension_numeric(cfg, d)


def test_numeric_handles_locus_output():
    lc = solve_general_locus((2, 1, 1), 256)
    ref = build_am1n(2, 2, 256)
    for d in range(0, 13):
        assert qi_dimension_numeric(lc, d) == qi_dimension_exact(ref, d)


def test_hilbert_coefficients_examples():
    assert hilbert_coefficients(build_am1n(1, 1, 128), 8) == \
        [1, 0, 2, 2, 3, 4, 5, 6, 7]
    assert hilbert_coefficients(build_am1n(2, 2, 128), 10) == \
        [1, 0, 1, 1, 2, 2, 4, 4, 5, 6, 7]


def test_hilbert_random_differs_at_critical_degree():
    bs = hilbert_coefficients(random_type_m1n(2, 2, seed=1), 10)
    assert bs[6] == 3
    assert bs[:6] == [1, 0, 1, 0, 1, 2]


def test_low_degree_structure():
    # degrees <= n alternate 1, 0, 1, 0, ...
    for m, n in [(2, 4), (1, 5), (3, 3)]:
        bs = hilbert_coefficients(build_am1n(m, n, 128), 2 * m + 2 * n + 2)
        for k in range(n + 1):
            assert bs[k] == (1 if k % 2 == 0 else 0)
        assert bs[0] == 1 and bs[1] == 0


def test_rational_form_and_numerators():
    bs = hilbert_coefficients(build_am1n(2, 2, 128), 10)
    h = hilbert_rational_form(bs, 2, 2)
    assert list(h.numerator) == am1n_hilbert_numerator(2, 2)
    h11 = hilbert_rational_form(hilbert_coefficients(build_am1n(1, 1, 128), 8), 1, 1)
    assert list(h11.numerator) == [1, 0, 0, 2, 0, 0, 1]  # 1 + 2t^3 + t^6
    # multiplying back by (1 - t^2)^2 recovers the numerator: independent check
    assert series_times_denominator(bs, 10)[:11] == \
        [am1n_hilbert_numerator(2, 2)[k] if k <= 10 else 0 for k in range(11)]


def test_rational_form_tail_mismatch():
    bs = hilbert_coefficients(build_am1n(1, 1, 128), 8)
    bad = list(bs)
    bad[7] += 1
    with pytest.raises(TailMismatch):
        hilbert_rational_form(bad, 1, 1)


def test_expand_numerator_inverts_rational_form():
    for m, n in [(1, 1), (2, 2), (3, 4)]:
        numer = am1n_hilbert_numerator(m, n)
        bs = expand_numerator(numer, 2 * m + 2 * n + 6)
        h = hilbert_rational_form(bs, m, n)
        assert list(h.numerator) == numer


def test_gorenstein_verdicts():
    h11 = hilbert_rational_form(hilbert_coefficients(build_am1n(1, 1, 128), 8), 1, 1)
    assert is_gorenstein(h11) == (True, -2)
    for m, n in [(2, 2), (4, 6), (3, 5)]:
        numer = am1n_hilbert_numerator(m, n)
        h = hilbert_rational_form(expand_numerator(numer, 2 * m + 2 * n + 4), m, n)
        assert is_gorenstein(h) == (True, 2 - 2 * m - 2 * n)
    hr = hilbert_rational_form(
        hilbert_coefficients(random_type_m1n(2, 2, seed=1), 10), 2, 2)
    assert is_gorenstein(hr) == (False, None)


def test_monotone_stabilization():
    for cfg, m, n in [(build_am1n(2, 3, 128), 2, 3),
                      (random_type_m1n(1, 4, seed=3), 1, 4)]:
        bs = hilbert_coefficients(cfg, 2 * m + 2 * n + 4)
        for i in range(2 * m + 2 * n - 1, len(bs) - 2):
            assert bs[i + 2] - bs[i] == 2


def test_universal_invariants_members():
    for cfg in [build_am1n(2, 2, 128), build_am1n(1, 4, 128),
                random_type_m1n(2, 3, seed=4), random_type_m1n(3, 2, seed=8)]:
        assert is_quasi_invariant(cfg, radial_invariant())
        assert is_quasi_invariant(cfg, product_invariant(cfg))


def test_r_parameter():
    assert r_parameter(build_am1n(2, 2, 128)) == 1
    assert r_parameter(from_alphas(2, [F(1, 2), F(-1, 3)])) == 2
    assert r_parameter(build_am1n(1, 4, 128)) == 2
    assert r_parameter(from_alphas(1, [F(1, 2), F(-1, 2), F(3)])) == 2
    lc = solve_general_locus((2, 1, 1), 192)
    assert r_parameter(lc) == 1


def test_symmetry_detection():
    assert is_symmetric_slope_chart(build_am1n(3, 4, 128))
    assert is_symmetric_slope_chart(from_alphas(2, [F(1, 2), F(-1, 2)]))
    assert not is_symmetric_slope_chart(from_alphas(2, [F(1, 2), F(-1, 3)]))
    assert is_symmetric_slope_chart(from_alphas(2, [F(1, 2), F(-1, 2), F(0)]))


def test_segment_prediction_out_of_range():
    with pytest.raises(OutOfRange):
        segment_prediction("odd_window_distinct_slopes", 1, 4, r=3)
    with pytest.raises(OutOfRange):
        segment_prediction("sym_low_window", 2, 2, symmetric=False)
    with pytest.raises(ValueError):
        segment_prediction("no_such_formula", 1, 1)


def test_segment_oracles_match_am1n():
    for m, n in [(1, 2), (2, 2), (2, 5), (3, 4)]:
        c = build_am1n(m, n, 128)
        D = 2 * m + 2 * n + 4
        bs = hilbert_coefficients(c, D)
        preds = segment_oracles(m, n, r=r_parameter(c), symmetric=True,
                                am1n=True, D=D)
        assert "exceptional_even_window" in preds
        for name, seg in preds.items():
            for d, v in seg.items():
                assert bs[d] == v, (name, d)


def test_segment_oracles_match_random_samples():
    for m, n in [(1, 3), (2, 4), (3, 2)]:
        for seed in range(1, 6):
            c = random_type_m1n(m, n, seed=seed)
            D = 2 * m + 2 * n + 4
            bs = hilbert_coefficients(c, D)
            preds = segment_oracles(m, n, r=r_parameter(c),
                                    symmetric=is_symmetric_slope_chart(c),
                                    am1n=False, D=D)
            for name, seg in preds.items():
                for d, v in seg.items():
                    assert bs[d] == v, (m, n, seed, name, d)


def test_rank_exact_small_cases():
    assert rank_exact([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert rank_exact([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert rank_exact([]) == 0


def test_exact_needs_rational_data():
    lc = solve_general_locus((2, 1, 1), 128)
    with pytest.raises(MissingExactData):
        qi_dimension_exact(lc, 4)


def test_assembled_system_shape():
    from balines.quasi import assemble_system

    c = build_am1n(2, 2, 128)
    sys6 = assemble_system(c, 6)
    assert sys6.free == (0, 2, 4, 5, 6)
    assert len(sys6.matrix) == 2  # one row per power below deg R
    assert sys6.dimension() == 4
