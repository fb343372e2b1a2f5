import math
from fractions import Fraction

import pytest

from power_spectra import bounds, graphs, groups, spectra
from power_spectra.errors import DomainError


def test_adjacency_lower_cyclic_n6():
    r = bounds.adjacency_lower_cyclic(6)
    # d_avg = 11/3, l = 3: 0.5 * [8/3 + sqrt(16/9 + 36)]
    expected = 0.5 * (8 / 3 + math.sqrt(16 / 9 + 36))
    assert r.lower == pytest.approx(expected, abs=1e-12)
    assert r.lower <= r.computed_radius + 1e-9
    assert r.computed_radius == pytest.approx(4.42788, abs=1e-4)
    assert not r.degenerate


def test_adjacency_lower_cyclic_prime_power_tight():
    for n in (4, 8, 9, 16, 27):
        r = bounds.adjacency_lower_cyclic(n)
        assert r.lower == pytest.approx(n - 1, abs=1e-7)
        assert r.lower_tight


def test_adjacency_lower_cyclic_prime_degenerate():
    r = bounds.adjacency_lower_cyclic(5)
    assert r.degenerate
    assert r.lower == 4
    assert r.lower_tight


def test_adjacency_lower_cyclic_domain():
    with pytest.raises(DomainError):
        bounds.adjacency_lower_cyclic(2)


def test_prior_adjacency_lower_cyclic():
    # n=6: d_min = 3
    expected = 0.5 * (2 + math.sqrt(4 + 36))
    assert bounds.prior_adjacency_lower_cyclic(6) == pytest.approx(expected)
    assert bounds.prior_adjacency_lower_cyclic(9) == pytest.approx(8.0)


def test_improvement_over_prior():
    for n in range(3, 201):
        r = bounds.adjacency_lower_cyclic(n)
        assert r.lower >= bounds.prior_adjacency_lower_cyclic(n) - 1e-9, n


def test_dihedral_bounds_n6_paper_values():
    r = bounds.adjacency_bounds_dihedral(6)
    assert r.lower == pytest.approx(4.55297, abs=1e-4)
    assert r.upper == 6
    assert r.prior_lower == pytest.approx(4.42788, abs=1e-4)
    assert r.prior_upper == pytest.approx(6.87737, abs=1e-4)
    assert r.prior_lower_strict and not r.prior_upper_strict
    assert r.sandwich_holds()


def test_dihedral_bounds_prime_power_closed_form():
    for n in (4, 5, 9, 16):
        r = bounds.adjacency_bounds_dihedral(n)
        assert r.lower == pytest.approx(
            0.5 * (n - 1 + math.sqrt((n - 1) ** 2 + 4))
        )
        assert r.upper == n


def test_dicyclic_bounds_n3_paper_values():
    r = bounds.adjacency_bounds_dicyclic(3)
    assert r.lower == pytest.approx(5.27008, abs=1e-4)
    assert r.upper == 7
    assert r.prior_lower == pytest.approx(4.42788, abs=1e-4)
    assert r.prior_upper == pytest.approx(7.89198, abs=1e-4)
    assert r.sandwich_holds()


def test_dicyclic_bounds_power_of_two_closed_form():
    for m in (1, 2, 3):
        n = 2**m
        r = bounds.adjacency_bounds_dicyclic(n)
        assert r.lower == pytest.approx(2**m + math.sqrt((2**m - 1) ** 2 + 4))
        assert r.upper == 2 * n + 1


def test_adjacency_cubic_z6():
    coeffs, root = bounds.adjacency_cubic_semiprime(2, 3)
    assert coeffs == (-3.0, -7.0, 3.0)
    assert root == pytest.approx(4.42788, abs=1e-4)


def test_adjacency_cubic_z15_matches_oracle():
    coeffs, root = bounds.adjacency_cubic_semiprime(3, 5)
    # substitution into the polynomial: x^3 - 12x^2 - 19x + 66
    assert coeffs == (-12.0, -19.0, 66.0)
    a = graphs.build_structural_semiprime(3, 5)
    assert root == pytest.approx(spectra.symmetric_eigenvalues(a).radius, abs=1e-7)


def test_adjacency_cubic_z10_matches_oracle():
    _, root = bounds.adjacency_cubic_semiprime(2, 5)
    a = graphs.build_structural_semiprime(2, 5)
    assert root == pytest.approx(spectra.symmetric_eigenvalues(a).radius, abs=1e-7)


def test_adjacency_cubic_matches_quotient_charpoly():
    # the coefficients must be the char poly of the exact 3x3 quotient
    for p, q in [(2, 3), (3, 5), (2, 7), (5, 7), (3, 11)]:
        (c2, c1, c0), _ = bounds.adjacency_cubic_semiprime(p, q)
        g = groups.semiprime(p, q)
        a = graphs.build_structural(g)
        qm = spectra.quotient_matrix_exact(a, graphs.partition_blocks(g))
        (x, y, z), (d, e, f), (gg, h, i) = qm
        tr = x + e + i
        minors = (x * e - y * d) + (x * i - z * gg) + (e * i - f * h)
        det = (x * (e * i - f * h) - y * (d * i - f * gg)
               + z * (d * h - e * gg))
        assert (Fraction(-int(c2)), Fraction(int(c1)), Fraction(-int(c0))) == (
            tr, minors, det)


def test_distance_cubic_z6():
    coeffs, root = bounds.distance_cubic_semiprime(2, 3)
    assert coeffs == (-3.0, -15.0, -5.0)
    d = graphs.distance_matrix(graphs.build_structural_semiprime(2, 3))
    assert root == pytest.approx(spectra.symmetric_eigenvalues(d).radius, abs=1e-7)


def test_distance_cubic_root_inside_dcn_interval():
    _, root = bounds.distance_cubic_semiprime(2, 3)
    r = bounds.distance_bounds_cyclic(6)
    assert r.lower - 1e-9 <= root <= r.upper + 1e-9


def test_distance_cubic_z15_matches_oracle():
    _, root = bounds.distance_cubic_semiprime(3, 5)
    d = graphs.distance_matrix(graphs.build_structural_semiprime(3, 5))
    assert root == pytest.approx(spectra.symmetric_eigenvalues(d).radius, abs=1e-7)


def test_distance_bounds_cyclic_n6():
    r = bounds.distance_bounds_cyclic(6)
    # Tr_avg = 19/3, Tr_max = 7, l = 3
    tra, trm, l, n = 19 / 3, 7, 3, 6

    def f(tr):
        return 0.5 * ((tr - 1) + math.sqrt((tr - 2 * l + 1) ** 2 + 4 * l * (n - l)))

    assert r.lower == pytest.approx(f(tra))
    assert r.upper == pytest.approx(f(trm))
    assert r.sandwich_holds()


def test_distance_bounds_cyclic_prime_power_tight():
    for n in (4, 8, 9):
        r = bounds.distance_bounds_cyclic(n)
        assert r.lower == pytest.approx(n - 1, abs=1e-7)
        assert r.upper == pytest.approx(n - 1, abs=1e-7)
        assert r.lower_tight and r.upper_tight


def test_distance_bounds_cyclic_tight_iff_prime_power():
    for n in range(2, 101):
        r = bounds.distance_bounds_cyclic(n)
        tight = r.lower_tight and r.upper_tight
        assert tight == (groups.prime_power_decompose(n) is not None), n


def test_distance_bounds_dihedral_n3():
    r = bounds.distance_bounds_dihedral(3)
    assert r.lower == pytest.approx(0.5 * (6 + math.sqrt(104)))
    assert r.upper == pytest.approx(0.5 * (6 + math.sqrt(124)))
    assert r.sandwich_holds()


def test_distance_bounds_dihedral_sweep():
    for n in range(3, 41):
        r = bounds.distance_bounds_dihedral(n)
        assert r.upper >= r.lower - 1e-9
        assert r.sandwich_holds(), n


def test_distance_bounds_dicyclic_n2():
    r = bounds.distance_bounds_dicyclic(2)
    assert r.lower == pytest.approx(0.5 * (8 + math.sqrt(4 + 144)))
    assert r.upper == pytest.approx(0.5 * (8 + math.sqrt(4 + 192)))
    assert r.sandwich_holds()


def test_distance_bounds_dicyclic_sweep():
    for n in range(2, 21):
        r = bounds.distance_bounds_dicyclic(n)
        assert r.upper >= r.lower - 1e-9
        assert r.sandwich_holds(), n


def test_lower_bound_is_quotient_radius():
    # each theorem's lower bound is the radius of its 2x2 quotient
    cases = []
    for n in (5, 6, 10, 12):
        g = groups.dihedral(n)
        a = graphs.build_structural(g)
        cases.append((a, g, bounds.adjacency_bounds_dihedral(n).lower))
        d = graphs.distance_matrix(a)
        cases.append((d, g, bounds.distance_bounds_dihedral(n).lower))
    for n in (2, 3, 6):
        g = groups.dicyclic(n)
        a = graphs.build_structural(g)
        cases.append((a, g, bounds.adjacency_bounds_dicyclic(n).lower))
        d = graphs.distance_matrix(a)
        cases.append((d, g, bounds.distance_bounds_dicyclic(n).lower))
    for n in (6, 10, 12):
        g = groups.cyclic(n)
        a = graphs.build_structural(g)
        cases.append((a, g, bounds.adjacency_lower_cyclic(n).lower))
        d = graphs.distance_matrix(a)
        cases.append((d, g, bounds.distance_bounds_cyclic(n).lower))
    for m, g, lower in cases:
        quot = spectra.quotient_eigenvalues(m, graphs.partition_blocks(g))
        assert abs(quot[0] - lower) <= 1e-9, g


def test_compare_d12():
    r = bounds.adjacency_bounds_dihedral(6)
    rec = bounds.compare(r)
    assert rec.lower_delta == pytest.approx(4.55297 - 4.42788, abs=1e-4)
    assert rec.upper_delta == pytest.approx(6.87737 - 6, abs=1e-4)
    assert rec.improved


def test_compare_q12():
    rec = bounds.compare(bounds.adjacency_bounds_dicyclic(3))
    assert rec.upper_delta == pytest.approx(7.89198 - 7, abs=1e-4)
    assert rec.improved


def test_compare_prime_power_improvement():
    for n in (4, 8, 9, 25):
        assert bounds.compare(bounds.adjacency_bounds_dihedral(n)).improved
    for m in (1, 2, 3):
        assert bounds.compare(bounds.adjacency_bounds_dicyclic(2**m)).improved


def test_semiprime_report():
    r = bounds.semiprime_report(2, 3, "adjacency")
    assert r.lower == r.upper
    assert abs(r.lower - r.computed_radius) <= 1e-7
    assert r.p == 2 and r.q == 3 and r.n == 6
    with pytest.raises(DomainError):
        bounds.semiprime_report(2, 3, "laplacian")


def test_bound_report_json_schema():
    payload = bounds.adjacency_bounds_dihedral(6).to_json_dict()
    assert {"family", "n", "kind", "lower", "upper", "radius", "lower_tight",
            "upper_tight", "prior_lower", "prior_upper",
            "degenerate"} <= set(payload)


def test_bound_inputs_validation():
    bounds.BoundInputs(l=3, d_avg=Fraction(11, 3), d_min=Fraction(3))
    with pytest.raises(DomainError):
        bounds.BoundInputs(l=1)
    with pytest.raises(DomainError):
        bounds.BoundInputs(l=3, d_avg=Fraction(2), d_min=Fraction(3))
    with pytest.raises(DomainError):
        bounds.BoundInputs(l=3, T_avg=Fraction(-1))


def test_domain_errors():
    with pytest.raises(DomainError):
        bounds.adjacency_bounds_dihedral(2)
    with pytest.raises(DomainError):
        bounds.adjacency_bounds_dicyclic(1)
    with pytest.raises(DomainError):
        bounds.distance_bounds_cyclic(1)
    with pytest.raises(DomainError):
        bounds.adjacency_cubic_semiprime(4, 5)
