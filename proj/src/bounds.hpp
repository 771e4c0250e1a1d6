#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace k3 {

/// The assembled genus lower bound for a polarization of odd genus g = 2r+1,
/// with its ingredients: the fixed-fiber intersection count and the genus
/// floor of the double-tangency curve.
struct BoundReport {
    long g = 0;
    long r = 0;
    mpz_class bl_count;
    int omega_genus_lb = 9;
    mpz_class severi_genus_lb;
};

/// Least-squares fit of log(coefficient) against sqrt(n); the only
/// floating-point computation in the library.
struct AsymptoticFit {
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    double estimated_c = 0.0;
    double max_relative_residual = 0.0;
};

/// g from the self-intersection c_1(L)^2 = 2g - 2; input must be positive
/// and even.
long polarization_genus(long l_self_intersection);

/// Theorem-level chain for odd g >= 3: bl_count = bl48_coefficient(r - 1)
/// and severi_genus_lb = bl_count * (omega_genus_lb - 1) with
/// omega_genus_lb = 9. Even g is rejected, not approximated.
BoundReport severi_lower_bound(long g);

/// OLS slope of log(bl48_coefficient(n)) vs sqrt(n) over [n_min, n_max],
/// with the worst relative residual of the fit. Requires 10 <= n_min < n_max.
AsymptoticFit asymptotic_fit(std::size_t n_min, std::size_t n_max);

/// Conjectural arithmetic-genus lower bound for odd g = 2r + 1 with r >= 5:
/// the closed-form degeneracy-locus genus. Callers should label the value
/// conjectural.
mpz_class appendix_conjectural_bound(long g);

/// {"g":..., "r":..., "bl_count":"...", "omega_genus_lb":9,
///  "severi_genus_lb":"..."} with counts as decimal strings.
std::string bound_report_to_json(const BoundReport& report);

}  // namespace k3
