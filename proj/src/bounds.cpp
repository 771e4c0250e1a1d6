#include "bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "chow.hpp"
#include "qseries.hpp"

namespace k3 {

long polarization_genus(long l_self_intersection) {
    if (l_self_intersection <= 0 || l_self_intersection % 2 != 0)
        throw std::domain_error(
            "polarization_genus: self-intersection 2g - 2 must be positive and even");
    return l_self_intersection / 2 + 1;
}

BoundReport severi_lower_bound(long g) {
    if (g < 3)
        throw std::domain_error("severi_lower_bound: genus must be >= 3");
    if (g % 2 == 0)
        throw std::domain_error(
            "severi_lower_bound: genus must be odd (g = 2r + 1); the even-genus case is not "
            "covered by this bound");
    BoundReport report;
    report.g = g;
    report.r = (g - 1) / 2;
    report.bl_count = bl48_coefficient(static_cast<std::size_t>(report.r - 1));
    report.omega_genus_lb = 9;
    report.severi_genus_lb = report.bl_count * (report.omega_genus_lb - 1);
    return report;
}

namespace {

double log_mpz(const mpz_class& v) {
    signed long exp2;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

}  // namespace

AsymptoticFit asymptotic_fit(std::size_t n_min, std::size_t n_max) {
    if (n_min < 10 || n_min >= n_max)
        throw std::domain_error("asymptotic_fit: range must satisfy 10 <= n_min < n_max");
    const QSeries series = eta_product(-48, n_max + 1);

    double st = 0, sy = 0, stt = 0, sty = 0;
    const double count = static_cast<double>(n_max - n_min + 1);
    for (std::size_t n = n_min; n <= n_max; ++n) {
        const double t = std::sqrt(static_cast<double>(n));
        const double y = log_mpz(series.coeff(n));
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
    }
    const double slope = (count * sty - st * sy) / (count * stt - st * st);
    const double intercept = (sy - slope * st) / count;

    double max_rel = 0;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        const double t = std::sqrt(static_cast<double>(n));
        const double y = log_mpz(series.coeff(n));
        max_rel = std::max(max_rel, std::fabs(y - (slope * t + intercept)) / std::fabs(y));
    }
    return AsymptoticFit{n_min, n_max, slope, max_rel};
}

mpz_class appendix_conjectural_bound(long g) {
    if (g % 2 == 0)
        throw std::domain_error("appendix_conjectural_bound: genus must be odd (g = 2r + 1)");
    const long r = (g - 1) / 2;
    if (r < 5)
        throw std::domain_error(
            "appendix_conjectural_bound: requires g >= 11 (the closed form holds for r >= 5)");
    return mpz_class(closed_form_genus_44(r).get_num());
}

std::string bound_report_to_json(const BoundReport& report) {
    return "{\"g\":" + std::to_string(report.g) + ",\"r\":" + std::to_string(report.r) +
           ",\"bl_count\":\"" + report.bl_count.get_str() +
           "\",\"omega_genus_lb\":" + std::to_string(report.omega_genus_lb) +
           ",\"severi_genus_lb\":\"" + report.severi_genus_lb.get_str() + "\"}";
}

}  // namespace k3
