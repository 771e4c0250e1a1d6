#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "admissible.hpp"
#include "bounds.hpp"
#include "chow.hpp"
#include "qseries.hpp"

namespace k3 {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed; });
}

namespace {

/* Exhaustive partition count, independent of any generating function. */
long count_partitions(long n, long max_part) {
    if (n == 0) return 1;
    long total = 0;
    for (long first = std::min(n, max_part); first >= 1; --first)
        total += count_partitions(n - first, first);
    return total;
}

void add_check(VerifyReport& report, const std::string& name, bool passed,
               const std::string& detail) {
    report.checks.push_back(VerifyCheck{name, passed, detail});
}

void verify_qseries(VerifyReport& report, long max_n) {
    const long depth = max_n > 0 ? std::min<long>(max_n, 40) : 20;
    const QSeries p = eta_product(-1, static_cast<std::size_t>(depth) + 1);
    bool ok = true;
    for (long n = 0; n <= depth; ++n)
        ok = ok && p.coeff(static_cast<std::size_t>(n)) == count_partitions(n, n);
    add_check(report, "partition-enumeration-vs-eta", ok,
              "exhaustive partition counts match the k=-1 product up to n=" +
                  std::to_string(depth));

    ok = true;
    const std::size_t order = 128;
    for (auto [k1, k2] : {std::pair<long, long>{-48, 48}, {-24, -24}, {-1, -47},
                          {17, -17}, {5, 7}, {0, -3}}) {
        ok = ok && series_mul(eta_product(k1, order), eta_product(k2, order)) ==
                       eta_product(k1 + k2, order);
    }
    add_check(report, "eta-product-additivity", ok,
              "eta(k1)*eta(k2) == eta(k1+k2) on sampled exponent pairs, order 128");

    const QSeries yz = eta_product(-24, 201);
    ok = series_mul(yz, yz) == eta_product(-48, 201);
    add_check(report, "bl48-is-square-of-yau-zaslow", ok,
              "the k=-48 product equals the square of the k=-24 product, order 201");

    ok = series_inv(series_inv(yz.truncated(64))) == yz.truncated(64) &&
         series_inv(eta_product(1, 64)) == eta_product(-1, 64);
    add_check(report, "inverse-round-trip", ok, "series_inv is an involution on units");

    ok = true;
    for (long k : {-1L, -24L, -48L}) {
        const QSeries s = eta_product(k, 200);
        for (std::size_t n = 0; n < 200; ++n) ok = ok && s.coeff(n) > 0;
    }
    add_check(report, "negative-exponent-positivity", ok,
              "all coefficients of eta(k) are strictly positive for k < 0");
}

void verify_admissible(VerifyReport& report, long max_n) {
    const long depth = max_n > 0 ? std::min<long>(max_n, 20) : 12;
    const auto p = partition_numbers(static_cast<std::size_t>(depth));

    bool counts_ok = true, bijection_ok = true, shape_ok = true, virtual_ok = true;
    for (long a = 1; a <= depth; ++a) {
        const auto seqs = enumerate_one_admissible(a);
        counts_ok = counts_ok && mpz_class(static_cast<long>(seqs.size())) ==
                                     p[static_cast<std::size_t>(a)];

        std::set<std::vector<long>> images;
        long vsum = 0;
        for (const auto& s : seqs) {
            const Partition lambda = sequence_to_partition(s);
            bijection_ok = bijection_ok && partition_to_sequence(lambda) == s &&
                           lambda.weight() == a;
            images.insert(lambda.parts());
            vsum += virtual_count(s);

            // endpoints 1, unit steps, max on one contiguous plateau through 0
            shape_ok = shape_ok && s.values().front() == 1 && s.values().back() == 1;
            const long maxv = *std::max_element(s.values().begin(), s.values().end());
            long first = s.right() + 1, last = -s.left() - 1;
            for (long n = -s.left(); n <= s.right(); ++n) {
                shape_ok = shape_ok && std::abs(s.at(n) - s.at(n + 1)) <= 1;
                if (s.at(n) == maxv) { first = std::min(first, n); last = std::max(last, n); }
            }
            shape_ok = shape_ok && first <= 0 && 0 <= last;
            for (long n = first; n <= last; ++n) shape_ok = shape_ok && s.at(n) == maxv;
        }
        bijection_ok = bijection_ok && images.size() == seqs.size();
        virtual_ok = virtual_ok &&
                     mpz_class(vsum) == p[static_cast<std::size_t>(a)];
    }
    add_check(report, "one-admissible-count-vs-partitions", counts_ok,
              "|enumerate_one_admissible(a)| == p(a) for a <= " + std::to_string(depth));
    add_check(report, "diagonal-bijection-round-trip", bijection_ok,
              "sequence <-> partition round trips are identities with distinct images");
    add_check(report, "endpoint-and-plateau-shape", shape_ok,
              "endpoints are 1 and the maximum sits on a single plateau through index 0");
    add_check(report, "virtual-count-restates-p", virtual_ok,
              "sum of virtual counts over weight-a sequences equals p(a)");

    bool fiber_ok = true;
    const long rmax = max_n > 0 ? std::min<long>(2 * max_n, 40) : 20;
    for (long r = 1; r <= rmax; ++r)
        fiber_ok = fiber_ok &&
                   fixed_fiber_count(r) == bl48_coefficient(static_cast<std::size_t>(r - 1));
    add_check(report, "fixed-fiber-vs-bl48", fiber_ok,
              "48-fold convolution equals the direct k=-48 coefficient for r <= " +
                  std::to_string(rmax));
}

void verify_chow(VerifyReport& report, long max_n) {
    const long gmax = 6, nmax = 8, dmax = 16;

    bool newton_ok = true, c1_ok = true, bracket_ok = true;
    for (long g = 0; g <= gmax; ++g) {
        for (long n = 2; n <= nmax; ++n) {
            for (long d = 0; d <= dmax; ++d) {
                const BundleData b(g, n, d);
                const auto classes = chern_classes_from_character(chern_character_fn(b));
                newton_ok = newton_ok &&
                            classes[static_cast<std::size_t>(n - 1)] ==
                                chern_fn_closed_form(b, n - 1) &&
                            classes[static_cast<std::size_t>(n)] == chern_fn_closed_form(b, n);

                GradedClass printed_c1(static_cast<std::size_t>(n));
                printed_c1.add_term(1, 0, mpq_class(-4 * n - 2 * g + 2 * d + 2));
                printed_c1.add_term(0, 1, mpq_class(4));
                c1_ok = c1_ok && classes[1] == printed_c1;

                GradedClass forced(static_cast<std::size_t>(n));
                forced.add_term(1, 0, mpq_class(g + 5 * n - 2 * d - 1));
                forced.add_term(0, 1, mpq_class(-5));
                bracket_ok = bracket_ok && degeneracy_bracket(b) == forced;
            }
        }
    }
    add_check(report, "newton-vs-closed-form", newton_ok,
              "Newton-identity c_{n-1}, c_n match the closed-form sums on the sample grid");
    add_check(report, "c1-display-match", c1_ok,
              "degree-1 part of ch(F_N) equals (-4n-2g+2d+2)x + 4theta");
    add_check(report, "bracket-symbolic-subtraction", bracket_ok,
              "c_1(C_n) - c_1(F_N) == (g+5n-2d-1)x - 5theta on the sample grid");

    // The alternative coefficient form (3g+3n-2d-3)x - 3theta that appears
    // alongside the genus formula is inconsistent with it; the symbolic
    // bracket is what reproduces the specialization (2r)x - 5theta.
    bool spec_ok = true, printed_differs = false;
    for (long r = 5; r <= 12; ++r) {
        const BundleData b(9, 2 * r, 4 * r + 4);
        GradedClass special(static_cast<std::size_t>(2 * r));
        special.add_term(1, 0, mpq_class(2 * r));
        special.add_term(0, 1, mpq_class(-5));
        spec_ok = spec_ok && degeneracy_bracket(b) == special;

        GradedClass alt(static_cast<std::size_t>(2 * r));
        alt.add_term(1, 0, mpq_class(3 * b.g + 3 * b.n - 2 * b.d - 3));
        alt.add_term(0, 1, mpq_class(-3));
        printed_differs = printed_differs || !(alt == degeneracy_bracket(b));
    }
    add_check(report, "bracket-specialization-discrepancy", spec_ok && printed_differs,
              "bracket specializes to (2r)x - 5theta; the 3theta coefficient form differs "
              "and is documented as inconsistent");

    bool genus_ok = true;
    const long rmax = max_n > 0 ? std::min<long>(max_n, 40) : 16;
    for (long r = 5; r <= rmax; ++r)
        genus_ok = genus_ok &&
                   degeneracy_genus(BundleData(9, 2 * r, 4 * r + 4)) == closed_form_genus_44(r);
    add_check(report, "summation-vs-quintic", genus_ok,
              "degeneracy_genus(9, 2r, 4r+4) equals the closed-form quintic for 5 <= r <= " +
                  std::to_string(rmax));

    bool integral_ok = true;
    for (long r = 5; r <= 100; ++r) {
        const mpq_class pa = closed_form_genus_44(r);
        integral_ok = integral_ok && pa.get_den() == 1 && pa > 0;
    }
    add_check(report, "closed-form-integrality", integral_ok,
              "closed-form p_a is a positive integer for 5 <= r <= 100");
}

void verify_bounds(VerifyReport& report, long max_n) {
    const long gmax = max_n > 0 ? std::min<long>(2 * max_n + 1, 81) : 41;
    bool two_path_ok = true;
    for (long g = 3; g <= gmax; g += 2)
        two_path_ok = two_path_ok &&
                      severi_lower_bound(g).bl_count == fixed_fiber_count((g - 1) / 2);
    add_check(report, "two-path-bl-count", two_path_ok,
              "severi_lower_bound bl_count equals the 48-fold convolution for odd g <= " +
                  std::to_string(gmax));

    bool monotone_ok = true;
    mpz_class prev = severi_lower_bound(5).severi_genus_lb;
    for (long g = 7; g <= 101; g += 2) {
        const mpz_class cur = severi_lower_bound(g).severi_genus_lb;
        monotone_ok = monotone_ok && cur > prev;
        prev = cur;
    }
    add_check(report, "bound-strictly-increasing", monotone_ok,
              "severi_genus_lb strictly increases over odd g in [5, 101]");

    // log(bound)/sqrt(g) rises with shrinking increments: the e^{C sqrt g} shape.
    bool shape_ok = true;
    const QSeries bl = eta_product(-48, 201);
    double prev_val = 0, prev_diff = 0;
    int step = 0;
    for (long g = 101; g <= 401; g += 2, ++step) {
        const std::size_t idx = static_cast<std::size_t>((g - 1) / 2 - 1);
        signed long exp2;
        const double mant = mpz_get_d_2exp(&exp2, bl.coeff(idx).get_mpz_t());
        const double val =
            (std::log(mant) + exp2 * M_LN2 + std::log(8.0)) / std::sqrt(static_cast<double>(g));
        if (step >= 1) {
            const double diff = val - prev_val;
            shape_ok = shape_ok && diff > 0;
            if (step >= 2) shape_ok = shape_ok && diff < prev_diff;
            prev_diff = diff;
        }
        prev_val = val;
    }
    add_check(report, "bound-shape-exp-sqrt", shape_ok,
              "log(bound)/sqrt(g) increases with shrinking differences over odd g in "
              "[101, 401]");

    // The conjectural bound multiplies by a factor > 4 per unit of r,
    // decreasing toward 4, so it outpaces any e^{C sqrt g} shape.
    bool growth_ok = true;
    double prev_ratio = 0;
    for (long r = 5; r <= 60; ++r) {
        const mpq_class ratio_q(closed_form_genus_44(r + 1) / closed_form_genus_44(r));
        const double ratio = ratio_q.get_d();
        growth_ok = growth_ok && ratio > 4.0;
        if (r > 5) growth_ok = growth_ok && ratio < prev_ratio;
        prev_ratio = ratio;
    }
    add_check(report, "conjectural-growth-factor", growth_ok,
              "appendix bound ratio per unit r stays above 4 and decreases toward 4");

    const AsymptoticFit fit = asymptotic_fit(50, 400);
    add_check(report, "asymptotic-fit-sane",
              fit.estimated_c > 0 && fit.max_relative_residual < 0.05,
              "fit of log bl48(n) vs sqrt(n) over [50, 400] has positive slope and small "
              "residuals");
}

}  // namespace

VerifyReport run_verify(const std::string& suite, long max_n) {
    VerifyReport report;
    report.suite = suite;
    if (suite == "qseries") {
        verify_qseries(report, max_n);
    } else if (suite == "admissible") {
        verify_admissible(report, max_n);
    } else if (suite == "chow") {
        verify_chow(report, max_n);
    } else if (suite == "bounds") {
        verify_bounds(report, max_n);
    } else if (suite == "all") {
        verify_qseries(report, max_n);
        verify_admissible(report, max_n);
        verify_chow(report, max_n);
        verify_bounds(report, max_n);
    } else {
        throw std::invalid_argument(
            "run_verify: unknown suite '" + suite +
            "' (expected qseries, admissible, chow, bounds or all)");
    }
    return report;
}

}  // namespace k3
