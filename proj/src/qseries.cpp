#include "qseries.hpp"

#include <stdexcept>

namespace k3 {

QSeries QSeries::zero(std::size_t order) {
    return QSeries(std::vector<mpz_class>(order));
}

QSeries QSeries::one(std::size_t order) {
    std::vector<mpz_class> c(order);
    if (order > 0) c[0] = 1;
    return QSeries(std::move(c));
}

const mpz_class& QSeries::coeff(std::size_t n) const {
    if (n >= coeffs_.size())
        throw std::out_of_range("QSeries::coeff: index past truncation order");
    return coeffs_[n];
}

QSeries QSeries::truncated(std::size_t order) const {
    if (order >= coeffs_.size()) return *this;
    return QSeries(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + order));
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<mpz_class> c(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; i + j < order; ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.coeff(i).get_mpz_t(), b.coeff(j).get_mpz_t());
    }
    return QSeries(std::move(c));
}

QSeries series_inv(const QSeries& a) {
    if (a.order() == 0 || (a.coeff(0) != 1 && a.coeff(0) != -1))
        throw std::domain_error("series_inv: constant term must be 1 or -1");
    const std::size_t order = a.order();
    const bool negate = a.coeff(0) == -1;
    std::vector<mpz_class> b(order);
    b[0] = a.coeff(0);
    mpz_class acc;
    for (std::size_t n = 1; n < order; ++n) {
        // a0 * b_n = -(a_1 b_{n-1} + ... + a_n b_0), with a0 = +-1
        acc = 0;
        for (std::size_t j = 1; j <= n; ++j)
            mpz_addmul(acc.get_mpz_t(), a.coeff(j).get_mpz_t(), b[n - j].get_mpz_t());
        b[n] = negate ? acc : -acc;
    }
    return QSeries(std::move(b));
}

QSeries series_pow(const QSeries& a, unsigned long e) {
    QSeries result = QSeries::one(a.order());
    QSeries base = a;
    while (e > 0) {
        if (e & 1) result = series_mul(result, base);
        e >>= 1;
        if (e > 0) base = series_mul(base, base);
    }
    return result;
}

/* Coefficients of F = prod_{m>=1} (1-q^m)^k from the logarithmic
 * derivative: q F'/F = -k sum_{n>=1} sigma_1(n) q^n, which gives the
 * recurrence
 *
 *     n F_n = -k sum_{j=1}^{n} sigma_1(j) F_{n-j},       F_0 = 1.
 *
 * The division by n is exact because F has integer coefficients. The
 * divisor sums are sieved up front; the inner loop is a single
 * word-by-bignum fused multiply-add, which is what makes high orders
 * cheap. */
QSeries eta_product(long k, std::size_t order) {
    if (order == 0)
        throw std::invalid_argument("eta_product: order must be >= 1");
    std::vector<mpz_class> c(order);
    c[0] = 1;
    if (k == 0 || order == 1) return QSeries(std::move(c));

    std::vector<unsigned long> sigma(order, 0);
    for (std::size_t d = 1; d < order; ++d)
        for (std::size_t m = d; m < order; m += d) sigma[m] += d;

    mpz_class acc;
    for (std::size_t n = 1; n < order; ++n) {
        acc = 0;
        for (std::size_t j = 1; j <= n; ++j)
            mpz_addmul_ui(acc.get_mpz_t(), c[n - j].get_mpz_t(), sigma[j]);
        acc *= -k;
        mpz_divexact_ui(c[n].get_mpz_t(), acc.get_mpz_t(), n);
    }
    return QSeries(std::move(c));
}

std::vector<mpz_class> yau_zaslow(std::size_t max_g) {
    return eta_product(-24, max_g + 1).coeffs();
}

std::vector<mpz_class> partition_numbers(std::size_t max_n) {
    return eta_product(-1, max_n + 1).coeffs();
}

mpz_class bl48_coefficient(std::size_t n) {
    return eta_product(-48, n + 1).coeff(n);
}

}  // namespace k3
