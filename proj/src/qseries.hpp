#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace k3 {

/// Truncated formal power series in q with exact integer coefficients.
///
/// A series of order N stores the coefficients of q^0 .. q^{N-1}; all
/// arithmetic is exact in Z[q]/(q^N). Mixed-order operands truncate the
/// result to the smaller order, never the larger. Values are immutable
/// after construction.
class QSeries {
public:
    explicit QSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {}

    static QSeries zero(std::size_t order);
    static QSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const mpz_class& coeff(std::size_t n) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Copy truncated to min(order(), order) coefficients.
    QSeries truncated(std::size_t order) const;

    bool operator==(const QSeries& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<mpz_class> coeffs_;
};

/// Cauchy product, truncated to min(a.order, b.order).
QSeries series_mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse modulo q^order. The constant term must be a unit
/// (1 or -1); anything else throws std::domain_error.
QSeries series_inv(const QSeries& a);

/// a^e by repeated squaring at a.order.
QSeries series_pow(const QSeries& a, unsigned long e);

/// Truncation of prod_{m>=1} (1 - q^m)^k to `order` coefficients, any
/// integer k. Satisfies eta_product(k1) * eta_product(k2) ==
/// eta_product(k1 + k2) exactly up to truncation.
QSeries eta_product(long k, std::size_t order);

/// Rational-curve counts N_0 .. N_max_g (coefficients of the k = -24 product).
std::vector<mpz_class> yau_zaslow(std::size_t max_g);

/// Partition numbers p(0) .. p(max_n) (coefficients of the k = -1 product).
std::vector<mpz_class> partition_numbers(std::size_t max_n);

/// Coefficient of q^n in the k = -48 product; strictly positive.
mpz_class bl48_coefficient(std::size_t n);

}  // namespace k3
