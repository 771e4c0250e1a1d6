#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace k3 {

/// Exponent pair of the monomial x^xe * theta^te.
struct Monomial {
    long xe;
    long te;
    auto operator<=>(const Monomial&) const = default;
};

/// Polynomial in the two commuting degree-1 generators x, theta with exact
/// rational coefficients, truncated above total degree `bound` (the complex
/// dimension of the ambient symmetric product). Zero coefficients are never
/// stored.
class GradedClass {
public:
    explicit GradedClass(std::size_t bound) : bound_(bound) {}

    static GradedClass constant(std::size_t bound, const mpq_class& c);

    std::size_t bound() const { return bound_; }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of x^xe * theta^te (zero if absent).
    mpq_class coeff(long xe, long te) const;

    /// Adds c * x^xe * theta^te; terms above the degree bound are discarded.
    void add_term(long xe, long te, const mpq_class& c);

    /// Homogeneous part of the given total degree.
    GradedClass graded_part(std::size_t degree) const;

    bool operator==(const GradedClass& other) const;

private:
    std::size_t bound_;
    std::map<Monomial, mpq_class> terms_;
};

GradedClass operator+(const GradedClass& a, const GradedClass& b);
GradedClass operator-(const GradedClass& a, const GradedClass& b);
GradedClass operator*(const mpq_class& c, const GradedClass& a);

/// Product in the truncated ring. Bounds must agree.
GradedClass graded_mul(const GradedClass& a, const GradedClass& b);

/// Genus, symmetric power and line-bundle degree that determine the rank-2n
/// secant bundle F_N on C_n.
struct BundleData {
    long g;
    long n;
    long d;
    BundleData(long g, long n, long d);
};

/// Binomial coefficient extended to all integer m: 0 when 0 <= m < i,
/// m(m-1)...(m-i+1)/i! when m < 0 (always an integer), 1 when i = 0.
mpz_class ext_binomial(long m, unsigned long i);

/// ch(F_N) = d + 1 - g + (2n + g - 1 - d + 4*theta) e^{-2x}, truncated at
/// total degree n. The degree-0 part is the rank 2n.
GradedClass chern_character_fn(const BundleData& b);

/// Total Chern class components c_0 .. c_bound recovered from a Chern
/// character by the Newton power-sum/elementary-symmetric recurrence.
/// The degree-0 part of ch must be a non-negative integer (the rank).
std::vector<GradedClass> chern_classes_from_character(const GradedClass& ch);

/// The displayed closed-form summations for c_{n-1}(F_N) and c_n(F_N);
/// only k = n-1 and k = n are defined.
GradedClass chern_fn_closed_form(const BundleData& b, long k);

/// c_1 of the symmetric product C_n: -(g - n - 1) x - theta.
GradedClass c1_symmetric_product(long g, long n);

/// Evaluation against [C_n]: top-degree monomials x^{n-m} theta^m pair to
/// g!/(g-m)! for m <= g and to 0 for m > g; lower-degree terms vanish.
mpq_class intersection_eval(const GradedClass& c, long g);

/// c_1(C_n) - c_1(F_N), computed symbolically from the two degree-1 classes
/// (never from a printed coefficient form).
GradedClass degeneracy_bracket(const BundleData& b);

/// Arithmetic genus of the expected-dimension-1 degeneracy locus from
/// 2 - 2 p_a = (2 - n) c_n(F) + c_{n-1}(F) [c_1(X) - c_1(F)].
mpq_class degeneracy_genus(const BundleData& b);

/// Closed-form p_a for the (4,4)-branch-curve case (g, n, d) =
/// (9, 2r, 4r+4): p_a = 1 + 4^{r+3} (16r^5 - 64r^4 + 508r^3 - 1856r^2 +
/// 3133r - 2028) / 6. Valid for r >= 5; always a positive integer.
mpq_class closed_form_genus_44(long r);

/// JSON list of {"x": a, "theta": b, "coeff": "p/q"}, sorted by exponents.
std::string graded_to_json(const GradedClass& c);

}  // namespace k3
