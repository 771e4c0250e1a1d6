#include "chow.hpp"

#include <stdexcept>

namespace k3 {

GradedClass GradedClass::constant(std::size_t bound, const mpq_class& c) {
    GradedClass out(bound);
    out.add_term(0, 0, c);
    return out;
}

mpq_class GradedClass::coeff(long xe, long te) const {
    auto it = terms_.find(Monomial{xe, te});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void GradedClass::add_term(long xe, long te, const mpq_class& c) {
    if (xe < 0 || te < 0)
        throw std::invalid_argument("GradedClass: negative exponent");
    if (c == 0 || static_cast<std::size_t>(xe + te) > bound_) return;
    auto [it, inserted] = terms_.try_emplace(Monomial{xe, te}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedClass GradedClass::graded_part(std::size_t degree) const {
    GradedClass out(bound_);
    for (const auto& [m, c] : terms_)
        if (static_cast<std::size_t>(m.xe + m.te) == degree) out.add_term(m.xe, m.te, c);
    return out;
}

bool GradedClass::operator==(const GradedClass& other) const {
    if (bound_ != other.bound_ || terms_.size() != other.terms_.size()) return false;
    auto it = other.terms_.begin();
    for (const auto& [m, c] : terms_) {
        if (m != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
    if (a.bound() != b.bound())
        throw std::invalid_argument("GradedClass: bound mismatch");
    GradedClass out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m.xe, m.te, c);
    return out;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) {
    if (a.bound() != b.bound())
        throw std::invalid_argument("GradedClass: bound mismatch");
    GradedClass out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m.xe, m.te, -c);
    return out;
}

GradedClass operator*(const mpq_class& c, const GradedClass& a) {
    GradedClass out(a.bound());
    for (const auto& [m, v] : a.terms()) out.add_term(m.xe, m.te, c * v);
    return out;
}

GradedClass graded_mul(const GradedClass& a, const GradedClass& b) {
    if (a.bound() != b.bound())
        throw std::invalid_argument("graded_mul: bound mismatch");
    GradedClass out(a.bound());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(ma.xe + mb.xe, ma.te + mb.te, ca * cb);
    return out;
}

BundleData::BundleData(long g_, long n_, long d_) : g(g_), n(n_), d(d_) {
    if (g < 0) throw std::invalid_argument("BundleData: genus must be >= 0");
    if (n < 1) throw std::invalid_argument("BundleData: symmetric power must be >= 1");
}

mpz_class ext_binomial(long m, unsigned long i) {
    if (i == 0) return 1;
    if (m >= 0) {
        if (m < static_cast<long>(i)) return 0;
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), i);
        return r;
    }
    // m < 0: falling factorial m(m-1)...(m-i+1) over i!, an exact integer.
    mpz_class num = 1;
    for (unsigned long t = 0; t < i; ++t) num *= mpz_class(m - static_cast<long>(t));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), i);
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return r;
}

namespace {

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/* mpq_class(num, den) does not reduce; gmpxx arithmetic requires canonical
 * operands. */
mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

GradedClass chern_character_fn(const BundleData& b) {
    const auto bound = static_cast<std::size_t>(b.n);
    GradedClass ch(bound);
    ch.add_term(0, 0, mpq_class(b.d + 1 - b.g));
    // (2n + g - 1 - d + 4 theta) * sum_a (-2x)^a / a!
    const mpq_class scalar(2 * b.n + b.g - 1 - b.d);
    mpz_class sign_pow = 1;  // (-2)^a
    for (long a = 0; a <= b.n; ++a) {
        const mpq_class base =
            make_rational(sign_pow, factorial(static_cast<unsigned long>(a)));
        ch.add_term(a, 0, scalar * base);
        ch.add_term(a, 1, 4 * base);
        sign_pow *= -2;
    }
    return ch;
}

/* Newton's identities: with p_i = i! ch_i the power sums of the Chern
 * roots, the elementary symmetric functions e_k = c_k satisfy
 *
 *     k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
 *
 * Each graded part is homogeneous, so the products stay small. */
std::vector<GradedClass> chern_classes_from_character(const GradedClass& ch) {
    const std::size_t bound = ch.bound();
    const mpq_class rank = ch.coeff(0, 0);
    if (rank.get_den() != 1 || rank < 0)
        throw std::domain_error(
            "chern_classes_from_character: degree-0 part must be a non-negative integer rank");

    std::vector<GradedClass> p;  // p[i] for i >= 1
    p.reserve(bound);
    for (std::size_t i = 1; i <= bound; ++i)
        p.push_back(mpq_class(factorial(i)) * ch.graded_part(i));

    std::vector<GradedClass> e;
    e.push_back(GradedClass::constant(bound, 1));
    for (std::size_t k = 1; k <= bound; ++k) {
        GradedClass acc(bound);
        for (std::size_t i = 1; i <= k; ++i) {
            const GradedClass prod = graded_mul(e[k - i], p[i - 1]);
            acc = (i % 2 == 1) ? acc + prod : acc - prod;
        }
        e.push_back(mpq_class(1, static_cast<long>(k)) * acc);
    }
    return e;
}

GradedClass chern_fn_closed_form(const BundleData& b, long k) {
    const auto bound = static_cast<std::size_t>(b.n);
    GradedClass out(bound);
    if (k == b.n - 1) {
        // c_{n-1} = sum_k binom(d-n-g-1, k) 2^{2n-2-k} / (n-1-k)! x^k theta^{n-1-k}
        for (long j = 0; j <= b.n - 1; ++j) {
            const mpq_class c = make_rational(
                ext_binomial(b.d - b.n - b.g - 1, static_cast<unsigned long>(j)) *
                    pow2(static_cast<unsigned long>(2 * b.n - 2 - j)),
                factorial(static_cast<unsigned long>(b.n - 1 - j)));
            out.add_term(j, b.n - 1 - j, c);
        }
    } else if (k == b.n) {
        // c_n = sum_k binom(d-n-g, k) 2^{2n-k} / (n-k)! x^k theta^{n-k}
        for (long j = 0; j <= b.n; ++j) {
            const mpq_class c = make_rational(
                ext_binomial(b.d - b.n - b.g, static_cast<unsigned long>(j)) *
                    pow2(static_cast<unsigned long>(2 * b.n - j)),
                factorial(static_cast<unsigned long>(b.n - j)));
            out.add_term(j, b.n - j, c);
        }
    } else {
        throw std::domain_error("chern_fn_closed_form: only k = n-1 and k = n are displayed");
    }
    return out;
}

GradedClass c1_symmetric_product(long g, long n) {
    if (n < 1)
        throw std::invalid_argument("c1_symmetric_product: n must be >= 1");
    GradedClass out(static_cast<std::size_t>(n));
    out.add_term(1, 0, mpq_class(-(g - n - 1)));
    out.add_term(0, 1, mpq_class(-1));
    return out;
}

mpq_class intersection_eval(const GradedClass& c, long g) {
    if (g < 0)
        throw std::domain_error("intersection_eval: genus must be >= 0");
    // theta^m pairs via the Poincare formula to g!/(g-m)! and dies past the
    // dimension of the Jacobian.
    mpq_class total = 0;
    for (const auto& [m, coeff] : c.terms()) {
        if (static_cast<std::size_t>(m.xe + m.te) != c.bound()) continue;
        if (m.te > g) continue;
        total += coeff * make_rational(factorial(static_cast<unsigned long>(g)),
                                       factorial(static_cast<unsigned long>(g - m.te)));
    }
    return total;
}

GradedClass degeneracy_bracket(const BundleData& b) {
    return c1_symmetric_product(b.g, b.n) - chern_character_fn(b).graded_part(1);
}

mpq_class degeneracy_genus(const BundleData& b) {
    const GradedClass cn = chern_fn_closed_form(b, b.n);
    const GradedClass cn1 = chern_fn_closed_form(b, b.n - 1);
    const mpq_class val = mpq_class(2 - b.n) * intersection_eval(cn, b.g) +
                          intersection_eval(graded_mul(cn1, degeneracy_bracket(b)), b.g);
    return (mpq_class(2) - val) / 2;
}

mpq_class closed_form_genus_44(long r) {
    if (r < 5)
        throw std::domain_error("closed_form_genus_44: the closed form holds for r >= 5 only");
    const mpz_class rr(r);
    const mpz_class quintic = 16 * rr * rr * rr * rr * rr - 64 * rr * rr * rr * rr +
                              508 * rr * rr * rr - 1856 * rr * rr + 3133 * rr - 2028;
    mpz_class four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(r + 3));
    const mpq_class pa = 1 + make_rational(four_pow * quintic, 6);
    if (pa.get_den() != 1 || pa <= 0)
        throw std::logic_error("closed_form_genus_44: expected a positive integer");
    return pa;
}

std::string graded_to_json(const GradedClass& c) {
    std::string out = "[";
    bool first = true;
    for (const auto& [m, coeff] : c.terms()) {
        if (!first) out += ",";
        first = false;
        out += "{\"x\":" + std::to_string(m.xe) + ",\"theta\":" + std::to_string(m.te) +
               ",\"coeff\":\"" + coeff.get_str() + "\"}";
    }
    out += "]";
    return out;
}

}  // namespace k3
