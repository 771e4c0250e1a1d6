#include "k3calc.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "admissible.hpp"
#include "bounds.hpp"
#include "chow.hpp"
#include "qseries.hpp"
#include "verify.hpp"

struct k3_series {
    k3::QSeries value;
};

struct k3_seq_list {
    std::vector<k3::AdmissibleSeq> value;
};

struct k3_bound_report {
    k3::BoundReport value;
};

struct k3_verify_result {
    k3::VerifyReport value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

k3_status fail(k3_status status, const char* what) {
    g_last_error = what;
    return status;
}

/* Runs `fn`, translating C++ exceptions into status codes. */
template <typename Fn>
k3_status guarded(Fn&& fn) {
    try {
        fn();
        return K3_OK;
    } catch (const std::domain_error& e) {
        return fail(K3_ERROR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(K3_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(K3_ERROR_INTERNAL, e.what());
    }
}

k3_status out_string(const std::string& s, char** out) {
    char* copy = dup_string(s);
    if (copy == nullptr) return fail(K3_ERROR_INTERNAL, "out of memory");
    *out = copy;
    return K3_OK;
}

/* Computes a string under `guarded` and hands it to the caller. */
template <typename Fn>
k3_status guarded_string(char** out, Fn&& fn) {
    if (out == nullptr) return fail(K3_ERROR_INVALID_ARGUMENT, "null out pointer");
    std::string value;
    const k3_status status = guarded([&] { value = fn(); });
    if (status != K3_OK) return status;
    return out_string(value, out);
}

}  // namespace

extern "C" {

const char* k3_status_str(k3_status status) {
    switch (status) {
        case K3_OK: return "ok";
        case K3_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case K3_ERROR_DOMAIN: return "domain error";
        case K3_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* k3_last_error(void) { return g_last_error.c_str(); }

void k3_string_free(char* s) { std::free(s); }

/* ---- series ------------------------------------------------------------- */

k3_status k3_series_eta_product(int64_t k, size_t order, k3_series** out) {
    if (out == nullptr) return fail(K3_ERROR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] {
        *out = new k3_series{k3::eta_product(static_cast<long>(k), order)};
    });
}

k3_status k3_series_mul(const k3_series* a, const k3_series* b, k3_series** out) {
    if (a == nullptr || b == nullptr || out == nullptr)
        return fail(K3_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new k3_series{k3::series_mul(a->value, b->value)}; });
}

k3_status k3_series_inverse(const k3_series* a, k3_series** out) {
    if (a == nullptr || out == nullptr)
        return fail(K3_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new k3_series{k3::series_inv(a->value)}; });
}

k3_status k3_series_yau_zaslow(size_t max_g, k3_series** out) {
    if (out == nullptr) return fail(K3_ERROR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] { *out = new k3_series{k3::QSeries(k3::yau_zaslow(max_g))}; });
}

k3_status k3_series_partition_numbers(size_t max_n, k3_series** out) {
    if (out == nullptr) return fail(K3_ERROR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] { *out = new k3_series{k3::QSeries(k3::partition_numbers(max_n))}; });
}

size_t k3_series_order(const k3_series* s) { return s == nullptr ? 0 : s->value.order(); }

k3_status k3_series_coefficient(const k3_series* s, size_t n, char** out_decimal) {
    if (s == nullptr || out_decimal == nullptr)
        return fail(K3_ERROR_INVALID_ARGUMENT, "null argument");
    if (n >= s->value.order())
        return fail(K3_ERROR_INVALID_ARGUMENT, "coefficient index past truncation order");
    return out_string(s->value.coeff(n).get_str(), out_decimal);
}

void k3_series_free(k3_series* s) { delete s; }

k3_status k3_bl48_coefficient(size_t n, char** out_decimal) {
    return guarded_string(out_decimal, [&] { return k3::bl48_coefficient(n).get_str(); });
}

/* ---- admissible sequences ------------------------------------------------ */

k3_status k3_enumerate_one_admissible(int64_t a, k3_seq_list** out) {
    if (out == nullptr) return fail(K3_ERROR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] {
        *out = new k3_seq_list{k3::enumerate_one_admissible(static_cast<long>(a))};
    });
}

size_t k3_seq_list_size(const k3_seq_list* list) {
    return list == nullptr ? 0 : list->value.size();
}

int64_t k3_seq_list_left(const k3_seq_list* list, size_t i) {
    if (list == nullptr || i >= list->value.size()) return -1;
    return list->value[i].left();
}

size_t k3_seq_list_length(const k3_seq_list* list, size_t i) {
    if (list == nullptr || i >= list->value.size()) return 0;
    return list->value[i].values().size();
}

int64_t k3_seq_list_value(const k3_seq_list* list, size_t i, size_t j) {
    if (list == nullptr || i >= list->value.size()) return 0;
    const auto& vals = list->value[i].values();
    return j < vals.size() ? vals[j] : 0;
}

void k3_seq_list_free(k3_seq_list* list) { delete list; }

k3_status k3_fixed_fiber_count(int64_t r, char** out_decimal) {
    return guarded_string(
        out_decimal, [&] { return k3::fixed_fiber_count(static_cast<long>(r)).get_str(); });
}

/* ---- bounds --------------------------------------------------------------- */

k3_status k3_severi_lower_bound(int64_t g, k3_bound_report** out) {
    if (out == nullptr) return fail(K3_ERROR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] {
        *out = new k3_bound_report{k3::severi_lower_bound(static_cast<long>(g))};
    });
}

int64_t k3_bound_report_g(const k3_bound_report* r) { return r == nullptr ? 0 : r->value.g; }
int64_t k3_bound_report_r(const k3_bound_report* r) { return r == nullptr ? 0 : r->value.r; }

int k3_bound_report_omega_genus_lb(const k3_bound_report* r) {
    return r == nullptr ? 0 : r->value.omega_genus_lb;
}

k3_status k3_bound_report_bl_count(const k3_bound_report* r, char** out_decimal) {
    if (r == nullptr || out_decimal == nullptr)
        return fail(K3_ERROR_INVALID_ARGUMENT, "null argument");
    return out_string(r->value.bl_count.get_str(), out_decimal);
}

k3_status k3_bound_report_severi_genus_lb(const k3_bound_report* r, char** out_decimal) {
    if (r == nullptr || out_decimal == nullptr)
        return fail(K3_ERROR_INVALID_ARGUMENT, "null argument");
    return out_string(r->value.severi_genus_lb.get_str(), out_decimal);
}

k3_status k3_bound_report_json(const k3_bound_report* r, char** out_json) {
    if (r == nullptr || out_json == nullptr)
        return fail(K3_ERROR_INVALID_ARGUMENT, "null argument");
    return out_string(k3::bound_report_to_json(r->value), out_json);
}

void k3_bound_report_free(k3_bound_report* r) { delete r; }

k3_status k3_asymptotic_fit(size_t n_min, size_t n_max, double* out_c,
                            double* out_max_rel_residual) {
    if (out_c == nullptr || out_max_rel_residual == nullptr)
        return fail(K3_ERROR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] {
        const k3::AsymptoticFit fit = k3::asymptotic_fit(n_min, n_max);
        *out_c = fit.estimated_c;
        *out_max_rel_residual = fit.max_relative_residual;
    });
}

/* ---- appendix --------------------------------------------------------------- */

k3_status k3_appendix_genus_closed_form(int64_t r, char** out_decimal) {
    return guarded_string(out_decimal, [&] {
        return k3::closed_form_genus_44(static_cast<long>(r)).get_str();
    });
}

k3_status k3_degeneracy_genus(int64_t g, int64_t n, int64_t d, char** out_rational) {
    return guarded_string(out_rational, [&] {
        const k3::BundleData b(static_cast<long>(g), static_cast<long>(n),
                               static_cast<long>(d));
        return k3::degeneracy_genus(b).get_str();
    });
}

k3_status k3_degeneracy_bracket_json(int64_t g, int64_t n, int64_t d, char** out_json) {
    return guarded_string(out_json, [&] {
        const k3::BundleData b(static_cast<long>(g), static_cast<long>(n),
                               static_cast<long>(d));
        return k3::graded_to_json(k3::degeneracy_bracket(b));
    });
}

k3_status k3_appendix_genus_crosscheck(int64_t r, int* out_match) {
    if (out_match == nullptr) return fail(K3_ERROR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] {
        const long rl = static_cast<long>(r);
        const k3::BundleData b(9, 2 * rl, 4 * rl + 4);
        *out_match = k3::degeneracy_genus(b) == k3::closed_form_genus_44(rl) ? 1 : 0;
    });
}

/* ---- verification ------------------------------------------------------------ */

k3_status k3_verify(const char* suite, int64_t max_n, k3_verify_result** out) {
    if (suite == nullptr || out == nullptr)
        return fail(K3_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new k3_verify_result{k3::run_verify(suite, static_cast<long>(max_n))};
    });
}

size_t k3_verify_count(const k3_verify_result* r) {
    return r == nullptr ? 0 : r->value.checks.size();
}

const char* k3_verify_name(const k3_verify_result* r, size_t i) {
    if (r == nullptr || i >= r->value.checks.size()) return "";
    return r->value.checks[i].name.c_str();
}

int k3_verify_passed(const k3_verify_result* r, size_t i) {
    if (r == nullptr || i >= r->value.checks.size()) return 0;
    return r->value.checks[i].passed ? 1 : 0;
}

const char* k3_verify_detail(const k3_verify_result* r, size_t i) {
    if (r == nullptr || i >= r->value.checks.size()) return "";
    return r->value.checks[i].detail.c_str();
}

int k3_verify_all_passed(const k3_verify_result* r) {
    return r != nullptr && r->value.all_passed() ? 1 : 0;
}

void k3_verify_free(k3_verify_result* r) { delete r; }

}  // extern "C"
