#include "admissible.hpp"

#include <algorithm>
#include <stdexcept>

#include "qseries.hpp"

namespace k3 {

AdmissibleSeq::AdmissibleSeq(long left, std::vector<long> values)
    : left_(left), values_(std::move(values)) {
    if (left_ < 0)
        throw std::invalid_argument("AdmissibleSeq: left offset must be >= 0");
    if (values_.empty() || static_cast<std::size_t>(left_) >= values_.size())
        throw std::invalid_argument("AdmissibleSeq: index range must contain 0");
    for (long v : values_)
        if (v < 1) throw std::invalid_argument("AdmissibleSeq: entries must be positive");
}

long AdmissibleSeq::at(long n) const {
    const long i = n + left_;
    if (i < 0 || i >= static_cast<long>(values_.size())) return 0;
    return values_[static_cast<std::size_t>(i)];
}

long AdmissibleSeq::weight() const {
    long w = 0;
    for (long v : values_) w += v;
    return w;
}

bool AdmissibleSeq::operator<(const AdmissibleSeq& other) const {
    if (left_ != other.left_) return left_ < other.left_;
    return values_ < other.values_;
}

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

long Partition::weight() const {
    long w = 0;
    for (long p : parts_) w += p;
    return w;
}

bool is_one_admissible(const AdmissibleSeq& s) {
    // Outward steps, including the first step past the support where the
    // zero extension forces the endpoint value down to 1.
    for (long n = 0; n <= s.right(); ++n) {
        const long cur = s.at(n), next = s.at(n + 1);
        if (next != cur && next != cur - 1) return false;
    }
    for (long n = 0; n <= s.left(); ++n) {
        const long cur = s.at(-n), next = s.at(-n - 1);
        if (next != cur && next != cur - 1) return false;
    }
    return true;
}

int virtual_count(const AdmissibleSeq& s) {
    return is_one_admissible(s) ? 1 : 0;
}

namespace {

/* Tails t_1, ..., t_m descending from `from` by steps of 0 or 1, every
 * entry >= 1, final entry 1 (so the zero extension is reachable), total
 * weight exactly `budget`. The empty tail is allowed only when the value
 * before it is already 1. */
void descent_tails(long from, long budget, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
    if (budget == 0) {
        if (from == 1) out.push_back(cur);
        return;
    }
    for (long t : {from, from - 1}) {
        if (t >= 1 && t <= budget) {
            cur.push_back(t);
            descent_tails(t, budget - t, cur, out);
            cur.pop_back();
        }
    }
}

std::vector<std::vector<long>> descents(long from, long budget) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    descent_tails(from, budget, cur, out);
    return out;
}

}  // namespace

std::vector<AdmissibleSeq> enumerate_one_admissible(long a) {
    if (a < 1)
        throw std::domain_error("enumerate_one_admissible: weight must be >= 1");
    std::vector<AdmissibleSeq> out;
    // A 1-admissible sequence is its peak value s_0 plus a descent tail on
    // each side; enumerate peaks and weight splits.
    for (long peak = 1; peak <= a; ++peak) {
        const long rest = a - peak;
        for (long wl = 0; wl <= rest; ++wl) {
            const long wr = rest - wl;
            const auto lefts = descents(peak, wl);
            const auto rights = descents(peak, wr);
            for (const auto& lt : lefts) {
                for (const auto& rt : rights) {
                    std::vector<long> vals(lt.rbegin(), lt.rend());
                    vals.push_back(peak);
                    vals.insert(vals.end(), rt.begin(), rt.end());
                    out.emplace_back(static_cast<long>(lt.size()), std::move(vals));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

AdmissibleSeq partition_to_sequence(const Partition& lambda) {
    if (lambda.parts().empty())
        throw std::domain_error("partition_to_sequence: partition must be non-empty");
    const auto& parts = lambda.parts();
    const long rows = static_cast<long>(parts.size());
    // Diagonal j - i = n over cells (i, j), 0 <= j < lambda_i. Every
    // diagonal from -(rows-1) to lambda_0 - 1 is hit.
    const long lo = -(rows - 1), hi = parts[0] - 1;
    std::vector<long> vals(static_cast<std::size_t>(hi - lo + 1), 0);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < parts[static_cast<std::size_t>(i)]; ++j)
            ++vals[static_cast<std::size_t>(j - i - lo)];
    return AdmissibleSeq(-lo, std::move(vals));
}

Partition sequence_to_partition(const AdmissibleSeq& s) {
    if (!is_one_admissible(s))
        throw std::domain_error("sequence_to_partition: sequence is not 1-admissible");
    // On a Young diagram, diagonal n >= 0 occupies rows 0 .. s_n - 1 and
    // diagonal -m occupies rows m .. m + s_{-m} - 1, so row i collects one
    // cell from each diagonal covering it.
    const long rows = s.left() + 1;
    std::vector<long> parts(static_cast<std::size_t>(rows), 0);
    for (long i = 0; i < rows; ++i) {
        long len = 0;
        for (long n = 0; n <= s.right(); ++n)
            if (s.at(n) >= i + 1) ++len;
        for (long m = 1; m <= i; ++m)
            if (s.at(-m) >= i - m + 1) ++len;
        parts[static_cast<std::size_t>(i)] = len;
    }
    return Partition(std::move(parts));
}

mpz_class fixed_fiber_count(long r) {
    if (r < 1)
        throw std::domain_error("fixed_fiber_count: r must be >= 1");
    const auto order = static_cast<std::size_t>(r);
    const QSeries p = eta_product(-1, order);
    return series_pow(p, 48).coeff(order - 1);
}

}  // namespace k3
