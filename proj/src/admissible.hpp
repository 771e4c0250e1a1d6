#pragma once

#include <vector>

#include <gmpxx.h>

namespace k3 {

/// Finitely supported sequence of positive integers s_{-j}, ..., s_0, ..., s_k.
///
/// The index range is contiguous and always contains 0: values[i] holds
/// s_{i - left}, so left is the offset j >= 0 of the first index. Two
/// sequences with equal values but different offsets are distinct.
class AdmissibleSeq {
public:
    AdmissibleSeq(long left, std::vector<long> values);

    long left() const { return left_; }
    long right() const { return static_cast<long>(values_.size()) - 1 - left_; }
    const std::vector<long>& values() const { return values_; }

    /// s_n with zero extension outside the stored range.
    long at(long n) const;

    /// |s| = sum of all entries.
    long weight() const;

    bool operator==(const AdmissibleSeq& other) const = default;

    /// Canonical enumeration order: offset first, then values lexicographically.
    bool operator<(const AdmissibleSeq& other) const;

private:
    long left_;
    std::vector<long> values_;
};

/// Non-increasing list of positive integers.
class Partition {
public:
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long weight() const;

    bool operator==(const Partition& other) const = default;

private:
    std::vector<long> parts_;
};

/// True iff every outward step of the zero-extended sequence drops by 0 or 1:
/// s_{n+1} in {s_n, s_n - 1} and s_{-n-1} in {s_{-n}, s_{-n} - 1} for all
/// n >= 0. Forces both endpoint values to be 1.
bool is_one_admissible(const AdmissibleSeq& s);

/// Stratum contribution: 1 for 1-admissible sequences, 0 otherwise.
int virtual_count(const AdmissibleSeq& s);

/// All 1-admissible sequences of weight a (a >= 1), each exactly once, in
/// canonical order. There are exactly p(a) of them.
std::vector<AdmissibleSeq> enumerate_one_admissible(long a);

/// Diagonal-length profile of the Young diagram: s_n = #cells (i, j) with
/// j - i = n. The image is 1-admissible of the same weight.
AdmissibleSeq partition_to_sequence(const Partition& lambda);

/// Inverse of partition_to_sequence; rejects non-1-admissible input.
Partition sequence_to_partition(const AdmissibleSeq& s);

/// sum over a_1 + ... + a_48 = r - 1 of prod p(a_i), computed as the
/// (r-1)-st coefficient of the 48th power of the partition series. Equals
/// bl48_coefficient(r - 1) by the product identity.
mpz_class fixed_fiber_count(long r);

}  // namespace k3
