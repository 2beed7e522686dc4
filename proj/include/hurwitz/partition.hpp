#pragma once

#include "hurwitz/numeric.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hurwitz {

/// An integer partition: weakly decreasing positive parts.
///
/// The same type indexes Young diagrams, ramification profiles and
/// conjugacy classes of S(d). The empty partition is the unique partition
/// of 0 and the identity for multiset union.
class Partition {
public:
    Partition() = default;

    /// Sorts the parts into canonical order; throws DomainError on a part < 1.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// (k, 1^{d-k}): one k-cycle and d-k fixed points.
    static Partition cycle_class(int k, int d);
    /// (part^count)
    static Partition rectangle(int part, int count);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// i-th part, 0-indexed; 0 past the end so that diagram loops stay simple.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// m_i: number of parts equal to i.
    int multiplicity(int i) const noexcept;

    /// Multiset union of the parts.
    Partition operator+(const Partition& other) const;

    bool operator==(const Partition&) const = default;
    /// Lexicographic on the part list; descending order of this is the
    /// reverse-lexicographic enumeration order.
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Parses "3,1^2" style text. Whitespace around tokens is ignored; the empty
/// string is the empty partition.
Partition parse_partition(std::string_view text);

/// Canonical text: descending parts, comma-separated, no exponents.
std::string format(const Partition& p);

/// z = prod_i m_i! * i^{m_i}, the centralizer order of the class.
Integer z(const Partition& mu);

/// l*(theta) = |theta| - l(theta).
int colength(const Partition& theta);

Partition conjugate(const Partition& lambda);

/// Number of standard Young tableaux, by the hook-length formula.
Integer dimension(const Partition& lambda);

/// d!/z_mu, the size of the conjugacy class.
Integer class_size(const Partition& mu);

inline constexpr int default_degree_ceiling = 30;

/// All partitions of d in reverse-lexicographic order, (d) first and (1^d) last.
/// Results are memoized and shared.
const std::vector<Partition>& enumerate_partitions(int d, int ceiling = default_degree_ceiling);

/// Distinct sub-multisets of theta's parts with total size `size`, each paired
/// with its complement. Allows size 0 and size |theta|.
std::vector<std::pair<Partition, Partition>> sub_multisets(const Partition& theta, int size);

/// Ways to split theta's part multiset into omega |- d1 and sigma |- |theta|-d1,
/// 1 <= d1 < |theta|. Each distinct pair appears once; may be empty.
std::vector<std::pair<Partition, Partition>> splits(const Partition& theta, int d1);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace hurwitz
