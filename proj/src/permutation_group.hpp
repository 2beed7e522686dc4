#pragma once

#include "hurwitz/partition.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace hurwitz::detail {

/// S(d) for small d with permutations addressed by index, plus the lattice of
/// set partitions of {0..d-1} needed to track orbits of generated subgroups.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int d);

    int degree() const noexcept { return d_; }
    int order() const noexcept { return static_cast<int>(perms_.size()); }
    int identity() const noexcept { return 0; }

    /// (a * b)(x) = a(b(x))
    int compose(int a, int b) const noexcept { return mult_[static_cast<std::size_t>(a) * perms_.size() + static_cast<std::size_t>(b)]; }
    int inverse(int a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }
    int commutator(int a, int b) const noexcept { return compose(compose(a, b), compose(inverse(a), inverse(b))); }

    const Partition& cycle_type(int a) const noexcept { return cycle_type_[static_cast<std::size_t>(a)]; }
    /// Permutation indices in the conjugacy class with the given cycle type.
    const std::vector<int>& class_members(const Partition& type) const;

    int set_partition_count() const noexcept { return static_cast<int>(blocks_.size()); }
    /// The partition of {0..d-1} into singletons.
    int discrete() const noexcept { return discrete_; }
    /// The one-block partition, i.e. the orbit partition of a transitive group.
    int full() const noexcept { return full_; }
    /// Finest common coarsening of a set partition and the cycles of a permutation.
    int join(int set_partition, int perm) const noexcept
    {
        return join_[static_cast<std::size_t>(set_partition) * perms_.size() + static_cast<std::size_t>(perm)];
    }

private:
    int d_;
    std::vector<std::vector<std::uint8_t>> perms_;
    std::vector<int> mult_;
    std::vector<int> inverse_;
    std::vector<Partition> cycle_type_;
    std::map<Partition, std::vector<int>> classes_;
    std::vector<std::vector<std::uint8_t>> blocks_;   // restricted growth strings
    std::map<std::vector<std::uint8_t>, int> block_index_;
    std::vector<int> join_;
    int discrete_ = 0;
    int full_ = 0;
};

}  // namespace hurwitz::detail
