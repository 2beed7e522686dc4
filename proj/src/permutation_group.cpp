#include "permutation_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hurwitz::detail {

namespace {

std::vector<std::uint8_t> canonical_labels(const std::vector<int>& root)
{
    std::vector<std::uint8_t> labels(root.size());
    std::map<int, std::uint8_t> seen;
    for (std::size_t i = 0; i < root.size(); ++i) {
        auto [it, _] = seen.try_emplace(root[i], static_cast<std::uint8_t>(seen.size()));
        labels[i] = it->second;
    }
    return labels;
}

void all_set_partitions(int d, std::vector<std::uint8_t>& prefix, std::uint8_t max_label,
                        std::vector<std::vector<std::uint8_t>>& out)
{
    if (static_cast<int>(prefix.size()) == d) {
        out.push_back(prefix);
        return;
    }
    int limit = prefix.empty() ? 0 : max_label + 1;
    for (int label = 0; label <= limit; ++label) {
        prefix.push_back(static_cast<std::uint8_t>(label));
        all_set_partitions(d, prefix, static_cast<std::uint8_t>(std::max<int>(max_label, label)), out);
        prefix.pop_back();
    }
}

}  // namespace

SymmetricGroup::SymmetricGroup(int d) : d_(d)
{
    if (d < 1 || d > 6)
        throw DomainError("explicit symmetric group supported for 1 <= d <= 6, got " + std::to_string(d));

    std::vector<std::uint8_t> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::uint8_t>, int> index;
    for (int i = 0; i < order(); ++i)
        index.emplace(perms_[static_cast<std::size_t>(i)], i);

    const auto n = perms_.size();
    mult_.resize(n * n);
    inverse_.resize(n);
    std::vector<std::uint8_t> tmp(static_cast<std::size_t>(d));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t x = 0; x < tmp.size(); ++x)
                tmp[x] = perms_[a][perms_[b][x]];
            mult_[a * n + b] = index.at(tmp);
        }
        for (std::size_t x = 0; x < tmp.size(); ++x)
            tmp[perms_[a][x]] = static_cast<std::uint8_t>(x);
        inverse_[a] = index.at(tmp);

        std::vector<bool> seen(static_cast<std::size_t>(d), false);
        std::vector<int> lengths;
        for (std::size_t x = 0; x < seen.size(); ++x) {
            int len = 0;
            for (std::size_t y = x; !seen[y]; y = perms_[a][y]) {
                seen[y] = true;
                ++len;
            }
            if (len)
                lengths.push_back(len);
        }
        cycle_type_.emplace_back(std::move(lengths));
        classes_[cycle_type_.back()].push_back(static_cast<int>(a));
    }

    std::vector<std::uint8_t> prefix;
    all_set_partitions(d, prefix, 0, blocks_);
    for (int i = 0; i < set_partition_count(); ++i)
        block_index_.emplace(blocks_[static_cast<std::size_t>(i)], i);
    discrete_ = block_index_.at(canonical_labels([&] {
        std::vector<int> r(static_cast<std::size_t>(d));
        std::iota(r.begin(), r.end(), 0);
        return r;
    }()));
    full_ = block_index_.at(std::vector<std::uint8_t>(static_cast<std::size_t>(d), 0));

    join_.resize(blocks_.size() * n);
    std::vector<int> parent(static_cast<std::size_t>(d));
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
        for (std::size_t a = 0; a < n; ++a) {
            // seed with the block structure: root every element at its block's first member
            std::vector<int> first(static_cast<std::size_t>(d), -1);
            for (int x = 0; x < d; ++x) {
                auto& f = first[blocks_[s][static_cast<std::size_t>(x)]];
                if (f < 0)
                    f = x;
                parent[static_cast<std::size_t>(x)] = f;
            }
            for (int x = 0; x < d; ++x) {
                int rx = find(x), ry = find(perms_[a][static_cast<std::size_t>(x)]);
                if (rx != ry)
                    parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
            }
            std::vector<int> root(static_cast<std::size_t>(d));
            for (int x = 0; x < d; ++x)
                root[static_cast<std::size_t>(x)] = find(x);
            join_[s * n + a] = block_index_.at(canonical_labels(root));
        }
    }
}

const std::vector<int>& SymmetricGroup::class_members(const Partition& type) const
{
    auto it = classes_.find(type);
    if (it == classes_.end())
        throw DomainError("no conjugacy class (" + format(type) + ") in S(" + std::to_string(d_) + ")");
    return it->second;
}

}  // namespace hurwitz::detail
