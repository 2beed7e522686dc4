#include "hurwitz/hurwitz.hpp"

#include "permutation_group.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <mutex>
#include <string>

namespace hurwitz {

void validate(const CoverSpec& spec)
{
    if (spec.target_genus < 0)
        throw DomainError("negative target genus");
    if (spec.degree < 1)
        throw DomainError("degree must be positive");
    for (const Partition& p : spec.profiles) {
        if (p.size() != spec.degree) {
            throw DomainError("profile (" + format(p) + ") has size " + std::to_string(p.size()) +
                              ", expected degree " + std::to_string(spec.degree));
        }
    }
}

CoverSpec expand(const RepeatedSpec& spec, int k)
{
    CoverSpec out = spec.base;
    out.profiles.insert(out.profiles.end(), static_cast<std::size_t>(std::max(k, 0)), spec.nu);
    return out;
}

ResolvedCount resolve(const RepeatedSpec& spec)
{
    validate(spec.base);
    const int d = spec.base.degree;
    const int h = spec.base.target_genus;
    if (spec.nu.size() != d)
        throw DomainError("repeated profile (" + format(spec.nu) + ") does not have size " + std::to_string(d));
    const int lnu = colength(spec.nu);
    if (lnu == 0)
        throw DomainError("repeated profile must not be the identity class (1^d)");
    if (spec.count.has_value() == spec.genus.has_value())
        throw DomainError("give exactly one of the repeated count k or the genus g");

    int fixed = 0;
    for (const Partition& mu : spec.base.profiles)
        fixed += colength(mu);

    ResolvedCount out;
    if (spec.count) {
        out.k = *spec.count;
        if (out.k < 0)
            throw DomainError("negative repeated count");
        int twice_g = out.k * lnu + 2 - (2 - 2 * h) * d + fixed;
        if (twice_g % 2 != 0) {
            out.parity_violation = true;
            return out;
        }
        if (twice_g < 0)
            throw DomainError("negative genus: k = " + std::to_string(out.k) + " gives g = " + std::to_string(twice_g / 2));
        out.genus = twice_g / 2;
        return out;
    }

    const int g = *spec.genus;
    if (g < 0)
        throw DomainError("negative genus");
    int rhs = 2 * g - 2 + (2 - 2 * h) * d - fixed;
    if (rhs < 0 || rhs % lnu != 0) {
        throw DomainError("genus " + std::to_string(g) + " gives no nonnegative integral count k (k * " +
                          std::to_string(lnu) + " = " + std::to_string(rhs) + ")");
    }
    out.k = rhs / lnu;
    out.genus = g;
    return out;
}

Rational burnside_weight(const Partition& lambda, int target_genus)
{
    Rational ratio = make_rational(dimension(lambda), factorial(static_cast<unsigned>(lambda.size())));
    return rpow(ratio, 2 - 2L * target_genus);
}

Rational disconnected(const CoverSpec& spec, CharCache& cache)
{
    validate(spec);
    Rational total = 0;
    for (const Partition& lambda : enumerate_partitions(spec.degree, cache.ceiling())) {
        Rational term = burnside_weight(lambda, spec.target_genus);
        for (const Partition& theta : spec.profiles) {
            if (term == 0)
                break;
            term *= central_character(theta, lambda, cache);
        }
        total += term;
    }
    return total;
}

namespace {

Rational brute_force(const CoverSpec& spec, const Integer& budget, bool transitive_only)
{
    validate(spec);
    if (spec.degree > 6)
        throw DomainError("brute-force oracle limited to d <= 6");
    if (spec.target_genus > 1)
        throw DomainError("brute-force oracle limited to target genus <= 1");

    detail::SymmetricGroup group(spec.degree);
    Integer space = ipow(group.order(), 2 * static_cast<unsigned>(spec.target_genus));
    for (const Partition& theta : spec.profiles)
        space *= static_cast<unsigned long>(group.class_members(theta).size());
    if (space > budget)
        throw DomainError("search space " + space.get_str() + " exceeds budget " + budget.get_str());

    // counts fit in 64 bits: every count is bounded by the search space
    const auto sets = static_cast<std::size_t>(group.set_partition_count());
    auto slot = [&](int perm, int set) { return static_cast<std::size_t>(perm) * sets + static_cast<std::size_t>(set); };
    std::vector<std::uint64_t> state(static_cast<std::size_t>(group.order()) * sets, 0);

    if (spec.target_genus == 0) {
        state[slot(group.identity(), group.discrete())] = 1;
    } else {
        for (int a = 0; a < group.order(); ++a)
            for (int b = 0; b < group.order(); ++b)
                ++state[slot(group.commutator(a, b), group.join(group.join(group.discrete(), a), b))];
    }

    for (const Partition& theta : spec.profiles) {
        const auto& members = group.class_members(theta);
        std::vector<std::uint64_t> next(state.size(), 0);
        for (int g = 0; g < group.order(); ++g) {
            for (int s = 0; s < static_cast<int>(sets); ++s) {
                std::uint64_t n = state[slot(g, s)];
                if (n == 0)
                    continue;
                for (int c : members)
                    next[slot(group.compose(g, c), group.join(s, c))] += n;
            }
        }
        state = std::move(next);
    }

    Integer count = 0;
    for (int s = 0; s < static_cast<int>(sets); ++s) {
        if (transitive_only && s != group.full())
            continue;
        count += static_cast<unsigned long>(state[slot(group.identity(), s)]);
    }
    return make_rational(count, factorial(static_cast<unsigned>(spec.degree)));
}

}  // namespace

Rational brute_force_disconnected(const CoverSpec& spec, const Integer& budget)
{
    return brute_force(spec, budget, false);
}

Rational brute_force_connected(const CoverSpec& spec, const Integer& budget)
{
    return brute_force(spec, budget, true);
}

Integer split_central_character(const Partition& theta, std::span<const Partition> blocks, CharCache& cache)
{
    if (blocks.empty())
        return theta.empty() ? 1 : 0;
    const Partition& head = blocks.front();
    Integer total = 0;
    for (const auto& [omega, rest] : sub_multisets(theta, head.size())) {
        Integer f = central_character(omega, head, cache);
        if (f != 0)
            total += f * split_central_character(rest, blocks.subspan(1), cache);
    }
    return total;
}

std::vector<std::vector<Partition>> block_multisets(int d)
{
    std::vector<Partition> all;
    for (int n = 1; n <= d; ++n)
        for (const Partition& p : enumerate_partitions(n))
            all.push_back(p);
    std::sort(all.begin(), all.end());

    std::vector<std::vector<Partition>> out;
    std::vector<Partition> current;
    auto rec = [&](auto&& self, int remaining, std::size_t start) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < all.size(); ++i) {
            if (all[i].size() > remaining)
                continue;
            current.push_back(all[i]);
            self(self, remaining - all[i].size(), i);
            current.pop_back();
        }
    };
    rec(rec, d, 0);
    return out;
}

namespace {

using Blocks = std::vector<Partition>;
using Series = std::map<Blocks, Rational>;

Blocks merge(const Blocks& a, const Blocks& b)
{
    Blocks out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Degree-d part of log(1 + sum_{lambda, |lambda| <= d} w(lambda) [lambda]).
Series log_series_top(int d, int target_genus)
{
    std::vector<Series> a(static_cast<std::size_t>(d + 1)), l(static_cast<std::size_t>(d + 1));
    for (int n = 1; n <= d; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            a[static_cast<std::size_t>(n)].emplace(Blocks{lambda}, burnside_weight(lambda, target_genus));

    for (int n = 1; n <= d; ++n) {
        Series ln = a[static_cast<std::size_t>(n)];
        for (int j = 1; j < n; ++j) {
            Rational scale = make_rational(j, n);
            for (const auto& [x, cx] : l[static_cast<std::size_t>(j)]) {
                for (const auto& [y, cy] : a[static_cast<std::size_t>(n - j)])
                    ln[merge(x, y)] -= scale * cx * cy;
            }
        }
        std::erase_if(ln, [](const auto& kv) { return kv.second == 0; });
        l[static_cast<std::size_t>(n)] = std::move(ln);
    }
    return std::move(l[static_cast<std::size_t>(d)]);
}

const Series& cached_log_series(int d, int target_genus)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Series> memo;
    std::lock_guard lock(mutex);
    auto it = memo.find({d, target_genus});
    if (it == memo.end())
        it = memo.emplace(std::pair{d, target_genus}, log_series_top(d, target_genus)).first;
    return it->second;
}

}  // namespace

ConnectedSeries::ConnectedSeries(int target_genus, int degree, std::vector<Partition> fixed_profiles,
                                 std::optional<Partition> repeated, CharCache& cache, int ceiling)
{
    CoverSpec check{target_genus, degree, fixed_profiles};
    if (repeated)
        check.profiles.push_back(*repeated);
    validate(check);
    if (degree > ceiling)
        throw DomainError("degree " + std::to_string(degree) + " exceeds connected-series ceiling " +
                          std::to_string(ceiling));

    std::map<Integer, Rational> by_base;
    for (const auto& [blocks, coefficient] : cached_log_series(degree, target_genus)) {
        Rational c = coefficient;
        for (const Partition& mu : fixed_profiles) {
            c *= split_central_character(mu, blocks, cache);
            if (c == 0)
                break;
        }
        if (c == 0)
            continue;
        Integer base = repeated ? split_central_character(*repeated, blocks, cache) : Integer(1);
        by_base[base] += c;
    }
    for (auto& [base, c] : by_base)
        if (c != 0)
            terms_.push_back({base, c});
}

Rational ConnectedSeries::value(int k) const
{
    if (k < 0)
        throw DomainError("negative repeated count");
    Rational total = 0;
    for (const Term& t : terms_)
        total += t.coefficient * Rational(ipow(t.base, static_cast<unsigned>(k)));
    return total;
}

Rational connected_count(const CoverSpec& spec, CharCache& cache, int ceiling)
{
    return ConnectedSeries(spec.target_genus, spec.degree, spec.profiles, std::nullopt, cache, ceiling).value(0);
}

ConnectedResult connected(const RepeatedSpec& spec, CharCache& cache, int ceiling)
{
    ConnectedResult out{0, resolve(spec)};
    if (out.resolved.parity_violation)
        return out;
    ConnectedSeries series(spec.base.target_genus, spec.base.degree, spec.base.profiles, spec.nu, cache, ceiling);
    out.value = series.value(out.resolved.k);
    return out;
}

}  // namespace hurwitz
