#pragma once

#include "hurwitz/characters.hpp"
#include "hurwitz/numeric.hpp"
#include "hurwitz/partition.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hurwitz {

/// Degree-d branched covers of a genus-h target with one ramification
/// profile per marked point.
struct CoverSpec {
    int target_genus = 0;
    int degree = 1;
    std::vector<Partition> profiles;
};

/// Throws DomainError unless h >= 0, d >= 1 and every profile has size d.
void validate(const CoverSpec& spec);

/// Profiles mu^(1..s) from `base` followed by k copies of nu. Exactly one of
/// `count` (k) or `genus` (g, of the covering curve) is expected; they are
/// tied by Riemann-Hurwitz:
///     k * l*(nu) = 2g - 2 + (2 - 2h) d - sum_i l*(mu^(i)).
struct RepeatedSpec {
    CoverSpec base;
    Partition nu;
    std::optional<int> count;
    std::optional<int> genus;
};

struct ResolvedCount {
    int k = 0;
    /// Empty when 2g would be odd, i.e. the Riemann-Hurwitz parity fails.
    std::optional<int> genus;
    bool parity_violation = false;
};

/// Converts between k and g. Throws DomainError when neither or both are
/// given, when nu = (1^d), when g does not give an integral k >= 0, or when k
/// gives a negative genus.
ResolvedCount resolve(const RepeatedSpec& spec);

/// (dim lambda / d!)^{2 - 2h}
Rational burnside_weight(const Partition& lambda, int target_genus);

/// Disconnected Hurwitz number by the Burnside character sum
///     sum_{lambda |- d} (dim lambda / d!)^{2-2h} prod_i f_{theta^(i)}(lambda).
Rational disconnected(const CoverSpec& spec, CharCache& cache);

inline const Integer default_oracle_budget{"10000000000000000"};

/// (1/d!) * #{(a_1, b_1, ..., a_h, b_h, s_1, ..., s_n) : s_i in class theta^(i),
/// prod [a_j, b_j] prod s_i = 1}, counted over S(d) directly. Requires d <= 6,
/// h <= 1 and a search space (d!)^{2h} prod |class_i| within the budget.
Rational brute_force_disconnected(const CoverSpec& spec, const Integer& budget = default_oracle_budget);

/// Same count restricted to tuples generating a transitive subgroup.
Rational brute_force_connected(const CoverSpec& spec, const Integer& budget = default_oracle_budget);

/// Coefficient of p_theta in prod_j F(lambda_j), with F(lambda) = sum_omega f_omega(lambda) p_omega:
///     sum over ordered splits theta = omega_1 u ... u omega_b, omega_j |- |lambda_j|,
///     of prod_j f_{omega_j}(lambda_j).
/// This is the eigenvalue of the part of the theta class sum lying in the
/// Young subgroup S(|lambda_1|) x ... x S(|lambda_b|) on the irreducible
/// lambda_1 x ... x lambda_b.
Integer split_central_character(const Partition& theta, std::span<const Partition> blocks, CharCache& cache);

/// All multisets of nonempty partitions whose sizes add up to d, each sorted ascending.
std::vector<std::vector<Partition>> block_multisets(int d);

inline constexpr int default_connected_ceiling = 12;

/// Connected Hurwitz numbers of a family with fixed profiles and a profile
/// repeated k times, as a function of k.
///
/// The disconnected numbers of all degrees <= d assemble into the series
///     A(u) = 1 + sum_{lambda} u^{|lambda|} w(lambda) (x)_slots F(lambda),
/// one tensor factor per branch point, and the connected numbers are the
/// degree-d part of log A. Products of pure tensors are indexed by multisets
/// of partitions, so log A is computed once over that basis with the
/// recursion n L_n = n A_n - sum_{j<n} j L_j A_{n-j}; the repeated slot then
/// enters only as a k-th power at extraction time.
class ConnectedSeries {
public:
    ConnectedSeries(int target_genus, int degree, std::vector<Partition> fixed_profiles,
                    std::optional<Partition> repeated, CharCache& cache,
                    int ceiling = default_connected_ceiling);

    /// Connected number with `k` copies of the repeated profile (k is ignored
    /// when there is none).
    Rational value(int k) const;

    struct Term {
        Integer base;
        Rational coefficient;
    };
    /// value(k) = sum coefficient * base^k, one term per distinct base.
    const std::vector<Term>& terms() const noexcept { return terms_; }

private:
    std::vector<Term> terms_;
};

/// Connected Hurwitz number over all profiles of a CoverSpec.
Rational connected_count(const CoverSpec& spec, CharCache& cache, int ceiling = default_connected_ceiling);

struct ConnectedResult {
    Rational value;
    ResolvedCount resolved;
};

/// Connected Hurwitz number H_{g,d}(mu^(1..s), nu x k). A parity violation
/// returns 0 with the flag set in `resolved`.
ConnectedResult connected(const RepeatedSpec& spec, CharCache& cache, int ceiling = default_connected_ceiling);

/// Profile list base.profiles followed by k copies of nu.
CoverSpec expand(const RepeatedSpec& spec, int k);

}  // namespace hurwitz
