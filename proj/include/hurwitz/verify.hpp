#pragma once

#include "hurwitz/characters.hpp"
#include "hurwitz/numeric.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/structure.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

/// One comparison |chi_lambda(mu)| / dim lambda <= rhs.
struct BoundEntry {
    Partition lambda;
    Partition mu;
    Rational lhs;
    Rational rhs;
    bool tight = false;
};

/// Right-hand side of the straight-tree bound
///     1/(r-1) + (r-2)/(r-1) * (sum C(lambda_i, r) + sum C(lambda'_i, r)) / C(d, r)
/// compared against mu = (r, 1^{d-r}). Requires 2 <= r <= d.
BoundEntry check_lemma_l1(const Partition& lambda, int r, CharCache& cache);

enum class GroupStatus { checked, excluded, no_hypothesis };

std::string to_string(GroupStatus s);

/// All comparisons for one class mu.
struct BoundGroup {
    Partition mu;
    GroupStatus status = GroupStatus::checked;
    std::string hypothesis;
    Rational bound;
    std::vector<Partition> expected_equality;  // sorted
    std::vector<Partition> equality_set;       // sorted
    std::vector<BoundEntry> violations;
    std::optional<BoundEntry> witness;  // largest ratio, first in enumeration order

    bool equality_matches() const { return equality_set == expected_equality; }
    bool pass() const { return status != GroupStatus::checked || (violations.empty() && equality_matches()); }
};

struct BoundReport {
    std::string bound;
    int d = 0;
    std::vector<std::string> filters;
    std::vector<BoundGroup> groups;
    double runtime_seconds = 0;

    bool pass() const;
    std::size_t violation_count() const;
    std::size_t equality_mismatches() const;
};

/// How |chi_lambda(r, 1^{d-r})| / dim lambda is evaluated in the rm2 sweep.
enum class RatioRoute { characters, frobenius };

/// For every 2 <= r <= d and lambda outside {(d), (1^d)}: the ratio on
/// (r, 1^{d-r}) is at most |d-r-1|/(d-1), or 2/(d(d-3)) when r = d-1, with
/// equality exactly on {(d-1,1), (2,1^{d-2})}, resp. {(d-2,2), (2,2,1^{d-4})}.
/// The frobenius route uses the closed forms for r = 2, 3, 4. Requires d >= 7.
BoundReport check_lemma_rm2(int d, CharCache& cache, RatioRoute route = RatioRoute::characters, unsigned jobs = 0);

/// |chi_lambda(mu)| / dim lambda <= 1 for every mu != (1^d), with equality
/// exactly on {(d), (1^d)}. Requires d >= 5.
BoundReport check_theorem_B(int d, CharCache& cache, unsigned jobs = 0);

/// Excluded classes of the three conjectured bounds, stated per bullet.
struct Exclusion {
    int bullet;
    std::string pattern;
    std::function<std::optional<Partition>(int d)> shape;
};

const std::vector<Exclusion>& conjecture1_exclusions();

/// Sweep of the three conjectured bounds over lambda outside {(d), (1^d)}:
///     m_1 != 1:             (|m_1 - 1|)/(d-1),       equality on (d-1,1), (2,1^{d-2})
///     m_1 = 1, m_2 >= 2:    2 m_2/((d-1)(d-2)),      equality on (d-2,1,1), (3,1^{d-3})
///     m_1 = 1, m_2 = 0:     2/(d(d-3)),              equality on (d-2,2), (2,2,1^{d-4})
/// Classes matching an exclusion are reported as excluded; (1^d) and classes
/// with m_1 = m_2 = 1 fall under no bullet. Requires d >= 10.
BoundReport check_conjecture1(int d, CharCache& cache, unsigned jobs = 0);

enum class GapConjecture { cH4, cH9, cH11 };

std::string to_string(GapConjecture c);
GapConjecture parse_gap_conjecture(const std::string& text);

inline constexpr int default_conjecture_cap = 10;

/// Classes excluded from cH11, taken literally. The pattern (2^{d/2-1}, 1)
/// has size d - 1 and so never matches a class of S(d).
std::vector<Partition> cH11_exclusions(int d);

/// Builds the connected b-table of the family (mu^(1..s), nu x k) and checks
/// each gap and value clause of the conjecture. Throws DomainError when d is
/// below 10, above `cap`, or nu lies outside the conjecture's hypotheses.
StatementReport check_conjecture_b(GapConjecture conjecture, int d, const Partition& nu, int h,
                                   const std::vector<Partition>& mus, CharCache& cache,
                                   int cap = default_conjecture_cap);

}  // namespace hurwitz
