#pragma once

#include "hurwitz/characters.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/numeric.hpp"
#include "hurwitz/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

/// Eigenvalues t_lambda = f_nu(lambda) of the nu class sum, grouped by |t|.
struct Spectrum {
    int degree = 0;
    Partition nu;
    std::vector<std::pair<Integer, Partition>> eigenvalues;  // enumeration order of lambda
    std::map<Integer, std::vector<Partition>> by_modulus;
    Integer max_modulus;
};

/// Throws DomainError for nu = (1^d) or a size mismatch.
Spectrum spectrum(int d, const Partition& nu, CharCache& cache);

enum class Kind { disconnected, connected };

std::string to_string(Kind kind);

/// Parities of k compatible with k * l*(nu) + sum l*(mu^(i)) even:
/// one value when l*(nu) is odd, {0, 1} or nothing when it is even.
std::vector<int> admissible_parities(const std::vector<Partition>& mus, const Partition& nu);

/// 2 d!^{2h} / d!^2 * prod_i d!/z_{mu^(i)}
Rational prefactor(int h, int d, const std::vector<Partition>& mus);

/// d!^{2h} * prod_i d!/z_{mu^(i)}, the scale that makes every b(m) integral.
Integer integrality_scale(int h, int d, const std::vector<Partition>& mus);

/// Structure coefficients of a Hurwitz sequence in k, for k of a fixed parity:
///     H(k) = prefactor * sum_m b(m) m^k.
struct BTable {
    Kind kind = Kind::disconnected;
    int h = 0;
    int d = 0;
    std::vector<Partition> mus;
    Partition nu;
    int parity = 0;
    std::map<Integer, Rational> entries;  // nonzero coefficients only
    Rational prefactor;

    Rational at(const Integer& m) const;
    /// prefactor * sum_m b(m) m^k; meaningful for k >= 1 of the table's parity.
    Rational reconstruct(int k) const;
    bool integral() const;
};

/// b(m) = 1/2 sum_{|t_lambda| = m} (dim lambda)^{2-2h} sgn(t_lambda)^k prod_i chi_lambda(mu^(i))/dim lambda.
/// Without a parity request the first admissible parity is used. The table is
/// checked against `disconnected` at three sampled k (InternalError on mismatch).
/// Throws DomainError on an inconsistent parity request or when no k is admissible.
BTable extract_b_disconnected(int h, int d, const std::vector<Partition>& mus, const Partition& nu, CharCache& cache,
                              std::optional<int> parity = std::nullopt);

/// Fits the connected sequence at consecutive admissible k (steps of 2 when the
/// parity is forced) by an exact Vandermonde solve over the candidate bases
/// E_nu(lambda_1, ..., lambda_b) and checks two held-out k. Throws DomainError
/// when no k is admissible and InternalError when the fit does not reproduce.
BTable extract_b_connected(int h, int d, const std::vector<Partition>& mus, const Partition& nu, CharCache& cache,
                           std::optional<int> parity = std::nullopt, int ceiling = default_connected_ceiling);

/// Solves sum_i y_i x_i^j = v_j (j = 0..n-1) for distinct nonzero x_i.
std::vector<Rational> solve_transposed_vandermonde(const std::vector<Rational>& x, const std::vector<Rational>& v);

/// One statement about a b-table: either b vanishes for lo < m < hi, or b(at) = expected.
struct Clause {
    int id = 0;
    enum class Type { gap, value } type = Type::value;
    Rational lo, hi;
    Rational at;
    Rational expected;
};

Clause gap_clause(int id, Rational lo, Rational hi);
Clause value_clause(int id, Rational at, Rational expected);

struct Counterexample {
    Rational m;
    Rational expected;
    Rational got;
};

struct ClauseResult {
    int id = 0;
    bool pass = true;
    std::optional<Counterexample> counterexample;
};

ClauseResult check_clause(const BTable& table, const Clause& clause);

struct ParityResult {
    int parity = 0;
    std::vector<ClauseResult> clauses;
    bool integral = true;
    std::size_t support = 0;
};

/// Outcome of checking a statement on every admissible parity class.
struct StatementReport {
    std::string statement;
    int h = 0;
    int d = 0;
    std::optional<int> r;
    Partition nu;
    std::vector<Partition> mus;
    Kind kind = Kind::connected;
    bool vacuous = false;
    std::vector<ParityResult> classes;

    bool pass() const;
    std::optional<Counterexample> first_counterexample() const;
};

/// (d - c)^{2 - 2h - s} prod_i (m_1(mu^(i)) - shift) with c, shift in {0, 1}.
Rational leading_value(int base, int h, const std::vector<Partition>& mus, int shift);

/// Extracts tables of `kind` for every admissible parity and checks `clauses` on each.
StatementReport check_statement(std::string statement, Kind kind, int h, int d, const std::vector<Partition>& mus,
                                 const Partition& nu, const std::vector<Clause>& clauses, CharCache& cache,
                                 int ceiling = default_connected_ceiling);

enum class Theorem { T1, T2, T5, T6, PropDH, LemmaDH2 };

std::string to_string(Theorem t);
Theorem parse_theorem(const std::string& text);

struct TheoremParams {
    int h = 0;
    int d = 0;
    std::optional<int> r;          // T1, PropDH
    std::optional<Partition> nu;   // T2, LemmaDH2
    std::vector<Partition> mus;
};

/// Checks every clause of a statement. Throws DomainError when the parameters
/// fall outside the statement's hypotheses.
StatementReport verify_theorem(Theorem theorem, const TheoremParams& params, CharCache& cache);

/// connected H / (2 d!^{s+2h-2} / prod z_{mu^(i)} * (d!/z_nu)^k) at genus g.
Rational asymptotic_ratio(int h, int d, const std::vector<Partition>& mus, const Partition& nu, int g,
                          CharCache& cache);

}  // namespace hurwitz
