#include "hurwitz/structure.hpp"

#include <algorithm>
#include <set>

namespace hurwitz {

namespace {

bool is_identity_class(const Partition& nu) { return colength(nu) == 0; }

void require_profiles(int d, const std::vector<Partition>& mus, const Partition& nu)
{
    if (d < 1)
        throw DomainError("degree must be positive");
    for (const Partition& mu : mus)
        if (mu.size() != d)
            throw DomainError("profile (" + format(mu) + ") does not have size " + std::to_string(d));
    if (nu.size() != d)
        throw DomainError("repeated profile (" + format(nu) + ") does not have size " + std::to_string(d));
    if (is_identity_class(nu))
        throw DomainError("repeated profile must not be the identity class (1^d)");
}

int choose_parity(const std::vector<Partition>& mus, const Partition& nu, std::optional<int> requested)
{
    std::vector<int> allowed = admissible_parities(mus, nu);
    if (allowed.empty()) {
        throw DomainError("no admissible k: k * l*(nu) + sum l*(mu) is odd for every k, so the family vanishes");
    }
    if (!requested)
        return allowed.front();
    if (std::find(allowed.begin(), allowed.end(), *requested) == allowed.end())
        throw DomainError("inconsistent parity request: k must be " + std::string(allowed.front() ? "odd" : "even"));
    return *requested;
}

CoverSpec family_member(int h, int d, const std::vector<Partition>& mus, const Partition& nu, int k)
{
    return expand(RepeatedSpec{CoverSpec{h, d, mus}, nu, k, std::nullopt}, k);
}

}  // namespace

Spectrum spectrum(int d, const Partition& nu, CharCache& cache)
{
    require_profiles(d, {}, nu);
    Spectrum s;
    s.degree = d;
    s.nu = nu;
    s.max_modulus = 0;
    for (const Partition& lambda : enumerate_partitions(d, cache.ceiling())) {
        Integer t = central_character(nu, lambda, cache);
        s.eigenvalues.emplace_back(t, lambda);
        Integer m = abs(t);
        s.by_modulus[m].push_back(lambda);
        if (m > s.max_modulus)
            s.max_modulus = m;
    }
    return s;
}

std::string to_string(Kind kind) { return kind == Kind::connected ? "connected" : "disconnected"; }

std::vector<int> admissible_parities(const std::vector<Partition>& mus, const Partition& nu)
{
    int fixed = 0;
    for (const Partition& mu : mus)
        fixed += colength(mu);
    if (colength(nu) % 2 == 1)
        return {fixed % 2};
    if (fixed % 2 == 1)
        return {};
    return {0, 1};
}

Integer integrality_scale(int h, int d, const std::vector<Partition>& mus)
{
    const Integer dfact = factorial(static_cast<unsigned>(d));
    Integer scale = ipow(dfact, 2 * static_cast<unsigned>(h));
    for (const Partition& mu : mus)
        scale *= dfact / z(mu);
    return scale;
}

Rational prefactor(int h, int d, const std::vector<Partition>& mus)
{
    const Integer dfact = factorial(static_cast<unsigned>(d));
    return make_rational(2 * integrality_scale(h, d, mus), dfact * dfact);
}

Rational BTable::at(const Integer& m) const
{
    auto it = entries.find(m);
    return it == entries.end() ? Rational(0) : it->second;
}

Rational BTable::reconstruct(int k) const
{
    Rational sum = 0;
    for (const auto& [m, b] : entries)
        sum += b * Rational(ipow(m, static_cast<unsigned>(k)));
    return prefactor * sum;
}

bool BTable::integral() const
{
    Integer scale = integrality_scale(h, d, mus);
    return std::all_of(entries.begin(), entries.end(),
                       [&](const auto& e) { return is_integral(Rational(scale) * e.second); });
}

BTable extract_b_disconnected(int h, int d, const std::vector<Partition>& mus, const Partition& nu, CharCache& cache,
                              std::optional<int> parity)
{
    require_profiles(d, mus, nu);
    if (h < 0)
        throw DomainError("negative target genus");
    BTable table{Kind::disconnected, h, d, mus, nu, choose_parity(mus, nu, parity), {}, prefactor(h, d, mus)};

    for (const auto& [t, lambda] : spectrum(d, nu, cache).eigenvalues) {
        if (t == 0)
            continue;
        const Integer dim = dimension(lambda);
        Rational term = rpow(Rational(dim), 2 - 2L * h) / 2;
        for (const Partition& mu : mus)
            term *= make_rational(chi(lambda, mu, cache), dim);
        if (t < 0 && table.parity == 1)
            term = -term;
        table.entries[abs(t)] += term;
    }
    std::erase_if(table.entries, [](const auto& e) { return e.second == 0; });

    for (int k = table.parity == 0 ? 2 : 1, n = 0; n < 3; k += 2, ++n) {
        Rational expected = disconnected(family_member(h, d, mus, nu, k), cache);
        if (table.reconstruct(k) != expected) {
            throw InternalError("disconnected b-table does not reproduce H at k = " + std::to_string(k) + " for nu = (" +
                                format(nu) + ")");
        }
    }
    return table;
}

std::vector<Rational> solve_transposed_vandermonde(const std::vector<Rational>& x, const std::vector<Rational>& v)
{
    const std::size_t n = x.size();
    if (v.size() != n)
        throw InternalError("Vandermonde system needs as many values as nodes");
    if (std::set<Rational>(x.begin(), x.end()).size() != n)
        throw InternalError("singular Vandermonde system: repeated node");

    // master polynomial P(z) = prod (z - x_i), coefficients by ascending degree
    std::vector<Rational> p(n + 1, Rational(0));
    p[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j > 0; --j)
            p[j] = p[j - 1] - x[i] * p[j];
        p[0] = -x[i] * p[0];
    }

    std::vector<Rational> y(n);
    std::vector<Rational> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        // q = P / (z - x_i) by synthetic division
        q[n - 1] = p[n];
        for (std::size_t j = n - 1; j > 0; --j)
            q[j - 1] = p[j] + x[i] * q[j];
        Rational numerator = 0, denominator = 0, power = 1;
        for (std::size_t j = 0; j < n; ++j) {
            numerator += q[j] * v[j];
            denominator += q[j] * power;
            power *= x[i];
        }
        y[i] = numerator / denominator;
    }
    return y;
}

BTable extract_b_connected(int h, int d, const std::vector<Partition>& mus, const Partition& nu, CharCache& cache,
                           std::optional<int> parity, int ceiling)
{
    require_profiles(d, mus, nu);
    if (h < 0)
        throw DomainError("negative target genus");
    BTable table{Kind::connected, h, d, mus, nu, choose_parity(mus, nu, parity), {}, prefactor(h, d, mus)};
    const bool forced = colength(nu) % 2 == 1;

    // Candidate bases: signed eigenvalues of the nu class sum on irreducibles
    // of Young subgroups. With forced parity only moduli are identifiable.
    std::set<Integer> signed_bases;
    for (const auto& blocks : block_multisets(d)) {
        Integer t = split_central_character(nu, blocks, cache);
        if (t != 0)
            signed_bases.insert(forced ? Integer(abs(t)) : t);
    }
    std::vector<Integer> bases(signed_bases.begin(), signed_bases.end());
    std::vector<Rational> nodes;
    for (const Integer& t : bases)
        nodes.emplace_back(forced ? Integer(t * t) : t);

    const int step = forced ? 2 : 1;
    int k0 = -1;
    for (int k = 1; k <= 2 * d * d + 4; ++k) {
        if (forced && k % 2 != table.parity)
            continue;
        try {
            ResolvedCount rc = resolve(RepeatedSpec{CoverSpec{h, d, mus}, nu, k, std::nullopt});
            if (!rc.parity_violation) {
                k0 = k;
                break;
            }
        } catch (const DomainError&) {
            // negative genus: try the next k
        }
    }
    if (k0 < 0)
        throw DomainError("no admissible k in range for nu = (" + format(nu) + ")");

    ConnectedSeries series(h, d, mus, nu, cache, ceiling);
    const std::size_t n = bases.size();
    std::vector<Rational> values;
    for (std::size_t j = 0; j < n + 2; ++j)
        values.push_back(series.value(k0 + step * static_cast<int>(j)) / table.prefactor);

    std::vector<Rational> fitted(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<Rational> y = solve_transposed_vandermonde(nodes, fitted);
    std::vector<Rational> coefficient(n);
    for (std::size_t i = 0; i < n; ++i)
        coefficient[i] = y[i] / Rational(ipow(bases[i], static_cast<unsigned>(k0)));

    for (std::size_t j = n; j < n + 2; ++j) {
        const int k = k0 + step * static_cast<int>(j);
        Rational sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            sum += coefficient[i] * Rational(ipow(bases[i], static_cast<unsigned>(k)));
        if (sum != values[j]) {
            throw InternalError("connected b-table fit fails at held-out k = " + std::to_string(k) + " for nu = (" +
                                format(nu) + ")");
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        Rational c = coefficient[i];
        if (bases[i] < 0 && table.parity == 1)
            c = -c;
        table.entries[abs(bases[i])] += c;
    }
    std::erase_if(table.entries, [](const auto& e) { return e.second == 0; });
    return table;
}

Clause gap_clause(int id, Rational lo, Rational hi)
{
    Clause c;
    c.id = id;
    c.type = Clause::Type::gap;
    c.lo = std::move(lo);
    c.hi = std::move(hi);
    return c;
}

Clause value_clause(int id, Rational at, Rational expected)
{
    Clause c;
    c.id = id;
    c.type = Clause::Type::value;
    c.at = std::move(at);
    c.expected = std::move(expected);
    return c;
}

ClauseResult check_clause(const BTable& table, const Clause& clause)
{
    ClauseResult result{clause.id, true, std::nullopt};
    if (clause.type == Clause::Type::gap) {
        for (const auto& [m, b] : table.entries) {
            Rational mq(m);
            if (clause.lo < mq && mq < clause.hi) {
                result.pass = false;
                result.counterexample = Counterexample{mq, 0, b};
                break;
            }
        }
        return result;
    }
    Rational got = is_integral(clause.at) ? table.at(clause.at.get_num()) : Rational(0);
    if (got != clause.expected) {
        result.pass = false;
        result.counterexample = Counterexample{clause.at, clause.expected, got};
    }
    return result;
}

bool StatementReport::pass() const
{
    return std::all_of(classes.begin(), classes.end(), [](const ParityResult& p) {
        return p.integral && std::all_of(p.clauses.begin(), p.clauses.end(), [](const auto& c) { return c.pass; });
    });
}

std::optional<Counterexample> StatementReport::first_counterexample() const
{
    for (const ParityResult& p : classes)
        for (const ClauseResult& c : p.clauses)
            if (c.counterexample)
                return c.counterexample;
    return std::nullopt;
}

Rational leading_value(int base, int h, const std::vector<Partition>& mus, int shift)
{
    Rational v = rpow(Rational(base), 2 - 2L * h - static_cast<long>(mus.size()));
    for (const Partition& mu : mus)
        v *= mu.multiplicity(1) - shift;
    return v;
}

StatementReport check_statement(std::string statement, Kind kind, int h, int d, const std::vector<Partition>& mus,
                                const Partition& nu, const std::vector<Clause>& clauses, CharCache& cache, int ceiling)
{
    require_profiles(d, mus, nu);
    StatementReport report;
    report.statement = std::move(statement);
    report.h = h;
    report.d = d;
    report.nu = nu;
    report.mus = mus;
    report.kind = kind;

    std::vector<int> parities = admissible_parities(mus, nu);
    report.vacuous = parities.empty();
    for (int p : parities) {
        BTable table = kind == Kind::connected ? extract_b_connected(h, d, mus, nu, cache, p, ceiling)
                                               : extract_b_disconnected(h, d, mus, nu, cache, p);
        ParityResult pr;
        pr.parity = p;
        pr.integral = table.integral();
        pr.support = table.entries.size();
        for (const Clause& c : clauses)
            pr.clauses.push_back(check_clause(table, c));
        report.classes.push_back(std::move(pr));
    }
    return report;
}

std::string to_string(Theorem t)
{
    switch (t) {
    case Theorem::T1:
        return "T1";
    case Theorem::T2:
        return "T2";
    case Theorem::T5:
        return "T5";
    case Theorem::T6:
        return "T6";
    case Theorem::PropDH:
        return "PropDH";
    case Theorem::LemmaDH2:
        return "LemmaDH2";
    }
    return "?";
}

Theorem parse_theorem(const std::string& text)
{
    for (Theorem t : {Theorem::T1, Theorem::T2, Theorem::T5, Theorem::T6, Theorem::PropDH, Theorem::LemmaDH2})
        if (to_string(t) == text)
            return t;
    throw ParseError("unknown theorem id '" + text + "' (expected T1, T2, T5, T6, PropDH or LemmaDH2)");
}

namespace {

void require_degree(const std::string& name, int d, int minimum)
{
    if (d < minimum)
        throw DomainError(name + " requires d >= " + std::to_string(minimum) + ", got d = " + std::to_string(d));
}

int require_hook_order(const std::string& name, const TheoremParams& params)
{
    if (!params.r)
        throw DomainError(name + " requires r");
    const int r = *params.r;
    if (r < 2 || r > params.d - 2) {
        throw DomainError(name + " requires 2 <= r <= d - 2, got r = " + std::to_string(r) + ", d = " +
                          std::to_string(params.d));
    }
    return r;
}

Rational frac(const Integer& num, const Integer& den) { return make_rational(num, den); }

}  // namespace

StatementReport verify_theorem(Theorem theorem, const TheoremParams& params, CharCache& cache)
{
    const int d = params.d;
    const int h = params.h;
    const auto& mus = params.mus;
    const std::string name = to_string(theorem);
    if (h < 0)
        throw DomainError("negative target genus");
    auto F = [](int n) { return factorial(static_cast<unsigned>(n)); };

    std::vector<Clause> clauses;
    Partition nu;
    Kind kind = Kind::connected;

    switch (theorem) {
    case Theorem::T1:
    case Theorem::PropDH: {
        require_degree(name, d, 7);
        const int r = require_hook_order(name, params);
        nu = Partition::cycle_class(r, d);
        Rational top = frac(F(d), r * F(d - r));
        Rational second = frac(F(d - 1), r * F(d - r - 1));
        Rational third = frac((d - r - 1) * F(d), Integer(r) * (d - 1) * F(d - r));
        if (theorem == Theorem::T1) {
            clauses = {value_clause(1, top, 1), gap_clause(2, second, top),
                       value_clause(3, second, -leading_value(d, h, mus, 0)), gap_clause(4, third, second),
                       value_clause(5, third, leading_value(d - 1, h, mus, 1))};
        } else {
            kind = Kind::disconnected;
            clauses = {value_clause(1, top, 1), gap_clause(2, third, top),
                       value_clause(3, third, leading_value(d - 1, h, mus, 1))};
        }
        break;
    }
    case Theorem::T5: {
        require_degree(name, d, 7);
        nu = Partition{d - 1, 1};
        Rational top(d * F(d - 2)), second(F(d - 2)), third(2 * (d - 2) * F(d - 4));
        clauses = {value_clause(1, top, 1), gap_clause(2, second, top),
                   value_clause(3, second, -leading_value(d, h, mus, 0)), gap_clause(4, third, second),
                   value_clause(5, third, leading_value(d - 1, h, mus, 1))};
        break;
    }
    case Theorem::T6: {
        require_degree(name, d, 7);
        nu = Partition{d};
        Rational top(F(d - 1)), second(F(d - 2));
        clauses = {value_clause(1, top, 1), gap_clause(2, second, top),
                   value_clause(3, second, leading_value(d - 1, h, mus, 1))};
        break;
    }
    case Theorem::T2:
    case Theorem::LemmaDH2: {
        require_degree(name, d, theorem == Theorem::T2 ? 5 : 7);
        if (!params.nu)
            throw DomainError(name + " requires nu");
        nu = *params.nu;
        if (nu.size() == d && is_identity_class(nu))
            throw DomainError(name + " requires nu != (1^d)");
        kind = theorem == Theorem::T2 ? Kind::connected : Kind::disconnected;
        clauses = {value_clause(1, frac(F(d), z(nu)), 1)};
        break;
    }
    }

    StatementReport report = check_statement(name, kind, h, d, mus, nu, clauses, cache);
    report.r = params.r;
    return report;
}

Rational asymptotic_ratio(int h, int d, const std::vector<Partition>& mus, const Partition& nu, int g,
                          CharCache& cache)
{
    RepeatedSpec spec{CoverSpec{h, d, mus}, nu, std::nullopt, g};
    ConnectedResult result = connected(spec, cache);
    const Integer dfact = factorial(static_cast<unsigned>(d));
    Rational leading = rpow(Rational(dfact), static_cast<long>(mus.size()) + 2L * h - 2) * 2;
    for (const Partition& mu : mus)
        leading /= Rational(z(mu));
    leading *= Rational(ipow(dfact / z(nu), static_cast<unsigned>(result.resolved.k)));
    if (leading == 0)
        throw InternalError("vanishing leading term");
    return result.value / leading;
}

}  // namespace hurwitz
