#include "hurwitz/verify.hpp"

#include "hurwitz/parallel.hpp"
#include "hurwitz/young_trees.hpp"

#include <algorithm>
#include <chrono>

namespace hurwitz {

namespace {

Partition ones(int n) { return Partition::rectangle(1, n); }

bool is_trivial_or_sign(const Partition& lambda, int d) { return lambda == Partition{d} || lambda == ones(d); }

std::vector<Partition> sorted(std::vector<Partition> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

/// Runs the comparison of one group over the given lambdas; `ratio` returns lhs.
template <class Ratio>
void sweep_group(BoundGroup& group, const std::vector<Partition>& lambdas, Ratio&& ratio)
{
    for (const Partition& lambda : lambdas) {
        BoundEntry e{lambda, group.mu, ratio(lambda), group.bound, false};
        e.tight = e.lhs == e.rhs;
        if (e.tight)
            group.equality_set.push_back(lambda);
        if (e.lhs > e.rhs)
            group.violations.push_back(e);
        if (!group.witness || e.lhs > group.witness->lhs)
            group.witness = e;
    }
    group.equality_set = sorted(std::move(group.equality_set));
    group.expected_equality = sorted(std::move(group.expected_equality));
}

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_min_degree(const std::string& name, int d, int minimum)
{
    if (d < minimum)
        throw DomainError(name + " requires d >= " + std::to_string(minimum) + ", got d = " + std::to_string(d));
}

std::vector<Partition> nontrivial_lambdas(int d, int ceiling)
{
    std::vector<Partition> out;
    for (const Partition& lambda : enumerate_partitions(d, ceiling))
        if (!is_trivial_or_sign(lambda, d))
            out.push_back(lambda);
    return out;
}

}  // namespace

BoundEntry check_lemma_l1(const Partition& lambda, int r, CharCache& cache)
{
    const int d = lambda.size();
    if (r < 2 || r > d)
        throw DomainError("lemma l1 requires 2 <= r <= d, got r = " + std::to_string(r));
    Integer straight = 0;
    for (int p : lambda.parts())
        straight += binomial(p, r);
    const Partition columns = conjugate(lambda);
    for (int p : columns.parts())
        straight += binomial(p, r);
    Rational rhs = make_rational(1, r - 1) + make_rational(r - 2, r - 1) * make_rational(straight, binomial(d, r));
    Partition mu = Partition::cycle_class(r, d);
    Rational lhs = abs(character_ratio(lambda, mu, cache));
    return BoundEntry{lambda, mu, lhs, rhs, lhs == rhs};
}

std::string to_string(GroupStatus s)
{
    switch (s) {
    case GroupStatus::checked:
        return "checked";
    case GroupStatus::excluded:
        return "excluded";
    case GroupStatus::no_hypothesis:
        return "no hypothesis";
    }
    return "?";
}

bool BoundReport::pass() const
{
    return std::all_of(groups.begin(), groups.end(), [](const BoundGroup& g) { return g.pass(); });
}

std::size_t BoundReport::violation_count() const
{
    std::size_t n = 0;
    for (const BoundGroup& g : groups)
        n += g.violations.size();
    return n;
}

std::size_t BoundReport::equality_mismatches() const
{
    return static_cast<std::size_t>(std::count_if(groups.begin(), groups.end(), [](const BoundGroup& g) {
        return g.status == GroupStatus::checked && !g.equality_matches();
    }));
}

BoundReport check_lemma_rm2(int d, CharCache& cache, RatioRoute route, unsigned jobs)
{
    require_min_degree("lemma rm2", d, 7);
    Stopwatch clock;
    BoundReport report;
    report.bound = "lemma-rm2";
    report.d = d;
    report.filters = {"lambda not in {(d), (1^d)}", "mu = (r, 1^{d-r}), 2 <= r <= d"};
    if (route == RatioRoute::frobenius)
        report.filters.push_back("closed forms for r = 2, 3, 4");

    const auto lambdas = nontrivial_lambdas(d, cache.ceiling());
    report.groups.resize(static_cast<std::size_t>(d - 1));
    parallel_for(report.groups.size(), jobs, [&](std::size_t i) {
        const int r = static_cast<int>(i) + 2;
        BoundGroup& g = report.groups[i];
        g.mu = Partition::cycle_class(r, d);
        if (r == d - 1) {
            g.hypothesis = "r = d-1";
            g.bound = make_rational(2, d * (d - 3));
            g.expected_equality = {Partition{d - 2, 2}, Partition{2, 2} + ones(d - 4)};
        } else {
            g.hypothesis = "r != d-1";
            g.bound = make_rational(std::abs(d - r - 1), d - 1);
            g.expected_equality = {Partition{d - 1, 1}, Partition{2} + ones(d - 2)};
        }
        const bool closed_form = route == RatioRoute::frobenius && r <= 4;
        const Rational scale = make_rational(z(g.mu), factorial(static_cast<unsigned>(d)));
        sweep_group(g, lambdas, [&](const Partition& lambda) {
            if (closed_form)
                return Rational(abs(Rational(frobenius_f(r, lambda)) * scale));
            return Rational(abs(character_ratio(lambda, g.mu, cache)));
        });
    });
    report.runtime_seconds = clock.seconds();
    return report;
}

BoundReport check_theorem_B(int d, CharCache& cache, unsigned jobs)
{
    require_min_degree("theorem B", d, 5);
    Stopwatch clock;
    BoundReport report;
    report.bound = "theorem-B";
    report.d = d;
    report.filters = {"mu != (1^d)"};

    std::vector<Partition> mus;
    for (const Partition& mu : enumerate_partitions(d, cache.ceiling()))
        if (colength(mu) != 0)
            mus.push_back(mu);
    const auto& lambdas = enumerate_partitions(d, cache.ceiling());
    report.groups.resize(mus.size());
    parallel_for(mus.size(), jobs, [&](std::size_t i) {
        BoundGroup& g = report.groups[i];
        g.mu = mus[i];
        g.hypothesis = "mu != (1^d)";
        g.bound = 1;
        g.expected_equality = {Partition{d}, ones(d)};
        sweep_group(g, lambdas, [&](const Partition& lambda) { return Rational(abs(character_ratio(lambda, g.mu, cache))); });
    });
    report.runtime_seconds = clock.seconds();
    return report;
}

const std::vector<Exclusion>& conjecture1_exclusions()
{
    static const std::vector<Exclusion> table = {
        {1, "(2^{d/2})",
         [](int d) -> std::optional<Partition> {
             if (d % 2)
                 return std::nullopt;
             return Partition::rectangle(2, d / 2);
         }},
        {1, "(2^{d/2-1}, 1^2)",
         [](int d) -> std::optional<Partition> {
             if (d % 2)
                 return std::nullopt;
             return Partition::rectangle(2, d / 2 - 1) + ones(2);
         }},
        {2, "(3^{d/3-1}, 2, 1)",
         [](int d) -> std::optional<Partition> {
             if (d % 3)
                 return std::nullopt;
             return Partition::rectangle(3, d / 3 - 1) + Partition{2, 1};
         }},
        {3, "(3^{(d-1)/3}, 1)",
         [](int d) -> std::optional<Partition> {
             if (d % 3 != 1)
                 return std::nullopt;
             return Partition::rectangle(3, (d - 1) / 3) + ones(1);
         }},
    };
    return table;
}

BoundReport check_conjecture1(int d, CharCache& cache, unsigned jobs)
{
    require_min_degree("conjecture 1", d, 10);
    Stopwatch clock;
    BoundReport report;
    report.bound = "conjecture-1";
    report.d = d;
    report.filters = {"lambda not in {(d), (1^d)}", "mu != (1^d)", "bullet 2 read as m_2 >= 2"};
    for (const Exclusion& e : conjecture1_exclusions())
        report.filters.push_back("bullet " + std::to_string(e.bullet) + " excludes " + e.pattern);

    const auto lambdas = nontrivial_lambdas(d, cache.ceiling());
    const auto& mus = enumerate_partitions(d, cache.ceiling());
    report.groups.resize(mus.size());
    parallel_for(mus.size(), jobs, [&](std::size_t i) {
        BoundGroup& g = report.groups[i];
        const Partition& mu = mus[i];
        g.mu = mu;
        const int m1 = mu.multiplicity(1);
        const int m2 = mu.multiplicity(2);

        int bullet = 0;
        if (colength(mu) == 0) {
            g.status = GroupStatus::excluded;
            g.hypothesis = "identity class";
            return;
        }
        if (m1 != 1) {
            bullet = 1;
            g.hypothesis = "m_1 != 1";
            g.bound = make_rational(std::abs(m1 - 1), d - 1);
            g.expected_equality = {Partition{d - 1, 1}, Partition{2} + ones(d - 2)};
        } else if (m2 >= 2) {
            bullet = 2;
            g.hypothesis = "m_1 = 1, m_2 >= 2";
            g.bound = make_rational(2 * m2, (d - 1) * (d - 2));
            g.expected_equality = {Partition{d - 2, 1, 1}, Partition{3} + ones(d - 3)};
        } else if (m2 == 0) {
            bullet = 3;
            g.hypothesis = "m_1 = 1, m_2 = 0";
            g.bound = make_rational(2, d * (d - 3));
            g.expected_equality = {Partition{d - 2, 2}, Partition{2, 2} + ones(d - 4)};
        } else {
            g.status = GroupStatus::no_hypothesis;
            g.hypothesis = "m_1 = 1, m_2 = 1";
            return;
        }
        for (const Exclusion& e : conjecture1_exclusions()) {
            if (e.bullet == bullet && e.shape(d) == mu) {
                g.status = GroupStatus::excluded;
                g.hypothesis += ", excluded " + e.pattern;
                g.expected_equality.clear();
                return;
            }
        }
        sweep_group(g, lambdas, [&](const Partition& lambda) { return Rational(abs(character_ratio(lambda, mu, cache))); });
    });
    report.runtime_seconds = clock.seconds();
    return report;
}

std::string to_string(GapConjecture c)
{
    switch (c) {
    case GapConjecture::cH4:
        return "cH4";
    case GapConjecture::cH9:
        return "cH9";
    case GapConjecture::cH11:
        return "cH11";
    }
    return "?";
}

GapConjecture parse_gap_conjecture(const std::string& text)
{
    for (GapConjecture c : {GapConjecture::cH4, GapConjecture::cH9, GapConjecture::cH11})
        if (to_string(c) == text)
            return c;
    throw ParseError("unknown conjecture id '" + text + "' (expected cH4, cH9 or cH11)");
}

std::vector<Partition> cH11_exclusions(int d)
{
    std::vector<Partition> out;
    if (d % 3 == 0)
        out.push_back(Partition::rectangle(3, d / 3 - 1) + Partition{2, 1});
    if (d % 2 == 0)
        out.push_back(Partition::rectangle(2, d / 2 - 1) + ones(1));
    if (d % 3 == 1)
        out.push_back(Partition::rectangle(3, (d - 1) / 3) + ones(1));
    return out;
}

StatementReport check_conjecture_b(GapConjecture conjecture, int d, const Partition& nu, int h,
                                   const std::vector<Partition>& mus, CharCache& cache, int cap)
{
    const std::string name = to_string(conjecture);
    require_min_degree(name, d, 10);
    if (d > cap)
        throw DomainError(name + ": d = " + std::to_string(d) + " exceeds the configured cap " + std::to_string(cap));
    if (nu.size() != d)
        throw DomainError("nu = (" + format(nu) + ") does not have size " + std::to_string(d));
    if (colength(nu) == 0)
        throw DomainError(name + " requires nu != (1^d)");

    const int m1 = nu.multiplicity(1);
    const int m2 = nu.multiplicity(2);
    const Integer dfact = factorial(static_cast<unsigned>(d));
    const Integer znu = z(nu);
    const Rational top = make_rational(dfact, znu);
    std::vector<Clause> clauses;

    switch (conjecture) {
    case GapConjecture::cH4: {
        if (m1 < 2)
            throw DomainError("cH4 requires m_1(nu) >= 2, got " + std::to_string(m1));
        Rational upper = make_rational(dfact * m1, d * znu);
        Rational lower = make_rational(dfact * (m1 - 1), (d - 1) * znu);
        clauses = {gap_clause(1, upper, top), gap_clause(2, lower, upper),
                   value_clause(3, upper, -leading_value(d, h, mus, 0))};
        if (d % 2 != 0 || nu != Partition::rectangle(2, d / 2 - 1) + ones(2))
            clauses.push_back(value_clause(4, lower, leading_value(d - 1, h, mus, 1)));
        break;
    }
    case GapConjecture::cH9: {
        if (m1 != 0)
            throw DomainError("cH9 requires m_1(nu) = 0, got " + std::to_string(m1));
        if (d % 2 == 0 && nu == Partition::rectangle(2, d / 2))
            throw DomainError("cH9 excludes nu = (2^{d/2})");
        Rational second = make_rational(d * factorial(static_cast<unsigned>(d - 2)), znu);
        clauses = {gap_clause(1, second, top), value_clause(2, second, leading_value(d - 1, h, mus, 1))};
        break;
    }
    case GapConjecture::cH11: {
        if (m1 != 1)
            throw DomainError("cH11 requires m_1(nu) = 1, got " + std::to_string(m1));
        for (const Partition& excluded : cH11_exclusions(d))
            if (nu == excluded)
                throw DomainError("cH11 excludes nu = (" + format(nu) + ")");
        Rational second = make_rational(factorial(static_cast<unsigned>(d - 1)), znu);
        clauses = {gap_clause(1, second, top), value_clause(2, second, leading_value(d - 1, h, mus, 1))};
        // read as m_2 >= 2: at m_2 = 0 the lower end is 0 and would swallow clause 4
        if (m2 >= 2)
            clauses.push_back(gap_clause(3, make_rational(2 * d * m2 * factorial(static_cast<unsigned>(d - 3)), znu), second));
        if (m2 == 0)
            clauses.push_back(gap_clause(4, make_rational(2 * factorial(static_cast<unsigned>(d - 1)), znu * (d - 3)), second));
        break;
    }
    }
    return check_statement(name, Kind::connected, h, d, mus, nu, clauses, cache);
}

}  // namespace hurwitz
