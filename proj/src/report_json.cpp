#include "hurwitz/report_json.hpp"

#include <map>

namespace hurwitz {

Json to_json(const Integer& x) { return to_string(x); }
Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Partition& p) { return format(p); }

Json to_json(const std::vector<Partition>& ps)
{
    Json out = Json::array();
    for (const Partition& p : ps)
        out.push_back(to_json(p));
    return out;
}

Json to_json(const Box& b) { return Json::array({b.row, b.col}); }

Json to_json(const YoungTree& tree)
{
    Json boxes = Json::array();
    for (const Box& b : tree.graph.boxes)
        boxes.push_back(to_json(b));
    return Json{{"boxes", boxes}, {"vert", vert(tree)}, {"weight", to_json(weight(tree))}};
}

Json to_json(const Spectrum& s)
{
    Json eigen = Json::array();
    for (const auto& [t, lambda] : s.eigenvalues)
        eigen.push_back(Json{{"lambda", to_json(lambda)}, {"t", to_json(t)}});
    Json moduli = Json::array();
    for (auto it = s.by_modulus.rbegin(); it != s.by_modulus.rend(); ++it)
        moduli.push_back(Json{{"m", to_json(it->first)}, {"lambdas", to_json(it->second)}});
    return Json{{"d", s.degree}, {"nu", to_json(s.nu)}, {"max_modulus", to_json(s.max_modulus)},
                {"eigenvalues", eigen}, {"moduli", moduli}};
}

Json to_json(const BTable& table)
{
    Json entries = Json::array();
    for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it)
        entries.push_back(Json{{"m", to_json(it->first)}, {"b", to_json(it->second)}});
    return Json{{"kind", to_string(table.kind)},
                {"h", table.h},
                {"d", table.d},
                {"mus", to_json(table.mus)},
                {"nu", to_json(table.nu)},
                {"parity", table.parity},
                {"prefactor", to_json(table.prefactor)},
                {"integrality_scale", to_json(integrality_scale(table.h, table.d, table.mus))},
                {"integral", table.integral()},
                {"entries", entries}};
}

Json to_json(const Counterexample& c)
{
    return Json{{"m", to_json(c.m)}, {"expected", to_json(c.expected)}, {"got", to_json(c.got)}};
}

Json to_json(const StatementReport& report, const char* key)
{
    Json params{{"h", report.h}, {"d", report.d}};
    if (report.r)
        params["r"] = *report.r;
    params["nu"] = to_json(report.nu);
    params["mus"] = to_json(report.mus);
    params["kind"] = to_string(report.kind);

    std::map<int, bool> clause_pass;
    bool integral = true;
    Json classes = Json::array();
    Json counterexample = nullptr;
    for (const ParityResult& p : report.classes) {
        integral = integral && p.integral;
        Json clauses = Json::array();
        for (const ClauseResult& c : p.clauses) {
            auto [it, fresh] = clause_pass.try_emplace(c.id, c.pass);
            if (!fresh)
                it->second = it->second && c.pass;
            Json entry{{"id", c.id}, {"pass", c.pass}};
            if (c.counterexample) {
                entry["counterexample"] = to_json(*c.counterexample);
                if (counterexample.is_null()) {
                    counterexample = to_json(*c.counterexample);
                    counterexample["clause"] = c.id;
                    counterexample["parity"] = p.parity;
                }
            }
            clauses.push_back(entry);
        }
        classes.push_back(Json{{"parity", p.parity}, {"support", p.support}, {"integral", p.integral}, {"clauses", clauses}});
    }
    Json clauses = Json::array();
    for (const auto& [id, pass] : clause_pass)
        clauses.push_back(Json{{"id", id}, {"pass", pass}});

    return Json{{key, report.statement},
                {"params", params},
                {"clauses", clauses},
                {"counterexample", counterexample},
                {"integral", integral},
                {"vacuous", report.vacuous},
                {"pass", report.pass()},
                {"parity_classes", classes}};
}

Json to_json(const BoundEntry& e)
{
    return Json{{"lambda", to_json(e.lambda)}, {"mu", to_json(e.mu)}, {"lhs", to_json(e.lhs)},
                {"rhs", to_json(e.rhs)}, {"tight", e.tight}};
}

Json to_json(const BoundGroup& g)
{
    Json out{{"mu", to_json(g.mu)}, {"status", to_string(g.status)}, {"hypothesis", g.hypothesis}};
    if (g.status != GroupStatus::checked)
        return out;
    Json violations = Json::array();
    for (const BoundEntry& e : g.violations)
        violations.push_back(to_json(e));
    out["bound"] = to_json(g.bound);
    out["equality_set"] = to_json(g.equality_set);
    out["expected_equality"] = to_json(g.expected_equality);
    out["violations"] = violations;
    out["witness"] = g.witness ? to_json(*g.witness) : Json(nullptr);
    out["pass"] = g.pass();
    return out;
}

Json to_json(const BoundReport& report, bool with_runtime)
{
    Json groups = Json::array();
    Json violations = Json::array();
    Json equality = Json::array();
    for (const BoundGroup& g : report.groups) {
        groups.push_back(to_json(g));
        for (const BoundEntry& e : g.violations)
            violations.push_back(to_json(e));
        if (g.status == GroupStatus::checked)
            equality.push_back(Json{{"mu", to_json(g.mu)}, {"lambdas", to_json(g.equality_set)}, {"matches", g.equality_matches()}});
    }
    Json out{{"bound", report.bound},
             {"d", report.d},
             {"filters", report.filters},
             {"pass", report.pass()},
             {"violations", violations},
             {"equality_set", equality},
             {"groups", groups}};
    if (with_runtime)
        out["runtime"] = report.runtime_seconds;
    return out;
}

}  // namespace hurwitz
