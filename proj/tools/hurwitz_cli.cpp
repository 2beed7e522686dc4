// hurwitz: command-line front end for characters, Young trees, Hurwitz
// numbers, structure coefficients and the bound/conjecture sweeps.
//
// Exit codes: 0 success or verification pass, 1 verification fail,
// 2 usage error, 3 computation error.

#include "hurwitz/characters.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/report_json.hpp"
#include "hurwitz/structure.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/young_trees.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace hurwitz;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_error = 3;

constexpr const char* csv_columns = R"(CSV columns (frozen):
  chi        lambda,mu,chi
  f          lambda,mu,method,f
  trees      lambda,r,index,boxes,vert,weight
  hurwitz    kind,h,d,g,k,profiles,value
  bseries    kind,h,d,nu,parity,m,b   (--spectrum: lambda,t)
  verify lemma-l1                 lambda,r,lhs,rhs,tight,holds
  verify as1                      statement,h,d,nu,g,ratio
  verify/conjecture (statements)  statement,parity,clause,pass,m,expected,got
  verify/conjecture (bounds)      bound,d,mu,status,bound_value,violations,equality_set,matches
  cache      key,value)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Context {
    std::string format = "json";
    std::string cache_dir;
    unsigned jobs = 0;
    bool runtime = true;
    std::unique_ptr<CharCache> owned_cache;

    CharCache& cache()
    {
        if (!owned_cache) {
            owned_cache = cache_dir.empty() ? std::make_unique<CharCache>()
                                            : CharCache::open(std::filesystem::path(cache_dir) / "characters.tsv");
        }
        return *owned_cache;
    }
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const Context& ctx, const Json& doc, const Table& table)
{
    if (ctx.format == "csv") {
        auto line = [](const std::vector<std::string>& cells) {
            std::string out;
            for (std::size_t i = 0; i < cells.size(); ++i)
                out += (i ? "," : "") + csv_field(cells[i]);
            return out;
        };
        std::cout << line(table.header) << '\n';
        for (const auto& row : table.rows)
            std::cout << line(row) << '\n';
    } else if (ctx.format == "pretty") {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << doc.dump() << '\n';
    }
}

Partition partition_flag(const std::string& flag, const std::string& text)
{
    try {
        return parse_partition(text);
    } catch (const ParseError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::vector<Partition> partition_list(const std::string& flag, const std::vector<std::string>& texts)
{
    std::vector<Partition> out;
    for (const auto& t : texts)
        out.push_back(partition_flag(flag, t));
    return out;
}

std::string join(const std::vector<Partition>& ps, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i)
        out += (i ? sep : "") + format(ps[i]);
    return out;
}

// ---------------------------------------------------------------- chi / f / trees

struct ChiArgs {
    std::string lambda, mu;
};

int run_chi(Context& ctx, const ChiArgs& a)
{
    Partition lambda = partition_flag("--lambda", a.lambda);
    Partition mu = partition_flag("--mu", a.mu);
    Integer value = chi(lambda, mu, ctx.cache());
    Json doc{{"lambda", format(lambda)}, {"mu", format(mu)}, {"chi", to_json(value)}};
    emit(ctx, doc, {{"lambda", "mu", "chi"}, {{format(lambda), format(mu), to_string(value)}}});
    return exit_ok;
}

struct FArgs {
    std::string lambda, mu, method = "mn";
    std::optional<int> r;
};

int run_f(Context& ctx, const FArgs& a)
{
    Partition lambda = partition_flag("--lambda", a.lambda);
    if (a.r.has_value() == !a.mu.empty())
        throw UsageError("give exactly one of --r or --mu");
    Partition mu = a.r ? Partition::cycle_class(*a.r, lambda.size()) : partition_flag("--mu", a.mu);
    const int r = a.r.value_or(0);
    if (!a.r && a.method != "mn")
        throw UsageError("--method " + a.method + " needs --r (it applies to the class (r,1^{d-r}) only)");

    Integer value;
    if (a.method == "trees")
        value = f_via_trees(lambda, r);
    else if (a.method == "frobenius")
        value = frobenius_f(r, lambda);
    else
        value = central_character(mu, lambda, ctx.cache());

    Json doc{{"lambda", format(lambda)}};
    if (a.r)
        doc["r"] = r;
    doc["mu"] = format(mu);
    doc["method"] = a.method;
    doc["f"] = to_json(value);
    emit(ctx, doc, {{"lambda", "mu", "method", "f"}, {{format(lambda), format(mu), a.method, to_string(value)}}});
    return exit_ok;
}

struct TreesArgs {
    std::string lambda;
    int r = 1;
    bool list = false;
};

int run_trees(Context& ctx, const TreesArgs& a)
{
    Partition lambda = partition_flag("--lambda", a.lambda);
    std::vector<YoungTree> trees = enumerate_trees(lambda, a.r);
    Json doc{{"lambda", format(lambda)},
             {"r", a.r},
             {"count", trees.size()},
             {"straight", to_json(count_straight_trees(lambda, a.r))},
             {"f", to_json(f_via_trees(lambda, a.r))}};
    Table table{{"lambda", "r", "index", "boxes", "vert", "weight"}, {}};
    Json list = Json::array();
    for (std::size_t i = 0; i < trees.size(); ++i) {
        std::string boxes;
        for (const Box& b : trees[i].graph.boxes)
            boxes += (boxes.empty() ? "" : " ") + std::to_string(b.row) + "." + std::to_string(b.col);
        table.rows.push_back({format(lambda), std::to_string(a.r), std::to_string(i), boxes,
                              std::to_string(vert(trees[i])), to_string(weight(trees[i]))});
        if (a.list)
            list.push_back(to_json(trees[i]));
    }
    if (a.list)
        doc["trees"] = list;
    emit(ctx, doc, table);
    return exit_ok;
}

// ---------------------------------------------------------------- hurwitz

struct HurwitzArgs {
    int h = 0;
    int d = 1;
    std::vector<std::string> profiles;
    std::string nu;
    std::optional<int> k, g;
    bool connected = false;
    bool oracle = false;
};

int run_hurwitz(Context& ctx, const HurwitzArgs& a)
{
    CoverSpec base{a.h, a.d, partition_list("--profile", a.profiles)};
    std::optional<int> k, g;
    Rational value;
    bool parity_violation = false;
    CoverSpec full = base;

    if (!a.nu.empty()) {
        RepeatedSpec spec{base, partition_flag("--nu", a.nu), a.k, a.g};
        ResolvedCount rc = resolve(spec);
        k = rc.k;
        g = rc.genus;
        parity_violation = rc.parity_violation;
        full = expand(spec, rc.k);
        if (parity_violation)
            value = 0;
        else if (a.oracle)
            value = a.connected ? brute_force_connected(full) : brute_force_disconnected(full);
        else if (a.connected)
            value = connected(spec, ctx.cache()).value;
        else
            value = disconnected(full, ctx.cache());
    } else {
        if (a.k || a.g)
            throw UsageError("--k and --g need --nu");
        validate(base);
        if (a.oracle)
            value = a.connected ? brute_force_connected(base) : brute_force_disconnected(base);
        else
            value = a.connected ? connected_count(base, ctx.cache()) : disconnected(base, ctx.cache());
    }

    const char* kind = a.connected ? "connected" : "disconnected";
    Json doc{{"kind", kind}, {"h", a.h}, {"d", a.d}};
    doc["g"] = g ? Json(*g) : Json(nullptr);
    doc["k"] = k ? Json(*k) : Json(nullptr);
    doc["profiles"] = to_json(full.profiles);
    if (a.oracle)
        doc["method"] = "oracle";
    if (parity_violation)
        doc["parity_violation"] = true;
    doc["value"] = to_json(value);
    emit(ctx, doc,
         {{"kind", "h", "d", "g", "k", "profiles", "value"},
          {{kind, std::to_string(a.h), std::to_string(a.d), g ? std::to_string(*g) : "", k ? std::to_string(*k) : "",
            join(full.profiles, ";"), to_string(value)}}});
    return exit_ok;
}

// ---------------------------------------------------------------- bseries

struct BSeriesArgs {
    int h = 0;
    int d = 1;
    std::vector<std::string> mus;
    std::string nu;
    std::string kind = "connected";
    std::optional<int> parity;
    bool spectrum = false;
};

int run_bseries(Context& ctx, const BSeriesArgs& a)
{
    Partition nu = partition_flag("--nu", a.nu);
    if (a.spectrum) {
        Spectrum s = spectrum(a.d, nu, ctx.cache());
        Table table{{"lambda", "t"}, {}};
        for (const auto& [t, lambda] : s.eigenvalues)
            table.rows.push_back({format(lambda), to_string(t)});
        emit(ctx, to_json(s), table);
        return exit_ok;
    }
    std::vector<Partition> mus = partition_list("--mu", a.mus);
    BTable t = a.kind == "connected" ? extract_b_connected(a.h, a.d, mus, nu, ctx.cache(), a.parity)
                                     : extract_b_disconnected(a.h, a.d, mus, nu, ctx.cache(), a.parity);
    Table table{{"kind", "h", "d", "nu", "parity", "m", "b"}, {}};
    for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it) {
        table.rows.push_back({a.kind, std::to_string(a.h), std::to_string(a.d), format(nu), std::to_string(t.parity),
                              to_string(it->first), to_string(it->second)});
    }
    emit(ctx, to_json(t), table);
    return exit_ok;
}

// ---------------------------------------------------------------- verify / conjecture

void statement_rows(const StatementReport& r, Table& table)
{
    for (const ParityResult& p : r.classes) {
        for (const ClauseResult& c : p.clauses) {
            std::vector<std::string> row{r.statement, std::to_string(p.parity), std::to_string(c.id), c.pass ? "1" : "0"};
            if (c.counterexample) {
                row.push_back(to_string(c.counterexample->m));
                row.push_back(to_string(c.counterexample->expected));
                row.push_back(to_string(c.counterexample->got));
            } else {
                row.insert(row.end(), {"", "", ""});
            }
            table.rows.push_back(std::move(row));
        }
    }
}

const std::vector<std::string> statement_header{"statement", "parity", "clause", "pass", "m", "expected", "got"};

int emit_statements(Context& ctx, const std::vector<StatementReport>& reports, const char* key)
{
    Table table{statement_header, {}};
    bool pass = true;
    Json doc;
    if (reports.size() == 1) {
        doc = to_json(reports.front(), key);
    } else {
        doc = Json::array();
        for (const auto& r : reports)
            doc.push_back(to_json(r, key));
    }
    for (const auto& r : reports) {
        pass = pass && r.pass();
        statement_rows(r, table);
    }
    emit(ctx, doc, table);
    return pass ? exit_ok : exit_fail;
}

int emit_bound(Context& ctx, const BoundReport& report)
{
    Table table{{"bound", "d", "mu", "status", "bound_value", "violations", "equality_set", "matches"}, {}};
    for (const BoundGroup& g : report.groups) {
        const bool checked = g.status == GroupStatus::checked;
        table.rows.push_back({report.bound, std::to_string(report.d), format(g.mu), to_string(g.status),
                              checked ? to_string(g.bound) : "", std::to_string(g.violations.size()),
                              join(g.equality_set, ";"), checked ? (g.equality_matches() ? "1" : "0") : ""});
    }
    emit(ctx, to_json(report, ctx.runtime), table);
    return report.pass() ? exit_ok : exit_fail;
}

struct VerifyArgs {
    std::string target;
    int d = 0;
    int h = 0;
    std::optional<int> r, g;
    std::string nu;
    std::vector<std::string> mus;
    std::string route = "characters";
    bool sweep_mu = false;
};

int run_verify(Context& ctx, const VerifyArgs& a)
{
    CharCache& cache = ctx.cache();
    if (a.target == "lemma-rm2")
        return emit_bound(ctx, check_lemma_rm2(a.d, cache, a.route == "frobenius" ? RatioRoute::frobenius : RatioRoute::characters, ctx.jobs));
    if (a.target == "theorem-b")
        return emit_bound(ctx, check_theorem_B(a.d, cache, ctx.jobs));
    if (a.target == "lemma-l1") {
        std::vector<int> orders;
        if (a.r)
            orders.push_back(*a.r);
        else
            for (int r = 2; r <= a.d; ++r)
                orders.push_back(r);
        Json violations = Json::array();
        Json tight = Json::array();
        Table table{{"lambda", "r", "lhs", "rhs", "tight", "holds"}, {}};
        for (int r : orders) {
            for (const Partition& lambda : enumerate_partitions(a.d, cache.ceiling())) {
                BoundEntry e = check_lemma_l1(lambda, r, cache);
                if (e.lhs > e.rhs)
                    violations.push_back(to_json(e));
                if (e.tight)
                    tight.push_back(to_json(e));
                table.rows.push_back({format(lambda), std::to_string(r), to_string(e.lhs), to_string(e.rhs),
                                      e.tight ? "1" : "0", e.lhs <= e.rhs ? "1" : "0"});
            }
        }
        bool pass = violations.empty();
        Json doc{{"bound", "lemma-l1"}, {"d", a.d}, {"pass", pass}, {"violations", violations}, {"tight", tight}};
        if (a.r)
            doc["r"] = *a.r;
        emit(ctx, doc, table);
        return pass ? exit_ok : exit_fail;
    }
    if (a.target == "as1") {
        if (!a.g || a.nu.empty())
            throw UsageError("as1 needs --nu and --g");
        Partition nu = partition_flag("--nu", a.nu);
        std::vector<Partition> mus = partition_list("--mu", a.mus);
        Rational ratio = asymptotic_ratio(a.h, a.d, mus, nu, *a.g, cache);
        Json doc{{"statement", "As1"}, {"h", a.h}, {"d", a.d}, {"nu", format(nu)}, {"mus", to_json(mus)},
                 {"g", *a.g}, {"ratio", to_json(ratio)}, {"ratio_minus_one", to_json(Rational(ratio - 1))}};
        emit(ctx, doc, {{"statement", "h", "d", "nu", "g", "ratio"},
                        {{"As1", std::to_string(a.h), std::to_string(a.d), format(nu), std::to_string(*a.g), to_string(ratio)}}});
        return exit_ok;
    }

    Theorem theorem;
    try {
        theorem = parse_theorem(a.target);
    } catch (const ParseError&) {
        throw UsageError("verify: unknown target '" + a.target +
                         "' (expected lemma-l1, lemma-rm2, theorem-b, as1, T1, T2, T5, T6, PropDH, LemmaDH2)");
    }
    TheoremParams params{a.h, a.d, a.r, std::nullopt, partition_list("--mu", a.mus)};
    if (!a.nu.empty())
        params.nu = partition_flag("--nu", a.nu);

    std::vector<StatementReport> reports;
    if (a.sweep_mu) {
        params.mus.clear();
        reports.push_back(verify_theorem(theorem, params, cache));
        for (const Partition& mu : enumerate_partitions(a.d, cache.ceiling())) {
            params.mus = {mu};
            reports.push_back(verify_theorem(theorem, params, cache));
        }
    } else {
        reports.push_back(verify_theorem(theorem, params, cache));
    }
    return emit_statements(ctx, reports, "theorem");
}

struct ConjectureArgs {
    std::string id;
    int d = 0;
    int h = 0;
    std::string nu;
    std::vector<std::string> mus;
    int cap = default_conjecture_cap;
    bool all_nu = false;
};

int run_conjecture(Context& ctx, const ConjectureArgs& a)
{
    CharCache& cache = ctx.cache();
    if (a.id == "conj1")
        return emit_bound(ctx, check_conjecture1(a.d, cache, ctx.jobs));

    GapConjecture conjecture;
    try {
        conjecture = parse_gap_conjecture(a.id);
    } catch (const ParseError&) {
        throw UsageError("conjecture: unknown id '" + a.id + "' (expected conj1, cH4, cH9, cH11)");
    }
    std::vector<Partition> mus = partition_list("--mu", a.mus);
    std::vector<StatementReport> reports;
    if (a.all_nu) {
        for (const Partition& nu : enumerate_partitions(a.d, cache.ceiling())) {
            try {
                reports.push_back(check_conjecture_b(conjecture, a.d, nu, a.h, mus, cache, a.cap));
            } catch (const DomainError&) {
                // nu outside the hypothesis class
            }
        }
        if (reports.empty())
            throw DomainError(a.id + ": no class of S(" + std::to_string(a.d) + ") meets the hypotheses");
    } else {
        if (a.nu.empty())
            throw UsageError("conjecture " + a.id + " needs --nu or --all-nu");
        reports.push_back(check_conjecture_b(conjecture, a.d, partition_flag("--nu", a.nu), a.h, mus, cache, a.cap));
    }
    return emit_statements(ctx, reports, "conjecture");
}

// ---------------------------------------------------------------- cache

struct CacheArgs {
    std::string action;
    int d = 0;
};

int run_cache(Context& ctx, const CacheArgs& a)
{
    CharCache& cache = ctx.cache();
    if (a.action == "clear") {
        cache.clear();
    } else if (a.action == "warm") {
        if (a.d < 1)
            throw UsageError("--d: warm needs a positive degree");
        for (const Partition& lambda : enumerate_partitions(a.d, cache.ceiling()))
            for (const Partition& mu : enumerate_partitions(a.d, cache.ceiling()))
                chi(lambda, mu, cache);
        cache.flush();
    }

    Json degrees = Json::object();
    Table table{{"key", "value"}, {}};
    const std::string file = cache.file() ? cache.file()->string() : "";
    table.rows.push_back({"action", a.action});
    table.rows.push_back({"file", file});
    table.rows.push_back({"entries", std::to_string(cache.size())});
    table.rows.push_back({"ceiling", std::to_string(cache.ceiling())});
    for (const auto& [deg, n] : cache.degree_histogram()) {
        degrees[std::to_string(deg)] = n;
        table.rows.push_back({"degree " + std::to_string(deg), std::to_string(n)});
    }
    Json doc{{"action", a.action},
             {"file", cache.file() ? Json(file) : Json(nullptr)},
             {"entries", cache.size()},
             {"ceiling", cache.ceiling()},
             {"truncated_records", cache.truncated_records()},
             {"degrees", degrees}};
    emit(ctx, doc, table);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact characters of S(d), Young trees, Hurwitz numbers and their structure coefficients"};
    app.footer(csv_columns);
    app.require_subcommand(1);
    // --h is the target genus, so help is long-form only
    app.set_help_flag("--help", "Print this help message and exit");
    app.fallthrough();  // global flags may follow the subcommand

    Context ctx;
    app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}))->capture_default_str();
    app.add_option("--cache-dir", ctx.cache_dir, "Directory of the persistent character cache")->envname("HURWITZ_CACHE_DIR");
    app.add_option("--jobs", ctx.jobs, "Worker threads for sweeps (0 = all cores)")->capture_default_str();
    bool no_runtime = false;
    app.add_flag("--no-runtime", no_runtime, "Omit wall-clock runtime from sweep reports (byte-stable output)");

    ChiArgs chi_args;
    auto* chi_cmd = app.add_subcommand("chi", "Irreducible character chi_lambda(mu)");
    chi_cmd->add_option("--lambda", chi_args.lambda, "Irreducible, e.g. 3,1 or 2^2")->required();
    chi_cmd->add_option("--mu", chi_args.mu, "Conjugacy class")->required();

    FArgs f_args;
    auto* f_cmd = app.add_subcommand("f", "Central character f_mu(lambda)");
    f_cmd->add_option("--lambda", f_args.lambda, "Irreducible")->required();
    f_cmd->add_option("--r", f_args.r, "Use the class (r,1^{d-r})");
    f_cmd->add_option("--mu", f_args.mu, "General class (method mn only)");
    f_cmd->add_option("--method", f_args.method, "Evaluation route")
        ->check(CLI::IsMember({"mn", "trees", "frobenius"}))
        ->capture_default_str();

    TreesArgs trees_args;
    auto* trees_cmd = app.add_subcommand("trees", "Young trees of order r in a diagram");
    trees_cmd->add_option("--lambda", trees_args.lambda, "Diagram")->required();
    trees_cmd->add_option("--r", trees_args.r, "Tree order")->required();
    trees_cmd->add_flag("--list", trees_args.list, "Include every tree in the JSON output");

    HurwitzArgs hw_args;
    auto* hw_cmd = app.add_subcommand("hurwitz", "Disconnected or connected Hurwitz numbers");
    hw_cmd->add_option("--h", hw_args.h, "Target genus")->capture_default_str();
    hw_cmd->add_option("--d", hw_args.d, "Degree")->required();
    hw_cmd->add_option("--profile", hw_args.profiles, "Ramification profile (repeatable)");
    hw_cmd->add_option("--nu", hw_args.nu, "Repeated profile");
    hw_cmd->add_option("--k", hw_args.k, "Number of nu points");
    hw_cmd->add_option("--g", hw_args.g, "Genus of the covering curve");
    hw_cmd->add_flag("--connected", hw_args.connected, "Connected covers only");
    hw_cmd->add_flag("--oracle", hw_args.oracle, "Count permutation tuples directly (d <= 6, h <= 1)");

    BSeriesArgs bs_args;
    auto* bs_cmd = app.add_subcommand("bseries", "Structure coefficients b(m) of a Hurwitz sequence");
    bs_cmd->add_option("--h", bs_args.h, "Target genus")->capture_default_str();
    bs_cmd->add_option("--d", bs_args.d, "Degree")->required();
    bs_cmd->add_option("--mu", bs_args.mus, "Fixed profile (repeatable)");
    bs_cmd->add_option("--nu", bs_args.nu, "Repeated profile")->required();
    bs_cmd->add_option("--kind", bs_args.kind, "Sequence kind")
        ->check(CLI::IsMember({"connected", "disconnected"}))
        ->capture_default_str();
    bs_cmd->add_option("--parity", bs_args.parity, "Parity class of k")->check(CLI::Range(0, 1));
    bs_cmd->add_flag("--spectrum", bs_args.spectrum, "Print the eigenvalues f_nu(lambda) instead");

    VerifyArgs v_args;
    auto* v_cmd = app.add_subcommand("verify", "Check a bound or a structure statement");
    v_cmd->add_option("target", v_args.target,
                      "lemma-l1 | lemma-rm2 | theorem-b | as1 | T1 | T2 | T5 | T6 | PropDH | LemmaDH2")
        ->required();
    v_cmd->add_option("--d", v_args.d, "Degree")->required();
    v_cmd->add_option("--h", v_args.h, "Target genus")->capture_default_str();
    v_cmd->add_option("--r", v_args.r, "Order r of the class (r,1^{d-r})");
    v_cmd->add_option("--g", v_args.g, "Genus of the covering curve (as1)");
    v_cmd->add_option("--nu", v_args.nu, "Repeated profile");
    v_cmd->add_option("--mu", v_args.mus, "Fixed profile (repeatable)");
    v_cmd->add_option("--route", v_args.route, "Ratio evaluation for lemma-rm2")
        ->check(CLI::IsMember({"characters", "frobenius"}))
        ->capture_default_str();
    v_cmd->add_flag("--sweep-mu", v_args.sweep_mu, "Run with no fixed profile and with each class as the single one");

    ConjectureArgs c_args;
    auto* c_cmd = app.add_subcommand("conjecture", "Falsification sweep of a conjecture");
    c_cmd->add_option("id", c_args.id, "conj1 | cH4 | cH9 | cH11")->required();
    c_cmd->add_option("--d", c_args.d, "Degree")->required();
    c_cmd->add_option("--h", c_args.h, "Target genus")->capture_default_str();
    c_cmd->add_option("--nu", c_args.nu, "Repeated profile");
    c_cmd->add_option("--mu", c_args.mus, "Fixed profile (repeatable)");
    c_cmd->add_option("--cap", c_args.cap, "Largest degree allowed for the gap conjectures")->capture_default_str();
    c_cmd->add_flag("--all-nu", c_args.all_nu, "Every class nu meeting the hypotheses");

    CacheArgs cache_args;
    auto* cache_cmd = app.add_subcommand("cache", "Inspect or manage the character cache");
    cache_cmd->add_option("action", cache_args.action, "stats | warm | clear")
        ->check(CLI::IsMember({"stats", "warm", "clear"}))
        ->required();
    cache_cmd->add_option("--d", cache_args.d, "Degree to warm");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return exit_usage;
    }
    ctx.runtime = !no_runtime;

    try {
        if (chi_cmd->parsed())
            return run_chi(ctx, chi_args);
        if (f_cmd->parsed())
            return run_f(ctx, f_args);
        if (trees_cmd->parsed())
            return run_trees(ctx, trees_args);
        if (hw_cmd->parsed())
            return run_hurwitz(ctx, hw_args);
        if (bs_cmd->parsed())
            return run_bseries(ctx, bs_args);
        if (v_cmd->parsed())
            return run_verify(ctx, v_args);
        if (c_cmd->parsed())
            return run_conjecture(ctx, c_args);
        if (cache_cmd->parsed())
            return run_cache(ctx, cache_args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_usage;
}
