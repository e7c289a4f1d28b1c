#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "skewchar/bethe.hpp"
#include "skewchar/characters.hpp"
#include "skewchar/charpoly_io.hpp"
#include "skewchar/diffops.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/fusion.hpp"
#include "skewchar/jacobi_trudi.hpp"
#include "skewchar/suite.hpp"
#include "skewchar/tableaux.hpp"
#include "skewchar/tsystems.hpp"

using nlohmann::json;
using namespace skewchar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

constexpr int kMaxBoxes = 40;
constexpr int kMaxRank = 6;
constexpr int kMaxFusionLength = 6;
constexpr int kMaxFusionRank = 3;
constexpr int kMaxOrder = 12;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    bool force = false;
    int jobs = 0;
};

struct ShapeArgs {
    std::string lambda;
    std::string mu;
    std::string anchor = "0";
    int m = 1;
    int n = 1;
};

void add_shape(CLI::App* cmd, ShapeArgs& a, bool lambda_required = true) {
    auto* opt = cmd->add_option("--lambda", a.lambda, "outer partition, e.g. 4,3,2");
    if (lambda_required) opt->required();
    cmd->add_option("--mu", a.mu, "inner partition (default empty)");
    cmd->add_option("--anchor", a.anchor, "content shift p/q (default 0)");
    cmd->add_option("--m", a.m, "even rank m")->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", a.n, "odd rank n")->check(CLI::NonNegativeNumber);
}

// Enforces a size cap unless --force was given.
void cap(const Globals& g, bool exceeded, const std::string& what) {
    if (!exceeded) return;
    if (!g.force) throw UsageError(what + " exceeds the size cap; pass --force to override");
    std::cerr << "warning: " << what << " exceeds the size cap (forced)\n";
}

void check_signature(const Globals& g, int m, int n) {
    if (m + n == 0) throw UsageError("m + n must be positive");
    cap(g, m + n > kMaxRank, "m + n = " + std::to_string(m + n));
}

SkewDiagram make_diagram(const Globals& g, const ShapeArgs& a) {
    check_signature(g, a.m, a.n);
    SkewDiagram d(parse_partition(a.lambda), parse_partition(a.mu), parse_rat(a.anchor));
    cap(g, d.size() > kMaxBoxes, "diagram with " + std::to_string(d.size()) + " boxes");
    return d;
}

json partition_json(const Partition& p) { return json(p.parts()); }

json diagram_json(const SkewDiagram& d) {
    json boxes = json::array();
    for (const auto& b : d.boxes())
        boxes.push_back({{"row", b.row}, {"col", b.col}, {"content", to_string(d.content(b))}});
    return {{"lambda", partition_json(d.lambda())},
            {"mu", partition_json(d.mu())},
            {"anchor", to_string(d.anchor())},
            {"boxes", boxes}};
}

json weight_json(const GlWeight& w) {
    json out = json::array();
    for (const auto& c : w.coords) out.push_back(to_string(c));
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// -- subcommands -------------------------------------------------------------

int cmd_tableaux(const Globals& g, const ShapeArgs& a, const std::string& mode) {
    SkewDiagram d = make_diagram(g, a);
    Int count = count_ssyt(d, a.m, a.n);
    std::optional<Int> lgv;
    if (mode == "lgv") lgv = count_lgv_tuples(d.lambda(), d.mu(), a.m, a.n);
    if (g.json) {
        json out = {{"diagram", diagram_json(d)}, {"count", to_string(count)}};
        if (lgv) {
            out["lgv_count"] = to_string(*lgv);
            out["match"] = *lgv == count;
        }
        if (mode == "list") {
            json list = json::array();
            for_each_ssyt(d, a.m, a.n, [&](const Tableau& t) {
                list.push_back(t.to_string());
                return true;
            });
            out["tableaux"] = list;
        }
        emit(out);
    } else if (mode == "list") {
        for_each_ssyt(d, a.m, a.n, [&](const Tableau& t) {
            std::cout << t.to_string() << "\n";
            return true;
        });
    } else {
        std::cout << "tableaux: " << to_string(count) << "\n";
        if (lgv) std::cout << "path tuples: " << to_string(*lgv) << (*lgv == count ? " (match)" : " (MISMATCH)") << "\n";
    }
    return lgv && *lgv != count ? kExitMismatch : kExitOk;
}

int cmd_qchar(const Globals& g, const ShapeArgs& a) {
    SkewDiagram d = make_diagram(g, a);
    Signature sig{a.m, a.n};
    CharPoly k = q_character(d, a.m, a.n);
    std::map<int, long> parity;
    for (const auto& [mono, c] : k.terms()) parity[mono.parity()] += 1;
    std::optional<GlWeight> lead;
    try {
        if (!k.is_zero()) lead = weight_of(leading_monomial(k), sig);
    } catch (const NoUniqueLeading&) {
    }
    if (g.json) {
        json hist = json::object();
        for (const auto& [p, c] : parity) hist[std::to_string(p)] = c;
        emit({{"diagram", diagram_json(d)},
              {"character", to_json(k)},
              {"monomials", k.size()},
              {"leading_weight", lead ? weight_json(*lead) : json(nullptr)},
              {"parity_histogram", hist}});
    } else {
        std::cout << to_text(k) << "\n";
        std::cout << "monomials: " << k.size() << "\n";
        std::cout << "leading weight: " << (lead ? lead->to_string() : "none") << "\n";
        for (const auto& [p, c] : parity) std::cout << "parity " << p << ": " << c << "\n";
    }
    return kExitOk;
}

json symbols_json(const std::vector<std::vector<JTEntry>>& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& e : r) row.push_back(e.to_string());
        rows.push_back(row);
    }
    return rows;
}

void print_symbols(const std::string& title, const std::vector<std::vector<JTEntry>>& m) {
    std::cout << title << ":\n";
    for (const auto& r : m) {
        std::cout << " ";
        for (const auto& e : r) std::cout << " " << e.to_string();
        std::cout << "\n";
    }
}

int cmd_jt(const Globals& g, const ShapeArgs& a, bool emit_matrix) {
    SkewDiagram d = make_diagram(g, a);
    JTReport rep = verify_jt(d, a.m, a.n);
    auto ss = jt_symbols_S(d.lambda(), d.mu());
    auto sa = jt_symbols_A(d.lambda(), d.mu());
    if (g.json) {
        json out = {{"diagram", diagram_json(d)},
                    {"s_determinant", rep.s_ok},
                    {"a_determinant", rep.a_ok},
                    {"verified", rep.ok()},
                    {"monomials", rep.character.size()}};
        if (rep.counterexample) out["counterexample"] = *rep.counterexample;
        if (emit_matrix) out["matrices"] = {{"S", symbols_json(ss)}, {"A", symbols_json(sa)}};
        emit(out);
    } else {
        if (emit_matrix) {
            print_symbols("S-matrix", ss);
            print_symbols("A-matrix", sa);
        }
        std::cout << "S-determinant: " << (rep.s_ok ? "equal" : "DIFFERENT") << "\n";
        std::cout << "A-determinant: " << (rep.a_ok ? "equal" : "DIFFERENT") << "\n";
        std::cout << "character monomials: " << rep.character.size() << "\n";
        if (rep.counterexample) std::cout << "counterexample: " << *rep.counterexample << "\n";
    }
    return rep.ok() ? kExitOk : kExitMismatch;
}

int cmd_divisibility(const Globals& g, const ShapeArgs& a, const std::string& side) {
    check_signature(g, a.m, a.n);
    Partition p = parse_partition(a.lambda);
    cap(g, p.size() + a.m * a.n > kMaxBoxes, "diagram size");
    DivisibilityReport r = side == "W" ? check_divisibility_W(p, a.m, a.n) : check_divisibility_S(p, a.m, a.n);
    if (g.json) {
        emit({{"diagram", diagram_json(r.diagram)},
              {"quotient", to_json(r.quotient)},
              {"expected", to_json(r.expected)},
              {"verified", r.ok}});
    } else {
        std::cout << "diagram: " << r.diagram.to_string() << "\n";
        std::cout << "quotient: " << to_text(r.quotient) << "\n";
        std::cout << (r.ok ? "quotient equals the glued character" : "MISMATCH with the glued character") << "\n";
    }
    return r.ok ? kExitOk : kExitMismatch;
}

int cmd_central(const Globals& g, const ShapeArgs& a) {
    SkewDiagram d = make_diagram(g, a);
    CharPoly k = q_character(d, a.m, a.n);
    RatFunc value = central_eigenvalue(k, d);
    if (g.json) {
        emit({{"diagram", diagram_json(d)},
              {"eigenvalue", {{"num", value.num().to_string()}, {"den", value.den().to_string()}}},
              {"monomials", k.size()},
              {"zero_character", k.is_zero()},
              {"verified", true}});
    } else {
        std::cout << "eigenvalue: " << value.to_string() << "\n";
        if (k.is_zero())
            std::cout << "character is zero; eigenvalue is the box product, nothing to check\n";
        else
            std::cout << "checked on " << k.size() << " monomials\n";
    }
    return kExitOk;
}

int cmd_tsystem(const Globals& g, const ShapeArgs& a, bool classical, int i, int j) {
    check_signature(g, a.m, a.n);
    TSystemCheck c;
    std::string kind;
    json diag;
    if (classical) {
        if (i < 0 || j < 0) throw UsageError("--i and --j must be non-negative");
        if (i == 0 && j == 0) throw UsageError("the classical relation is not defined at (0,0)");
        cap(g, (i + 1) * (j + 1) > kMaxBoxes, "rectangle");
        c = verify_classical_tsystem(i, j, a.m, a.n);
        kind = "classical";
    } else {
        if (a.lambda.empty()) throw UsageError("--lambda or --classical is required");
        SkewDiagram d = make_diagram(g, a);
        diag = diagram_json(d);
        if (is_prime(d)) {
            c = verify_extended_tsystem(d, a.m, a.n);
            kind = "extended";
        } else {
            c = verify_nonprime_product(d, a.m, a.n);
            kind = "non-prime product";
        }
    }
    if (g.json) {
        json out = {{"kind", kind}, {"verified", c.ok}, {"lhs_terms", c.lhs.size()}, {"rhs_terms", c.rhs.size()}};
        if (!diag.is_null()) out["diagram"] = diag;
        if (!c.ok) out["counterexample"] = c.detail;
        emit(out);
    } else {
        std::cout << kind << " relation: " << (c.ok ? "holds" : "FAILS") << " (" << c.lhs.size() << " terms)\n";
        if (!c.ok) std::cout << "counterexample: " << c.detail << "\n";
    }
    return c.ok ? kExitOk : kExitMismatch;
}

json checks_json(const std::vector<CheckResult>& cs) {
    json arr = json::array();
    for (const auto& c : cs) {
        json e = {{"name", c.name}, {"ok", c.ok}, {"terms", c.terms}};
        if (!c.ok) e["counterexample"] = c.detail;
        arr.push_back(e);
    }
    return arr;
}

void print_checks(const std::vector<CheckResult>& cs) {
    for (const auto& c : cs) {
        std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << " [" << c.terms << " terms]";
        if (!c.ok) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
}

int cmd_ratio(const Globals& g, int m, int n, int order) {
    check_signature(g, m, n);
    cap(g, order > kMaxOrder, "order " + std::to_string(order));
    if (order < m + n + 2) throw UsageError("--order must be at least m+n+2");
    RatioReport rep = verify_ratio(m, n, order);
    if (g.json) emit({{"m", m}, {"n", n}, {"order", order}, {"verified", rep.ok()}, {"checks", checks_json(rep.checks)}});
    else print_checks(rep.checks);
    return rep.ok() ? kExitOk : kExitMismatch;
}

int cmd_center(const Globals& g, int m, int n) {
    check_signature(g, m, n);
    CheckResult c = verify_center_ratio(m, n);
    if (g.json) emit({{"m", m}, {"n", n}, {"verified", c.ok}, {"checks", checks_json({c})}});
    else print_checks({c});
    return c.ok ? kExitOk : kExitMismatch;
}

int cmd_fusion(const Globals& g, const ShapeArgs& a, bool row) {
    SkewDiagram d = make_diagram(g, a);
    cap(g, d.size() > kMaxFusionLength, "fusion length " + std::to_string(d.size()));
    cap(g, a.m + a.n > kMaxFusionRank, "fusion with m + n = " + std::to_string(a.m + a.n));
    Tableau omega = row ? row_tableau(d) : column_tableau(d);
    SuperMatrix e = fusion_operator(omega, a.m, a.n);
    size_t r = rank(e);
    Int count = count_ssyt(d, a.m, a.n);
    bool match = Int(static_cast<unsigned long>(r)) == count;

    // Weight dimensions of the image next to the tableau weight multiset.
    auto dims = weight_space_dims(e);
    std::map<std::vector<int>, long> tab;
    for_each_ssyt(d, a.m, a.n, [&](const Tableau& t) {
        std::vector<int> w(a.m + a.n, 0);
        for (int x : t.entries) w[x - 1] += 1;
        tab[w] += 1;
        return true;
    });
    bool weights_match = dims.size() == tab.size();
    for (const auto& [w, k] : dims)
        if (!tab.count(w) || tab[w] != static_cast<long>(k)) weights_match = false;

    auto key = [](const std::vector<int>& w) {
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        return s;
    };
    if (g.json) {
        json wd = json::object();
        for (const auto& [w, k] : dims) wd[key(w)] = k;
        emit({{"diagram", diagram_json(d)},
              {"tableau", omega.to_string()},
              {"rank", r},
              {"ssyt_count", to_string(count)},
              {"match", match},
              {"weight_dims", wd},
              {"weights_match", weights_match}});
    } else {
        std::cout << "tableau: " << omega.to_string() << "\n";
        std::cout << "rank: " << r << "\n";
        std::cout << "tableaux: " << to_string(count) << (match ? " (match)" : " (MISMATCH)") << "\n";
        for (const auto& [w, k] : dims) std::cout << "  weight (" << key(w) << "): " << k << "\n";
    }
    return match && weights_match ? kExitOk : kExitMismatch;
}

int cmd_bethe(const Globals& g, const std::string& path, std::optional<int> order_flag) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    BetheData data = bethe_from_json(j);
    check_signature(g, data.sig.m, data.sig.n);
    int order = order_flag ? *order_flag : (j.contains("order") ? j.at("order").get<int>() : 3);
    if (order < 0) throw UsageError("order must be non-negative");
    cap(g, order > kMaxOrder, "order " + std::to_string(order));

    json rows = json::array();
    bool all = true;
    for (int i = 1; i < data.sig.size(); ++i)
        for (int k = 1; k <= static_cast<int>(data.roots[i - 1].size()); ++k) {
            json row = {{"node", i}, {"root", to_string(data.roots[i - 1][k - 1])}};
            try {
                Rat res = bae_residual(data, i, k);
                row["residual"] = to_string(res);
                if (res != 0) all = false;
            } catch (const PoleAtRoot& e) {
                row["residual"] = nullptr;
                row["error"] = e.what();
                all = false;
            }
            rows.push_back(row);
        }
    bool fact = verify_factorization(data, order);
    if (g.json) {
        emit({{"m", data.sig.m},
              {"n", data.sig.n},
              {"order", order},
              {"residuals", rows},
              {"bethe_equations_hold", all},
              {"factorization", fact}});
    } else {
        for (const auto& r : rows)
            std::cout << "node " << r["node"].get<int>() << " root " << r["root"].get<std::string>() << ": "
                      << (r["residual"].is_null() ? r["error"].get<std::string>() : r["residual"].get<std::string>())
                      << "\n";
        std::cout << "Bethe equations: " << (all ? "satisfied" : "not satisfied") << "\n";
        std::cout << "factorization to order " << order << ": " << (fact ? "holds" : "FAILS") << "\n";
    }
    return fact ? kExitOk : kExitMismatch;
}

int cmd_suite(const Globals& g, std::vector<int> only) {
    SuiteOptions opts;
    opts.jobs = g.jobs > 0 ? g.jobs : jobs_from_env(1);
    if (only.empty())
        for (int i = 1; i <= kCriterionCount; ++i) only.push_back(i);
    bool all = true;
    json arr = json::array();
    for (int id : only) {
        if (id < 1 || id > kCriterionCount) throw UsageError("criterion ids run from 1 to 13");
        CriterionResult r = run_criterion(id, opts);
        all = all && r.ok;
        if (g.json) {
            arr.push_back({{"id", r.id}, {"title", r.title}, {"ok", r.ok}, {"cases", r.cases}, {"detail", r.detail}});
        } else {
            std::ostringstream secs;
            secs.precision(2);
            secs << std::fixed << r.seconds;
            std::cout << (r.ok ? "PASS " : "FAIL ") << (r.id < 10 ? " " : "") << r.id << "  " << r.title << "  ["
                      << r.detail << ", " << secs.str() << " s]" << std::endl;
        }
    }
    if (g.json) emit({{"criteria", arr}, {"passed", all}});
    return all ? kExitOk : kExitMismatch;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ShapeError*>(&e) ||
        dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const NotHook*>(&e) ||
        dynamic_cast<const NotPrime*>(&e) || dynamic_cast<const TooFewColumns*>(&e) ||
        dynamic_cast<const IndexOutOfRange*>(&e) || dynamic_cast<const MalformedTuple*>(&e) ||
        dynamic_cast<const ZeroSpectral*>(&e))
        return kExitUsage;
    return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters, determinants and difference operators for skew gl(m|n) Yangian modules"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "canonical JSON output");
    app.add_flag("--force", g.force, "override size caps");
    app.add_option("--jobs", g.jobs, "worker threads (default: SKEWCHAR_JOBS or 1)")->check(CLI::PositiveNumber);

    ShapeArgs shape;
    auto* tab = app.add_subcommand("tableaux", "count or list semistandard tableaux");
    add_shape(tab, shape);
    bool list = false, lgv = false, cnt = false;
    tab->add_flag("--count", cnt, "print the count (default)");
    tab->add_flag("--list", list, "print every tableau");
    tab->add_flag("--lgv", lgv, "compare with non-intersecting path tuples");

    auto* qc = app.add_subcommand("qchar", "q-character as a tableau sum");
    add_shape(qc, shape);

    auto* jt = app.add_subcommand("jt-verify", "compare the character with both Jacobi-Trudi determinants");
    add_shape(jt, shape);
    bool emit_matrix = false;
    jt->add_flag("--emit-matrix", emit_matrix, "print the symbolic matrices");

    auto* dv = app.add_subcommand("divisibility", "divide K_W(lambda) or K_S(lambda) by K_Xi");
    add_shape(dv, shape);
    std::string side = "W";
    dv->add_option("--side", side, "W (lambda glued west) or S (lambda glued south)")
        ->check(CLI::IsMember({"W", "S"}));

    auto* ce = app.add_subcommand("central-check", "central eigenvalue on every monomial");
    add_shape(ce, shape);

    auto* ts = app.add_subcommand("tsystem", "classical or extended T-system");
    add_shape(ts, shape, false);
    bool classical = false;
    int ti = 1, tj = 1;
    ts->add_flag("--classical", classical, "rectangle relation at (i, j)");
    ts->add_option("--i", ti, "rows");
    ts->add_option("--j", tj, "columns");

    int rm = 1, rn = 1, order = 0;
    auto* rv = app.add_subcommand("ratio-verify", "ratio decompositions of the Berezinian");
    rv->add_option("--m", rm)->check(CLI::NonNegativeNumber);
    rv->add_option("--n", rn)->check(CLI::NonNegativeNumber);
    rv->add_option("--order", order, "series order (default m+n+3)");

    auto* cr = app.add_subcommand("center-ratio", "center series as a ratio of transfer matrices");
    cr->add_option("--m", rm)->check(CLI::NonNegativeNumber);
    cr->add_option("--n", rn)->check(CLI::NonNegativeNumber);

    auto* fr = app.add_subcommand("fusion-rank", "rank of the fusion operator against the tableau count");
    add_shape(fr, shape);
    bool row = false;
    fr->add_flag("--row", row, "use the row tableau instead of the column tableau");

    auto* be = app.add_subcommand("bethe", "Bethe equation residuals and operator factorization");
    std::string bethe_file;
    std::optional<int> bethe_order;
    be->add_option("file", bethe_file, "JSON input")->required();
    be->add_option("--order", bethe_order, "override the order in the file");

    auto* su = app.add_subcommand("suite", "run the acceptance criteria");
    std::vector<int> only;
    su->add_option("--only", only, "criterion ids, comma separated (default all)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*tab) {
            if (list + lgv + cnt > 1) throw UsageError("choose one of --count, --list, --lgv");
            return cmd_tableaux(g, shape, list ? "list" : lgv ? "lgv" : "count");
        }
        if (*qc) return cmd_qchar(g, shape);
        if (*jt) return cmd_jt(g, shape, emit_matrix);
        if (*dv) return cmd_divisibility(g, shape, side);
        if (*ce) return cmd_central(g, shape);
        if (*ts) return cmd_tsystem(g, shape, classical, ti, tj);
        if (*rv) return cmd_ratio(g, rm, rn, order > 0 ? order : rm + rn + 3);
        if (*cr) return cmd_center(g, rm, rn);
        if (*fr) return cmd_fusion(g, shape, row);
        if (*be) return cmd_bethe(g, bethe_file, bethe_order);
        if (*su) return cmd_suite(g, only);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        int code = exit_code_for(e);
        std::cerr << (code == kExitUsage ? "usage error: " : "error: ") << e.what() << "\n";
        return code;
    }
    return kExitUsage;
}
