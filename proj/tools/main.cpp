// t3kit: exact + numerical toolkit for Reeb dynamics of toric contact forms
// on T^3, torus-surgery bookkeeping, and closed 4-manifold index arithmetic.
//
// Exit codes: 0 success, 1 usage, 2 validation error, 3 mathematical
// inconsistency.

#include "t3kit/census.hpp"
#include "t3kit/ech.hpp"
#include "t3kit/errors.hpp"
#include "t3kit/index_calculus.hpp"
#include "t3kit/report.hpp"
#include "t3kit/selftest.hpp"
#include "t3kit/surgery.hpp"
#include "t3kit/toric.hpp"
#include "t3kit/workspace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace t3kit;

struct CommonOpts {
    std::string workspace_path;
    std::string out_mode = "table";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_workspace = true) {
    if (with_workspace) {
        cmd->add_option("--workspace", opts.workspace_path, "workspace document (JSON)");
        cmd->add_option("document", opts.workspace_path,
                        "workspace document (positional alternative to --workspace)");
    }
    cmd->add_option("--out", opts.out_mode, "output mode")
        ->check(CLI::IsMember({"table", "structured"}))
        ->capture_default_str();
}

OutputMode mode_of(const CommonOpts& opts) {
    return opts.out_mode == "structured" ? OutputMode::Structured : OutputMode::Table;
}

WorkspaceDocument load_workspace(const CommonOpts& opts) {
    if (opts.workspace_path.empty()) return builtin_workspace();
    return read_workspace_file(opts.workspace_path);
}

template <typename Map>
const typename Map::mapped_type& named(const Map& map, const std::string& name,
                                       const char* section) {
    auto it = map.find(name);
    if (it != map.end()) return it->second;
    std::ostringstream msg;
    msg << "no " << section << " named '" << name << "' in the workspace; available:";
    if (map.empty()) msg << " (none)";
    for (const auto& [key, value] : map) msg << " " << key;
    throw ValidationError(msg.str());
}

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            long long value = std::stoll(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ValidationError(std::string(what) + ": '" + token +
                                  "' is not an integer (expected a comma-separated list)");
        }
    }
    if (out.empty())
        throw ValidationError(std::string(what) + ": expected a comma-separated integer list");
    return out;
}

std::vector<long long> parse_fixed_list(const std::string& text, std::size_t n, const char* what) {
    std::vector<long long> out = parse_int_list(text, what);
    if (out.size() != n)
        throw ValidationError(std::string(what) + ": expected exactly " + std::to_string(n) +
                              " comma-separated integers");
    return out;
}

std::optional<Rat> parse_exact(const std::string& text) {
    static const std::regex pattern(R"(^\s*([+-]?\d+)\s*(/\s*([+-]?\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) return std::nullopt;
    BigInt num(m[1].str());
    BigInt den = m[3].matched ? BigInt(m[3].str()) : BigInt(1);
    if (den == 0) throw ValidationError("denominator must be nonzero in '" + text + "'");
    return Rat(num, den);
}

double parse_double(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        double value = std::stod(text, &used);
        while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used])))
            ++used;
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ValidationError(std::string(what) + ": '" + text + "' is not a number");
    }
}

std::string ivec_string(const IntVec& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ")";
    return out.str();
}

json ivec_json(const IntVec& v) {
    json arr = json::array();
    for (long long x : v) arr.push_back(x);
    return arr;
}

json mat3_json(const Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) rows.push_back({m.at(i, 0), m.at(i, 1), m.at(i, 2)});
    return rows;
}

void print_mat3(std::ostream& out, const char* name, const Mat3& m) {
    out << name << ":\n";
    for (int i = 0; i < 3; ++i)
        out << "  [ " << m.at(i, 0) << " " << m.at(i, 1) << " " << m.at(i, 2) << " ]\n";
}

void emit(const CommonOpts& opts, const json& structured, const std::string& table) {
    if (mode_of(opts) == OutputMode::Structured)
        std::cout << structured.dump(2) << "\n";
    else
        std::cout << conventions_banner() << table;
}

EchZeroClass class_from_bits_list(const std::string& text) {
    auto bits = parse_fixed_list(text, 3, "--cls");
    for (long long b : bits)
        if (b != 0 && b != 1)
            throw ValidationError("--cls components must be 0 or 1 in the (x, y, thetaBar) basis");
    return {bits[0] == 1, bits[1] == 1, bits[2] == 1};
}

// ---- census ----------------------------------------------------------

struct CensusArgs {
    CommonOpts common;
    std::string form = "lambda0";
    double cutoff = 0.0;
};

int run_census(const CensusArgs& args) {
    WorkspaceDocument doc = load_workspace(args.common);
    const FormDef& def = named(doc.contact_forms, args.form, "contact form");
    ToricContactForm form = instantiate_form(def);
    OrbitCensus census = bourgeois_census(form, args.cutoff);
    std::vector<DegreeZeroGenerator> gens = degree_zero_generators(census);
    std::cout << render_census_report(args.form, form, census, gens, mode_of(args.common));
    return 0;
}

// ---- ech -------------------------------------------------------------

int run_ech_h(const CommonOpts& common, long long v1, long long v2) {
    EchZeroClass c = h_class(v1, v2);
    json structured = {{"command", "ech-h"},
                       {"v1", v1},
                       {"v2", v2},
                       {"class", format_class_triple(c)},
                       {"sum", format_class_sum(c)}};
    std::ostringstream table;
    table << "h((" << v1 << ", " << v2 << ")) = " << format_class_triple(c) << "  = "
          << format_class_sum(c) << "\n";
    emit(common, structured, table.str());
    return 0;
}

int run_ech_act(const CommonOpts& common, long long p, long long r, long long s,
                const std::string& cls_text) {
    EchZeroClass before = class_from_bits_list(cls_text);
    TorusDiffeo f = complete_sl3(p, r, s);
    EchZeroClass after = act_contactomorphism(f, before);
    json structured = {{"command", "ech-act"},
                       {"p", p},
                       {"r", r},
                       {"s", s},
                       {"input", format_class_triple(before)},
                       {"output", format_class_triple(after)},
                       {"outputSum", format_class_sum(after)}};
    std::ostringstream table;
    table << "f_(" << p << "," << r << "," << s << ") . " << format_class_triple(before)
          << " = " << format_class_triple(after) << "  = " << format_class_sum(after) << "\n";
    emit(common, structured, table.str());
    return 0;
}

int run_ech_from_surgeries(const CommonOpts& common, int grx, int gr110, int gr101) {
    for (int b : {grx, gr110, gr101})
        if (b != 0 && b != 1) throw ValidationError("grading bits must be 0 or 1");
    GrTriple t = gr_from_surgeries(grx == 1, gr110 == 1, gr101 == 1);
    EchZeroClass c = t.as_class();
    json structured = {{"command", "ech-from-surgeries"},
                       {"grX", grx},
                       {"gr110", gr110},
                       {"gr101", gr101},
                       {"class", format_class_triple(c)},
                       {"sum", format_class_sum(c)}};
    std::ostringstream table;
    table << format_class_triple(c) << "  = " << format_class_sum(c) << "\n";
    emit(common, structured, table.str());
    return 0;
}

// ---- surgery ---------------------------------------------------------

int run_surgery_predict(const CommonOpts& common, const std::string& swl_text, long long p,
                        long long r, long long s) {
    auto abc = parse_fixed_list(swl_text, 3, "--swl");
    LocalTorusInvariant swl{abc[0], abc[1], abc[2]};
    ProductFormulaResult closed = product_formula(swl, p, r, s);
    TorusDiffeo f = complete_sl3(p, r, s); // throws if the triple is not primitive
    long long value = predict_surgery(swl, f);
    if (value != closed.value)
        throw MathError("matrix prediction and closed formula disagree"); // unreachable
    json structured = {{"command", "surgery-predict"},
                       {"swl", {{"a", swl.a}, {"b", swl.b}, {"c", swl.c}}},
                       {"p", p},
                       {"r", r},
                       {"s", s},
                       {"value", value},
                       {"realizable", closed.realizable},
                       {"luttinger", is_luttinger(f)}};
    std::ostringstream table;
    table << "value: " << value << "\n";
    table << "realizable: " << (closed.realizable ? "true" : "false") << "\n";
    table << "luttinger: " << (is_luttinger(f) ? "true" : "false") << "\n";
    emit(common, structured, table.str());
    return 0;
}

int run_surgery_complete(const CommonOpts& common, long long p, long long r, long long s) {
    TorusDiffeo f = complete_sl3(p, r, s);
    json structured = {{"command", "surgery-complete"},
                       {"p", p},
                       {"r", r},
                       {"s", s},
                       {"h2", mat3_json(f.h2)},
                       {"h1", mat3_json(f.h1)},
                       {"det", f.h2.det()},
                       {"luttinger", is_luttinger(f)}};
    std::ostringstream table;
    print_mat3(table, "h2", f.h2);
    print_mat3(table, "h1", f.h1);
    table << "det: " << f.h2.det() << "\n";
    table << "luttinger: " << (is_luttinger(f) ? "true" : "false") << "\n";
    emit(common, structured, table.str());
    return 0;
}

int run_surgery_solve(const CommonOpts& common, int base, const std::vector<std::string>& eq_texts,
                      const std::string& table_name) {
    if (base != 0 && base != 1) throw ValidationError("--base must be 0 or 1");
    std::vector<GromovEquation> eqs;
    bool base_bit = base == 1;
    if (!table_name.empty()) {
        WorkspaceDocument doc = load_workspace(common);
        const SwTable& table = named(doc.sw_tables, table_name, "SW table");
        bool have_base = false;
        for (const SwEntry& e : table.entries) {
            if (e.p != 1) continue; // only Luttinger rows constrain the mod-2 system
            if (e.r == 0 && e.s == 0) {
                base_bit = ((e.value % 2) + 2) % 2 == 1;
                have_base = true;
                continue;
            }
            eqs.push_back(GromovEquation{e.r, e.s, ((e.value % 2) + 2) % 2 == 1});
        }
        if (!have_base)
            throw ValidationError("table '" + table_name +
                                  "' has no (p, r, s) = (1, 0, 0) entry to fix the base value");
    }
    for (const std::string& text : eq_texts) {
        auto rsv = parse_fixed_list(text, 3, "--eq");
        if (rsv[2] != 0 && rsv[2] != 1)
            throw ValidationError("--eq value component must be 0 or 1");
        eqs.push_back(GromovEquation{rsv[0], rsv[1], rsv[2] == 1});
    }
    GromovSolution sol = solve_gromov(base_bit, eqs);

    const char* status =
        sol.status == GromovSolution::Status::Unique ? "unique" : "underdetermined";
    json dirs = json::array();
    for (auto [da, db] : sol.free_directions) dirs.push_back({da ? 1 : 0, db ? 1 : 0});
    json structured = {{"command", "surgery-solve"},
                       {"base", base_bit ? 1 : 0},
                       {"equations", eqs.size()},
                       {"status", status},
                       {"a", sol.a ? 1 : 0},
                       {"b", sol.b ? 1 : 0},
                       {"aPinned", sol.a_pinned},
                       {"bPinned", sol.b_pinned},
                       {"freeDirections", dirs}};
    std::ostringstream table;
    table << "status: " << status << "\n";
    table << "a: " << (sol.a ? 1 : 0) << (sol.a_pinned ? " (pinned)" : " (particular)") << "\n";
    table << "b: " << (sol.b ? 1 : 0) << (sol.b_pinned ? " (pinned)" : " (particular)") << "\n";
    if (!sol.free_directions.empty()) {
        table << "free directions:";
        for (auto [da, db] : sol.free_directions)
            table << " (" << (da ? 1 : 0) << ", " << (db ? 1 : 0) << ")";
        table << "\n";
    }
    emit(common, structured, table.str());
    return 0;
}

// ---- index -----------------------------------------------------------

int run_index_d(const CommonOpts& common, const std::string& model_name,
                const std::string& c1_text) {
    WorkspaceDocument doc = load_workspace(common);
    FourManifoldModel model = instantiate_model(named(doc.manifolds, model_name, "manifold"));
    IntVec c1 = parse_fixed_list(c1_text, static_cast<std::size_t>(model.rank), "--c1");
    long long d = d_invariant(model, SpinCClass{c1});
    json structured = {{"command", "index-d"},
                       {"model", model_name},
                       {"c1", ivec_json(c1)},
                       {"chi", model.euler_char},
                       {"sigma", model.signature},
                       {"d", d},
                       {"warnings", model.warnings}};
    std::ostringstream table;
    table << "model: " << model_name << " (chi = " << model.euler_char
          << ", sigma = " << model.signature << ")\n";
    for (const std::string& w : model.warnings) table << "warning: " << w << "\n";
    table << "c1: " << ivec_string(c1) << "\n";
    table << "d: " << d << "\n";
    emit(common, structured, table.str());
    return 0;
}

int run_index_ech(const CommonOpts& common, const std::string& model_name,
                  const std::string& a_text) {
    WorkspaceDocument doc = load_workspace(common);
    FourManifoldModel model = instantiate_model(named(doc.manifolds, model_name, "manifold"));
    IntVec a = parse_fixed_list(a_text, static_cast<std::size_t>(model.rank), "--a");
    long long idx = ech_index_closed(model, a);
    json structured = {{"command", "index-ech"},
                       {"model", model_name},
                       {"a", ivec_json(a)},
                       {"index", idx},
                       {"warnings", model.warnings}};
    std::ostringstream table;
    table << "model: " << model_name << "\n";
    for (const std::string& w : model.warnings) table << "warning: " << w << "\n";
    table << "A: " << ivec_string(a) << "\n";
    table << "I(A): " << idx << "\n";
    emit(common, structured, table.str());
    return 0;
}

int run_index_lift(const CommonOpts& common, const std::string& model_name,
                   const std::string& a_text, const std::string& c1_text,
                   const std::string& v_text) {
    if (a_text.empty() == c1_text.empty())
        throw ValidationError("give exactly one of --a (index class) or --c1 (spin-c class)");
    WorkspaceDocument doc = load_workspace(common);
    FourManifoldModel model = instantiate_model(named(doc.manifolds, model_name, "manifold"));
    std::size_t n = static_cast<std::size_t>(model.rank);
    IntVec v = parse_fixed_list(v_text, n, "--v");
    LiftTarget target = a_text.empty()
                            ? LiftTarget::spin_c(parse_fixed_list(c1_text, n, "--c1"))
                            : LiftTarget::index_class(parse_fixed_list(a_text, n, "--a"));
    LiftCheck check = lift_invariance_check(model, target, v);
    const char* kind = target.kind == LiftTarget::Kind::IndexClass ? "indexClass" : "spinC";
    json structured = {{"command", "index-lift"},
                       {"model", model_name},
                       {"target", kind},
                       {"targetVec", ivec_json(target.vec)},
                       {"v", ivec_json(v)},
                       {"residual", check.residual},
                       {"invariant", check.invariant}};
    std::ostringstream table;
    table << "model: " << model_name << "\n";
    table << "target (" << kind << "): " << ivec_string(target.vec) << "\n";
    table << "v: " << ivec_string(v) << "\n";
    table << "residual: " << check.residual << "\n";
    table << "invariant: " << (check.invariant ? "true" : "false") << "\n";
    emit(common, structured, table.str());
    return 0;
}

int run_index_chamber(const CommonOpts& common, const std::string& omega_text,
                      const std::string& mu_text) {
    std::optional<Rat> omega_exact = parse_exact(omega_text);
    std::optional<Rat> mu_exact = parse_exact(mu_text);
    ChamberSide side;
    const char* mode;
    if (omega_exact && mu_exact) {
        side = chamber_side_exact(*omega_exact, *mu_exact);
        mode = "exact";
    } else {
        side = chamber_side({parse_double(omega_text, "--omega"), parse_double(mu_text, "--mu")});
        mode = "floating";
    }
    json structured = {{"command", "index-chamber"},
                       {"omega", omega_text},
                       {"mu", mu_text},
                       {"mode", mode},
                       {"side", chamber_label(side)}};
    std::ostringstream table;
    table << "wall value: 2*pi*(" << omega_text << ") + (" << mu_text << ")\n";
    table << "mode: " << mode << "\n";
    table << "side: " << chamber_label(side) << "\n";
    emit(common, structured, table.str());
    return 0;
}

int run_index_bridge(const CommonOpts& common, const std::string& model_name,
                     const std::string& a_text) {
    WorkspaceDocument doc = load_workspace(common);
    FourManifoldModel model = instantiate_model(named(doc.manifolds, model_name, "manifold"));
    IntVec a = parse_fixed_list(a_text, static_cast<std::size_t>(model.rank), "--a");
    SpinCClass c1 = gr_sw_bridge(model, a);
    bool consistent = bridge_consistent(model);
    long long idx = ech_index_closed(model, a);
    json structured = {{"command", "index-bridge"},
                       {"model", model_name},
                       {"a", ivec_json(a)},
                       {"c1", ivec_json(c1.c1)},
                       {"bridgeConsistent", consistent},
                       {"echIndex", idx}};
    std::ostringstream table;
    table << "model: " << model_name << "\n";
    table << "A: " << ivec_string(a) << "\n";
    table << "c1 = 2A - K: " << ivec_string(c1.c1) << "\n";
    table << "bridge consistent (K.K = 2chi + 3sigma): " << (consistent ? "true" : "false")
          << "\n";
    table << "I(A): " << idx << "\n";
    if (consistent) {
        long long d = d_invariant(model, c1);
        structured["d"] = d;
        table << "d(c1): " << d << "\n";
    }
    emit(common, structured, table.str());
    return 0;
}

// ---- selftest --------------------------------------------------------

int run_selftest_cmd(const CommonOpts& common, int grid, bool swap_h) {
    SelftestOptions options;
    options.grid_size = grid;
    options.h_convention.swap_xy = swap_h;
    std::vector<SuiteResult> results = run_selftest(options);
    bool ok = all_passed(results);
    if (mode_of(common) == OutputMode::Structured) {
        json suites = json::array();
        for (const SuiteResult& r : results)
            suites.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        json structured = {{"command", "selftest"},
                           {"gridSize", grid},
                           {"swapH", swap_h},
                           {"suites", suites},
                           {"allPassed", ok}};
        std::cout << structured.dump(2) << "\n";
    } else {
        std::cout << conventions_banner();
        std::size_t passed = 0;
        for (const SuiteResult& r : results) {
            if (r.passed) ++passed;
            std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        }
        std::cout << "selftest: " << passed << "/" << results.size() << " suites passed\n";
    }
    return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"t3kit: Reeb orbit census, torus-surgery algebra, and 4-manifold index"
                 " calculus with exact certificates"};
    app.require_subcommand(1);

    // census
    CensusArgs census_args;
    CLI::App* census_cmd = app.add_subcommand(
        "census", "enumerate Morse-Bott orbit families of a toric contact form");
    census_cmd->add_option("--form", census_args.form, "contact form name")
        ->capture_default_str();
    census_cmd->add_option("--cutoff", census_args.cutoff, "action cutoff L > 0")->required();
    add_common(census_cmd, census_args.common);

    // ech
    CLI::App* ech_cmd = app.add_subcommand("ech", "degree-zero homology classes and actions");
    ech_cmd->require_subcommand(1);
    CommonOpts ech_h_common;
    long long ech_v1 = 0, ech_v2 = 0;
    CLI::App* ech_h_cmd = ech_cmd->add_subcommand("h", "class of the hyperbolic pair h(v)");
    ech_h_cmd->add_option("--v1", ech_v1, "first component of v")->required();
    ech_h_cmd->add_option("--v2", ech_v2, "second component of v")->required();
    add_common(ech_h_cmd, ech_h_common, false);

    CommonOpts ech_act_common;
    long long ech_p = 1, ech_r = 0, ech_s = 0;
    std::string ech_cls;
    CLI::App* ech_act_cmd =
        ech_cmd->add_subcommand("act", "push a class along the surgery contactomorphism");
    ech_act_cmd->add_option("--p", ech_p, "surgery p (must be 1)")->capture_default_str();
    ech_act_cmd->add_option("--r", ech_r, "surgery r")->capture_default_str();
    ech_act_cmd->add_option("--s", ech_s, "surgery s")->capture_default_str();
    ech_act_cmd->add_option("--cls", ech_cls, "class bits x,y,thetaBar")->required();
    add_common(ech_act_cmd, ech_act_common, false);

    CommonOpts ech_fs_common;
    int ech_grx = 0, ech_gr110 = 0, ech_gr101 = 0;
    CLI::App* ech_fs_cmd = ech_cmd->add_subcommand(
        "from-surgeries", "assemble the invariant class from surgery counts");
    ech_fs_cmd->add_option("--grx", ech_grx, "count for the unsurgered manifold mod 2")
        ->required();
    ech_fs_cmd->add_option("--gr110", ech_gr110, "count after the (1,1,0) surgery mod 2")
        ->required();
    ech_fs_cmd->add_option("--gr101", ech_gr101, "count after the (1,0,1) surgery mod 2")
        ->required();
    add_common(ech_fs_cmd, ech_fs_common, false);

    // surgery
    CLI::App* surgery_cmd =
        app.add_subcommand("surgery", "torus-surgery invariants and matrix completions");
    surgery_cmd->require_subcommand(1);
    CommonOpts sp_common;
    std::string sp_swl;
    long long sp_p = 1, sp_r = 0, sp_s = 0;
    CLI::App* sp_cmd = surgery_cmd->add_subcommand(
        "predict", "invariant of the (p,r,s) surgery from a local invariant");
    sp_cmd->add_option("--swl", sp_swl, "local invariant a,b,c")->required();
    sp_cmd->add_option("--p", sp_p, "surgery p")->required();
    sp_cmd->add_option("--r", sp_r, "surgery r")->required();
    sp_cmd->add_option("--s", sp_s, "surgery s")->required();
    add_common(sp_cmd, sp_common, false);

    CommonOpts sc_common;
    long long sc_p = 1, sc_r = 0, sc_s = 0;
    CLI::App* sc_cmd =
        surgery_cmd->add_subcommand("complete", "unimodular completion of a (p,r,s) triple");
    sc_cmd->add_option("--p", sc_p, "surgery p")->required();
    sc_cmd->add_option("--r", sc_r, "surgery r")->required();
    sc_cmd->add_option("--s", sc_s, "surgery s")->required();
    add_common(sc_cmd, sc_common, false);

    CommonOpts ss_common;
    int ss_base = 0;
    std::vector<std::string> ss_eqs;
    std::string ss_table;
    CLI::App* ss_cmd = surgery_cmd->add_subcommand(
        "solve", "recover mod-2 torus degrees from observed surgery values");
    ss_cmd->add_option("--base", ss_base, "unsurgered value mod 2")->capture_default_str();
    ss_cmd->add_option("--eq", ss_eqs, "one equation r,s,value (repeatable)");
    ss_cmd->add_option("--table", ss_table, "take equations from this workspace SW table");
    add_common(ss_cmd, ss_common);

    // index
    CLI::App* index_cmd =
        app.add_subcommand("index", "closed-manifold index and chamber arithmetic");
    index_cmd->require_subcommand(1);
    CommonOpts id_common;
    std::string id_model = "k3", id_c1;
    CLI::App* id_cmd = index_cmd->add_subcommand("d", "spin-c moduli dimension d");
    id_cmd->add_option("--model", id_model, "manifold model name")->capture_default_str();
    id_cmd->add_option("--c1", id_c1, "c1 coordinates, comma separated")->required();
    add_common(id_cmd, id_common);

    CommonOpts ie_common;
    std::string ie_model = "k3", ie_a;
    CLI::App* ie_cmd = index_cmd->add_subcommand("ech", "closed index I(A) = A.A - K.A");
    ie_cmd->add_option("--model", ie_model, "manifold model name")->capture_default_str();
    ie_cmd->add_option("--a", ie_a, "class A coordinates, comma separated")->required();
    add_common(ie_cmd, ie_common);

    CommonOpts il_common;
    std::string il_model = "k3", il_a, il_c1, il_v;
    CLI::App* il_cmd =
        index_cmd->add_subcommand("lift", "invariance of the index under a lift shift");
    il_cmd->add_option("--model", il_model, "manifold model name")->capture_default_str();
    il_cmd->add_option("--a", il_a, "index class A (choose this or --c1)");
    il_cmd->add_option("--c1", il_c1, "spin-c class c1 (choose this or --a)");
    il_cmd->add_option("--v", il_v, "lift-ambiguity vector v")->required();
    add_common(il_cmd, il_common);

    CommonOpts ic_common;
    std::string ic_omega, ic_mu;
    CLI::App* ic_cmd = index_cmd->add_subcommand(
        "chamber", "side of the SW wall 2*pi*omega.c1 + mu = 0");
    ic_cmd->add_option("--omega", ic_omega, "omega.c1 (rational p/q for the exact test)")
        ->required();
    ic_cmd->add_option("--mu", ic_mu, "mu term (rational p/q for the exact test)")->required();
    add_common(ic_cmd, ic_common, false);

    CommonOpts ib_common;
    std::string ib_model = "k3", ib_a;
    CLI::App* ib_cmd =
        index_cmd->add_subcommand("bridge", "spin-c class 2A - K matched to the closed index");
    ib_cmd->add_option("--model", ib_model, "manifold model name")->capture_default_str();
    ib_cmd->add_option("--a", ib_a, "class A coordinates, comma separated")->required();
    add_common(ib_cmd, ib_common);

    // selftest
    CommonOpts st_common;
    int st_grid = 4096;
    bool st_swap = false;
    CLI::App* st_cmd =
        app.add_subcommand("selftest", "run the full property suites of every module");
    st_cmd->add_option("--grid", st_grid, "verification grid for the probe forms")
        ->capture_default_str();
    st_cmd->add_flag("--swap-h-convention", st_swap,
                     "use the swapped h identification (the naturality suite then fails,"
                     " demonstrating that the convention is pinned)");
    add_common(st_cmd, st_common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(census_cmd)) return run_census(census_args);
        if (app.got_subcommand(ech_cmd)) {
            if (ech_cmd->got_subcommand(ech_h_cmd))
                return run_ech_h(ech_h_common, ech_v1, ech_v2);
            if (ech_cmd->got_subcommand(ech_act_cmd))
                return run_ech_act(ech_act_common, ech_p, ech_r, ech_s, ech_cls);
            return run_ech_from_surgeries(ech_fs_common, ech_grx, ech_gr110, ech_gr101);
        }
        if (app.got_subcommand(surgery_cmd)) {
            if (surgery_cmd->got_subcommand(sp_cmd))
                return run_surgery_predict(sp_common, sp_swl, sp_p, sp_r, sp_s);
            if (surgery_cmd->got_subcommand(sc_cmd))
                return run_surgery_complete(sc_common, sc_p, sc_r, sc_s);
            return run_surgery_solve(ss_common, ss_base, ss_eqs, ss_table);
        }
        if (app.got_subcommand(index_cmd)) {
            if (index_cmd->got_subcommand(id_cmd)) return run_index_d(id_common, id_model, id_c1);
            if (index_cmd->got_subcommand(ie_cmd))
                return run_index_ech(ie_common, ie_model, ie_a);
            if (index_cmd->got_subcommand(il_cmd))
                return run_index_lift(il_common, il_model, il_a, il_c1, il_v);
            if (index_cmd->got_subcommand(ic_cmd))
                return run_index_chamber(ic_common, ic_omega, ic_mu);
            return run_index_bridge(ib_common, ib_model, ib_a);
        }
        return run_selftest_cmd(st_common, st_grid, st_swap);
    } catch (const MathError& e) {
        std::cerr << "math inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
