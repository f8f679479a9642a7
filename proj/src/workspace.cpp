#include "t3kit/workspace.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace t3kit {

using json = nlohmann::json;

const char* Conventions::basis_order() { return "(x, y, thetaBar)"; }
const char* Conventions::h_identification() {
    return "h(e1) = x, h(e2) = y, [empty set] = thetaBar";
}
const char* Conventions::matrix_rule() {
    return "h2 acts on coordinate columns; thetaBar-row of h2 = (r, s, p)";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ValidationError(path + ": " + what);
}

long long small_int(const Rat& x, const std::string& path) {
    // Document coefficients are stored as int64 numerator/denominator pairs.
    const BigInt lo(std::numeric_limits<long long>::min());
    const BigInt hi(std::numeric_limits<long long>::max());
    if (x.numerator() < lo || x.numerator() > hi || x.denominator() > hi)
        fail(path, "coefficient does not fit the document's int64 fields");
    return x.numerator().convert_to<long long>();
}

json poly_to_records(const TrigPoly& f, const std::string& path) {
    json records = json::array();
    auto push = [&](const char* kind, int freq, const Rat& coeff) {
        if (coeff == Rat(0)) return;
        json rec;
        rec["kind"] = kind;
        rec["frequency"] = freq;
        rec["numerator"] = small_int(Rat(coeff.numerator()), path);
        rec["denominator"] = small_int(Rat(coeff.denominator()), path);
        records.push_back(rec);
    };
    // Canonical order: kind alphabetically (const, cos, sin), then frequency.
    push("const", 0, f.constant_term());
    for (int k = 1; k <= f.max_frequency(); ++k) push("cos", k, f.cos_coeff(k));
    for (int k = 1; k <= f.max_frequency(); ++k) push("sin", k, f.sin_coeff(k));
    std::sort(records.begin(), records.end(), [](const json& a, const json& b) {
        auto ka = a["kind"].get<std::string>(), kb = b["kind"].get<std::string>();
        if (ka != kb) return ka < kb;
        return a["frequency"].get<int>() < b["frequency"].get<int>();
    });
    return records;
}

TrigPoly records_to_poly(const json& records, const std::string& path) {
    if (!records.is_array()) fail(path, "expected an array of coefficient records");
    TrigPoly f;
    std::vector<std::pair<std::string, int>> seen;
    for (std::size_t i = 0; i < records.size(); ++i) {
        std::string where = path + "[" + std::to_string(i) + "]";
        const json& rec = records[i];
        if (!rec.is_object()) fail(where, "expected a record object");
        for (const char* key : {"kind", "frequency", "numerator", "denominator"})
            if (!rec.contains(key)) fail(where, std::string("missing key '") + key + "'");
        std::string kind = rec["kind"].get<std::string>();
        if (kind != "const" && kind != "cos" && kind != "sin")
            fail(where, "kind must be one of const, cos, sin (got '" + kind + "')");
        if (!rec["frequency"].is_number_integer()) fail(where, "frequency must be an integer");
        int freq = rec["frequency"].get<int>();
        if (kind == "const" && freq != 0) fail(where, "const records must have frequency 0");
        if (kind != "const" && freq < 1) fail(where, "cos/sin records need frequency >= 1");
        if (!rec["numerator"].is_number_integer() || !rec["denominator"].is_number_integer())
            fail(where, "numerator and denominator must be integers");
        long long num = rec["numerator"].get<long long>();
        long long den = rec["denominator"].get<long long>();
        if (den == 0) fail(where, "denominator must be nonzero");
        if (std::find(seen.begin(), seen.end(), std::make_pair(kind, freq)) != seen.end())
            fail(where, "duplicate (kind, frequency) record");
        seen.emplace_back(kind, freq);
        Rat coeff{BigInt(num), BigInt(den)};
        if (kind == "const") f = f + TrigPoly::constant(coeff);
        else if (kind == "cos") f.add_cos(freq, coeff);
        else f.add_sin(freq, coeff);
    }
    return f;
}

IntVec json_to_ivec(const json& arr, const std::string& path) {
    if (!arr.is_array()) fail(path, "expected an integer array");
    IntVec v;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer())
            fail(path + "[" + std::to_string(i) + "]", "expected an integer");
        v.push_back(arr[i].get<long long>());
    }
    return v;
}

void check_conventions(const json& conv, const std::string& path) {
    auto check = [&](const char* key, const char* expected) {
        if (!conv.contains(key)) return;
        if (!conv[key].is_string() || conv[key].get<std::string>() != expected)
            fail(path + "." + key,
                 std::string("document declares a different convention; this toolkit uses \"") +
                     expected + "\"");
    };
    check("basisOrder", Conventions::basis_order());
    check("hIdentification", Conventions::h_identification());
    check("matrixConvention", Conventions::matrix_rule());
}

} // namespace

std::string serialize_workspace(const WorkspaceDocument& doc) {
    json root;
    root["conventions"] = {{"basisOrder", Conventions::basis_order()},
                           {"hIdentification", Conventions::h_identification()},
                           {"matrixConvention", Conventions::matrix_rule()}};
    json forms = json::object();
    for (const auto& [name, def] : doc.contact_forms) {
        json f;
        std::string path = "contactForms." + name;
        f["a1"] = poly_to_records(def.a1, path + ".a1");
        f["a2"] = poly_to_records(def.a2, path + ".a2");
        f["verificationGridSize"] = def.grid_size;
        forms[name] = f;
    }
    root["contactForms"] = forms;
    json manifolds = json::object();
    for (const auto& [name, def] : doc.manifolds) {
        json m;
        json q = json::array();
        for (const IntVec& row : def.q) q.push_back(row);
        m["Q"] = q;
        m["eulerChar"] = def.euler_char;
        if (def.signature) m["signature"] = *def.signature;
        if (def.b2_plus) m["b2plus"] = *def.b2_plus;
        if (def.k) m["K"] = *def.k;
        if (!def.mv_image_basis.empty()) {
            json mv = json::array();
            for (const IntVec& row : def.mv_image_basis) mv.push_back(row);
            m["mvImageBasis"] = mv;
        }
        manifolds[name] = m;
    }
    root["manifolds"] = manifolds;
    json tables = json::object();
    for (const auto& [name, table] : doc.sw_tables) {
        std::vector<SwEntry> entries = table.entries;
        std::sort(entries.begin(), entries.end(), [](const SwEntry& a, const SwEntry& b) {
            if (a.p != b.p) return a.p < b.p;
            if (a.r != b.r) return a.r < b.r;
            return a.s < b.s;
        });
        json list = json::array();
        for (const SwEntry& e : entries) {
            json rec;
            rec["p"] = e.p;
            rec["r"] = e.r;
            rec["s"] = e.s;
            rec["value"] = e.value;
            if (!e.chamber.empty()) rec["chamber"] = e.chamber;
            list.push_back(rec);
        }
        tables[name] = {{"entries", list}};
    }
    root["swTables"] = tables;
    return root.dump(2) + "\n";
}

WorkspaceDocument parse_workspace(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ValidationError(std::string("document is not valid JSON: ") + err.what());
    }
    if (!root.is_object()) throw ValidationError("document root must be an object");
    WorkspaceDocument doc;

    if (root.contains("conventions")) {
        if (!root["conventions"].is_object()) fail("conventions", "expected an object");
        check_conventions(root["conventions"], "conventions");
    }

    if (root.contains("contactForms")) {
        const json& forms = root["contactForms"];
        if (!forms.is_object()) fail("contactForms", "expected an object of named forms");
        for (const auto& [name, body] : forms.items()) {
            std::string path = "contactForms." + name;
            if (!body.is_object()) fail(path, "expected an object");
            FormDef def;
            if (!body.contains("a1") || !body.contains("a2"))
                fail(path, "a contact form needs both a1 and a2");
            def.a1 = records_to_poly(body["a1"], path + ".a1");
            def.a2 = records_to_poly(body["a2"], path + ".a2");
            if (body.contains("verificationGridSize")) {
                if (!body["verificationGridSize"].is_number_integer())
                    fail(path + ".verificationGridSize", "expected an integer");
                def.grid_size = body["verificationGridSize"].get<int>();
                if (def.grid_size < 4)
                    fail(path + ".verificationGridSize", "grid needs at least 4 points");
            }
            doc.contact_forms[name] = def;
        }
    }

    if (root.contains("manifolds")) {
        const json& manifolds = root["manifolds"];
        if (!manifolds.is_object()) fail("manifolds", "expected an object of named models");
        for (const auto& [name, body] : manifolds.items()) {
            std::string path = "manifolds." + name;
            if (!body.is_object()) fail(path, "expected an object");
            ManifoldDef def;
            if (!body.contains("Q")) fail(path, "a manifold model needs Q");
            if (!body["Q"].is_array()) fail(path + ".Q", "expected an array of rows");
            for (std::size_t i = 0; i < body["Q"].size(); ++i)
                def.q.push_back(json_to_ivec(body["Q"][i], path + ".Q[" + std::to_string(i) + "]"));
            if (!body.contains("eulerChar")) fail(path, "a manifold model needs eulerChar");
            if (!body["eulerChar"].is_number_integer())
                fail(path + ".eulerChar", "expected an integer");
            def.euler_char = body["eulerChar"].get<long long>();
            if (body.contains("signature")) {
                if (!body["signature"].is_number_integer())
                    fail(path + ".signature", "expected an integer");
                def.signature = body["signature"].get<long long>();
            }
            if (body.contains("b2plus")) {
                if (!body["b2plus"].is_number_integer())
                    fail(path + ".b2plus", "expected an integer");
                def.b2_plus = body["b2plus"].get<int>();
            }
            if (body.contains("K")) def.k = json_to_ivec(body["K"], path + ".K");
            if (body.contains("mvImageBasis")) {
                if (!body["mvImageBasis"].is_array())
                    fail(path + ".mvImageBasis", "expected an array of vectors");
                for (std::size_t i = 0; i < body["mvImageBasis"].size(); ++i)
                    def.mv_image_basis.push_back(
                        json_to_ivec(body["mvImageBasis"][i],
                                     path + ".mvImageBasis[" + std::to_string(i) + "]"));
            }
            doc.manifolds[name] = def;
        }
    }

    if (root.contains("swTables")) {
        const json& tables = root["swTables"];
        if (!tables.is_object()) fail("swTables", "expected an object of named tables");
        for (const auto& [name, body] : tables.items()) {
            std::string path = "swTables." + name;
            if (!body.is_object() || !body.contains("entries"))
                fail(path, "expected an object with an entries array");
            if (!body["entries"].is_array()) fail(path + ".entries", "expected an array");
            SwTable table;
            for (std::size_t i = 0; i < body["entries"].size(); ++i) {
                std::string where = path + ".entries[" + std::to_string(i) + "]";
                const json& rec = body["entries"][i];
                if (!rec.is_object()) fail(where, "expected an entry object");
                for (const char* key : {"p", "r", "s", "value"}) {
                    if (!rec.contains(key) || !rec[key].is_number_integer())
                        fail(where, std::string("entry needs integer '") + key + "'");
                }
                SwEntry entry;
                entry.p = rec["p"].get<long long>();
                entry.r = rec["r"].get<long long>();
                entry.s = rec["s"].get<long long>();
                entry.value = rec["value"].get<long long>();
                if (rec.contains("chamber")) {
                    if (!rec["chamber"].is_string()) fail(where + ".chamber", "expected a string");
                    entry.chamber = rec["chamber"].get<std::string>();
                }
                for (const SwEntry& prev : table.entries)
                    if (prev.p == entry.p && prev.r == entry.r && prev.s == entry.s)
                        fail(where, "duplicate (p, r, s) entry in table");
                table.entries.push_back(entry);
            }
            std::sort(table.entries.begin(), table.entries.end(),
                      [](const SwEntry& a, const SwEntry& b) {
                          if (a.p != b.p) return a.p < b.p;
                          if (a.r != b.r) return a.r < b.r;
                          return a.s < b.s;
                      });
            doc.sw_tables[name] = table;
        }
    }
    return doc;
}

WorkspaceDocument read_workspace_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open workspace document '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_workspace(buffer.str());
    } catch (const ValidationError& err) {
        throw ValidationError(path + ": " + err.what());
    }
}

WorkspaceDocument builtin_workspace() {
    WorkspaceDocument doc;

    FormDef lambda0;
    lambda0.a1 = TrigPoly::cosine(1, Rat(1));
    lambda0.a2 = TrigPoly::sine(1, Rat(1));
    doc.contact_forms["lambda0"] = lambda0;

    FormDef ellipse;
    ellipse.a1 = TrigPoly::cosine(1, Rat(2));
    ellipse.a2 = TrigPoly::sine(1, Rat(3));
    doc.contact_forms["ellipse"] = ellipse;

    IntMat e8 = e8_cartan();
    IntMat minus_e8(8, IntVec(8, 0));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) minus_e8[i][j] = -e8[i][j];

    ManifoldDef k3;
    k3.q = direct_sum({hyperbolic_blocks(3), minus_e8, minus_e8});
    k3.euler_char = 24;
    k3.signature = -16;
    k3.b2_plus = 3;
    k3.k = IntVec(22, 0);
    doc.manifolds["k3"] = k3;

    ManifoldDef t4;
    t4.q = hyperbolic_blocks(3);
    t4.euler_char = 0;
    t4.signature = 0;
    t4.b2_plus = 3;
    t4.k = IntVec(6, 0);
    doc.manifolds["t4"] = t4;

    SwTable demo;
    demo.entries = {{1, 0, 0, 1, "negative"}, {1, 0, 1, 0, "negative"}, {1, 1, 0, 1, "negative"}};
    doc.sw_tables["demo"] = demo;

    return doc;
}

ToricContactForm instantiate_form(const FormDef& def) {
    return ToricContactForm(def.a1, def.a2, def.grid_size);
}

FourManifoldModel instantiate_model(const ManifoldDef& def) {
    return make_model(def.q, def.euler_char, def.signature, def.b2_plus, def.k,
                      def.mv_image_basis);
}

} // namespace t3kit
