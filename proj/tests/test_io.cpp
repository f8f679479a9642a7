#include "t3kit/census.hpp"
#include "t3kit/errors.hpp"
#include "t3kit/report.hpp"
#include "t3kit/workspace.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

using namespace t3kit;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool mentions(const ValidationError& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("builtin document roundtrips and serializes stably") {
    WorkspaceDocument doc = builtin_workspace();
    std::string text = serialize_workspace(doc);
    CHECK(serialize_workspace(doc) == text);
    WorkspaceDocument back = parse_workspace(text);
    CHECK(back == doc);
    CHECK(serialize_workspace(back) == text);
    CHECK(doc.contact_forms.count("lambda0") == 1);
    CHECK(doc.contact_forms.count("ellipse") == 1);
    CHECK(doc.manifolds.count("k3") == 1);
    CHECK(doc.manifolds.count("t4") == 1);
    CHECK(doc.sw_tables.count("demo") == 1);
}

TEST_CASE("documents travel through files unchanged") {
    const char* path = "test_io_roundtrip.json";
    WorkspaceDocument doc = builtin_workspace();
    {
        std::ofstream out(path, std::ios::binary);
        out << serialize_workspace(doc);
    }
    WorkspaceDocument back = read_workspace_file(path);
    CHECK(back == doc);
    std::remove(path);
    CHECK_THROWS_AS((void)read_workspace_file("no_such_workspace.json"), ValidationError);
}

TEST_CASE("parse failures point at the offending path") {
    CHECK_THROWS_AS((void)parse_workspace("{"), ValidationError);
    CHECK_THROWS_AS((void)parse_workspace("[1, 2]"), ValidationError);

    try {
        parse_workspace(R"({"contactForms": 5})");
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(mentions(e, "contactForms"));
    }

    try {
        parse_workspace(R"({"contactForms": {"f": {
            "a1": [{"kind": "cos", "frequency": 1, "numerator": 1, "denominator": 0}],
            "a2": []}}})");
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(mentions(e, "contactForms.f.a1[0]"));
        CHECK(mentions(e, "denominator"));
    }

    try {
        parse_workspace(R"({"swTables": {"t": {"entries": [
            {"p": 1, "r": 0, "s": 0, "value": 1},
            {"p": 1, "r": 0, "s": 0, "value": 2}]}}})");
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(mentions(e, "swTables.t.entries[1]"));
        CHECK(mentions(e, "duplicate"));
    }

    try {
        parse_workspace(R"json({"conventions": {"basisOrder": "(y, x, thetaBar)"}})json");
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(mentions(e, "conventions.basisOrder"));
    }
}

TEST_CASE("grid size is honored and a coarse grid still certifies the round form") {
    FormDef def = builtin_workspace().contact_forms.at("lambda0");
    def.grid_size = 8;
    ToricContactForm form = instantiate_form(def);
    CHECK(form.grid_size() == 8);
    CHECK(form.validation().ok);
    CHECK(find_families(form, kTwoPi * 1.2).size() == 4);
}

TEST_CASE("census report is deterministic and self-describing") {
    ToricContactForm form = instantiate_form(builtin_workspace().contact_forms.at("lambda0"));
    OrbitCensus census = bourgeois_census(form, kTwoPi * 1.2);
    std::vector<DegreeZeroGenerator> gens = degree_zero_generators(census);

    std::string table = render_census_report("lambda0", form, census, gens, OutputMode::Table);
    CHECK(render_census_report("lambda0", form, census, gens, OutputMode::Table) == table);
    CHECK(table.rfind("# basis order: (x, y, thetaBar)\n", 0) == 0);
    CHECK(table.find("families: 4") != std::string::npos);
    CHECK(table.find("bourgeoisAdmissible: true") != std::string::npos);

    std::string structured =
        render_census_report("lambda0", form, census, gens, OutputMode::Structured);
    CHECK(render_census_report("lambda0", form, census, gens, OutputMode::Structured) ==
          structured);
    CHECK(structured.find("\"bourgeoisAdmissible\": true") != std::string::npos);
    CHECK(structured.find("\"basisOrder\": \"(x, y, thetaBar)\"") != std::string::npos);
}

TEST_CASE("real numbers render at twelve significant digits") {
    CHECK(format_real(kTwoPi) == "6.28318530718");
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1.5) == "1.5");
}
