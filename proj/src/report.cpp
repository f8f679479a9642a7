#include "t3kit/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace t3kit {

using json = nlohmann::json;

std::string format_real(double x) {
    if (x == 0.0) x = 0.0; // normalize -0
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return buffer;
}

std::string conventions_banner() {
    std::ostringstream out;
    out << "# basis order: " << Conventions::basis_order() << "\n";
    out << "# h identification: " << Conventions::h_identification() << "\n";
    out << "# matrix rule: " << Conventions::matrix_rule() << "\n";
    return out.str();
}

namespace {

json conventions_json() {
    return {{"basisOrder", Conventions::basis_order()},
            {"hIdentification", Conventions::h_identification()},
            {"matrixConvention", Conventions::matrix_rule()}};
}

const char* kind_name(OrbitKind kind) {
    return kind == OrbitKind::PositiveHyperbolic ? "positiveHyperbolic" : "elliptic";
}

} // namespace

std::string render_census_report(const std::string& form_name, const ToricContactForm& form,
                                 const OrbitCensus& census,
                                 const std::vector<DegreeZeroGenerator>& generators,
                                 OutputMode mode) {
    const ValidationReport& v = form.validation();
    if (mode == OutputMode::Structured) {
        json root;
        root["command"] = "census";
        root["conventions"] = conventions_json();
        root["form"] = form_name;
        root["cutoff"] = format_real(census.cutoff);
        root["validation"] = {{"ok", v.ok},
                              {"minCross", format_real(v.min_cross)},
                              {"worstTheta", format_real(v.worst_theta)},
                              {"margin", format_real(v.lipschitz_margin)},
                              {"gridSize", v.grid_size}};
        json families = json::array();
        for (const MorseBottFamily& fam : census.families)
            families.push_back({{"m", fam.cls.m},
                                {"n", fam.cls.n},
                                {"theta0", format_real(fam.theta0)},
                                {"action", format_real(fam.action)},
                                {"rotation", format_real(fam.rotation)},
                                {"rotationSign", fam.rotation_sign}});
        root["families"] = families;
        json orbits = json::array();
        for (const PerturbedOrbit& orbit : census.orbits)
            orbits.push_back({{"kind", kind_name(orbit.kind)},
                              {"m", orbit.cls.m},
                              {"n", orbit.cls.n},
                              {"limitAction", format_real(orbit.limit_action)},
                              {"lPositive", orbit.l_positive},
                              {"family", orbit.family_index}});
        root["orbits"] = orbits;
        root["bourgeoisAdmissible"] = census.bourgeois_admissible;
        root["lFlatAsserted"] = census.l_flat_asserted;
        json gens = json::array();
        for (const DegreeZeroGenerator& gen : generators) {
            if (gen.empty_set)
                gens.push_back({{"kind", "emptySet"}, {"totalAction", format_real(0.0)}});
            else
                gens.push_back({{"kind", "hPair"},
                                {"m", gen.pair_class.m},
                                {"n", gen.pair_class.n},
                                {"totalAction", format_real(gen.total_action)}});
        }
        root["degreeZeroGenerators"] = gens;
        return root.dump(2) + "\n";
    }

    std::ostringstream out;
    out << conventions_banner();
    out << "form: " << form_name << "\n";
    out << "cutoff: " << format_real(census.cutoff) << "\n";
    out << "validation: " << (v.ok ? "ok" : "FAILED") << " (min a x a' = "
        << format_real(v.min_cross) << " at t = " << format_real(v.worst_theta)
        << ", margin = " << format_real(v.lipschitz_margin) << ", grid = " << v.grid_size
        << ")\n";
    out << "families: " << census.families.size() << "\n";
    for (const MorseBottFamily& fam : census.families) {
        out << "  class (" << fam.cls.m << "," << fam.cls.n << ")  theta0 "
            << format_real(fam.theta0) << "  action " << format_real(fam.action)
            << "  rotation " << format_real(fam.rotation) << "  sign "
            << (fam.rotation_sign > 0 ? "+1" : fam.rotation_sign < 0 ? "-1" : "0") << "\n";
    }
    out << "orbits: " << census.orbits.size() << "\n";
    for (const PerturbedOrbit& orbit : census.orbits) {
        out << "  " << kind_name(orbit.kind) << "  class (" << orbit.cls.m << ","
            << orbit.cls.n << ")  limitAction " << format_real(orbit.limit_action);
        if (orbit.kind == OrbitKind::Elliptic)
            out << "  lPositive " << (orbit.l_positive ? "true" : "false");
        out << "\n";
    }
    out << "bourgeoisAdmissible: " << (census.bourgeois_admissible ? "true" : "false") << "\n";
    out << "lFlatAsserted: true\n";
    out << "degreeZeroGenerators: " << generators.size() << "\n";
    for (const DegreeZeroGenerator& gen : generators) {
        if (gen.empty_set)
            out << "  emptySet  totalAction 0\n";
        else
            out << "  h(" << gen.pair_class.m << "," << gen.pair_class.n << ")  totalAction "
                << format_real(gen.total_action) << "\n";
    }
    return out.str();
}

} // namespace t3kit
