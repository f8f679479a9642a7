#pragma once

#include "t3kit/index_calculus.hpp"
#include "t3kit/surgery.hpp"
#include "t3kit/toric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace t3kit {

// Named definitions shared by all subcommands, read from one JSON document.
// Section keys: contactForms, manifolds, swTables, conventions.

struct FormDef {
    TrigPoly a1, a2;
    int grid_size = 4096;

    bool operator==(const FormDef& rhs) const {
        return a1 == rhs.a1 && a2 == rhs.a2 && grid_size == rhs.grid_size;
    }
};

struct ManifoldDef {
    IntMat q;
    long long euler_char = 0;
    std::optional<long long> signature;
    std::optional<int> b2_plus;
    std::optional<IntVec> k;
    std::vector<IntVec> mv_image_basis;

    bool operator==(const ManifoldDef& rhs) const {
        return q == rhs.q && euler_char == rhs.euler_char && signature == rhs.signature &&
               b2_plus == rhs.b2_plus && k == rhs.k && mv_image_basis == rhs.mv_image_basis;
    }
};

// One observed invariant value for the (p, r, s) surgery, with an opaque
// chamber tag that is echoed, never interpreted.
struct SwEntry {
    I64 p = 1, r = 0, s = 0;
    I64 value = 0;
    std::string chamber;

    bool operator==(const SwEntry& rhs) const {
        return p == rhs.p && r == rhs.r && s == rhs.s && value == rhs.value &&
               chamber == rhs.chamber;
    }
};

struct SwTable {
    std::vector<SwEntry> entries;

    bool operator==(const SwTable& rhs) const { return entries == rhs.entries; }
};

struct WorkspaceDocument {
    std::map<std::string, FormDef> contact_forms;
    std::map<std::string, ManifoldDef> manifolds;
    std::map<std::string, SwTable> sw_tables;

    bool operator==(const WorkspaceDocument& rhs) const {
        return contact_forms == rhs.contact_forms && manifolds == rhs.manifolds &&
               sw_tables == rhs.sw_tables;
    }
};

// The conventions every document and report carries.
struct Conventions {
    static const char* basis_order();       // "(x, y, thetaBar)"
    static const char* h_identification(); // "h(e1) = x, h(e2) = y, [empty] = thetaBar"
    static const char* matrix_rule();      // h2 column action, thetaBar-row = (r, s, p)
};

// Canonical JSON: object keys sorted, coefficient records sorted by
// (kind, frequency), sw entries by (p, r, s).
std::string serialize_workspace(const WorkspaceDocument& doc);

// Throws ValidationError with a JSON-path-style location on malformed input.
WorkspaceDocument parse_workspace(const std::string& text);

WorkspaceDocument read_workspace_file(const std::string& path);

// lambda0 and ellipse forms, k3 and t4 intersection-form models, a demo SW
// table; available without any document.
WorkspaceDocument builtin_workspace();

ToricContactForm instantiate_form(const FormDef& def);
FourManifoldModel instantiate_model(const ManifoldDef& def);

} // namespace t3kit
