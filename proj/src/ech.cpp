#include "t3kit/ech.hpp"

#include "t3kit/errors.hpp"

#include <sstream>

namespace t3kit {

EchZeroClass h_class(I64 v1, I64 v2, const HConvention& convention) {
    bool odd1 = ((v1 % 2) + 2) % 2 == 1;
    bool odd2 = ((v2 % 2) + 2) % 2 == 1;
    if (convention.swap_xy) std::swap(odd1, odd2);
    return {odd1, odd2, false};
}

EchZeroClass contact_invariant() { return {false, false, true}; }

EchZeroClass act_contactomorphism(const TorusDiffeo& f, const EchZeroClass& c) {
    if (f.p != 1) {
        std::ostringstream msg;
        msg << "f has p = " << f.p << "; only p = 1 surgeries act by contactomorphisms";
        throw ValidationError(msg.str());
    }
    auto bit = [](I64 x) { return ((x % 2) + 2) % 2 == 1; };
    EchZeroClass out;
    bool in[3] = {c.cx, c.cy, c.ctheta};
    bool res[3] = {false, false, false};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (bit(f.h2.at(i, j)) && in[j]) res[i] = !res[i];
    out.cx = res[0];
    out.cy = res[1];
    out.ctheta = res[2];
    return out;
}

GrTriple gr_from_surgeries(bool gr_x, bool gr110, bool gr101) {
    GrTriple t;
    t.a = gr110 != gr_x; // mod-2 difference
    t.b = gr101 != gr_x;
    t.gr_x = gr_x;
    return t;
}

std::string format_class_triple(const EchZeroClass& c) {
    std::ostringstream out;
    out << '(' << (c.cx ? 1 : 0) << ',' << (c.cy ? 1 : 0) << ',' << (c.ctheta ? 1 : 0) << ')';
    return out.str();
}

std::string format_class_sum(const EchZeroClass& c) {
    std::string out;
    auto append = [&](const char* name) {
        if (!out.empty()) out += " + ";
        out += name;
    };
    if (c.cx) append("x");
    if (c.cy) append("y");
    if (c.ctheta) append("thetaBar");
    if (out.empty()) out = "0";
    return out;
}

} // namespace t3kit
