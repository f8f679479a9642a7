#include "t3kit/surgery.hpp"

#include "t3kit/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace t3kit {

Mat3 Mat3::identity() {
    Mat3 e;
    for (int i = 0; i < 3; ++i) e.at(i, i) = 1;
    return e;
}

Vec3 Mat3::operator*(const Vec3& x) const {
    Vec3 y;
    for (int i = 0; i < 3; ++i)
        y[i] = at(i, 0) * x[0] + at(i, 1) * x[1] + at(i, 2) * x[2];
    return y;
}

Mat3 Mat3::operator*(const Mat3& rhs) const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            I64 acc = 0;
            for (int k = 0; k < 3; ++k) acc += at(i, k) * rhs.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

I64 Mat3::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::inverse_transpose() const {
    if (det() != 1) throw MathError("inverse_transpose requires det = 1");
    // For det = 1 the inverse-transpose is the cofactor matrix.
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            c.at(i, j) = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
        }
    return c;
}

Vec3 Mat3::row(int r) const {
    Vec3 out;
    for (int j = 0; j < 3; ++j) out[j] = at(r, j);
    return out;
}

namespace {

I64 floor_div(I64 a, I64 b) {
    I64 q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

TorusDiffeo complete_sl3(I64 p, I64 r, I64 s) {
    I64 g = std::gcd(std::gcd(std::llabs(p), std::llabs(r)), std::llabs(s));
    if (g != 1) {
        std::ostringstream msg;
        msg << "(p, r, s) = (" << p << ", " << r << ", " << s << ") has gcd " << g
            << "; no unimodular completion exists";
        throw ValidationError(msg.str());
    }

    // Reduce the row w = (r, s, p) to (0, 0, 1) with det-1 column operations
    // while accumulating their inverses into M (as row operations). The end
    // state gives row 3 of M = (r, s, p) and det M = 1.
    std::array<I64, 3> w{r, s, p};
    Mat3 m = Mat3::identity();

    auto addmul = [&](int i, int j, I64 t) { // w_i += t*w_j
        w[static_cast<std::size_t>(i)] += t * w[static_cast<std::size_t>(j)];
        for (int c = 0; c < 3; ++c) m.at(j, c) -= t * m.at(i, c);
    };
    auto quarter_turn = [&](int i, int j) { // (w_i, w_j) <- (-w_j, w_i)
        I64 wi = w[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(j)];
        w[static_cast<std::size_t>(j)] = wi;
        for (int c = 0; c < 3; ++c) {
            I64 t = m.at(i, c);
            m.at(i, c) = -m.at(j, c);
            m.at(j, c) = t;
        }
    };
    auto negate_pair = [&](int i, int j) {
        w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(j)] = -w[static_cast<std::size_t>(j)];
        for (int c = 0; c < 3; ++c) {
            m.at(i, c) = -m.at(i, c);
            m.at(j, c) = -m.at(j, c);
        }
    };
    auto clear_against_pivot = [&](int i, int pivot) { // Euclid until w_i = 0
        while (w[static_cast<std::size_t>(i)] != 0) {
            if (w[static_cast<std::size_t>(pivot)] == 0) {
                quarter_turn(i, pivot);
                continue;
            }
            I64 q = floor_div(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(pivot)]);
            addmul(i, pivot, -q);
            if (w[static_cast<std::size_t>(i)] != 0) quarter_turn(i, pivot);
        }
    };

    clear_against_pivot(0, 2);
    clear_against_pivot(1, 2);
    if (w[2] < 0) negate_pair(2, 0);

    TorusDiffeo f;
    f.p = p;
    f.r = r;
    f.s = s;
    f.h2 = m;
    f.h1 = m.inverse_transpose();
    return f;
}

I64 phi_n(const Vec3& v) { return v[2]; }

LocalTorusInvariant assemble_swl(I64 ambient, I64 deg_x, I64 deg_y) {
    LocalTorusInvariant swl;
    swl.a = deg_x;
    swl.b = deg_y;
    swl.c = ambient;
    return swl;
}

I64 predict_surgery(const LocalTorusInvariant& swl, const TorusDiffeo& f) {
    Vec3 expected_row{{f.r, f.s, f.p}};
    if (!(f.h2.row(2) == expected_row) || f.h2.det() != 1) {
        std::ostringstream msg;
        msg << "diffeomorphism record inconsistent: h2 thetaBar-row should be (" << f.r << ", "
            << f.s << ", " << f.p << ") with det 1";
        throw ValidationError(msg.str());
    }
    return phi_n(f.h2 * Vec3{{swl.a, swl.b, swl.c}});
}

ProductFormulaResult product_formula(const LocalTorusInvariant& swl, I64 p, I64 r, I64 s) {
    ProductFormulaResult out;
    out.value = p * swl.c + r * swl.a + s * swl.b;
    out.realizable =
        std::gcd(std::gcd(std::llabs(p), std::llabs(r)), std::llabs(s)) == 1;
    return out;
}

bool is_luttinger(const TorusDiffeo& f) {
    if (f.p != 1) return false;
    // h1 fixes the x and y coordinate vectors.
    Vec3 e1{{1, 0, 0}}, e2{{0, 1, 0}};
    return f.h1 * e1 == e1 && f.h1 * e2 == e2;
}

GromovSolution solve_gromov(bool base, const std::vector<GromovEquation>& equations) {
    if (equations.empty())
        throw ValidationError("the Gromov system needs at least one equation");

    struct Row {
        int ca, cb, rhs;
        std::vector<std::size_t> provenance; // original equation indices, xor-merged
    };
    auto mod2 = [](I64 x) { return static_cast<int>(((x % 2) + 2) % 2); };
    std::vector<Row> rows;
    rows.reserve(equations.size());
    for (std::size_t i = 0; i < equations.size(); ++i) {
        Row row;
        row.ca = mod2(equations[i].r);
        row.cb = mod2(equations[i].s);
        row.rhs = (equations[i].gr_value ? 1 : 0) ^ (base ? 1 : 0);
        row.provenance = {i};
        rows.push_back(row);
    }

    auto xor_into = [](Row& dst, const Row& src) {
        dst.ca ^= src.ca;
        dst.cb ^= src.cb;
        dst.rhs ^= src.rhs;
        std::vector<std::size_t> merged;
        std::set_symmetric_difference(dst.provenance.begin(), dst.provenance.end(),
                                      src.provenance.begin(), src.provenance.end(),
                                      std::back_inserter(merged));
        dst.provenance = std::move(merged);
    };

    int pivot_a = -1, pivot_b = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].ca == 1) {
            pivot_a = static_cast<int>(i);
            break;
        }
    }
    if (pivot_a >= 0)
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != pivot_a && rows[i].ca == 1)
                xor_into(rows[i], rows[static_cast<std::size_t>(pivot_a)]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(i) != pivot_a && rows[i].cb == 1) {
            pivot_b = static_cast<int>(i);
            break;
        }
    }
    if (pivot_b >= 0) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != pivot_b && rows[i].cb == 1)
                xor_into(rows[i], rows[static_cast<std::size_t>(pivot_b)]);
    }

    GromovSolution sol;
    for (const Row& row : rows) {
        if (row.ca == 0 && row.cb == 0 && row.rhs == 1) {
            std::ostringstream msg;
            msg << "Gromov equations are contradictory; violating set {";
            for (std::size_t k = 0; k < row.provenance.size(); ++k) {
                const GromovEquation& eq = equations[row.provenance[k]];
                msg << (k ? ", " : "") << "#" << row.provenance[k] << ": (" << eq.r << ", "
                    << eq.s << ") -> " << (eq.gr_value ? 1 : 0);
            }
            msg << "}";
            throw GromovContradictionError(msg.str(), row.provenance);
        }
    }

    if (pivot_a >= 0 && pivot_b >= 0) {
        sol.status = GromovSolution::Status::Unique;
        sol.a = rows[static_cast<std::size_t>(pivot_a)].rhs != 0;
        sol.b = rows[static_cast<std::size_t>(pivot_b)].rhs != 0;
        sol.a_pinned = sol.b_pinned = true;
        return sol;
    }

    sol.status = GromovSolution::Status::Underdetermined;
    if (pivot_a >= 0) {
        const Row& row = rows[static_cast<std::size_t>(pivot_a)];
        if (row.cb == 0) { // a determined, b free
            sol.a = row.rhs != 0;
            sol.a_pinned = true;
            sol.free_directions = {{false, true}};
        } else { // a + b = rhs
            sol.a = row.rhs != 0;
            sol.b = false;
            sol.free_directions = {{true, true}};
        }
    } else if (pivot_b >= 0) { // b determined, a free
        sol.b = rows[static_cast<std::size_t>(pivot_b)].rhs != 0;
        sol.b_pinned = true;
        sol.free_directions = {{true, false}};
    } else { // no constraints at all
        sol.free_directions = {{true, false}, {false, true}};
    }
    return sol;
}

} // namespace t3kit
