#pragma once

#include "t3kit/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace t3kit {

using I64 = long long;

struct Vec3 {
    std::array<I64, 3> v{0, 0, 0};

    I64& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    I64 operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    bool operator==(const Vec3& rhs) const { return v == rhs.v; }
};

// Integer 3x3 matrix acting on coordinate columns in the ordered basis
// (x, y, thetaBar).
struct Mat3 {
    std::array<std::array<I64, 3>, 3> m{};

    static Mat3 identity();

    I64& at(int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    I64 at(int r, int c) const { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    Vec3 operator*(const Vec3& x) const;
    Mat3 operator*(const Mat3& rhs) const;
    bool operator==(const Mat3& rhs) const { return m == rhs.m; }

    I64 det() const;
    // (M^-1)^T for det = +1 matrices; this is the cofactor matrix.
    Mat3 inverse_transpose() const;
    Vec3 row(int r) const;
};

// The glued torus diffeomorphism of the (p, r, s) surgery: h2 is the induced
// map on second homology coordinates, h1 = (h2^-1)^T the one on first
// homology. The thetaBar-row of h2 is exactly (r, s, p).
struct TorusDiffeo {
    I64 p = 1, r = 0, s = 0;
    Mat3 h2;
    Mat3 h1;
};

// Deterministic completion of primitive (r, s, p) to an SL(3, Z) matrix with
// that thetaBar-row: the row is reduced to (0, 0, 1) by elementary column
// operations (Euclid on the (1,3) pair, then the (2,3) pair, floor-division
// quotients, determinant-preserving swaps) and the accumulated inverse is the
// output. For p = 1 this reproduces the familiar normal form
//   h2 = [[1,0,0],[0,1,0],[r,s,1]].
// Throws ValidationError when gcd(p, r, s) != 1 (no completion exists).
TorusDiffeo complete_sl3(I64 p, I64 r, I64 s);

// Projection onto the thetaBar coordinate.
I64 phi_n(const Vec3& v);

// The three numbers a surgery formula consumes: degrees along the two
// lattice directions of the splitting torus and the ambient invariant.
struct LocalTorusInvariant {
    I64 a = 0, b = 0, c = 0;
};

LocalTorusInvariant assemble_swl(I64 ambient, I64 deg_x, I64 deg_y);

// Invariant of the surgered manifold, computed through the matrix action:
// phi_n(h2 * (a, b, c)).
I64 predict_surgery(const LocalTorusInvariant& swl, const TorusDiffeo& f);

struct ProductFormulaResult {
    I64 value = 0;
    bool realizable = false; // gcd(p, r, s) = 1
};

// The same number in closed form, r*a + s*b + p*c, defined for every integer
// triple; realizable records whether a surgery with that data exists.
ProductFormulaResult product_formula(const LocalTorusInvariant& swl, I64 p, I64 r, I64 s);

// h2 = [[1,0,0],[0,1,0],[r,s,1]] for some r, s.
bool is_luttinger(const TorusDiffeo& f);

// One mod-2 constraint r*a + s*b = gr_value - base; gr_value is the raw
// observed invariant, the base is subtracted inside solve_gromov.
struct GromovEquation {
    I64 r = 0, s = 0;
    bool gr_value = false;
};

struct GromovSolution {
    enum class Status { Unique, Underdetermined };
    Status status = Status::Underdetermined;
    bool a = false, b = false;      // solution (particular one if underdetermined)
    bool a_pinned = false, b_pinned = false;
    // Generators of the homogeneous solution space when underdetermined.
    std::vector<std::pair<bool, bool>> free_directions;
};

// Thrown when the Gromov system has no solution; `conflict` holds 0-based
// indices of a minimal contradicting subset of the equations (at most 3).
class GromovContradictionError : public MathError {
public:
    GromovContradictionError(const std::string& what, std::vector<std::size_t> indices)
        : MathError(what), conflict(std::move(indices)) {}
    std::vector<std::size_t> conflict;
};

// Solve {r_i*a + s_i*b = gr_i - base over GF(2)} for the unknown mod-2 pair
// (a, b). Gaussian elimination with provenance tracking, so inconsistency
// comes with a certificate subset.
GromovSolution solve_gromov(bool base, const std::vector<GromovEquation>& equations);

} // namespace t3kit
