#pragma once

#include "t3kit/errors.hpp"
#include "t3kit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace t3kit {

using IntVec = std::vector<long long>;
using IntMat = std::vector<std::vector<long long>>;

// Signature data of a symmetric integer matrix, computed exactly over the
// rationals by congruent (Lagrange) diagonalization.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    bool operator==(const Inertia&) const = default;
};

Inertia exact_inertia(const IntMat& q);

// Building blocks for intersection forms: n copies of the rank-2 hyperbolic
// block, the E8 Cartan matrix (tree T(2,3,5)), and block-diagonal assembly.
IntMat hyperbolic_blocks(int copies);
IntMat e8_cartan();
IntMat direct_sum(const std::vector<IntMat>& blocks);

// u^T Q v with no overflow checks (desk-scale inputs).
long long pairing(const IntMat& q, const IntVec& u, const IntVec& v);

// K . v = v . v mod 2 for all basis vectors, i.e. (QK)_i = Q_ii mod 2.
bool is_characteristic(const IntMat& q, const IntVec& k);

// Intersection-form model of a closed oriented 4-manifold: Q on H_2 modulo
// torsion, Euler characteristic, signature, optional canonical class and an
// optional basis of the lift-ambiguity image. Signature and b2plus are
// recomputed exactly from Q; supplying mismatching values is an error, while
// a non-characteristic K only warns.
struct FourManifoldModel {
    int rank = 0;
    IntMat q;
    long long euler_char = 0;
    long long signature = 0;
    int b2_plus = 0;
    std::optional<IntVec> k;
    std::vector<IntVec> mv_image_basis;
    std::vector<std::string> warnings;
};

FourManifoldModel make_model(const IntMat& q, long long euler_char,
                             std::optional<long long> signature = {},
                             std::optional<int> b2_plus = {},
                             std::optional<IntVec> k = {},
                             std::vector<IntVec> mv_image_basis = {});

struct SpinCClass {
    IntVec c1;
};

// Thrown when c1^2 - 2*chi - 3*sigma is not divisible by 4: the data cannot
// come from a spin-c structure on the modeled manifold.
class SpinCIndexError : public MathError {
public:
    explicit SpinCIndexError(const std::string& what) : MathError(what) {}
};

// d = (c1^T Q c1 - 2*chi - 3*sigma) / 4, exact.
long long d_invariant(const FourManifoldModel& model, const SpinCClass& s);

// I(A) = A^T Q A - K^T Q A; requires K.
long long ech_index_closed(const FourManifoldModel& model, const IntVec& a);

// What a lift-ambiguity vector is tested against: a closed index class A or
// a spin-c class c1.
struct LiftTarget {
    enum class Kind { IndexClass, SpinC };
    Kind kind = Kind::IndexClass;
    IntVec vec;

    static LiftTarget index_class(IntVec a) { return {Kind::IndexClass, std::move(a)}; }
    static LiftTarget spin_c(IntVec c1) { return {Kind::SpinC, std::move(c1)}; }
};

struct LiftCheck {
    bool invariant = false;
    long long residual = 0;
};

// Residual v.(v + 2A - K) for an index class, v.(v + c1) for a spin-c class;
// invariance of the corresponding quantity under the lift shift by v is
// exactly the vanishing of the residual.
LiftCheck lift_invariance_check(const FourManifoldModel& model, const LiftTarget& target,
                                const IntVec& v);

enum class ChamberSide { Negative, Wall, Positive };

struct ChamberData {
    double omega_dot_c1 = 0.0;
    double mu_term = 0.0;
};

// Sign of 2*pi*omega_dot_c1 + mu_term. The negative side is the symplectic
// chamber.
ChamberSide chamber_side(const ChamberData& c, double wall_tol = 1e-12);

// Exact variant for rational inputs: the wall is hit only when both terms
// vanish (2*pi is irrational); otherwise the sign is decided with a 39-digit
// rational enclosure of 2*pi.
ChamberSide chamber_side_exact(const Rat& omega_dot_c1, const Rat& mu_term);

std::string chamber_label(ChamberSide side);

// c1 = 2A - K, the spin-c class whose moduli dimension matches the closed
// index of A (when K.K = 2*chi + 3*sigma, see bridge_consistent).
SpinCClass gr_sw_bridge(const FourManifoldModel& model, const IntVec& a);

bool bridge_consistent(const FourManifoldModel& model);

} // namespace t3kit
