#include "t3kit/index_calculus.hpp"

#include <cmath>
#include <sstream>

namespace t3kit {

namespace {

void require_square_symmetric(const IntMat& q) {
    std::size_t n = q.size();
    for (const IntVec& row : q)
        if (row.size() != n) throw ValidationError("Q is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (q[i][j] != q[j][i]) {
                std::ostringstream msg;
                msg << "Q is not symmetric at (" << i << ", " << j << ")";
                throw ValidationError(msg.str());
            }
}

void require_size(const IntVec& v, std::size_t n, const char* what) {
    if (v.size() != n) {
        std::ostringstream msg;
        msg << what << " has length " << v.size() << ", expected " << n;
        throw ValidationError(msg.str());
    }
}

} // namespace

Inertia exact_inertia(const IntMat& q) {
    require_square_symmetric(q);
    const std::size_t n = q.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(BigInt(q[i][j]));

    // Congruent diagonalization: symmetric row+column eliminations preserve
    // the inertia (Sylvester), so counting pivot signs is exact.
    Inertia inertia;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] == Rat(0)) {
            std::size_t pivot = n;
            for (std::size_t j = i + 1; j < n; ++j)
                if (a[j][j] != Rat(0)) {
                    pivot = j;
                    break;
                }
            if (pivot < n) {
                std::swap(a[i], a[pivot]);
                for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][pivot]);
            } else {
                std::size_t mate = n;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != Rat(0)) {
                        mate = j;
                        break;
                    }
                if (mate == n) {
                    ++inertia.zero; // row is identically zero in the active block
                    continue;
                }
                // Fold the hyperbolic pair: row/col i += row/col mate makes
                // the diagonal entry 2*a[i][mate] != 0.
                for (std::size_t c = 0; c < n; ++c) a[i][c] += a[mate][c];
                for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][mate];
            }
        }
        const Rat pivot = a[i][i];
        if (pivot > Rat(0)) ++inertia.positive;
        else ++inertia.negative;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[j][i] == Rat(0)) continue;
            Rat factor = a[j][i] / pivot;
            for (std::size_t c = 0; c < n; ++c) a[j][c] -= factor * a[i][c];
            for (std::size_t r = 0; r < n; ++r) a[r][j] -= factor * a[r][i];
        }
    }
    return inertia;
}

IntMat hyperbolic_blocks(int copies) {
    IntMat q(static_cast<std::size_t>(2 * copies), IntVec(static_cast<std::size_t>(2 * copies), 0));
    for (int b = 0; b < copies; ++b) {
        q[static_cast<std::size_t>(2 * b)][static_cast<std::size_t>(2 * b + 1)] = 1;
        q[static_cast<std::size_t>(2 * b + 1)][static_cast<std::size_t>(2 * b)] = 1;
    }
    return q;
}

// Cartan matrix of E8 as the tree T(2,3,5): a 7-chain with the eighth node
// attached to the third.
IntMat e8_cartan() {
    IntMat q(8, IntVec(8, 0));
    for (int i = 0; i < 8; ++i) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    auto edge = [&](int i, int j) {
        q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
        q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
    };
    edge(0, 1);
    edge(1, 2);
    edge(2, 3);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(2, 7);
    return q;
}

IntMat direct_sum(const std::vector<IntMat>& blocks) {
    std::size_t n = 0;
    for (const IntMat& b : blocks) n += b.size();
    IntMat q(n, IntVec(n, 0));
    std::size_t off = 0;
    for (const IntMat& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) q[off + i][off + j] = b[i][j];
        off += b.size();
    }
    return q;
}

long long pairing(const IntMat& q, const IntVec& u, const IntVec& v) {
    require_square_symmetric(q);
    require_size(u, q.size(), "left vector");
    require_size(v, q.size(), "right vector");
    long long acc = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) acc += u[i] * q[i][j] * v[j];
    return acc;
}

bool is_characteristic(const IntMat& q, const IntVec& k) {
    require_square_symmetric(q);
    require_size(k, q.size(), "K");
    for (std::size_t i = 0; i < q.size(); ++i) {
        long long qk = 0;
        for (std::size_t j = 0; j < q.size(); ++j) qk += q[i][j] * k[j];
        if (((qk - q[i][i]) % 2 + 2) % 2 != 0) return false;
    }
    return true;
}

FourManifoldModel make_model(const IntMat& q, long long euler_char,
                             std::optional<long long> signature, std::optional<int> b2_plus,
                             std::optional<IntVec> k, std::vector<IntVec> mv_image_basis) {
    require_square_symmetric(q);
    FourManifoldModel model;
    model.rank = static_cast<int>(q.size());
    model.q = q;
    model.euler_char = euler_char;

    Inertia inertia = exact_inertia(q);
    model.signature = inertia.positive - inertia.negative;
    model.b2_plus = inertia.positive;
    if (inertia.zero > 0)
        model.warnings.push_back("Q is degenerate (not unimodular); rank drops by " +
                                 std::to_string(inertia.zero));
    if (signature && *signature != model.signature) {
        std::ostringstream msg;
        msg << "declared signature " << *signature << " but Q has signature " << model.signature;
        throw ValidationError(msg.str());
    }
    if (b2_plus && *b2_plus != model.b2_plus) {
        std::ostringstream msg;
        msg << "declared b2plus " << *b2_plus << " but Q has positive index " << model.b2_plus;
        throw ValidationError(msg.str());
    }

    if (k) {
        require_size(*k, q.size(), "K");
        model.k = std::move(*k);
        if (!is_characteristic(q, *model.k))
            model.warnings.push_back(
                "K is not characteristic (K.v = v.v mod 2 fails); evenness of the closed"
                " index is not guaranteed");
    }
    for (std::size_t i = 0; i < mv_image_basis.size(); ++i) {
        require_size(mv_image_basis[i], q.size(), "mvImageBasis vector");
        long long self = pairing(q, mv_image_basis[i], mv_image_basis[i]);
        if (self != 0)
            model.warnings.push_back("mvImageBasis vector " + std::to_string(i) +
                                     " has v.v = " + std::to_string(self) + ", expected 0");
        if (model.k) {
            long long vk = pairing(q, mv_image_basis[i], *model.k);
            if (vk != 0)
                model.warnings.push_back("mvImageBasis vector " + std::to_string(i) +
                                         " has v.K = " + std::to_string(vk) + ", expected 0");
        }
    }
    model.mv_image_basis = std::move(mv_image_basis);
    return model;
}

long long d_invariant(const FourManifoldModel& model, const SpinCClass& s) {
    long long c1sq = pairing(model.q, s.c1, s.c1);
    long long num = c1sq - 2 * model.euler_char - 3 * model.signature;
    if (num % 4 != 0) {
        std::ostringstream msg;
        msg << "c1^2 - 2*chi - 3*sigma = " << num
            << " is not divisible by 4; no spin-c structure has this data";
        throw SpinCIndexError(msg.str());
    }
    return num / 4;
}

long long ech_index_closed(const FourManifoldModel& model, const IntVec& a) {
    if (!model.k)
        throw ValidationError("the closed index needs the canonical class K in the model");
    return pairing(model.q, a, a) - pairing(model.q, *model.k, a);
}

LiftCheck lift_invariance_check(const FourManifoldModel& model, const LiftTarget& target,
                                const IntVec& v) {
    LiftCheck check;
    if (target.kind == LiftTarget::Kind::IndexClass) {
        if (!model.k)
            throw ValidationError("lift check against an index class needs K in the model");
        check.residual = pairing(model.q, v, v) + 2 * pairing(model.q, v, target.vec) -
                         pairing(model.q, v, *model.k);
    } else {
        check.residual = pairing(model.q, v, v) + pairing(model.q, v, target.vec);
    }
    check.invariant = check.residual == 0;
    return check;
}

ChamberSide chamber_side(const ChamberData& c, double wall_tol) {
    double value = 2.0 * M_PI * c.omega_dot_c1 + c.mu_term;
    if (std::fabs(value) <= wall_tol) return ChamberSide::Wall;
    return value < 0.0 ? ChamberSide::Negative : ChamberSide::Positive;
}

namespace {

// 39-digit enclosure of 2*pi.
const Rat& two_pi_lower() {
    static const Rat value(BigInt("6283185307179586476925286766559005768394"),
                           boost::multiprecision::pow(BigInt(10), 39));
    return value;
}

const Rat& two_pi_upper() {
    static const Rat value(BigInt("6283185307179586476925286766559005768395"),
                           boost::multiprecision::pow(BigInt(10), 39));
    return value;
}

} // namespace

ChamberSide chamber_side_exact(const Rat& omega_dot_c1, const Rat& mu_term) {
    if (omega_dot_c1 == Rat(0)) {
        if (mu_term == Rat(0)) return ChamberSide::Wall;
        return mu_term < Rat(0) ? ChamberSide::Negative : ChamberSide::Positive;
    }
    // 2*pi is irrational, so with omega != 0 the value cannot sit on the wall;
    // decide the sign by interval arithmetic.
    Rat lo = (omega_dot_c1 > Rat(0) ? two_pi_lower() : two_pi_upper()) * omega_dot_c1 + mu_term;
    Rat hi = (omega_dot_c1 > Rat(0) ? two_pi_upper() : two_pi_lower()) * omega_dot_c1 + mu_term;
    if (lo > Rat(0)) return ChamberSide::Positive;
    if (hi < Rat(0)) return ChamberSide::Negative;
    throw MathError("chamber sign needs more precision than the built-in 2*pi enclosure");
}

std::string chamber_label(ChamberSide side) {
    switch (side) {
        case ChamberSide::Negative: return "negative (symplectic chamber)";
        case ChamberSide::Wall: return "wall";
        case ChamberSide::Positive: return "positive";
    }
    return "";
}

SpinCClass gr_sw_bridge(const FourManifoldModel& model, const IntVec& a) {
    if (!model.k)
        throw ValidationError("the bridge to spin-c classes needs K in the model");
    require_size(a, model.q.size(), "A");
    SpinCClass s;
    s.c1.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s.c1[i] = 2 * a[i] - (*model.k)[i];
    return s;
}

bool bridge_consistent(const FourManifoldModel& model) {
    if (!model.k) return false;
    return pairing(model.q, *model.k, *model.k) == 2 * model.euler_char + 3 * model.signature;
}

} // namespace t3kit
