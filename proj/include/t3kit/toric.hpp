#pragma once

#include "t3kit/errors.hpp"
#include "t3kit/trigpoly.hpp"

#include <vector>

namespace t3kit {

// Grid certificate for the contact condition. `ok` means the sampled minimum
// of a x a' clears the Lipschitz slack (grid step times a sup bound on the
// derivative), so positivity holds on all of the circle, not just at the
// sample points. Same scheme certifies that the path misses the origin.
struct ValidationReport {
    bool ok = false;
    bool misses_origin = false;
    double min_cross = 0.0;        // min of a x a' over the grid
    double worst_theta = 0.0;      // grid point attaining that minimum
    double lipschitz_margin = 0.0; // grid step * sup |d(a x a')/dt|
    int grid_size = 0;
};

// The path a = (a1, a2) : S^1 -> R^2 \ {0} defining the 1-form
// a1(t) dx + a2(t) dy on the 3-torus, with t the angle coordinate.
// Construction is permissive; the validation certificate is computed once
// and stored, and operations that need the contact condition check it.
class ToricContactForm {
public:
    ToricContactForm(TrigPoly a1, TrigPoly a2, int verification_grid_size = 4096);

    const TrigPoly& a1() const { return a1_; }
    const TrigPoly& a2() const { return a2_; }
    const TrigPoly& a1_deriv() const { return a1d_; }
    const TrigPoly& a2_deriv() const { return a2d_; }

    // a x a' = a1 a2' - a2 a1', exact.
    const TrigPoly& cross() const { return cross_; }
    // a' x a'' = a1' a2'' - a2' a1'', exact; its sign at a Morse-Bott root
    // decides the elliptic/hyperbolic splitting behaviour there.
    const TrigPoly& twist() const { return twist_; }

    int grid_size() const { return grid_; }
    const ValidationReport& validation() const { return report_; }

    bool operator==(const ToricContactForm& rhs) const;

private:
    TrigPoly a1_, a2_, a1d_, a2d_, cross_, twist_;
    int grid_;
    ValidationReport report_;
};

ValidationReport validate_contact(const ToricContactForm& form);

// Reeb data at angle t. The field is horizontal:
//   (vx, vy) = (a2'(t), -a1'(t)) / (a x a')(t),
// and `rotation` is the return-map invariant (a' x a'') / (a x a')^2.
struct ReebSample {
    double theta = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    double cross = 0.0;
    double rotation = 0.0;
};

struct ExactReebSample {
    long long quarter = 0; // t = quarter * pi/2
    Rat vx, vy, cross, rotation;
};

ReebSample reeb_sample(const ToricContactForm& form, double theta);
ExactReebSample reeb_sample_quarter(const ToricContactForm& form, long long quarter);

// Sign of a' x a'' at t, with a small absolute tolerance around zero.
int rotation_sign_at(const ToricContactForm& form, double theta);

struct RotationSignSample {
    double theta = 0.0;
    double twist = 0.0;
    int sign = 0;
};

// twist values and signs over the verification grid.
std::vector<RotationSignSample> rotation_sign_profile(const ToricContactForm& form);

} // namespace t3kit
