#include "t3kit/toric.hpp"

#include <cmath>
#include <sstream>

namespace t3kit {

namespace {

constexpr double kTwistZeroTol = 1e-11;

struct GridMin {
    double value;
    double theta;
};

GridMin grid_minimum(const TrigPoly& f, int n) {
    std::vector<double> values = sample_uniform(f, n);
    GridMin best{values[0], 0.0};
    const double step = 2.0 * M_PI / static_cast<double>(n);
    for (int i = 1; i < n; ++i) {
        if (values[static_cast<std::size_t>(i)] < best.value) {
            best.value = values[static_cast<std::size_t>(i)];
            best.theta = step * i;
        }
    }
    return best;
}

} // namespace

ToricContactForm::ToricContactForm(TrigPoly a1, TrigPoly a2, int verification_grid_size)
    : a1_(std::move(a1)), a2_(std::move(a2)), grid_(verification_grid_size) {
    if (grid_ < 4) throw ValidationError("verification grid must have at least 4 points");
    a1d_ = a1_.derivative();
    a2d_ = a2_.derivative();
    TrigPoly a1dd = a1d_.derivative();
    TrigPoly a2dd = a2d_.derivative();
    cross_ = a1_ * a2d_ - a2_ * a1d_;
    twist_ = a1d_ * a2dd - a2d_ * a1dd;

    report_.grid_size = grid_;
    const double step = 2.0 * M_PI / static_cast<double>(grid_);

    GridMin cross_min = grid_minimum(cross_, grid_);
    report_.min_cross = cross_min.value;
    report_.worst_theta = cross_min.theta;
    report_.lipschitz_margin = step * to_double(cross_.derivative().sup_bound());

    TrigPoly norm2 = a1_ * a1_ + a2_ * a2_;
    GridMin norm_min = grid_minimum(norm2, grid_);
    double norm_margin = step * to_double(norm2.derivative().sup_bound());
    report_.misses_origin = norm_min.value > norm_margin;

    report_.ok = report_.misses_origin && report_.min_cross > report_.lipschitz_margin;
}

bool ToricContactForm::operator==(const ToricContactForm& rhs) const {
    return a1_ == rhs.a1_ && a2_ == rhs.a2_ && grid_ == rhs.grid_;
}

ValidationReport validate_contact(const ToricContactForm& form) {
    return form.validation();
}

namespace {

void require_valid(const ToricContactForm& form) {
    if (!form.validation().ok) {
        std::ostringstream msg;
        msg << "form failed contact validation (min a x a' = " << form.validation().min_cross
            << " at t = " << form.validation().worst_theta
            << ", required margin " << form.validation().lipschitz_margin << ")";
        throw ValidationError(msg.str());
    }
}

} // namespace

ReebSample reeb_sample(const ToricContactForm& form, double theta) {
    require_valid(form);
    ReebSample s;
    s.theta = theta;
    s.cross = form.cross().eval(theta);
    if (!(s.cross > 0.0)) {
        std::ostringstream msg;
        msg << "a x a' = " << s.cross << " at t = " << theta << "; Reeb field undefined";
        throw ContactDegeneracyError(msg.str());
    }
    s.vx = form.a2_deriv().eval(theta) / s.cross;
    s.vy = -form.a1_deriv().eval(theta) / s.cross;
    s.rotation = form.twist().eval(theta) / (s.cross * s.cross);
    return s;
}

ExactReebSample reeb_sample_quarter(const ToricContactForm& form, long long quarter) {
    require_valid(form);
    ExactReebSample s;
    s.quarter = quarter;
    s.cross = form.cross().eval_quarter(quarter);
    if (s.cross <= Rat(0)) {
        std::ostringstream msg;
        msg << "a x a' = " << format_rat(s.cross) << " at t = " << quarter
            << "*pi/2; Reeb field undefined";
        throw ContactDegeneracyError(msg.str());
    }
    s.vx = form.a2_deriv().eval_quarter(quarter) / s.cross;
    s.vy = -form.a1_deriv().eval_quarter(quarter) / s.cross;
    s.rotation = form.twist().eval_quarter(quarter) / (s.cross * s.cross);
    return s;
}

int rotation_sign_at(const ToricContactForm& form, double theta) {
    double scale = std::max(1.0, to_double(form.twist().sup_bound()));
    double value = form.twist().eval(theta);
    if (value > kTwistZeroTol * scale) return 1;
    if (value < -kTwistZeroTol * scale) return -1;
    return 0;
}

std::vector<RotationSignSample> rotation_sign_profile(const ToricContactForm& form) {
    require_valid(form);
    const int n = form.grid_size();
    double scale = std::max(1.0, to_double(form.twist().sup_bound()));
    std::vector<double> values = sample_uniform(form.twist(), n);
    std::vector<RotationSignSample> profile(static_cast<std::size_t>(n));
    const double step = 2.0 * M_PI / static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        RotationSignSample& s = profile[static_cast<std::size_t>(i)];
        s.theta = step * i;
        s.twist = values[static_cast<std::size_t>(i)];
        if (s.twist > kTwistZeroTol * scale) s.sign = 1;
        else if (s.twist < -kTwistZeroTol * scale) s.sign = -1;
        else s.sign = 0;
    }
    return profile;
}

} // namespace t3kit
