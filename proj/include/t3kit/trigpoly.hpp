#pragma once

#include "t3kit/rational.hpp"

#include <vector>

namespace t3kit {

// Finite trigonometric polynomial with exact rational coefficients:
//
//   f(t) = c0 + sum_{k>=1} ( A_k cos(k t) + B_k sin(k t) )
//
// Closed under +, -, scalar multiple, derivative and product (products are
// expanded with the product-to-sum identities, so the class is an exact
// commutative ring). Numeric evaluation goes through doubles; exact
// evaluation is available at quarter-period points t = m*pi/2, where every
// cos(k t), sin(k t) lies in {0, +1, -1}.
class TrigPoly {
public:
    TrigPoly() = default;

    static TrigPoly constant(const Rat& c);
    static TrigPoly cosine(int frequency, const Rat& coeff); // coeff*cos(f t)
    static TrigPoly sine(int frequency, const Rat& coeff);   // coeff*sin(f t)

    const Rat& constant_term() const { return constant_; }
    Rat cos_coeff(int k) const; // A_k, zero beyond stored degree
    Rat sin_coeff(int k) const; // B_k
    int max_frequency() const { return static_cast<int>(cos_.size()); }

    bool is_zero() const;
    bool is_constant() const { return cos_.empty() && sin_.empty(); }

    TrigPoly derivative() const;

    TrigPoly operator-() const;
    TrigPoly operator+(const TrigPoly& rhs) const;
    TrigPoly operator-(const TrigPoly& rhs) const;
    TrigPoly operator*(const TrigPoly& rhs) const;
    TrigPoly scaled(const Rat& c) const;

    bool operator==(const TrigPoly& rhs) const;
    bool operator!=(const TrigPoly& rhs) const { return !(*this == rhs); }

    double eval(double t) const;

    // Exact value at t = m*pi/2 (any integer m, reduced mod the period).
    Rat eval_quarter(long long m) const;

    // |c0| + sum_k (|A_k| + |B_k|) >= sup |f|.
    Rat sup_bound() const;

    // Adds coeff*cos(k t) / coeff*sin(k t); k may be negative or zero, the
    // parity identities fold it into the canonical k >= 1 shape.
    void add_cos(int k, const Rat& coeff);
    void add_sin(int k, const Rat& coeff);

private:
    Rat constant_{};
    std::vector<Rat> cos_; // cos_[k-1] = A_k
    std::vector<Rat> sin_; // sin_[k-1] = B_k

    void trim();
};

// Plain-double snapshot of the coefficients for fast repeated evaluation.
struct TrigPolyEval {
    double c0 = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    double operator()(double t) const;
};

TrigPolyEval compiled(const TrigPoly& f);

// f evaluated at n uniform points t_i = 2*pi*i/n.
std::vector<double> sample_uniform(const TrigPoly& f, int n);

} // namespace t3kit
