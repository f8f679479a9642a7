#include "t3kit/trigpoly.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace t3kit {

double to_double(const Rat& x) {
    return boost::rational_cast<double>(x);
}

std::string format_rat(const Rat& x) {
    std::ostringstream out;
    out << x.numerator();
    if (x.denominator() != 1) out << '/' << x.denominator();
    return out.str();
}

TrigPoly TrigPoly::constant(const Rat& c) {
    TrigPoly f;
    f.constant_ = c;
    return f;
}

TrigPoly TrigPoly::cosine(int frequency, const Rat& coeff) {
    TrigPoly f;
    f.add_cos(frequency, coeff);
    return f;
}

TrigPoly TrigPoly::sine(int frequency, const Rat& coeff) {
    TrigPoly f;
    f.add_sin(frequency, coeff);
    return f;
}

Rat TrigPoly::cos_coeff(int k) const {
    if (k < 1 || k > static_cast<int>(cos_.size())) return Rat(0);
    return cos_[static_cast<std::size_t>(k) - 1];
}

Rat TrigPoly::sin_coeff(int k) const {
    if (k < 1 || k > static_cast<int>(sin_.size())) return Rat(0);
    return sin_[static_cast<std::size_t>(k) - 1];
}

bool TrigPoly::is_zero() const {
    return constant_ == Rat(0) && cos_.empty() && sin_.empty();
}

void TrigPoly::add_cos(int k, const Rat& coeff) {
    if (coeff == Rat(0)) return;
    if (k < 0) k = -k; // cos is even
    if (k == 0) {
        constant_ += coeff;
        return;
    }
    if (static_cast<int>(cos_.size()) < k) cos_.resize(static_cast<std::size_t>(k));
    cos_[static_cast<std::size_t>(k) - 1] += coeff;
    trim();
}

void TrigPoly::add_sin(int k, const Rat& coeff) {
    if (coeff == Rat(0) || k == 0) return; // sin(0) contributes nothing
    Rat c = coeff;
    if (k < 0) { // sin is odd
        k = -k;
        c = -c;
    }
    if (static_cast<int>(sin_.size()) < k) sin_.resize(static_cast<std::size_t>(k));
    sin_[static_cast<std::size_t>(k) - 1] += c;
    trim();
}

void TrigPoly::trim() {
    std::size_t top = std::max(cos_.size(), sin_.size());
    while (top > 0) {
        Rat a = top <= cos_.size() ? cos_[top - 1] : Rat(0);
        Rat b = top <= sin_.size() ? sin_[top - 1] : Rat(0);
        if (a != Rat(0) || b != Rat(0)) break;
        --top;
    }
    if (cos_.size() > top) cos_.resize(top);
    if (sin_.size() > top) sin_.resize(top);
    if (cos_.size() != sin_.size()) {
        cos_.resize(top);
        sin_.resize(top);
    }
}

TrigPoly TrigPoly::derivative() const {
    // d/dt [A cos(kt)] = -A k sin(kt),  d/dt [B sin(kt)] = B k cos(kt)
    TrigPoly d;
    for (int k = 1; k <= max_frequency(); ++k) {
        d.add_sin(k, -cos_coeff(k) * Rat(k));
        d.add_cos(k, sin_coeff(k) * Rat(k));
    }
    return d;
}

TrigPoly TrigPoly::operator-() const {
    return scaled(Rat(-1));
}

TrigPoly TrigPoly::scaled(const Rat& c) const {
    TrigPoly out;
    out.constant_ = constant_ * c;
    for (int k = 1; k <= max_frequency(); ++k) {
        out.add_cos(k, cos_coeff(k) * c);
        out.add_sin(k, sin_coeff(k) * c);
    }
    return out;
}

TrigPoly TrigPoly::operator+(const TrigPoly& rhs) const {
    TrigPoly out = *this;
    out.constant_ += rhs.constant_;
    for (int k = 1; k <= rhs.max_frequency(); ++k) {
        out.add_cos(k, rhs.cos_coeff(k));
        out.add_sin(k, rhs.sin_coeff(k));
    }
    out.trim();
    return out;
}

TrigPoly TrigPoly::operator-(const TrigPoly& rhs) const {
    return *this + (-rhs);
}

TrigPoly TrigPoly::operator*(const TrigPoly& rhs) const {
    // Product-to-sum identities:
    //   cos(i t) cos(j t) = (cos((i-j)t) + cos((i+j)t)) / 2
    //   sin(i t) sin(j t) = (cos((i-j)t) - cos((i+j)t)) / 2
    //   sin(i t) cos(j t) = (sin((i+j)t) + sin((i-j)t)) / 2
    TrigPoly out;
    out.constant_ = constant_ * rhs.constant_;
    for (int k = 1; k <= rhs.max_frequency(); ++k) {
        out.add_cos(k, constant_ * rhs.cos_coeff(k));
        out.add_sin(k, constant_ * rhs.sin_coeff(k));
    }
    for (int k = 1; k <= max_frequency(); ++k) {
        out.add_cos(k, rhs.constant_ * cos_coeff(k));
        out.add_sin(k, rhs.constant_ * sin_coeff(k));
    }
    const Rat half(BigInt(1), BigInt(2));
    for (int i = 1; i <= max_frequency(); ++i) {
        Rat ai = cos_coeff(i), bi = sin_coeff(i);
        if (ai == Rat(0) && bi == Rat(0)) continue;
        for (int j = 1; j <= rhs.max_frequency(); ++j) {
            Rat aj = rhs.cos_coeff(j), bj = rhs.sin_coeff(j);
            if (aj == Rat(0) && bj == Rat(0)) continue;
            if (ai != Rat(0) && aj != Rat(0)) {
                Rat c = ai * aj * half;
                out.add_cos(i - j, c);
                out.add_cos(i + j, c);
            }
            if (bi != Rat(0) && bj != Rat(0)) {
                Rat c = bi * bj * half;
                out.add_cos(i - j, c);
                out.add_cos(i + j, -c);
            }
            if (bi != Rat(0) && aj != Rat(0)) {
                Rat c = bi * aj * half;
                out.add_sin(i + j, c);
                out.add_sin(i - j, c);
            }
            if (ai != Rat(0) && bj != Rat(0)) {
                // cos(i t) sin(j t) = sin(j t) cos(i t)
                Rat c = ai * bj * half;
                out.add_sin(j + i, c);
                out.add_sin(j - i, c);
            }
        }
    }
    out.trim();
    return out;
}

bool TrigPoly::operator==(const TrigPoly& rhs) const {
    if (constant_ != rhs.constant_) return false;
    int top = std::max(max_frequency(), rhs.max_frequency());
    for (int k = 1; k <= top; ++k) {
        if (cos_coeff(k) != rhs.cos_coeff(k)) return false;
        if (sin_coeff(k) != rhs.sin_coeff(k)) return false;
    }
    return true;
}

double TrigPoly::eval(double t) const {
    return compiled(*this)(t);
}

Rat TrigPoly::eval_quarter(long long m) const {
    // At t = m*pi/2 the phase of frequency k is (k*m mod 4) quarter turns:
    //   cos: {1, 0, -1, 0}   sin: {0, 1, 0, -1}
    static const int kCosTable[4] = {1, 0, -1, 0};
    static const int kSinTable[4] = {0, 1, 0, -1};
    Rat value = constant_;
    long long phase_base = ((m % 4) + 4) % 4;
    for (int k = 1; k <= max_frequency(); ++k) {
        long long q = (static_cast<long long>(k) * phase_base) % 4;
        int c = kCosTable[q];
        int s = kSinTable[q];
        if (c != 0) value += cos_coeff(k) * Rat(c);
        if (s != 0) value += sin_coeff(k) * Rat(s);
    }
    return value;
}

Rat TrigPoly::sup_bound() const {
    Rat bound = rat_abs(constant_);
    for (int k = 1; k <= max_frequency(); ++k) {
        bound += rat_abs(cos_coeff(k));
        bound += rat_abs(sin_coeff(k));
    }
    return bound;
}

double TrigPolyEval::operator()(double t) const {
    double value = c0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
        double kt = static_cast<double>(k + 1) * t;
        if (cos_coeffs[k] != 0.0) value += cos_coeffs[k] * std::cos(kt);
        if (sin_coeffs[k] != 0.0) value += sin_coeffs[k] * std::sin(kt);
    }
    return value;
}

TrigPolyEval compiled(const TrigPoly& f) {
    TrigPolyEval e;
    e.c0 = to_double(f.constant_term());
    int top = f.max_frequency();
    e.cos_coeffs.resize(static_cast<std::size_t>(top));
    e.sin_coeffs.resize(static_cast<std::size_t>(top));
    for (int k = 1; k <= top; ++k) {
        e.cos_coeffs[static_cast<std::size_t>(k) - 1] = to_double(f.cos_coeff(k));
        e.sin_coeffs[static_cast<std::size_t>(k) - 1] = to_double(f.sin_coeff(k));
    }
    return e;
}

std::vector<double> sample_uniform(const TrigPoly& f, int n) {
    TrigPolyEval e = compiled(f);
    std::vector<double> values(static_cast<std::size_t>(n));
    const double step = 2.0 * M_PI / static_cast<double>(n);
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = e(step * i);
    return values;
}

} // namespace t3kit
