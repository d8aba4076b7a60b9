#pragma once

#include "rbar/frequency.hpp"

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace rbar {

using Complex = std::complex<double>;

/// Finite trigonometric polynomial sum_l c_l chi_l.  Coefficients that
/// become exactly zero are dropped.
class APPolynomial {
public:
    APPolynomial() = default;

    void add_term(const Frequency& freq, Complex coeff);
    const std::map<Frequency, Complex, FrequencyLess>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Complex eval(double x) const;

    APPolynomial conjugated() const;
    APPolynomial scaled(Complex s) const;
    APPolynomial operator+(const APPolynomial& o) const;
    APPolynomial operator*(const APPolynomial& o) const;

private:
    std::map<Frequency, Complex, FrequencyLess> terms_;
};

/// sum_l c_l chi_l(x)
Complex ap_eval(const APPolynomial& p, double x);

/// Integral against Haar on the Bohr compactification: the coefficient of
/// the trivial character (all other characters integrate to zero).  Exact.
Complex bohr_integral(const APPolynomial& p);

/// <p, q> in L^2(R_Bohr, mu_Bohr) = sum_l c_l * conj(d_l).  Exact; equals
/// bohr_integral(p * conj(q)).
Complex bohr_inner_product(const APPolynomial& p, const APPolynomial& q);

/// Black-box continuous function vanishing at infinity.  The decay contract
/// is the caller's; the optional hint feeds quadrature diagnostics only.
struct C0Function {
    std::function<Complex(double)> eval;
    std::optional<double> decay_hint;

    static C0Function zero();
    bool is_zero() const { return !eval; }
    Complex operator()(double x) const { return eval ? eval(x) : Complex(0.0, 0.0); }
};

/// An element f0 + f_AP of C0(R) (+) CAP.
struct QuantumFunction {
    C0Function c0;
    APPolynomial ap;

    Complex eval_real(double x) const { return c0(x) + ap.eval(x); }
};

/// Normalizes into [0, 2pi); values within 1e-15 of 2pi wrap to 0.
double normalize_angle(double a);

/// Cylindrical point of the Bohr leg: a character of span_Z(level), stored
/// as one angle per tuple entry.  Total homomorphisms on R_discrete are
/// never materialized; refinement happens through join on demand.
struct BohrCylPoint {
    BohrCylPoint(FrequencyTuple level_, std::vector<double> angles_);
    FrequencyTuple level;
    std::vector<double> angles;
};

class RBarPoint {
public:
    static RBarPoint real(double x) { return RBarPoint(x); }
    static RBarPoint bohr(FrequencyTuple level, std::vector<double> angles) {
        return RBarPoint(BohrCylPoint(std::move(level), std::move(angles)));
    }

    bool is_real() const { return std::holds_alternative<double>(v_); }
    double real_value() const { return std::get<double>(v_); }
    const BohrCylPoint& bohr_point() const { return std::get<BohrCylPoint>(v_); }

private:
    explicit RBarPoint(double x) : v_(x) {}
    explicit RBarPoint(BohrCylPoint p) : v_(std::move(p)) {}
    std::variant<double, BohrCylPoint> v_;
};

/// Gelfand evaluation at a point of R (+) R_Bohr.  On the Bohr leg the C0
/// part contributes nothing and every AP frequency must lie in the level's
/// integer span, else FrequencyNotInLevelError.
Complex rbar_eval(const RBarPoint& point, const QuantumFunction& qf);

/// The (1,1) and (1,2) holonomy entries of the reduced circular curve as
/// C0 (+) CAP splits:
///   a(c) = [cos(b_c tau) + i sin(b_c tau)/(2 b_c) - cos(c r tau)] + cos(c r tau)
///   b(c) = [(c r / b_c) sin(b_c tau) - sin(c r tau)] + sin(c r tau)
/// with b_c = sqrt(c^2 r^2 + 1/4).  omega must encode the real number r*tau.
std::pair<QuantumFunction, QuantumFunction>
circular_entry_decomposition(double tau, double r, const Frequency& omega);

}  // namespace rbar
