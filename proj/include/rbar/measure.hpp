#pragma once

#include "rbar/harmonic.hpp"
#include "rbar/quadrature.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rbar {

/// Strictly monotone continuous bijection (0,1) -> R with inverse.  The
/// pushforward of Lebesgue measure on (0,1) by this map is the R-leg of
/// mu_{rho,t}; improper integrals over R are always computed through the
/// substitution, never by truncating R.
class Parametrization {
public:
    /// rho(u) = tan(pi (u - 1/2)), with closed-form inverse and derivative.
    static Parametrization tan_map();

    /// Caller-supplied bijection; monotonicity and the inverse round-trip
    /// are spot-checked on sample grids and rejected when violated.
    static Parametrization custom(std::string label,
                                  std::function<double(double)> map,
                                  std::function<double(double)> inverse,
                                  std::function<double(double)> derivative = {});

    const std::string& label() const { return label_; }
    double operator()(double u) const { return map_(u); }
    double inverse(double x) const { return inv_(x); }
    bool has_derivative() const { return static_cast<bool>(deriv_); }
    double derivative(double u) const { return deriv_(u); }

private:
    Parametrization() = default;
    std::string label_;
    std::function<double(double)> map_, inv_, deriv_;
};

/// The measure mu_{rho,t} = t rho(lambda) (+) (1-t) mu_Bohr.
struct MeasureDescriptor {
    Parametrization rho;
    double t;  // in [0, 1]; deliberately no default
};

struct IntegralResult {
    Complex value{0.0, 0.0};
    double est_error = 0.0;
};

/// t * int_0^1 (f0 + f_AP)(rho(u)) du + (1-t) * bohr_integral(f_AP).
/// The Bohr leg is exact; endpoints t in {0,1} skip the unused leg entirely.
/// Throws QuadratureError (with the partial estimate) on non-convergence.
IntegralResult integrate(const QuantumFunction& qf, const MeasureDescriptor& mu,
                         const QuadratureConfig& quad);

/// t * int_0^1 (qf1 conj(qf2))(rho(u)) du + (1-t) * <ap1, ap2>_Bohr.
IntegralResult inner_product(const QuantumFunction& qf1, const QuantumFunction& qf2,
                             const MeasureDescriptor& mu, const QuadratureConfig& quad);

/// Image of a function under isometry transport: the two legs scale by
/// different factors, so it is no longer a QuantumFunction.
struct TransportedFunction {
    std::function<Complex(double)> real_leg;
    APPolynomial bohr_ap;
};

/// The canonical isometry L^2(mu_{rho1,t1}) -> L^2(mu_{rho2,t2}):
///   psi |-> sqrt(t1/t2) (chi_R psi)(rho1 . rho2^{-1}) + sqrt((1-t1)/(1-t2)) chi_Bohr psi.
/// Both weights interior, or both at the same endpoint (t=1 keeps only the
/// reparametrized R-leg, t=0 is the identity); mixed endpoints throw
/// EndpointMismatchError.
TransportedFunction isometry_transport(const QuantumFunction& psi,
                                       const MeasureDescriptor& from,
                                       const MeasureDescriptor& to);

IntegralResult norm_squared(const QuantumFunction& qf, const MeasureDescriptor& mu,
                            const QuadratureConfig& quad);
IntegralResult norm_squared(const TransportedFunction& tf, const MeasureDescriptor& mu,
                            const QuadratureConfig& quad);

/// Candidate Borel measure: real_weight * rho(lambda) on the R-leg and
/// normalized Haar on the Bohr leg.  real_weight == 0 encodes 0_R (+) mu_Bohr.
struct CandidateMeasure {
    double real_weight = 0.0;
    std::optional<Parametrization> rho;
};

struct JonsConditionResult {
    bool holds = false;
    double worst_value = 0.0;
    int worst_left = -1, worst_right = -1;  // family indices of the worst pair
};

struct JonsReport {
    JonsConditionResult condition_i;   // <f0_hat, fAP_hat> = 0
    JonsConditionResult condition_ii;  // <fAP_hat, gAP_hat> = Bohr inner product
    double tolerance = 0.0;
    bool exact = false;                // true when no quadrature was needed
    bool quadrature_clean = true;      // false if any integral failed to converge
};

/// Audits the two inner-product conditions that single out 0_R (+) mu_Bohr.
/// The family must contain the constant AP function 1 and a member whose C0
/// part is strictly positive (spot-checked on a grid).
JonsReport jons_conditions_check(const CandidateMeasure& candidate,
                                 const std::vector<QuantumFunction>& family,
                                 const QuadratureConfig& quad, double tolerance = 1e-10);

}  // namespace rbar
