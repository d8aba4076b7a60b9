#pragma once

#include <complex>
#include <functional>

namespace rbar {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_subdivisions = 1 << 16;
};

struct IntegralEstimate {
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

/// Adaptive Gauss-Legendre on (a, b): greedy bisection of the interval with
/// the largest embedded GL7/GL15 error estimate.  Nodes are interior, so
/// integrands may blow up in the open-endpoint sense as long as they stay
/// finite at the nodes.  Never throws on non-convergence; inspect
/// `converged`.
IntegralEstimate adaptive_integrate(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, const QuadratureConfig& cfg);

/// Kahan-compensated accumulator for long floating sums.
class CompensatedSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0, c_ = 0.0;
};

}  // namespace rbar
