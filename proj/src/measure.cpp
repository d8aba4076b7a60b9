#include "rbar/measure.hpp"

#include "rbar/errors.hpp"

#include <cmath>
#include <numbers>

namespace rbar {

namespace {

constexpr double kPi = std::numbers::pi;

void require_t(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw Error("measure weight t must lie in [0, 1]");
}

IntegralEstimate real_leg(const std::function<Complex(double)>& integrand,
                          const QuadratureConfig& quad) {
    IntegralEstimate est = adaptive_integrate(integrand, 0.0, 1.0, quad);
    if (!est.converged)
        throw QuadratureError("quadrature on (0,1) did not converge within the subdivision budget",
                              est.value, est.est_error);
    return est;
}

}  // namespace

Parametrization Parametrization::tan_map() {
    Parametrization p;
    p.label_ = "tan_map";
    p.map_ = [](double u) { return std::tan(kPi * (u - 0.5)); };
    p.inv_ = [](double x) { return 0.5 + std::atan(x) / kPi; };
    p.deriv_ = [](double u) {
        double t = std::tan(kPi * (u - 0.5));
        return kPi * (1.0 + t * t);
    };
    return p;
}

Parametrization Parametrization::custom(std::string label,
                                        std::function<double(double)> map,
                                        std::function<double(double)> inverse,
                                        std::function<double(double)> derivative) {
    if (!map || !inverse) throw Error("custom parametrization requires map and inverse");
    // Spot checks: strict monotonicity on a u-grid, inverse round-trip.
    double prev = map(1e-3);
    for (int k = 1; k <= 200; ++k) {
        double u = 1e-3 + k * (1.0 - 2e-3) / 200.0;
        double v = map(u);
        if (!(v > prev)) throw Error("custom parametrization is not strictly increasing");
        prev = v;
    }
    for (double x : {-75.0, -10.0, -1.0, -0.1, 0.0, 0.1, 1.0, 10.0, 75.0}) {
        double u = inverse(x);
        if (!(u > 0.0 && u < 1.0)) throw Error("custom inverse leaves (0,1)");
        if (std::abs(map(u) - x) > 1e-10 * std::max(1.0, std::abs(x)))
            throw Error("custom parametrization fails the inverse round-trip check");
    }
    Parametrization p;
    p.label_ = std::move(label);
    p.map_ = std::move(map);
    p.inv_ = std::move(inverse);
    p.deriv_ = std::move(derivative);
    return p;
}

IntegralResult integrate(const QuantumFunction& qf, const MeasureDescriptor& mu,
                         const QuadratureConfig& quad) {
    require_t(mu.t);
    IntegralResult out;
    if (mu.t > 0.0) {
        const Parametrization& rho = mu.rho;
        IntegralEstimate est = real_leg(
            [&](double u) { return qf.eval_real(rho(u)); }, quad);
        out.value += mu.t * est.value;
        out.est_error += mu.t * est.est_error;
    }
    if (mu.t < 1.0) out.value += (1.0 - mu.t) * bohr_integral(qf.ap);
    return out;
}

IntegralResult inner_product(const QuantumFunction& qf1, const QuantumFunction& qf2,
                             const MeasureDescriptor& mu, const QuadratureConfig& quad) {
    require_t(mu.t);
    IntegralResult out;
    if (mu.t > 0.0) {
        const Parametrization& rho = mu.rho;
        IntegralEstimate est = real_leg(
            [&](double u) {
                double x = rho(u);
                return qf1.eval_real(x) * std::conj(qf2.eval_real(x));
            },
            quad);
        out.value += mu.t * est.value;
        out.est_error += mu.t * est.est_error;
    }
    if (mu.t < 1.0) out.value += (1.0 - mu.t) * bohr_inner_product(qf1.ap, qf2.ap);
    return out;
}

TransportedFunction isometry_transport(const QuantumFunction& psi,
                                       const MeasureDescriptor& from,
                                       const MeasureDescriptor& to) {
    require_t(from.t);
    require_t(to.t);
    const bool from_interior = from.t > 0.0 && from.t < 1.0;
    const bool to_interior = to.t > 0.0 && to.t < 1.0;

    TransportedFunction out;
    if (from_interior && to_interior) {
        double real_scale = std::sqrt(from.t / to.t);
        double bohr_scale = std::sqrt((1.0 - from.t) / (1.0 - to.t));
        Parametrization rho1 = from.rho, rho2 = to.rho;
        out.real_leg = [psi, rho1, rho2, real_scale](double x) {
            return real_scale * psi.eval_real(rho1(rho2.inverse(x)));
        };
        out.bohr_ap = psi.ap.scaled(bohr_scale);
        return out;
    }
    if (from.t == 1.0 && to.t == 1.0) {
        Parametrization rho1 = from.rho, rho2 = to.rho;
        out.real_leg = [psi, rho1, rho2](double x) {
            return psi.eval_real(rho1(rho2.inverse(x)));
        };
        return out;  // Bohr leg is null for both measures
    }
    if (from.t == 0.0 && to.t == 0.0) {
        out.real_leg = [psi](double x) { return psi.eval_real(x); };
        out.bohr_ap = psi.ap;
        return out;
    }
    throw EndpointMismatchError("isometry transport requires matching endpoint weights");
}

IntegralResult norm_squared(const QuantumFunction& qf, const MeasureDescriptor& mu,
                            const QuadratureConfig& quad) {
    IntegralResult ip = inner_product(qf, qf, mu, quad);
    ip.value = Complex(ip.value.real(), 0.0);
    return ip;
}

IntegralResult norm_squared(const TransportedFunction& tf, const MeasureDescriptor& mu,
                            const QuadratureConfig& quad) {
    require_t(mu.t);
    IntegralResult out;
    if (mu.t > 0.0) {
        const Parametrization& rho = mu.rho;
        IntegralEstimate est = real_leg(
            [&](double u) { return Complex(std::norm(tf.real_leg(rho(u))), 0.0); }, quad);
        out.value += mu.t * est.value;
        out.est_error += mu.t * est.est_error;
    }
    if (mu.t < 1.0)
        out.value += (1.0 - mu.t) * bohr_inner_product(tf.bohr_ap, tf.bohr_ap);
    return out;
}

JonsReport jons_conditions_check(const CandidateMeasure& candidate,
                                 const std::vector<QuantumFunction>& family,
                                 const QuadratureConfig& quad, double tolerance) {
    if (candidate.real_weight < 0.0) throw Error("candidate real weight must be nonnegative");
    if (candidate.real_weight > 0.0 && !candidate.rho)
        throw Error("nonzero real weight requires a parametrization");

    // Precondition probes: the constant AP function 1 and a strictly
    // positive C0 member (positivity spot-checked on a grid).
    bool has_one = false, has_positive_c0 = false;
    for (const auto& f : family) {
        if (f.ap.size() == 1 && f.ap.terms().begin()->first.is_zero() &&
            f.ap.terms().begin()->second == Complex(1.0, 0.0))
            has_one = true;
        if (!f.c0.is_zero()) {
            bool positive = true;
            for (int k = -40; k <= 40; ++k) {
                Complex v = f.c0(k * 0.5);
                if (!(v.real() > 0.0) || std::abs(v.imag()) > 1e-14) positive = false;
            }
            if (positive) has_positive_c0 = true;
        }
    }
    if (!has_one || !has_positive_c0)
        throw Error("jons check requires the constant 1 and a strictly positive C0 probe");

    JonsReport rep;
    rep.tolerance = tolerance;
    rep.exact = candidate.real_weight == 0.0;

    if (rep.exact) {
        // 0_R (+) mu_Bohr: both deviations vanish identically.
        rep.condition_i = {true, 0.0, -1, -1};
        rep.condition_ii = {true, 0.0, -1, -1};
        return rep;
    }

    const double w = candidate.real_weight;
    const Parametrization& rho = *candidate.rho;

    auto deviation = [&](const std::function<Complex(double)>& f) {
        try {
            IntegralEstimate est = real_leg([&](double u) { return f(rho(u)); }, quad);
            return w * std::abs(est.value);
        } catch (const QuadratureError& e) {
            rep.quadrature_clean = false;
            return w * std::abs(e.partial_value);
        }
    };

    // Condition (i): the C0 part of one member against the AP part of another.
    JonsConditionResult ci{true, 0.0, -1, -1};
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].c0.is_zero()) continue;
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (family[j].ap.empty()) continue;
            double v = deviation([&](double x) {
                return family[i].c0(x) * std::conj(family[j].ap.eval(x));
            });
            if (v > ci.worst_value) ci = {ci.holds, v, int(i), int(j)};
        }
    }
    ci.holds = ci.worst_value <= tolerance;
    rep.condition_i = ci;

    // Condition (ii): deviation of the candidate AP inner products from the
    // Bohr ones, which is exactly the R-leg contribution.
    JonsConditionResult cii{true, 0.0, -1, -1};
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].ap.empty()) continue;
        for (std::size_t j = i; j < family.size(); ++j) {
            if (family[j].ap.empty()) continue;
            double v = deviation([&](double x) {
                return family[i].ap.eval(x) * std::conj(family[j].ap.eval(x));
            });
            if (v > cii.worst_value) cii = {cii.holds, v, int(i), int(j)};
        }
    }
    cii.holds = cii.worst_value <= tolerance;
    rep.condition_ii = cii;
    return rep;
}

}  // namespace rbar
