#include "rbar/harmonic.hpp"

#include "rbar/errors.hpp"

#include <cmath>
#include <numbers>

namespace rbar {

void APPolynomial::add_term(const Frequency& freq, Complex coeff) {
    if (!terms_.empty())
        require_same_context(terms_.begin()->first.context(), freq.context());
    auto it = terms_.find(freq);
    if (it == terms_.end()) {
        if (coeff != Complex(0.0, 0.0)) terms_.emplace(freq, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
}

Complex APPolynomial::eval(double x) const {
    Complex acc(0.0, 0.0);
    for (const auto& [l, c] : terms_) acc += c * char_eval(l, x);
    return acc;
}

APPolynomial APPolynomial::conjugated() const {
    APPolynomial out;
    for (const auto& [l, c] : terms_) out.add_term(-l, std::conj(c));
    return out;
}

APPolynomial APPolynomial::scaled(Complex s) const {
    APPolynomial out;
    for (const auto& [l, c] : terms_) out.add_term(l, s * c);
    return out;
}

APPolynomial APPolynomial::operator+(const APPolynomial& o) const {
    APPolynomial out = *this;
    for (const auto& [l, c] : o.terms_) out.add_term(l, c);
    return out;
}

APPolynomial APPolynomial::operator*(const APPolynomial& o) const {
    APPolynomial out;
    for (const auto& [l, c] : terms_)
        for (const auto& [m, d] : o.terms_) out.add_term(l + m, c * d);
    return out;
}

Complex ap_eval(const APPolynomial& p, double x) { return p.eval(x); }

Complex bohr_integral(const APPolynomial& p) {
    for (const auto& [l, c] : p.terms())
        if (l.is_zero()) return c;
    return Complex(0.0, 0.0);
}

Complex bohr_inner_product(const APPolynomial& p, const APPolynomial& q) {
    if (!p.terms().empty() && !q.terms().empty())
        require_same_context(p.terms().begin()->first.context(),
                             q.terms().begin()->first.context());
    Complex acc(0.0, 0.0);
    auto itp = p.terms().begin();
    auto itq = q.terms().begin();
    FrequencyLess less;
    while (itp != p.terms().end() && itq != q.terms().end()) {
        if (less(itp->first, itq->first)) {
            ++itp;
        } else if (less(itq->first, itp->first)) {
            ++itq;
        } else {
            acc += itp->second * std::conj(itq->second);
            ++itp;
            ++itq;
        }
    }
    return acc;
}

C0Function C0Function::zero() { return C0Function{}; }

double normalize_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi - 1e-15) r = 0.0;
    return r;
}

BohrCylPoint::BohrCylPoint(FrequencyTuple level_, std::vector<double> angles_)
    : level(std::move(level_)), angles(std::move(angles_)) {
    if (angles.size() != level.size())
        throw Error("angle count does not match level tuple length");
    for (auto& a : angles) a = normalize_angle(a);
}

Complex rbar_eval(const RBarPoint& point, const QuantumFunction& qf) {
    if (point.is_real()) return qf.eval_real(point.real_value());

    const BohrCylPoint& p = point.bohr_point();
    Complex acc(0.0, 0.0);
    for (const auto& [l, c] : qf.ap.terms()) {
        auto n = integer_coordinates(l, p.level);
        if (!n)
            throw FrequencyNotInLevelError(
                "AP frequency outside span_Z of the point's level; refine via join");
        double theta = 0.0;
        for (std::size_t i = 0; i < n->size(); ++i) theta += to_double((*n)[i]) * p.angles[i];
        acc += c * std::polar(1.0, theta);
    }
    return acc;
}

std::pair<QuantumFunction, QuantumFunction>
circular_entry_decomposition(double tau, double r, const Frequency& omega) {
    if (std::abs(omega.numeric_value() - r * tau) > 1e-12)
        throw Error("omega frequency does not encode r*tau");

    auto beta = [r](double c) { return std::sqrt(c * c * r * r + 0.25); };

    QuantumFunction a;
    a.c0.eval = [tau, r, beta](double c) {
        double b = beta(c);
        return Complex(std::cos(b * tau) - std::cos(c * r * tau),
                       std::sin(b * tau) / (2.0 * b));
    };
    a.c0.decay_hint = 1.0;
    // cos(c r tau) = (chi_omega + chi_{-omega}) / 2
    a.ap.add_term(omega, Complex(0.5, 0.0));
    a.ap.add_term(-omega, Complex(0.5, 0.0));

    QuantumFunction b;
    b.c0.eval = [tau, r, beta](double c) {
        double bc = beta(c);
        return Complex((c * r / bc) * std::sin(bc * tau) - std::sin(c * r * tau), 0.0);
    };
    b.c0.decay_hint = 1.0;
    // sin(c r tau) = (chi_omega - chi_{-omega}) / (2i)
    b.ap.add_term(omega, Complex(0.0, -0.5));
    b.ap.add_term(-omega, Complex(0.0, 0.5));

    return {std::move(a), std::move(b)};
}

}  // namespace rbar
