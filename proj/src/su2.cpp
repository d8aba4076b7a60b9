#include "rbar/su2.hpp"

#include "rbar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rbar {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
    double n = norm();
    if (n == 0.0) throw Error("cannot normalize the zero vector");
    return {x / n, y / n, z / n};
}

Mat2 Mat2::identity() {
    Mat2 e;
    e(0, 0) = e(1, 1) = Complex(1.0, 0.0);
    return e;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 out;
    out(0, 0) = (*this)(0, 0) * o(0, 0) + (*this)(0, 1) * o(1, 0);
    out(0, 1) = (*this)(0, 0) * o(0, 1) + (*this)(0, 1) * o(1, 1);
    out(1, 0) = (*this)(1, 0) * o(0, 0) + (*this)(1, 1) * o(1, 0);
    out(1, 1) = (*this)(1, 0) * o(0, 1) + (*this)(1, 1) * o(1, 1);
    return out;
}

Mat2 Mat2::operator-(const Mat2& o) const {
    Mat2 out;
    for (int i = 0; i < 4; ++i) out.m[i] = m[i] - o.m[i];
    return out;
}

Mat2 Mat2::operator+(const Mat2& o) const {
    Mat2 out;
    for (int i = 0; i < 4; ++i) out.m[i] = m[i] + o.m[i];
    return out;
}

Mat2 Mat2::scaled(Complex s) const {
    Mat2 out;
    for (int i = 0; i < 4; ++i) out.m[i] = s * m[i];
    return out;
}

Mat2 Mat2::adjoint() const {
    Mat2 out;
    out(0, 0) = std::conj((*this)(0, 0));
    out(0, 1) = std::conj((*this)(1, 0));
    out(1, 0) = std::conj((*this)(0, 1));
    out(1, 1) = std::conj((*this)(1, 1));
    return out;
}

Complex Mat2::det() const { return m[0] * m[3] - m[1] * m[2]; }

Complex Mat2::trace() const { return m[0] + m[3]; }

double Mat2::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : m) s += std::norm(e);
    return std::sqrt(s);
}

double Mat2::op_norm() const {
    // Largest singular value via the eigenvalues of A* A.
    Mat2 g = adjoint() * (*this);
    double t = g.trace().real();
    double d = std::abs(det());  // |det A|, so det(A*A) = d^2
    double disc = std::max(0.0, t * t - 4.0 * d * d);
    return std::sqrt(std::max(0.0, (t + std::sqrt(disc)) / 2.0));
}

Vec3 apply_mat3(const Mat3& m, const Vec3& v) {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Su2Element Su2Element::raw(double w, double x, double y, double z) {
    Su2Element s;
    s.w_ = w;
    s.x_ = x;
    s.y_ = y;
    s.z_ = z;
    return s;
}

Su2Element Su2Element::from_components(double w, double x, double y, double z) {
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (!(n > 1e-14)) throw Error("near-zero quaternion cannot be normalized to SU(2)");
    return raw(w / n, x / n, y / n, z / n);
}

Su2Element Su2Element::operator*(const Su2Element& o) const {
    double w = w_ * o.w_ - x_ * o.x_ - y_ * o.y_ - z_ * o.z_;
    double x = w_ * o.x_ + o.w_ * x_ + y_ * o.z_ - z_ * o.y_;
    double y = w_ * o.y_ + o.w_ * y_ + z_ * o.x_ - x_ * o.z_;
    double z = w_ * o.z_ + o.w_ * z_ + x_ * o.y_ - y_ * o.x_;
    return from_components(w, x, y, z);
}

Mat2 Su2Element::matrix() const {
    Mat2 m;
    m(0, 0) = Complex(w_, -z_);
    m(0, 1) = Complex(-y_, -x_);
    m(1, 0) = Complex(y_, -x_);
    m(1, 1) = Complex(w_, z_);
    return m;
}

double Su2Element::distance(const Su2Element& o) const {
    double dw = w_ - o.w_, dx = x_ - o.x_, dy = y_ - o.y_, dz = z_ - o.z_;
    return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

Vec3 Su2Element::rotate(const Vec3& v) const {
    // s (0, v) s^{-1} expanded.
    Vec3 u{x_, y_, z_};
    Vec3 t = u.cross(v) * 2.0;
    return v + t * w_ + u.cross(t);
}

Su2Element su2_exp(double t, const Vec3& n) {
    if (std::abs(n.norm() - 1.0) > 1e-10)
        throw Error("su2_exp direction must be a unit vector");
    double c = std::cos(t), s = std::sin(t);
    return Su2Element::from_components(c, s * n.x, s * n.y, s * n.z);
}

Mat3 covering(const Su2Element& s) {
    Mat3 r;
    const Vec3 cols[3] = {s.rotate({1, 0, 0}), s.rotate({0, 1, 0}), s.rotate({0, 0, 1})};
    for (int i = 0; i < 3; ++i) {
        r[0 + i] = cols[i].x;
        r[3 + i] = cols[i].y;
        r[6 + i] = cols[i].z;
    }
    return r;
}

Su2Element holonomy_linear(double c, double l, const Vec3& v) {
    if (std::abs(v.norm() - 1.0) > 1e-10)
        throw Error("holonomy_linear direction must be a unit vector");
    return su2_exp(-c * l, v);
}

double circular_beta(double c, double r) { return std::sqrt(c * c * r * r + 0.25); }

std::pair<Complex, double> circular_matrix_entries(double tau, double r, double c) {
    double b = circular_beta(c, r);
    double sb = std::sin(b * tau), cb = std::cos(b * tau);
    return {Complex(cb, sb / (2.0 * b)), (c * r / b) * sb};
}

Su2Element circular_transport_matrix(double tau, double r, double c) {
    auto [a, b] = circular_matrix_entries(tau, r, c);
    // [[a, b], [-b, conj(a)]] corresponds to (w, x, y, z) = (Re a, 0, -b, -Im a).
    return Su2Element::from_components(a.real(), 0.0, -b, -a.imag());
}

Su2Element circular_transport_exponential(double tau, double r, double c) {
    double len = std::sqrt(4.0 * r * r * c * c + 1.0);  // |2rc e2 + e3| = 2 beta
    Vec3 axis = Vec3{0.0, 2.0 * r * c, 1.0} * (1.0 / len);
    return su2_exp(-tau * len / 2.0, axis);
}

CircularCurveParams CircularCurveParams::reduced(double tau, double r) {
    return {tau, r, Vec3{0, 0, 1}, Su2Element::identity()};
}

CircularCurveParams CircularCurveParams::with_axis(double tau, double r, const Vec3& n) {
    Vec3 axis = n.normalized();
    Su2Element sigma;
    if (axis.z > 1.0 - 1e-12) {
        sigma = Su2Element::identity();
    } else if (axis.z < -1.0 + 1e-12) {
        sigma = su2_exp(kPi / 2.0, {1, 0, 0});
    } else {
        Vec3 rot = Vec3{0, 0, 1}.cross(axis).normalized();
        double half = std::acos(std::clamp(axis.z, -1.0, 1.0)) / 2.0;
        sigma = su2_exp(half, rot);
    }
    CircularCurveParams p{tau, r, axis, sigma};
    Vec3 check = sigma.rotate({0, 0, 1});
    if ((check - axis).norm() > 1e-10) throw Error("sigma construction failed to reach axis");
    return p;
}

Su2Element holonomy_circular(double c, const CircularCurveParams& p) {
    Su2Element d = su2_exp(p.tau / 2.0, p.n);
    Su2Element a = circular_transport_matrix(p.tau, p.r, c);
    return d * p.sigma * a * p.sigma.inverse();
}

Su2Element holonomy_circular_from_character(Complex chi_rtau, const CircularCurveParams& p) {
    // On the Bohr leg the C0 parts vanish: a -> cos, b -> sin of the angle.
    Su2Element a = Su2Element::from_components(chi_rtau.real(), 0.0, -chi_rtau.imag(), 0.0);
    Su2Element d = su2_exp(p.tau / 2.0, p.n);
    return d * p.sigma * a * p.sigma.inverse();
}

double self_intersection_point(int n_index, double tau, double r) {
    if (n_index == 0) throw Error("self-intersection index must be nonzero");
    double n = static_cast<double>(std::abs(n_index));
    double v = std::sqrt(n * n * kPi * kPi / (tau * tau) - 0.25) / r;
    return n_index > 0 ? v : -v;
}

double invariance_residual(double c, double l, const Vec3& v, const Su2Element& sigma) {
    Vec3 rv = sigma.rotate(v);
    Mat2 lhs = holonomy_linear(c, l, rv).matrix();
    Mat2 rhs = sigma.matrix() * holonomy_linear(c, l, v).matrix() * sigma.inverse().matrix();
    return (lhs - rhs).frobenius_norm();
}

double torus_e2_distance(const Su2Element& s) {
    double planar = s.x() * s.x() + s.z() * s.z();
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(std::max(0.0, 1.0 - planar))));
}

CircleLemmaReport circle_lemma_report(double tau, double r, const CircleLemmaGrid& grid,
                                      double epsilon) {
    if (!(tau > 0.0) || !(tau < kTwoPi)) throw Error("tau must lie in (0, 2pi)");
    if (!(r > 0.0)) throw Error("r must be positive");
    if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
    if (grid.c_count < 2 || !(grid.c_span > 0.0) || grid.band_samples < 2 ||
        grid.alternation_max < 1 || grid.merge_max < 1 || grid.spacing_max < 2)
        throw Error("degenerate circle-lemma grid");

    CircleLemmaReport rep;
    rep.tau = tau;
    rep.r = r;
    rep.epsilon = epsilon;

    const CircularCurveParams params = CircularCurveParams::reduced(tau, r);
    const Su2Element d = su2_exp(tau / 2.0, {0, 0, 1});
    auto a_point = [&](int n) { return self_intersection_point(n, tau, r); };

    std::vector<double> cs;
    cs.reserve(static_cast<std::size_t>(grid.c_count) + 2 * grid.alternation_max);
    for (int i = 0; i < grid.c_count; ++i)
        cs.push_back(-grid.c_span + 2.0 * grid.c_span * i / (grid.c_count - 1));
    std::vector<double> appended;
    for (int n = 1; n <= grid.alternation_max; ++n) {
        appended.push_back(a_point(n));
        appended.push_back(a_point(-n));
    }
    cs.insert(cs.end(), appended.begin(), appended.end());

    // (i) non-commutativity witness
    {
        double best = 0.0;
        for (int i = 0; i < grid.c_count; i += std::max(1, grid.c_count / 40)) {
            for (int j = i + 1; j < grid.c_count; j += std::max(1, grid.c_count / 40)) {
                Mat2 h1 = holonomy_circular(cs[i], params).matrix();
                Mat2 h2 = holonomy_circular(cs[j], params).matrix();
                double norm = (h1 * h2 - h2 * h1).frobenius_norm();
                if (norm > best) {
                    best = norm;
                    rep.witness_c1 = cs[i];
                    rep.witness_c2 = cs[j];
                }
            }
        }
        rep.commutator_norm = best;
        rep.noncommutative_pass = best > 1e-6;
    }

    // (ii) intersection with the coset d * T_{e2} happens only where
    // sin(beta_c tau) vanishes, i.e. at the points a_n.
    {
        bool ok = true;
        for (double c : cs) {
            Su2Element a = circular_transport_matrix(tau, r, c);
            bool in_coset = torus_e2_distance(a) <= 1e-10;
            bool sin_zero = std::abs(std::sin(circular_beta(c, r) * tau)) <= 1e-10;
            if (in_coset && !sin_zero) ok = false;
            if (in_coset) rep.intersection_points.push_back(c);
        }
        for (double c : appended) {
            Su2Element a = circular_transport_matrix(tau, r, c);
            if (torus_e2_distance(a) > 1e-10) ok = false;
        }
        rep.intersection_pass = ok;
        std::sort(rep.intersection_points.begin(), rep.intersection_points.end());
    }

    // (iii) alternation at the self-intersection points
    {
        double worst = 0.0;
        for (int n = 1; n <= grid.alternation_max; ++n) {
            for (int sgn : {1, -1}) {
                Su2Element h = holonomy_circular(a_point(sgn * n), params);
                Su2Element expected = (n % 2 == 0) ? d : -d;
                worst = std::max(worst, (h.matrix() - expected.matrix()).op_norm());
            }
        }
        rep.alternation_worst = worst;
        rep.alternation_pass = worst <= 1e-9;
    }

    // (iv) injectivity sampling on the bands A_n
    {
        double min_dist = 1e300;
        for (int n = -2; n <= 2; ++n) {
            double lo, hi;
            if (n == 0) {
                lo = a_point(-1);
                hi = a_point(1);
            } else if (n > 0) {
                lo = a_point(n);
                hi = a_point(n + 1);
            } else {
                lo = a_point(n - 1);
                hi = a_point(n);
            }
            std::vector<Su2Element> images;
            for (int k = 1; k <= grid.band_samples; ++k) {
                double c = lo + (hi - lo) * k / (grid.band_samples + 1.0);
                images.push_back(holonomy_circular(c, params));
            }
            for (std::size_t i = 0; i < images.size(); ++i)
                for (std::size_t j = i + 1; j < images.size(); ++j)
                    min_dist = std::min(min_dist, images[i].distance(images[j]));
        }
        rep.injectivity_min_distance = min_dist;
        rep.injectivity_pass = min_dist > 1e-12;
    }

    // (v) merging of the bands B_n toward T_{e2}
    {
        rep.band_sup_distance.resize(grid.merge_max);
        for (int n = 1; n <= grid.merge_max; ++n) {
            double lo = a_point(2 * n), hi = a_point(2 * (n + 1));
            double sup = 0.0;
            for (int k = 0; k <= grid.band_samples; ++k) {
                double c = lo + (hi - lo) * k / grid.band_samples;
                sup = std::max(sup, torus_e2_distance(circular_transport_matrix(tau, r, c)));
            }
            rep.band_sup_distance[n - 1] = sup;
        }
        int n_eps = -1;
        for (int n = grid.merge_max; n >= 1; --n) {
            if (rep.band_sup_distance[n - 1] <= epsilon)
                n_eps = n;
            else
                break;
        }
        rep.n_epsilon = n_eps;
        rep.merging_pass = n_eps > 0;
    }

    // (vi) spacing of the even self-intersections: l a_{2(n+1)} - l a_{2n}
    // approaches 2pi without reaching it.
    {
        const double l = tau * r;
        std::vector<double> dev(grid.spacing_max);
        for (int n = 1; n <= grid.spacing_max; ++n)
            dev[n - 1] = l * (a_point(2 * (n + 1)) - a_point(2 * n)) - kTwoPi;
        int n0 = -1;
        for (int n = grid.spacing_max; n >= 1; --n) {
            double a = std::abs(dev[n - 1]);
            if (a > 0.0 && a < epsilon)
                n0 = n;
            else
                break;
        }
        rep.spacing_n0 = n0;
        rep.spacing_pass = n0 > 0;
        rep.spacing_worst_deviation = n0 > 0 ? std::abs(dev[n0 - 1]) : 0.0;
    }

    return rep;
}

}  // namespace rbar
