#pragma once

#include <array>
#include <complex>
#include <vector>

namespace rbar {

using Complex = std::complex<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
    Vec3 normalized() const;
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

/// 2x2 complex matrix, row major.
struct Mat2 {
    std::array<Complex, 4> m{};

    static Mat2 identity();
    Complex& operator()(int r, int c) { return m[2 * r + c]; }
    const Complex& operator()(int r, int c) const { return m[2 * r + c]; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Mat2 scaled(Complex s) const;
    Mat2 adjoint() const;
    Complex det() const;
    Complex trace() const;
    double frobenius_norm() const;
    double op_norm() const;  // largest singular value
};

using Mat3 = std::array<double, 9>;  // row major

Vec3 apply_mat3(const Mat3& m, const Vec3& v);

/// Unit quaternion (w, x, y, z); the matrix view is w*1 + x*t1 + y*t2 + z*t3
/// with the anti-Hermitian basis
///   t1 = [[0,-i],[-i,0]]   t2 = [[0,-1],[1,0]]   t3 = [[-i,0],[0,i]].
/// Products renormalize once per multiply, keeping compounded chains on the
/// group to within the documented drift budget.
class Su2Element {
public:
    Su2Element() : w_(1.0) {}
    static Su2Element identity() { return Su2Element(); }
    static Su2Element from_components(double w, double x, double y, double z);

    double w() const { return w_; }
    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }
    Vec3 vector_part() const { return {x_, y_, z_}; }

    Su2Element operator*(const Su2Element& o) const;
    Su2Element inverse() const { return raw(w_, -x_, -y_, -z_); }
    Su2Element operator-() const { return raw(-w_, -x_, -y_, -z_); }

    Mat2 matrix() const;

    /// Euclidean distance in quaternion components; equals the operator-norm
    /// distance of the matrix views.
    double distance(const Su2Element& o) const;

    /// The rotation covering(*this) applied to v (quaternion sandwich).
    Vec3 rotate(const Vec3& v) const;

private:
    static Su2Element raw(double w, double x, double y, double z);
    double w_, x_ = 0.0, y_ = 0.0, z_ = 0.0;
};

/// exp(t * mu(n)) = cos(t) + sin(t) * mu(n) for a unit vector n.
Su2Element su2_exp(double t, const Vec3& n);

/// Universal covering map to SO(3), column i = mu^{-1}(s t_i s^{-1}).
Mat3 covering(const Su2Element& s);

/// Holonomy of the invariant connection along a linear curve of length l in
/// unit direction v: cos(c l) - sin(c l) mu(v) = exp(-c l mu(v)).
Su2Element holonomy_linear(double c, double l, const Vec3& v);

/// beta_c = sqrt(c^2 r^2 + 1/4)
double circular_beta(double c, double r);

/// Entries of the first row of A(tau, c): a = cos(b t) + i sin(b t)/(2b),
/// b_entry = (c r / b) sin(b t).
std::pair<Complex, double> circular_matrix_entries(double tau, double r, double c);

/// A(tau, c) assembled from the explicit entries.
Su2Element circular_transport_matrix(double tau, double r, double c);

/// The same matrix through exp(-tau/2 [2 r c t2 + t3]); used to cross-check
/// the two displayed forms.
Su2Element circular_transport_exponential(double tau, double r, double c);

struct CircularCurveParams {
    double tau;  // in (0, 2pi)
    double r;    // > 0
    Vec3 n;      // unit rotation axis
    Su2Element sigma;  // covering(sigma) e3 = n

    /// The reduced curve: n = e3, sigma = 1.
    static CircularCurveParams reduced(double tau, double r);
    /// sigma is the minimal rotation taking e3 to n (half-angle quaternion);
    /// n = -e3 resolves to rotation about e1 by pi.
    static CircularCurveParams with_axis(double tau, double r, const Vec3& n);
};

/// d * sigma A(tau, c) sigma^{-1} with d = exp(tau/2 mu(n)).
Su2Element holonomy_circular(double c, const CircularCurveParams& p);

/// Circular holonomy of a Bohr-leg point: the AP parts of the entries reduce
/// to (cos th, sin th) for th the point's angle at the frequency r*tau.
Su2Element holonomy_circular_from_character(Complex chi_rtau, const CircularCurveParams& p);

/// a_n = sign(n)/r * sqrt(n^2 pi^2 / tau^2 - 1/4); sin(beta_{a_n} tau) = 0.
double self_intersection_point(int n_index, double tau, double r);

/// || hol(c, l, covering(sigma) v) - sigma hol(c, l, v) sigma^{-1} ||_F
double invariance_residual(double c, double l, const Vec3& v, const Su2Element& sigma);

/// Operator-norm distance from s to the maximal torus T_{e2}.
double torus_e2_distance(const Su2Element& s);

struct CircleLemmaGrid {
    double c_span = 8.0;      // uniform samples on [-c_span, c_span]
    int c_count = 1601;
    int band_samples = 64;
    int alternation_max = 20;
    int merge_max = 50;
    int spacing_max = 50;
};

struct CircleLemmaReport {
    double tau = 0.0, r = 0.0, epsilon = 0.0;

    bool noncommutative_pass = false;
    double commutator_norm = 0.0;
    double witness_c1 = 0.0, witness_c2 = 0.0;

    bool intersection_pass = false;
    std::vector<double> intersection_points;

    bool alternation_pass = false;
    double alternation_worst = 0.0;

    bool injectivity_pass = false;
    double injectivity_min_distance = 0.0;

    bool merging_pass = false;
    int n_epsilon = -1;
    std::vector<double> band_sup_distance;

    bool spacing_pass = false;
    int spacing_n0 = -1;
    double spacing_worst_deviation = 0.0;

    bool all_pass() const {
        return noncommutative_pass && intersection_pass && alternation_pass &&
               injectivity_pass && merging_pass && spacing_pass;
    }
};

/// Runs the six grid checks behind the circular-image lemma at the reduced
/// curve (tau, r): non-commutativity witness, coset-intersection scan,
/// alternation at the self-intersection points, per-band injectivity
/// sampling, band merging toward the torus, and the asymptotic 2pi spacing
/// of even self-intersections.
CircleLemmaReport circle_lemma_report(double tau, double r, const CircleLemmaGrid& grid,
                                      double epsilon);

}  // namespace rbar
