#include "rbar/projlim.hpp"

#include "rbar/errors.hpp"
#include "rbar/exact_linalg.hpp"

#include <cmath>
#include <numbers>

namespace rbar {

namespace {

std::vector<double> apply_relation(const IntegerRelationMatrix& n,
                                   const std::vector<double>& fine_angles) {
    std::vector<double> out(n.coarse_size());
    for (std::size_t j = 0; j < n.coarse_size(); ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n.fine_size(); ++i)
            acc += to_double(n.at(i, j)) * fine_angles[i];
        out[j] = normalize_angle(acc);
    }
    return out;
}

}  // namespace

LevelPoint project(const RBarPoint& point, const LevelSpace& space) {
    if (point.is_real()) return CirclePart{point.real_value()};
    const BohrCylPoint& p = point.bohr_point();
    auto n = solve_span(space.level, p.level);
    if (!n)
        throw NotRefinableError("target level is not below the point's level in <=_Z");
    return TorusPart{apply_relation(*n, p.angles)};
}

LevelPoint transition(const LevelSpace& from, const LevelSpace& to, const LevelPoint& pt) {
    if (from.parametrization_id != to.parametrization_id)
        throw Error("transition between level spaces with different parametrizations");
    auto n = solve_span(to.level, from.level);
    if (!n) throw NotRefinableError("levels are not ordered under <=_Z");
    if (const auto* circle = std::get_if<CirclePart>(&pt)) return *circle;
    const auto& torus = std::get<TorusPart>(pt);
    if (torus.angles.size() != from.level.size())
        throw Error("torus point size does not match the source level");
    return TorusPart{apply_relation(*n, torus.angles)};
}

ConsistencyReport audit_exponent_matrix(const IntegerRelationMatrix& n, int max_exponent,
                                        const std::string& pair_label) {
    ConsistencyReport rep;
    rep.check = "pushforward-haar-moments";
    rep.pair = pair_label;
    rep.pass = true;

    const std::size_t k = n.coarse_size();
    std::vector<long long> expo(k, -max_exponent);
    while (true) {
        bool all_zero = true;
        for (long long e : expo)
            if (e != 0) all_zero = false;
        if (!all_zero) {
            bool composed_zero = true;
            for (std::size_t i = 0; i < n.fine_size() && composed_zero; ++i) {
                Integer acc = 0;
                for (std::size_t j = 0; j < k; ++j) acc += n.at(i, j) * expo[j];
                if (acc != 0) composed_zero = false;
            }
            // A nonzero monomial pulling back to the trivial one would have
            // nonzero Haar integral upstairs: consistency fails.
            if (composed_zero) {
                rep.pass = false;
                rep.counterexample = expo;
                return rep;
            }
        }
        std::size_t pos = 0;
        while (pos < k && expo[pos] == max_exponent) expo[pos++] = -max_exponent;
        if (pos == k) break;
        ++expo[pos];
    }
    return rep;
}

ConsistencyReport verify_pushforward_exact(const FrequencyTuple& L, const FrequencyTuple& Lp,
                                           int max_exponent) {
    if (max_exponent < 1) throw Error("max_exponent must be at least 1");
    auto n = solve_span(L, Lp);
    if (!n) throw NotRefinableError("levels are not ordered under <=_Z");
    std::string label = "|L|=" + std::to_string(L.size()) + ",|L'|=" + std::to_string(Lp.size()) +
                        ",max_exp=" + std::to_string(max_exponent);
    return audit_exponent_matrix(*n, max_exponent, label);
}

SeparationResult separate_points(const RBarPoint& x, const RBarPoint& y, const LevelSpace*) {
    // Different legs, or two real points: the injective circle leg separates.
    if (x.is_real() || y.is_real()) {
        if (x.is_real() && y.is_real() && x.real_value() == y.real_value())
            throw Error("separate_points requires distinct representations");
        return {SeparationResult::Kind::circle_witness, std::nullopt};
    }

    const BohrCylPoint& px = x.bohr_point();
    const BohrCylPoint& py = y.bohr_point();
    if (px.level == py.level && px.angles == py.angles)
        throw Error("separate_points requires distinct representations");
    FrequencyTuple joined = join(px.level, py.level);
    auto n1 = solve_span(px.level, joined);
    auto n2 = solve_span(py.level, joined);
    if (!n1 || !n2) throw Error("join failed to dominate both levels");  // unreachable

    // Stack both relation matrices: columns are the join-coordinates of all
    // constraint frequencies.
    const std::size_t dim = joined.size();
    const std::size_t k1 = px.level.size(), k2 = py.level.size();
    IntMatrix m(dim, k1 + k2);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k1; ++j) m.at(i, j) = n1->at(i, j);
        for (std::size_t j = 0; j < k2; ++j) m.at(i, k1 + j) = n2->at(i, j);
    }

    // The joint angle system is solvable iff w . t is an integer for every
    // integer kernel vector w of m, where t stacks the angles over 2pi.
    IntMatrix kernel = integer_kernel(m);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t col = 0; col < kernel.cols(); ++col) {
        double dot = 0.0;
        for (std::size_t j = 0; j < k1; ++j)
            dot += to_double(kernel.at(j, col)) * px.angles[j] / two_pi;
        for (std::size_t j = 0; j < k2; ++j)
            dot += to_double(kernel.at(k1 + j, col)) * py.angles[j] / two_pi;
        if (std::abs(dot - std::round(dot)) > 1e-9)
            return {SeparationResult::Kind::separated, joined};
    }
    return {SeparationResult::Kind::indistinguishable, joined};
}

}  // namespace rbar
