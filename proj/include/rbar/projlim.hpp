#pragma once

#include "rbar/frequency.hpp"
#include "rbar/harmonic.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rbar {

/// Point of the level space X_L = im[f] |_| T^|L|.  The circle leg stores
/// the f-preimage (f is a homeomorphism onto its image), so transition maps
/// act as the identity there and f never enters this module.
struct CirclePart {
    double x;
};

struct TorusPart {
    std::vector<double> angles;  // normalized to [0, 2pi)
};

using LevelPoint = std::variant<CirclePart, TorusPart>;

struct LevelSpace {
    FrequencyTuple level;
    std::string parametrization_id;
};

/// pi_L: real points land on the circle leg unchanged; cylindrical points
/// need space.level <=_Z point.level and map to the torus leg through the
/// integer relation matrix.
LevelPoint project(const RBarPoint& point, const LevelSpace& space);

/// pi_L^{L'} for L <=_Z L': identity on the circle leg, monomial map with
/// exponents n^i_j on the torus leg.
LevelPoint transition(const LevelSpace& from, const LevelSpace& to, const LevelPoint& pt);

struct ConsistencyReport {
    std::string check;
    std::string pair;
    bool pass = false;
    /// Exponent vector of a failing torus monomial, when one exists.
    std::optional<std::vector<long long>> counterexample;
};

/// Exact Haar-pushforward audit for the exponent matrix of L <=_Z Lp: a
/// torus monomial with exponents k pulls back to exponents N k, and the
/// pushforward is Haar iff N k = 0 only for k = 0.  Enumerates all
/// |k|_inf <= max_exponent in integer arithmetic.
ConsistencyReport verify_pushforward_exact(const FrequencyTuple& L, const FrequencyTuple& Lp,
                                           int max_exponent);

/// Core of the audit, on a bare exponent matrix (rows = fine, cols = coarse).
ConsistencyReport audit_exponent_matrix(const IntegerRelationMatrix& n, int max_exponent,
                                        const std::string& pair_label);

struct SeparationResult {
    enum class Kind {
        circle_witness,     // the circle leg separates (f is injective)
        separated,          // distinguished on the torus leg of `level`
        indistinguishable,  // cylindrical data compatible at available resolution
    };
    Kind kind;
    std::optional<FrequencyTuple> level;
};

/// Constructive point separation.  Real/real and real/Bohr pairs are split
/// by the circle leg.  For two cylindrical points the levels are joined and
/// the angle constraints are compared on the join: the combined system
/// N1^T phi = theta1, N2^T phi = theta2 (mod 2pi) is solvable iff every
/// integer kernel vector of [N1 N2] pairs to an integer against the angle
/// data.  Points outside the declared frequency context are unrepresentable
/// by construction.
SeparationResult separate_points(const RBarPoint& x, const RBarPoint& y,
                                 const LevelSpace* hint = nullptr);

}  // namespace rbar
