#pragma once

#include "rbar/su2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rbar {

// Desk-scale consistency checks for the Haar family behind the
// Ashtekar-Lewandowski construction: transition maps on SU(2)^k are
// edge-word products, and the pushforward of product Haar is audited
// statistically through low-degree Peter-Weyl moments.

struct EdgeFactor {
    int index;     // 1-based fine-component index
    int exponent;  // +1 or -1
};

struct EdgeWord {
    std::vector<EdgeFactor> factors;  // nonempty
};

struct DecompositionSpec {
    int coarse_count = 0;
    int fine_count = 0;
    std::vector<EdgeWord> words;  // one per coarse component

    /// True iff every fine index 1..fine_count occurs in exactly one factor
    /// across all words.  The Fubini argument needs this; the audit can be
    /// run on violating specs as a negative control.
    bool disjoint() const;

    /// Throws unless shapes are coherent (word count, index ranges,
    /// exponents, nonempty words) and the disjointness invariant holds.
    void validate() const;

    /// Shape checks only, without the disjointness invariant.
    void validate_shape() const;
};

/// Component i = ordered product of the word's factors, inverses where the
/// exponent is -1.
std::vector<Su2Element> word_transition(const DecompositionSpec& spec,
                                        const std::vector<Su2Element>& point);

/// The word spec of the composition: applying `outer` after `inner` equals
/// applying the substituted spec directly.
DecompositionSpec substitute(const DecompositionSpec& outer, const DecompositionSpec& inner);

/// Haar-uniform SU(2) samples: four Box-Muller normals normalized onto S^3.
/// Fully deterministic for a given seed across platforms.
class HaarSampler {
public:
    explicit HaarSampler(std::uint64_t seed);
    Su2Element next();

private:
    double next_normal();
    double next_uniform();
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct MomentStat {
    std::string monomial;
    double mean_re = 0.0;
    double mean_im = 0.0;
    bool within_bound = false;
};

struct MomentPanelReport {
    bool pass = false;
    double bound = 0.0;        // 4 / sqrt(N)
    double worst_abs = 0.0;
    std::string worst_monomial;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool spec_disjoint = false;
    std::vector<MomentStat> stats;
};

/// Draws N fine points from Haar^{k'}, pushes them through the word map and
/// tests that the image looks like Haar^k: every nontrivial matrix-entry
/// monomial of degree <= 2 across components must have |sample mean| within
/// 4/sqrt(N) of zero.  (Per-statistic variance is at most 1, so this is a
/// >= 4-sigma bound; with the panel sizes used here the a-priori failure
/// probability of a correct spec stays below about 2%, and fixed seeds make
/// each run deterministic.)
MomentPanelReport verify_al_pushforward(const DecompositionSpec& spec, std::size_t n_samples,
                                        std::uint64_t seed);

}  // namespace rbar
