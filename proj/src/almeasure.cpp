#include "rbar/almeasure.hpp"

#include "rbar/errors.hpp"
#include "rbar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rbar {

bool DecompositionSpec::disjoint() const {
    std::vector<int> seen(static_cast<std::size_t>(fine_count) + 1, 0);
    for (const auto& w : words)
        for (const auto& f : w.factors) {
            if (f.index < 1 || f.index > fine_count) return false;
            ++seen[static_cast<std::size_t>(f.index)];
        }
    for (int i = 1; i <= fine_count; ++i)
        if (seen[static_cast<std::size_t>(i)] != 1) return false;
    return true;
}

void DecompositionSpec::validate_shape() const {
    if (coarse_count < 1 || fine_count < 1) throw Error("decomposition counts must be positive");
    if (static_cast<int>(words.size()) != coarse_count)
        throw Error("word count must equal the coarse component count");
    for (const auto& w : words) {
        if (w.factors.empty()) throw Error("edge words must be nonempty");
        for (const auto& f : w.factors) {
            if (f.index < 1 || f.index > fine_count) throw Error("edge factor index out of range");
            if (f.exponent != 1 && f.exponent != -1) throw Error("edge exponent must be +-1");
        }
    }
}

void DecompositionSpec::validate() const {
    validate_shape();
    if (!disjoint())
        throw Error("each fine index must occur in exactly one edge word");
}

std::vector<Su2Element> word_transition(const DecompositionSpec& spec,
                                        const std::vector<Su2Element>& point) {
    spec.validate_shape();
    if (static_cast<int>(point.size()) != spec.fine_count)
        throw Error("point size does not match the fine component count");
    std::vector<Su2Element> out;
    out.reserve(spec.words.size());
    for (const auto& w : spec.words) {
        Su2Element acc = Su2Element::identity();
        for (const auto& f : w.factors) {
            const Su2Element& x = point[static_cast<std::size_t>(f.index - 1)];
            acc = acc * (f.exponent == 1 ? x : x.inverse());
        }
        out.push_back(acc);
    }
    return out;
}

DecompositionSpec substitute(const DecompositionSpec& outer, const DecompositionSpec& inner) {
    outer.validate_shape();
    inner.validate_shape();
    if (outer.fine_count != inner.coarse_count)
        throw Error("specs do not compose: outer fine count != inner coarse count");
    DecompositionSpec out;
    out.coarse_count = outer.coarse_count;
    out.fine_count = inner.fine_count;
    for (const auto& w : outer.words) {
        EdgeWord word;
        for (const auto& f : w.factors) {
            const EdgeWord& sub = inner.words[static_cast<std::size_t>(f.index - 1)];
            if (f.exponent == 1) {
                word.factors.insert(word.factors.end(), sub.factors.begin(), sub.factors.end());
            } else {
                for (auto it = sub.factors.rbegin(); it != sub.factors.rend(); ++it)
                    word.factors.push_back({it->index, -it->exponent});
            }
        }
        out.words.push_back(std::move(word));
    }
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

HaarSampler::HaarSampler(std::uint64_t seed) : state_(seed) {}

double HaarSampler::next_uniform() {
    return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
}

double HaarSampler::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - next_uniform();  // in (0, 1]
    double u2 = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Su2Element HaarSampler::next() {
    while (true) {
        double w = next_normal(), x = next_normal(), y = next_normal(), z = next_normal();
        if (w * w + x * x + y * y + z * z > 1e-24)
            return Su2Element::from_components(w, x, y, z);
    }
}

namespace {

struct EntryRef {
    int comp;  // 0-based coarse component
    int row, col;
    bool conj;
};

struct Monomial {
    std::string label;
    std::vector<EntryRef> factors;
    double expected_re = 0.0;  // 0 for the zero panel, 0.5 for Schur diagonals
};

std::string entry_label(const EntryRef& e) {
    std::string s = "y" + std::to_string(e.comp + 1) + "[" + std::to_string(e.row) +
                    std::to_string(e.col) + "]";
    if (e.conj) s += "*";
    return s;
}

std::vector<Monomial> build_panel(int k) {
    std::vector<Monomial> panel;
    auto add = [&](std::vector<EntryRef> fs, double expected) {
        Monomial m;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (i) m.label += " ";
            m.label += entry_label(fs[i]);
        }
        if (fs.empty()) m.label = "1";
        m.factors = std::move(fs);
        m.expected_re = expected;
        panel.push_back(std::move(m));
    };

    // The trivial monomial integrates to 1, exactly.
    add({}, 1.0);

    // Degree 1: every matrix entry of every component integrates to zero.
    for (int a = 0; a < k; ++a)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) add({{a, r, c, false}}, 0.0);

    // Degree 2 within one component: Schur orthogonality.  Distinct entry
    // pairs against a conjugate vanish; the diagonal ones equal 1/dim = 1/2.
    for (int a = 0; a < k; ++a)
        for (int r1 = 0; r1 < 2; ++r1)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int r2 = 0; r2 < 2; ++r2)
                    for (int c2 = 0; c2 < 2; ++c2) {
                        bool diag = r1 == r2 && c1 == c2;
                        add({{a, r1, c1, false}, {a, r2, c2, true}}, diag ? 0.5 : 0.0);
                    }

    // Degree 2 across components: independence makes every product of two
    // first-degree entries vanish, with or without conjugation.
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int r1 = 0; r1 < 2; ++r1)
                for (int c1 = 0; c1 < 2; ++c1)
                    for (int r2 = 0; r2 < 2; ++r2)
                        for (int c2 = 0; c2 < 2; ++c2) {
                            add({{a, r1, c1, false}, {b, r2, c2, false}}, 0.0);
                            add({{a, r1, c1, false}, {b, r2, c2, true}}, 0.0);
                        }
    return panel;
}

}  // namespace

MomentPanelReport verify_al_pushforward(const DecompositionSpec& spec, std::size_t n_samples,
                                        std::uint64_t seed) {
    spec.validate_shape();
    if (n_samples < 10000) throw Error("moment audit needs at least 1e4 samples");

    const std::vector<Monomial> panel = build_panel(spec.coarse_count);
    std::vector<CompensatedSum> acc_re(panel.size()), acc_im(panel.size());

    HaarSampler sampler(seed);
    std::vector<Su2Element> fine(static_cast<std::size_t>(spec.fine_count));
    std::vector<Mat2> mats(static_cast<std::size_t>(spec.coarse_count));
    for (std::size_t s = 0; s < n_samples; ++s) {
        for (auto& g : fine) g = sampler.next();
        std::vector<Su2Element> coarse = word_transition(spec, fine);
        for (std::size_t i = 0; i < coarse.size(); ++i) mats[i] = coarse[i].matrix();
        for (std::size_t p = 0; p < panel.size(); ++p) {
            Complex v(1.0, 0.0);
            for (const auto& f : panel[p].factors) {
                Complex e = mats[static_cast<std::size_t>(f.comp)](f.row, f.col);
                v *= f.conj ? std::conj(e) : e;
            }
            acc_re[p].add(v.real());
            acc_im[p].add(v.imag());
        }
    }

    MomentPanelReport rep;
    rep.samples = n_samples;
    rep.seed = seed;
    rep.spec_disjoint = spec.disjoint();
    rep.bound = 4.0 / std::sqrt(static_cast<double>(n_samples));
    rep.pass = true;
    const double inv_n = 1.0 / static_cast<double>(n_samples);
    for (std::size_t p = 0; p < panel.size(); ++p) {
        MomentStat st;
        st.monomial = panel[p].label;
        st.mean_re = acc_re[p].value() * inv_n;
        st.mean_im = acc_im[p].value() * inv_n;
        double dev = std::hypot(st.mean_re - panel[p].expected_re, st.mean_im);
        st.within_bound = dev <= rep.bound;
        if (dev > rep.worst_abs) {
            rep.worst_abs = dev;
            rep.worst_monomial = st.monomial;
        }
        if (!st.within_bound) rep.pass = false;
        rep.stats.push_back(std::move(st));
    }
    return rep;
}

}  // namespace rbar
