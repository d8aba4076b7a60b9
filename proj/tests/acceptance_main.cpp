// Acceptance suite: each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails.

#include "rbar/almeasure.hpp"
#include "rbar/errors.hpp"
#include "rbar/frequency.hpp"
#include "rbar/harmonic.hpp"
#include "rbar/measure.hpp"
#include "rbar/projlim.hpp"
#include "rbar/su2.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace rbar;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

void run_criterion(int index, const char* name, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && secs > budget_seconds) {
        pass = false;
        detail += " [exceeded " + sci(budget_seconds) + "s budget]";
    }
    std::printf("%s  criterion %d: %s (%.2fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL", index,
                name, secs, budget_seconds, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

ContextPtr make_context() {
    return FrequencyContext::create(
        {{"one", 1.0}, {"sqrt2", std::numbers::sqrt2}, {"pi", kPi}});
}

Frequency fr(const ContextPtr& c, std::vector<Rational> coords) {
    return Frequency(c, std::move(coords));
}

APPolynomial single(const Frequency& f, Complex coeff = {1.0, 0.0}) {
    APPolynomial p;
    p.add_term(f, coeff);
    return p;
}

const Rational kPool[] = {Rational(-3),    Rational(-2), Rational(-1), Rational(-1, 2),
                          Rational(-1, 3), Rational(0),  Rational(1, 3), Rational(1, 2),
                          Rational(1),     Rational(2),  Rational(5, 2), Rational(3)};

Frequency random_frequency(oracle::Rng& rng, const ContextPtr& ctx) {
    std::vector<Rational> coords(ctx->size());
    for (auto& c : coords) c = kPool[rng.integer(0, 11)];
    return Frequency(ctx, std::move(coords));
}

FrequencyTuple random_tuple(oracle::Rng& rng, const ContextPtr& ctx, std::size_t size) {
    while (true) {
        std::vector<Frequency> entries;
        for (std::size_t i = 0; i < size; ++i) entries.push_back(random_frequency(rng, ctx));
        if (is_z_independent(entries)) return FrequencyTuple(std::move(entries));
    }
}

FrequencyTuple random_coarsening(oracle::Rng& rng, const FrequencyTuple& fine, std::size_t size,
                                 int coeff_bound) {
    while (true) {
        std::vector<Frequency> entries;
        for (std::size_t j = 0; j < size; ++j) {
            Frequency acc = Frequency::zero(fine.context());
            for (std::size_t i = 0; i < fine.size(); ++i)
                acc = acc + fine[i].scaled(Rational(rng.integer(-coeff_bound, coeff_bound)));
            entries.push_back(acc);
        }
        if (is_z_independent(entries)) return FrequencyTuple(std::move(entries));
    }
}

LevelSpace space(FrequencyTuple t) { return LevelSpace{std::move(t), "tan_map"}; }

// --- criterion 1 -----------------------------------------------------------

bool character_orthonormality(std::string& detail) {
    oracle::Rng rng(101);
    auto ctx = make_context();
    for (int set = 0; set < 50; ++set) {
        std::vector<Frequency> freqs;
        int target = rng.integer(1, 6);
        while (static_cast<int>(freqs.size()) < target) {
            Frequency f = random_frequency(rng, ctx);
            bool dup = false;
            for (const auto& g : freqs)
                if (g == f) dup = true;
            if (!dup) freqs.push_back(f);
        }
        for (std::size_t i = 0; i < freqs.size(); ++i)
            for (std::size_t j = 0; j < freqs.size(); ++j) {
                Complex g = bohr_inner_product(single(freqs[i]), single(freqs[j]));
                Complex expect = i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
                if (g != expect) {  // exact: zero tolerance
                    detail = "gram entry deviates at set " + std::to_string(set);
                    return false;
                }
            }
    }
    detail = "50 random character sets, gram identity exact";
    return true;
}

// --- criterion 2 -----------------------------------------------------------

bool projective_structure_laws(std::string& detail) {
    oracle::Rng rng(202);
    auto ctx = make_context();
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        FrequencyTuple finest = random_tuple(rng, ctx, 2);
        FrequencyTuple mid = random_coarsening(rng, finest, 2, 3);
        FrequencyTuple coarse = random_coarsening(rng, mid, 1, 3);

        TorusPart pt{{rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)}};
        auto via = transition(space(mid), space(coarse),
                              transition(space(finest), space(mid), pt));
        auto direct = transition(space(finest), space(coarse), pt);
        worst = std::max(worst, oracle::angle_distance(std::get<TorusPart>(via).angles[0],
                                                       std::get<TorusPart>(direct).angles[0]));

        RBarPoint bohr =
            RBarPoint::bohr(finest, {rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)});
        auto compat = transition(space(mid), space(coarse), project(bohr, space(mid)));
        auto straight = project(bohr, space(coarse));
        worst = std::max(worst, oracle::angle_distance(std::get<TorusPart>(compat).angles[0],
                                                       std::get<TorusPart>(straight).angles[0]));

        RBarPoint real_pt = RBarPoint::real(rng.uniform(-10, 10));
        auto real_via = transition(space(mid), space(coarse), project(real_pt, space(mid)));
        if (std::get<CirclePart>(real_via).x != real_pt.real_value()) {
            detail = "circle leg not fixed by transitions";
            return false;
        }
    }
    if (worst > 1e-12) {
        detail = "worst torus deviation " + sci(worst);
        return false;
    }

    for (int trial = 0; trial < 250; ++trial) {
        FrequencyTuple fine = random_tuple(rng, ctx, 2);
        FrequencyTuple coarse = random_coarsening(rng, fine, rng.integer(1, 2), 10);
        if (!verify_pushforward_exact(coarse, fine, 5).pass) {
            detail = "haar pushforward audit failed";
            return false;
        }
    }
    detail = "1000 composition/compatibility draws (worst " + sci(worst) +
             "), 250 exact pushforward audits";
    return true;
}

// --- criterion 3 -----------------------------------------------------------

bool normalization_and_splitting(std::string& detail) {
    auto ctx = make_context();
    QuadratureConfig quad{1e-11, 1 << 18};

    QuantumFunction unit;
    unit.ap = single(Frequency::zero(ctx));
    Parametrization tan = Parametrization::tan_map();
    Parametrization tansq = Parametrization::custom(
        "tan_map_squared", [](double u) { return std::tan(kPi * (u * u - 0.5)); },
        [](double x) { return std::sqrt(0.5 + std::atan(x) / kPi); });

    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (const Parametrization& rho : {tan, tansq}) {
            Complex v = integrate(unit, {rho, t}, quad).value;
            if (std::abs(v - Complex(1.0, 0.0)) > 1e-10) {
                detail = "normalization off at t = " + std::to_string(t);
                return false;
            }
        }
    }

    QuantumFunction qf;
    qf.c0.eval = [](double x) { return Complex(std::exp(-x * x), 0.0); };
    qf.ap = single(Frequency::zero(ctx)) + single(fr(ctx, {1, 0, 0}), {0.5, 0.25});
    QuadratureConfig osc{1e-6, 1 << 18};  // the AP term oscillates at the endpoints
    Complex at0 = integrate(qf, {tan, 0.0}, osc).value;
    Complex at1 = integrate(qf, {tan, 1.0}, osc).value;
    double worst = 0.0;
    for (double t : {0.25, 0.5, 0.75}) {
        Complex v = integrate(qf, {tan, t}, osc).value;
        worst = std::max(worst, std::abs(v - ((1.0 - t) * at0 + t * at1)));
    }
    if (worst > 1e-10) {
        detail = "t-affinity deviation " + sci(worst);
        return false;
    }
    detail = "mass 1 on a 5-point t-grid for both parametrizations; affine in t";
    return true;
}

// --- criterion 4 -----------------------------------------------------------

double oracle_norm(const std::function<Complex(double)>& real_leg, const APPolynomial& ap,
                   const Parametrization& rho, double t) {
    double bohr = 0.0;
    for (const auto& [l, c] : ap.terms()) bohr += std::norm(c);
    double real = 0.0;
    if (t > 0.0)
        real = oracle::reference_quadrature(
                   [&](double u) { return Complex(std::norm(real_leg(rho(u))), 0.0); }, 150000)
                   .real();
    return std::sqrt(t * real + (1.0 - t) * bohr);
}

bool isometry_criterion(std::string& detail) {
    auto ctx = make_context();
    Parametrization tan = Parametrization::tan_map();
    Parametrization tansq = Parametrization::custom(
        "tan_map_squared", [](double u) { return std::tan(kPi * (u * u - 0.5)); },
        [](double x) { return std::sqrt(0.5 + std::atan(x) / kPi); });

    // 10 deterministic test functions mixing C0 and AP content
    oracle::Rng rng(404);
    std::vector<QuantumFunction> family;
    for (int i = 0; i < 10; ++i) {
        QuantumFunction f;
        double amp = rng.uniform(0.3, 2.0), width = rng.uniform(0.4, 2.5);
        bool add_sech = rng.integer(0, 1) == 1;
        f.c0.eval = [amp, width, add_sech](double x) {
            double v = amp * std::exp(-(x / width) * (x / width));
            if (add_sech) v += 0.5 / std::cosh(x);
            return Complex(v, 0.0);
        };
        int terms = rng.integer(0, 3);
        const Frequency candidates[] = {Frequency::zero(ctx), fr(ctx, {1, 0, 0}),
                                        fr(ctx, {2, 0, 0}), fr(ctx, {0, 1, 0}),
                                        fr(ctx, {Rational(1, 2), 0, 1})};
        for (int t = 0; t < terms; ++t)
            f.ap.add_term(candidates[rng.integer(0, 4)],
                          Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
        family.push_back(std::move(f));
    }

    struct Pair {
        MeasureDescriptor from, to;
    };
    std::vector<Pair> pairs = {{{tan, 0.3}, {tansq, 0.7}},
                               {{tansq, 0.25}, {tan, 0.75}},
                               {{tan, 0.6}, {tan, 0.2}}};

    double worst = 0.0;
    for (const auto& pr : pairs) {
        for (const auto& psi : family) {
            TransportedFunction phi = isometry_transport(psi, pr.from, pr.to);
            double n_from = oracle_norm([&](double x) { return psi.eval_real(x); }, psi.ap,
                                        pr.from.rho, pr.from.t);
            double n_to = oracle_norm(phi.real_leg, phi.bohr_ap, pr.to.rho, pr.to.t);
            worst = std::max(worst, std::abs(n_from - n_to));
        }
    }
    detail = "worst norm deviation " + sci(worst) + " over 10 functions x 3 pairs";
    return worst <= 1e-7;
}

// --- criterion 5 -----------------------------------------------------------

bool jons_uniqueness_probe(std::string& detail) {
    auto ctx = make_context();
    std::vector<QuantumFunction> family;
    QuantumFunction one;
    one.ap = single(Frequency::zero(ctx));
    family.push_back(one);
    QuantumFunction bump;
    bump.c0.eval = [](double x) { return Complex(std::exp(-x * x), 0.0); };
    family.push_back(bump);
    QuantumFunction chi;
    chi.ap = single(fr(ctx, {1, 0, 0}));
    family.push_back(chi);

    QuadratureConfig quad{1e-8, 1 << 14};

    JonsReport bohr = jons_conditions_check({0.0, std::nullopt}, family, quad);
    if (!bohr.condition_i.holds || !bohr.condition_ii.holds || !bohr.exact ||
        bohr.condition_i.worst_value > 1e-10) {
        detail = "0_R (+) mu_Bohr should satisfy both conditions exactly";
        return false;
    }

    // frozen floor 0.39 for the gaussian probe integral (true value ~0.4276)
    const double floor_int = 0.39;
    for (double t : {0.1, 0.5, 0.9}) {
        JonsReport rep = jons_conditions_check({t, Parametrization::tan_map()}, family, quad);
        if (rep.condition_i.holds) {
            detail = "condition (i) unexpectedly holds at t = " + std::to_string(t);
            return false;
        }
        if (rep.condition_i.worst_value < t * 0.5 * floor_int) {
            detail = "condition (i) violation below the floor at t = " + std::to_string(t);
            return false;
        }
    }
    detail = "bohr candidate passes exactly; weighted candidates fail condition (i) above the floor";
    return true;
}

// --- criterion 6 -----------------------------------------------------------

bool holonomy_identities(std::string& detail) {
    oracle::Rng rng(606);
    double worst_forms = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        double tau = rng.uniform(0.2, 6.0), r = rng.uniform(0.2, 3.0);
        for (int i = 0; i < 100; ++i) {
            double c = rng.uniform(-15, 15);
            double d = (circular_transport_matrix(tau, r, c).matrix() -
                        circular_transport_exponential(tau, r, c).matrix())
                           .frobenius_norm();
            worst_forms = std::max(worst_forms, d);
        }
    }
    if (worst_forms > 1e-12) {
        detail = "transport-matrix forms disagree by " + sci(worst_forms);
        return false;
    }

    double worst_inv = 0.0;
    for (int i = 0; i < 1000; ++i) {
        worst_inv = std::max(worst_inv,
                             invariance_residual(rng.uniform(-5, 5), rng.uniform(-5, 5),
                                                 rng.unit_vector(), rng.su2()));
    }
    if (worst_inv > 1e-12) {
        detail = "invariance residual " + sci(worst_inv);
        return false;
    }

    double worst_exp = 0.0;
    for (int i = 0; i < 100; ++i) {
        double t = rng.uniform(-kPi, kPi);
        Vec3 n = rng.unit_vector();
        Mat2 series = oracle::expm_series(
            [&] {
                Mat2 m;
                m(0, 0) = Complex(0.0, -n.z * t);
                m(0, 1) = Complex(-n.y * t, -n.x * t);
                m(1, 0) = Complex(n.y * t, -n.x * t);
                m(1, 1) = Complex(0.0, n.z * t);
                return m;
            }(),
            30);
        worst_exp = std::max(worst_exp, (su2_exp(t, n).matrix() - series).frobenius_norm());
    }
    if (worst_exp > 1e-12) {
        detail = "exp deviates from the series oracle by " + sci(worst_exp);
        return false;
    }
    detail = "entry/exponential forms, invariance residuals and the series oracle all within 1e-12";
    return true;
}

// --- criterion 7 -----------------------------------------------------------

bool circle_lemma_criterion(std::string& detail) {
    CircleLemmaGrid grid;
    CircleLemmaReport rep = circle_lemma_report(kPi, 1.0, grid, 0.1);
    detail = "n_eps = " + std::to_string(rep.n_epsilon) +
             ", spacing n0 = " + std::to_string(rep.spacing_n0) +
             ", alternation worst = " + sci(rep.alternation_worst);
    if (!rep.alternation_pass || rep.alternation_worst > 1e-9) return false;
    if (!rep.intersection_pass) return false;
    if (!rep.merging_pass || rep.n_epsilon < 1) return false;
    if (!rep.spacing_pass || rep.spacing_n0 > 50) return false;
    return rep.all_pass();
}

// --- criterion 8 -----------------------------------------------------------

bool al_consistency(std::string& detail) {
    const std::size_t n = 100000;

    DecompositionSpec identity;
    identity.coarse_count = 2;
    identity.fine_count = 2;
    identity.words = {{{{1, 1}}}, {{{2, 1}}}};

    DecompositionSpec split;
    split.coarse_count = 1;
    split.fine_count = 2;
    split.words = {{{{2, 1}, {1, 1}}}};

    DecompositionSpec inverse;
    inverse.coarse_count = 1;
    inverse.fine_count = 1;
    inverse.words = {{{{1, -1}}}};

    MomentPanelReport rid = verify_al_pushforward(identity, n, 8001);
    MomentPanelReport rsplit = verify_al_pushforward(split, n, 8002);
    MomentPanelReport rinv = verify_al_pushforward(inverse, n, 8003);
    if (!rid.pass || !rsplit.pass || !rinv.pass) {
        detail = "a Haar-consistent spec failed the moment panel";
        return false;
    }

    DecompositionSpec dup;
    dup.coarse_count = 2;
    dup.fine_count = 2;
    dup.words = {{{{1, 1}}}, {{{1, 1}}}};
    MomentPanelReport rdup = verify_al_pushforward(dup, n, 8004);
    if (rdup.pass) {
        detail = "duplicated-variable control was not detected";
        return false;
    }
    detail = "identity/split/inverse specs pass at N=1e5; duplicated control fails (worst " +
             sci(rdup.worst_abs) + " vs bound " + sci(rdup.bound) + ")";
    return true;
}

// --- criterion 9 -----------------------------------------------------------

bool unitarity_drift(std::string& detail) {
    oracle::Rng rng(909);
    Su2Element acc = Su2Element::identity();
    for (int i = 0; i < 10000; ++i) acc = acc * rng.su2();
    Mat2 m = acc.matrix();
    double unit_dev = (m * m.adjoint() - Mat2::identity()).frobenius_norm();
    double det_dev = std::abs(m.det() - Complex(1.0, 0.0));
    detail = "unitarity " + sci(unit_dev) + ", det " + sci(det_dev) +
             " after 1e4 products";
    return unit_dev <= 1e-12 && det_dev <= 1e-12;
}

}  // namespace

int main() {
    run_criterion(1, "exact character orthonormality", 1.0, character_orthonormality);
    run_criterion(2, "projective-structure laws and exact pushforward audits", 10.0,
                  projective_structure_laws);
    run_criterion(3, "measure normalization and splitting", 5.0, normalization_and_splitting);
    run_criterion(4, "isometry of the transport map (reference quadrature)", 30.0,
                  isometry_criterion);
    run_criterion(5, "uniqueness probe for the inner-product conditions", 5.0,
                  jons_uniqueness_probe);
    run_criterion(6, "holonomy identities", 5.0, holonomy_identities);
    run_criterion(7, "circular-image lemma report at (pi, 1)", 10.0, circle_lemma_criterion);
    run_criterion(8, "consistency of the Haar family on SU(2)^k", 60.0, al_consistency);
    run_criterion(9, "unitarity drift over compounded products", 1.0, unitarity_drift);

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
