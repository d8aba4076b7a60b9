#include "rbar/harmonic.hpp"

#include "rbar/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace rbar;

namespace {

constexpr double kPi = std::numbers::pi;

ContextPtr ctx2() {
    return FrequencyContext::create({{"one", 1.0}, {"sqrt2", std::numbers::sqrt2}});
}

Frequency fr(const ContextPtr& c, std::vector<Rational> coords) {
    return Frequency(c, std::move(coords));
}

APPolynomial single(const Frequency& f, Complex coeff = {1.0, 0.0}) {
    APPolynomial p;
    p.add_term(f, coeff);
    return p;
}

}  // namespace

TEST_CASE("ap_eval examples") {
    auto c = ctx2();
    APPolynomial constant = single(Frequency::zero(c));
    CHECK(ap_eval(constant, -3.7) == Complex(1.0, 0.0));

    APPolynomial chi1 = single(fr(c, {1, 0}));
    CHECK(std::abs(ap_eval(chi1, kPi / 2) - Complex(0.0, 1.0)) < 1e-14);

    APPolynomial cosine = single(fr(c, {1, 0})) + single(fr(c, {-1, 0}));
    CHECK(std::abs(ap_eval(cosine, 0.0) - Complex(2.0, 0.0)) < 1e-15);
}

TEST_CASE("bohr_integral examples") {
    auto c = ctx2();
    CHECK(bohr_integral(single(Frequency::zero(c), {3.0, 0.0})) == Complex(3.0, 0.0));
    CHECK(bohr_integral(single(fr(c, {1, 0}))) == Complex(0.0, 0.0));

    APPolynomial p = single(Frequency::zero(c), {2.0, 0.0}) + single(fr(c, {0, 1}), {5.0, 0.0}) +
                     single(fr(c, {1, 1}), {0.0, -1.0});
    CHECK(bohr_integral(p) == Complex(2.0, 0.0));
}

TEST_CASE("bohr_inner_product examples and exactness") {
    auto c = ctx2();
    Frequency b1 = fr(c, {1, 0}), b2 = fr(c, {0, 1});
    CHECK(bohr_inner_product(single(b1), single(b1)) == Complex(1.0, 0.0));
    CHECK(bohr_inner_product(single(b1), single(b2)) == Complex(0.0, 0.0));

    APPolynomial p = single(Frequency::zero(c), {2.0, 0.0}) + single(b1);
    CHECK(bohr_inner_product(p, single(b1)) == Complex(1.0, 0.0));
}

TEST_CASE("inner product agrees with the product-integral route exactly") {
    oracle::Rng rng(31);
    auto c = ctx2();
    const Rational pool[] = {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    for (int trial = 0; trial < 30; ++trial) {
        APPolynomial p, q;
        for (int t = 0; t < 3; ++t) {
            std::vector<Rational> co{pool[rng.integer(0, 4)], pool[rng.integer(0, 4)]};
            p.add_term(fr(c, co), Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
            std::vector<Rational> co2{pool[rng.integer(0, 4)], pool[rng.integer(0, 4)]};
            q.add_term(fr(c, co2), Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)));
        }
        CHECK(bohr_inner_product(p, q) == bohr_integral(p * q.conjugated()));
        // positivity: <p, p> = sum |c_l|^2 >= 0, zero only for the empty polynomial
        Complex self = bohr_integral(p * p.conjugated());
        CHECK(self.imag() == 0.0);
        if (!p.empty()) CHECK(self.real() > 0.0);
    }
}

TEST_CASE("gram matrix of distinct characters is exactly the identity") {
    oracle::Rng rng(47);
    auto c = ctx2();
    const Rational pool[] = {Rational(-2), Rational(-1, 2), Rational(1, 3), Rational(1),
                             Rational(5, 2)};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Frequency> freqs;
        for (int i = 0; i < 5; ++i) {
            std::vector<Rational> co{pool[rng.integer(0, 4)], pool[rng.integer(0, 4)]};
            Frequency f = fr(c, co);
            bool dup = false;
            for (const auto& g : freqs)
                if (g == f) dup = true;
            if (!dup) freqs.push_back(f);
        }
        for (std::size_t i = 0; i < freqs.size(); ++i)
            for (std::size_t j = 0; j < freqs.size(); ++j) {
                Complex g = bohr_inner_product(single(freqs[i]), single(freqs[j]));
                CHECK(g == (i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
            }
    }
}

TEST_CASE("rbar_eval examples") {
    auto c = ctx2();
    Frequency b1 = fr(c, {1, 0});

    QuantumFunction qf;
    qf.c0.eval = [](double x) { return Complex(std::exp(-x * x), 0.0); };
    qf.ap = single(b1);
    CHECK(std::abs(rbar_eval(RBarPoint::real(0.0), qf) - Complex(2.0, 0.0)) < 1e-15);

    FrequencyTuple level({b1});
    RBarPoint bohr_pi = RBarPoint::bohr(level, {kPi});
    CHECK(std::abs(rbar_eval(bohr_pi, qf) - Complex(-1.0, 0.0)) < 1e-14);  // C0 part killed

    QuantumFunction chi2;
    chi2.ap = single(fr(c, {2, 0}));
    RBarPoint bohr_third = RBarPoint::bohr(level, {kPi / 3});
    CHECK(std::abs(rbar_eval(bohr_third, chi2) - std::polar(1.0, 2.0 * kPi / 3.0)) < 1e-14);

    QuantumFunction half;
    half.ap = single(fr(c, {Rational(1, 2), 0}));
    CHECK_THROWS_AS(rbar_eval(bohr_third, half), FrequencyNotInLevelError);
}

TEST_CASE("rbar_eval at real points matches direct summation") {
    oracle::Rng rng(7);
    auto c = ctx2();
    QuantumFunction qf;
    qf.c0.eval = [](double x) { return Complex(std::exp(-0.5 * x * x), 0.1 * std::exp(-x * x)); };
    qf.ap = single(fr(c, {1, 0}), {0.3, -0.2}) + single(fr(c, {0, 1}), {-1.0, 0.5}) +
            single(fr(c, {Rational(1, 2), 1}), {0.0, 2.0});
    for (int i = 0; i < 200; ++i) {
        double x = rng.uniform(-20, 20);
        Complex direct = qf.c0(x);
        for (const auto& [l, coeff] : qf.ap.terms())
            direct += coeff * std::exp(Complex(0.0, l.numeric_value() * x));
        CHECK(std::abs(rbar_eval(RBarPoint::real(x), qf) - direct) < 1e-13);
    }
}

TEST_CASE("angle normalization") {
    CHECK(normalize_angle(2.0 * kPi) == 0.0);
    CHECK(normalize_angle(2.0 * kPi - 1e-16) == 0.0);  // wraparound slack
    CHECK(normalize_angle(-kPi / 2) == doctest::Approx(3.0 * kPi / 2).epsilon(1e-15));
    CHECK(normalize_angle(2.0 * kPi + 0.25) == doctest::Approx(0.25).epsilon(1e-12));

    auto c = ctx2();
    CHECK_THROWS((RBarPoint::bohr(FrequencyTuple({fr(c, {1, 0})}), {0.0, 1.0})));
}

TEST_CASE("circular entry decomposition") {
    auto ctx = FrequencyContext::create({{"pi", kPi}});
    Frequency omega(ctx, {Rational(1)});  // value pi = r * tau for tau = pi, r = 1
    const double tau = kPi, r = 1.0;
    auto [a, b] = circular_entry_decomposition(tau, r, omega);

    SUBCASE("c = 0: a(0) = e^{i tau/2}, b(0) = 0") {
        Complex a0 = rbar_eval(RBarPoint::real(0.0), a);
        CHECK(std::abs(a0 - std::polar(1.0, tau / 2)) < 1e-14);
        CHECK(std::abs(rbar_eval(RBarPoint::real(0.0), b)) < 1e-14);
    }

    SUBCASE("c = a_1 = sqrt(3)/2: beta = 1, a = -1, b = 0") {
        const double a1 = std::sqrt(3.0) / 2.0;
        CHECK(std::abs(rbar_eval(RBarPoint::real(a1), a) - Complex(-1.0, 0.0)) < 1e-13);
        CHECK(std::abs(rbar_eval(RBarPoint::real(a1), b)) < 1e-13);
    }

    SUBCASE("C0 parts decay") {
        CHECK(std::abs(a.c0(1e3)) < 1e-2);
        CHECK(std::abs(b.c0(1e3)) < 1e-2);
        CHECK(std::abs(a.c0(1e6)) < 1e-5);
        CHECK(std::abs(b.c0(1e6)) < 1e-5);
        CHECK(std::abs(a.c0(-1e6)) < 1e-5);
        CHECK(std::abs(b.c0(-1e6)) < 1e-5);
    }

    SUBCASE("row unitarity |a|^2 + |b|^2 = 1") {
        oracle::Rng rng(12);
        for (int i = 0; i < 400; ++i) {
            double c = rng.uniform(-50, 50);
            Complex av = rbar_eval(RBarPoint::real(c), a);
            Complex bv = rbar_eval(RBarPoint::real(c), b);
            CHECK(std::abs(std::norm(av) + std::norm(bv) - 1.0) < 1e-12);
        }
    }

    SUBCASE("finite-difference derivative of b at 0 is 2 r sin(tau/2)") {
        const double h = 1e-6;
        double fd = (rbar_eval(RBarPoint::real(h), b).real() -
                     rbar_eval(RBarPoint::real(-h), b).real()) /
                    (2.0 * h);
        CHECK(std::abs(fd - 2.0 * r * std::sin(tau / 2)) < 1e-6);
    }

    SUBCASE("a0 vanishes nowhere on a log-spaced grid") {
        double min_abs = 1e300;
        for (int k = 0; k <= 120; ++k) {
            double c = std::pow(10.0, -2.0 + k * (8.0 / 120.0));  // 1e-2 .. 1e6
            min_abs = std::min({min_abs, std::abs(a.c0(c)), std::abs(a.c0(-c))});
        }
        min_abs = std::min(min_abs, std::abs(a.c0(0.0)));
        CHECK(min_abs > 0.0);
    }

    SUBCASE("frequency mismatch rejected") {
        Frequency wrong(ctx, {Rational(2)});
        CHECK_THROWS(circular_entry_decomposition(tau, r, wrong));
    }
}
