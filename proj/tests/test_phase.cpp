#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracnup/density.hpp"
#include "fracnup/errors.hpp"
#include "fracnup/phase.hpp"

using namespace fracnup;
using std::numbers::pi;

TEST_CASE("sequence parameters") {
    const auto s = PhaseSequence::make(0.4, 2);
    CHECK(s.x(32.0) == doctest::Approx(4.0));
    CHECK(s.y(32.0) == doctest::Approx(std::pow(32.0, -0.6)));
    CHECK(PhaseSequence::make(0.75, 1).y(10.0) == 1.0);
    CHECK_THROWS_AS(PhaseSequence::make(1.5, 1), Error);
    CHECK_THROWS_AS(PhaseSequence::make(0.0, 1), Error);
    CHECK_THROWS_AS(PhaseSequence::make(0.5, 0), Error);
}

TEST_CASE("phase derivative at the origin against a partial sum") {
    const auto s = PhaseSequence::make(0.5, 1);
    const PhaseValue v = phase_derivative(s, 0.0, 1);
    // Oracle: 2 sum n^{-1/2}/(n + 1/n) to M = 10^6, tail by Euler-Maclaurin on
    // f(t) = 2 t^{-3/2} (1 - t^{-2} + ...).
    const long long M = 1'000'000;
    double partial = 0.0;
    for (long long n = 1; n <= M; ++n) {
        const double t = static_cast<double>(n);
        partial += 2.0 / std::sqrt(t) / (t + 1.0 / t);
    }
    const double m = static_cast<double>(M);
    auto f = [](double t) { return 2.0 / std::sqrt(t) / (t + 1.0 / t); };
    const double integral = 4.0 / std::sqrt(m) - 0.8 * std::pow(m, -2.5);
    const double tail = integral - 0.5 * f(m) + (1.5 * 2.0 * std::pow(m, -2.5)) / 12.0;
    const double oracle = partial + tail;
    CHECK(std::abs(v.value - oracle) <= std::max(v.tail_bound, 1e-12) + 1e-12);
    CHECK(v.tail_bound <= 1e-8 * 1.0);
    CHECK(v.value == doctest::Approx(4.01230531035512).epsilon(1e-12));
}

TEST_CASE("phase derivative: sign, symmetry, linearity in ell") {
    const auto s1 = PhaseSequence::make(0.5, 1);
    const auto s4 = PhaseSequence::make(0.5, 4);
    PhaseOptions fixed;
    fixed.force_N = 200000;
    for (double x : {0.0, 0.7, 3.0, 25.0, 140.0}) {
        const PhaseValue a = phase_derivative(s1, x, 1);
        CHECK(a.value > 0.0);
        const PhaseValue b = phase_derivative(s1, -x, 1);
        CHECK(std::abs(a.value - b.value) <= a.tail_bound + b.tail_bound + 1e-14 * a.value);
        for (int k = 1; k <= 4; ++k) {
            const double v1 = phase_derivative(s1, x, k, fixed).value;
            CHECK(phase_derivative(s4, x, k, fixed).value == 4.0 * v1);
            const double vm = phase_derivative(s1, -x, k, fixed).value;
            // phi^{(k)} is even for odd k and odd for even k.
            const double sign = k % 2 ? 1.0 : -1.0;
            CHECK(std::abs(vm - sign * v1) <= 1e-12 * (std::abs(v1) + 1e-12));
        }
    }
}

TEST_CASE("tail bounds are sound under truncation doubling") {
    for (double alpha : {0.4, 0.5, 0.75}) {
        const auto s = PhaseSequence::make(alpha, 1);
        for (double x : {0.0, 5.0, 60.0})
            for (int k : {1, 2, 3}) {
                PhaseOptions o1, o2;
                o1.force_N = 40000;
                o2.force_N = 80000;
                const PhaseValue a = phase_derivative(s, x, k, o1);
                const PhaseValue b = phase_derivative(s, x, k, o2);
                CHECK(std::abs(b.value - a.value) <= a.tail_bound + 1e-14 * std::abs(a.value));
            }
        const PhaseValue p1 = phase_value(s, 30.0), p2 = phase_value(s, 30.0, {1e-9, 1e-5, std::nullopt});
        CHECK(std::abs(p1.value - p2.value) <= p1.tail_bound);
    }
}

TEST_CASE("truncation failure suggests a larger N") {
    auto s = PhaseSequence::make(0.5, 1, 2000);
    try {
        phase_derivative(s, 0.0, 1, {1e-14, 1e-5, std::nullopt});
        FAIL("expected truncation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::truncation);
        CHECK(std::string(e.what()).find("suggested N") != std::string::npos);
    }
}

TEST_CASE("phase is increasing and matches the integrated derivative") {
    const auto s = PhaseSequence::make(0.5, 1);
    double prev = -1e300;
    for (int i = -40; i <= 40; ++i) {
        const double v = phase_value(s, 2.5 * i).value;
        CHECK(v > prev);
        prev = v;
    }
    // phi(3) = int_0^3 phi'(t) dt.
    double integral = 0.0;
    const int panels = 24;
    for (int p = 0; p < panels; ++p) {
        const double a = 3.0 * p / panels, b = 3.0 * (p + 1) / panels;
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        const double g = std::sqrt(3.0 / 5.0);
        integral += h * (5.0 * phase_derivative(s, c - g * h, 1).value + 8.0 * phase_derivative(s, c, 1).value +
                         5.0 * phase_derivative(s, c + g * h, 1).value) /
                    9.0;
    }
    CHECK(phase_value(s, 3.0).value == doctest::Approx(integral).epsilon(1e-6));
}

TEST_CASE("property P1") {
    for (double alpha : {0.5, 0.75}) {
        const auto s = PhaseSequence::make(alpha, 1);
        const PhaseReport r = verify_P1(s, 1000.0, 24);
        CHECK(r.pass);
        CHECK(r.band_lo > 0.0);
        CHECK(r.band_hi / r.band_lo < 10.0);
        CHECK(r.drift < 10.0);
    }
    const PhaseReport r1 = verify_P1(PhaseSequence::make(0.5, 1), 100.0, 12);
    const PhaseReport r4 = verify_P1(PhaseSequence::make(0.5, 4), 100.0, 12);
    for (std::size_t i = 0; i < r1.xs.size(); ++i) {
        CHECK(r4.xs[i] == r1.xs[i]);
        CHECK(r4.values[i] == doctest::Approx(4.0 * r1.values[i]).epsilon(1e-8));
        CHECK(r4.ratios[i] == doctest::Approx(r1.ratios[i]).epsilon(1e-8));
    }
}

TEST_CASE("property P2 and the regularity sums") {
    const auto s = PhaseSequence::make(0.5, 1);
    const PhaseReport p1 = verify_P1(s, 100.0, 16);
    const PhaseReport q1 = verify_P2(s, 1, 100.0, 16);
    CHECK(q1.band_hi == doctest::Approx(p1.band_hi).epsilon(1e-6));

    const PhaseReport q2 = verify_P2(s, 2, 100.0);
    CHECK(q2.pass);
    CHECK(q2.band_hi < 10.0);
    CHECK(q2.regularity_certified);

    // Oracle for x0 = 0, k = 1: 2 sum n^{-1/2} / (n + 1/n)^2, tail below 2/(1.5 M^{1.5}).
    const SeriesCertificate c = regularity_sum(s, 0.0, 1, 100000);
    CHECK(c.certified);
    double direct = 0.0;
    for (long long n = 1; n <= 100000; ++n) {
        const double t = static_cast<double>(n);
        direct += 2.0 / std::sqrt(t) / std::pow(t + 1.0 / t, 2.0);
    }
    CHECK(c.partial == doctest::Approx(direct).epsilon(1e-13));
    CHECK(c.tail_bound <= 2.0 / 1.5 * std::pow(1e5, -1.5) * 1.01);
    for (int k = 0; k <= 3; ++k) CHECK(regularity_sum(s, 0.0, k).certified);
}

TEST_CASE("Blaschke condition partial sums increase below the certified limit") {
    const auto s = PhaseSequence::make(0.75, 1);
    double prev = 0.0;
    double limit = 1e300;
    for (long long N : {10, 100, 1000, 10000}) {
        const SeriesCertificate c = blaschke_condition(s, N);
        CHECK(c.partial > prev);
        CHECK(c.partial + c.tail_bound <= limit * (1.0 + 1e-12));
        CHECK(c.certified);
        prev = c.partial;
        limit = c.partial + c.tail_bound;
    }
}

TEST_CASE("Blaschke product") {
    const auto s = PhaseSequence::make(0.5, 2);
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double x = -200.0 + 0.4 * i;
        worst = std::max(worst, std::abs(std::abs(blaschke_eval(s, cplx(x, 0.0), 10000).value) - 1.0));
    }
    CHECK(worst <= 1e-12);
    CHECK(std::abs(blaschke_eval(s, cplx(1.0, 1.0), 10).value) == 0.0);

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> U(-30.0, 30.0), V(0.01, 10.0);
    for (int i = 0; i < 100; ++i) {
        const BlaschkeValue b = blaschke_eval(s, cplx(U(rng), V(rng)), 20000);
        CHECK(std::abs(b.value) < 1.0);
    }
    try {
        blaschke_eval(s, cplx(1.0, -1.0), 10);
        FAIL("expected domain error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
    }
}

TEST_CASE("derivative bound for the model space") {
    const auto s1 = PhaseSequence::make(0.5, 1);
    for (double x0 : {0.0, 2.0, 9.0}) {
        const TheoremBResult b = theorem_b_bound(s1, x0, 0);
        const double dphi = phase_derivative(s1, x0, 1).value;
        CHECK(b.bound == doctest::Approx(std::sqrt(dphi / pi)).epsilon(1e-12));
        CHECK(b.imag_residual <= 1e-12);

        // Normalized reproducing kernel at x0 + i, built from a truncated product.
        const long long N = 200000;
        const cplx w(x0, 1.0);
        const double nrm = model_kernel_norm(s1, w, N);
        const double fx0 = std::abs(model_kernel(s1, w, cplx(x0, 0.0), N)) / nrm;
        CHECK(fx0 <= b.bound);

        const TheoremBResult b2 = theorem_b_bound(PhaseSequence::make(0.5, 2), x0, 0);
        CHECK(b2.bound == doctest::Approx(std::sqrt(2.0) * b.bound).epsilon(1e-12));
    }
    for (int k = 1; k <= 3; ++k) {
        const TheoremBResult b = theorem_b_bound(s1, 1.0, k);
        CHECK(b.bound > 0.0);
        CHECK(b.imag_residual <= 1e-10 * b.bound * b.bound);
        CHECK(b.tail_spread <= 1e-3 * b.bound);
    }
}

TEST_CASE("Theta derivative ratios from phase derivatives") {
    // Theta = e^{2 i phi} with phi = x^2/2: Theta'/Theta = 2 i x, Theta''/Theta = 2 i - 4 x^2.
    const double x = 0.7;
    const auto B = theta_derivative_ratios({x, 1.0, 0.0});
    CHECK(std::abs(B[0] - 1.0) < 1e-15);
    CHECK(std::abs(B[1] - cplx(0.0, 2.0 * x)) < 1e-15);
    CHECK(std::abs(B[2] - cplx(-4.0 * x * x, 2.0)) < 1e-14);
    CHECK(std::abs(B[3] - cplx(0.0, 2.0 * x) * cplx(-4.0 * x * x, 2.0) - cplx(-8.0 * x, 0.0)) < 1e-13);
}

TEST_CASE("interpolation hypotheses on the sparse set") {
    const DiscreteSet z = generate_set(Generator::z_alpha(0.5), 20.0);
    const TheoremAReport r8 = theorem_a_hypotheses(z, PhaseSequence::make(0.5, 8));
    CHECK(r8.phi_separated);
    CHECK(r8.upper_density < 1.0 / pi);
    CHECK(r8.pass);
    CHECK(r8.integration_discrepancy <= 1e-4);
    CHECK(r8.doubling.max_ratio < 16.0);

    const TheoremAReport r1 = theorem_a_hypotheses(z, PhaseSequence::make(0.5, 1));
    CHECK(r1.pass == (r1.phi_separated && r1.upper_density < 1.0 / pi && r1.doubling.max_ratio <= 16.0));
    CHECK(r8.upper_density < r1.upper_density / 4.0);
}

TEST_CASE("doubling diagnostic is bounded") {
    const DoublingDiag d = doubling_diagnostic(PhaseSequence::make(0.5, 1), 200.0);
    CHECK(d.intervals > 100);
    CHECK(d.max_ratio > 1.0);
    CHECK(d.max_ratio < 8.0);
}
