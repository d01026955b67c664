#include <doctest.h>

#include <cmath>
#include <random>

#include "fracnup/density.hpp"
#include "fracnup/errors.hpp"
#include "fracnup/nup.hpp"

using namespace fracnup;

namespace {

DiscreteSet integers(double R) { return generate_set(Generator::lattice(Matrix(1, {1.0})), R); }

DiscreteSet image_set(const DiscreteSet& s, const ChangeOfVariables& F) {
    std::vector<Point> pts;
    double R = 0.0;
    for (const Point& p : s.points) {
        pts.push_back(cov_forward(F, p));
        R = std::max(R, norm(pts.back()));
    }
    return make_explicit_set(s.d, pts, R);
}

}  // namespace

TEST_CASE("density: integers") {
    const DensityEstimate e = estimate_density(integers(1e4), ChangeOfVariables::identity(1), {1e3});
    CHECK(e.sup_ratios[0] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(e.inf_ratios[0] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(estimate_density(integers(100), ChangeOfVariables::identity(1), {1e3}), Error);
}

TEST_CASE("density: straightened sparse sets have unit density") {
    const DensityEstimate z =
        estimate_density(generate_set(Generator::z_alpha(0.5), 100.0), ChangeOfVariables::g_alpha(0.5), {1e2, 1e3});
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(std::abs(z.sup_ratios[i] - 1.0) <= 0.02);
        CHECK(std::abs(z.inf_ratios[i] - 1.0) <= 0.02);
    }
    const DensityEstimate l = estimate_density(generate_set(Generator::lambda_alpha_c(1, 1.0, 2.0), 20.0),
                                               ChangeOfVariables::phi_alpha_c(1, 1.0, 2.0), {1e3});
    CHECK(std::abs(l.sup_ratios[0] - 1.0) <= 0.02);
    CHECK(std::abs(l.inf_ratios[0] - 1.0) <= 0.02);
    CHECK(l.upper >= l.lower);
}

TEST_CASE("separation") {
    const auto zs = check_separated(integers(50));
    CHECK(zs.separated);
    CHECK(zs.min_gap == doctest::Approx(1.0));

    const DiscreteSet z = generate_set(Generator::z_alpha(0.5), 100.0);
    const auto raw = check_separated(z);
    // Oracle: the outermost gap sqrt(10^4) - sqrt(10^4 - 1).
    CHECK(raw.min_gap == doctest::Approx(100.0 - std::sqrt(9999.0)).epsilon(1e-12));
    CHECK(raw.min_gap == doctest::Approx(0.005).epsilon(1e-3));

    const auto img = check_separated(z, ChangeOfVariables::g_alpha(0.5));
    CHECK(img.separated);
    CHECK(img.min_gap == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(check_separated(make_explicit_set(1, {}, 1.0)), Error);
}

TEST_CASE("weighted gap criterion") {
    const auto zi = gap_criterion(integers(50), ChangeOfVariables::identity(1));
    CHECK(zi.limsup_weighted_gap == 1.0);
    CHECK(zi.liminf_weighted_gap == 1.0);

    const auto za = gap_criterion(generate_set(Generator::z_alpha(0.5), 100.0), ChangeOfVariables::g_alpha(0.5));
    // 2 sqrt(n) (sqrt(n+1) - sqrt(n)) at n = 9999.
    CHECK(za.edge_value == doctest::Approx(2.0 * std::sqrt(9999.0) * (100.0 - std::sqrt(9999.0))).epsilon(1e-10));
    CHECK(std::abs(za.limsup_weighted_gap - 1.0) < 1e-3);
    CHECK(std::abs(za.liminf_weighted_gap - 1.0) < 1e-3);

    const auto lg = gap_criterion(generate_set(Generator::lambda_alpha_c(1, 1.0, 1.0), 12.0),
                                  ChangeOfVariables::phi_alpha_c(1, 1.0, 1.0));
    const double n = std::floor(std::exp(12.0)) - 1.0;
    CHECK(lg.edge_value == doctest::Approx(n * std::log1p(1.0 / n)).epsilon(1e-9));
    CHECK(std::abs(lg.limsup_weighted_gap - 1.0) < 1e-3);
    CHECK(std::abs(lg.liminf_weighted_gap - 1.0) < 1e-3);
    CHECK_THROWS_AS(gap_criterion(make_explicit_set(1, {{1.0}}, 2.0), ChangeOfVariables::identity(1)), Error);
}

TEST_CASE("mesh bound audit") {
    const auto F1 = ChangeOfVariables::phi_alpha_c(1, 1.0, 1.0);
    const DiscreteSet s1 = generate_set(Generator::lambda_alpha_c(1, 1.0, 1.0), 9.0);
    const auto onset = mesh_bound_audit(s1, F1, 0.5, {s1.points[s1.points.size() / 2 + 3]});
    CHECK(onset.probes[0].nn_distance == 0.0);
    CHECK(onset.probes[0].ratio == 0.0);

    std::vector<Point> probes;
    for (int i = 0; i < 60; ++i) {
        const double r = 2.0 + 6.0 * i / 59.0 + 1e-3;
        probes.push_back({i % 2 ? r : -r});
    }
    const MeshAudit a = mesh_bound_audit(s1, F1, 0.5, probes);
    CHECK(a.violations == 0);
    CHECK(a.C_fit < 1.0);
    for (std::size_t i = 0; i < probes.size(); ++i)
        CHECK(a.probes[i].nn_distance == doctest::Approx(nearest_distance_bruteforce(s1, probes[i])).epsilon(1e-12));

    // d = 2: generator-backed search against brute force on a window of radius 6.
    const auto F2 = ChangeOfVariables::phi_alpha_c(2, 1.0, 1.0);
    const DiscreteSet s2 = generate_set(Generator::lambda_alpha_c(2, 1.0, 1.0), 6.0);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> U(0.0, 2.0 * std::acos(-1.0));
    std::vector<Point> p2;
    for (int i = 0; i < 100; ++i) {
        const double r = 2.0 + 3.0 * i / 99.0, t = U(rng);
        p2.push_back({r * std::cos(t), r * std::sin(t)});
    }
    const MeshAudit b = mesh_bound_audit(s2, F2, 0.5, p2);
    CHECK(b.generator_backed);
    CHECK(b.violations == 0);
    for (std::size_t i = 0; i < p2.size(); ++i)
        CHECK(b.probes[i].nn_distance == doctest::Approx(nearest_distance_bruteforce(s2, p2[i])).epsilon(1e-12));

    CHECK_THROWS_AS(mesh_bound_audit(s1, ChangeOfVariables::g_alpha(0.5), 0.5, probes), Error);
}

TEST_CASE("decay audit") {
    std::vector<std::pair<double, double>> zeros;
    for (int i = 1; i <= 20; ++i) zeros.emplace_back(i, 0.0);
    const DecayEnvelope z = decay_audit(zeros, DecayModel::exp_power);
    CHECK(z.model == DecayModel::zero);
    CHECK(z.residual == 0.0);

    std::vector<std::pair<double, double>> ex;
    for (int i = 0; i < 40; ++i) {
        const double x = std::pow(10.0, -0.5 + 1.5 * i / 39.0);
        ex.emplace_back(x, std::exp(-x));
    }
    const DecayEnvelope e = decay_audit(ex, DecayModel::exp_power);
    CHECK(e.rate_b == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(e.exponent_p == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(e.residual <= 1e-8);

    std::vector<std::pair<double, double>> po;
    for (int i = 0; i < 30; ++i) {
        const double x = std::pow(10.0, 2.0 * i / 29.0);
        po.emplace_back(x, 3.0 * std::pow(x, -2.5));
    }
    const DecayEnvelope p = decay_audit(po, DecayModel::poly);
    CHECK(p.exponent_q == doctest::Approx(2.5).epsilon(1e-10));

    CHECK_THROWS_AS(decay_audit({{1.0, 1.0}, {2.0, 0.5}}, DecayModel::poly), Error);
}

TEST_CASE("decay of the operator image on sparse probes") {
    // (-Delta)^{1/2} f for the lattice witness, sampled at +-n^{1/2}.
    const NupFunction nup = build_nup(LatticeSpec::make(Matrix(1, {1.0})), 0.5,
                                      choose_bump(LatticeSpec::make(Matrix(1, {1.0})), {1.0}));
    std::vector<Point> xs;
    for (int n = 4; n <= 400; n += 4) {
        xs.push_back({std::sqrt(double(n))});
        xs.push_back({-std::sqrt(double(n))});
    }
    const NupValues v = evaluate_nup(nup, xs, {}, 20);
    std::vector<std::pair<double, double>> samples;
    for (std::size_t i = 0; i < xs.size(); ++i) samples.emplace_back(std::abs(xs[i][0]), std::abs(v.Tf[i]));
    const DecayEnvelope env = decay_audit(samples, DecayModel::poly);
    // Member of the |x|^{j(1 - 1/alpha)} = |x|^{-j} family with j >= 1.
    CHECK(env.exponent_q >= 1.0);
}

TEST_CASE("density scales inversely with dilation") {
    // Perturbed integers n + 0.3 sin(n).
    std::vector<Point> base;
    for (int n = -20000; n <= 20000; ++n) base.push_back({n + 0.3 * std::sin(double(n))});
    const DiscreteSet g = make_explicit_set(1, base, 20001.0);
    const auto e1 = estimate_density(g, ChangeOfVariables::identity(1), {100.0, 1000.0});
    for (double c : {2.0, 3.0}) {
        std::vector<Point> scaled;
        for (const Point& p : base) scaled.push_back({c * p[0]});
        const auto ec = estimate_density(make_explicit_set(1, scaled, c * 20001.0), ChangeOfVariables::identity(1),
                                         {c * 100.0, c * 1000.0});
        CHECK(ec.upper == doctest::Approx(e1.upper / c).epsilon(0.01));
        CHECK(ec.lower == doctest::Approx(e1.lower / c).epsilon(0.01));
    }
}

TEST_CASE("window monotonicity for lattices") {
    const auto z = estimate_density(integers(1e4), ChangeOfVariables::identity(1), {10.5, 100.5, 1000.5});
    CHECK(z.monotone_trend);
    const LatticeSpec L = LatticeSpec::make(Matrix(2, {1.0, 0.3, 0.0, 1.0}));
    const auto dual = generate_set(Generator::lattice(L.dual), 60.0);
    const auto e = estimate_density(dual, ChangeOfVariables::identity(2), {50.0, 200.0, 800.0});
    CHECK(e.monotone_trend);
    CHECK(e.upper == doctest::Approx(1.0 / std::abs(L.dual.determinant())).epsilon(0.15));
}

TEST_CASE("subset density does not exceed the full set") {
    const DiscreteSet z = generate_set(Generator::z_alpha(0.5), 100.0);
    std::vector<Point> sub;
    for (std::size_t i = 0; i < z.points.size(); ++i)
        if (i % 3 != 0) sub.push_back(z.points[i]);
    const DiscreteSet zs = make_explicit_set(1, sub, 100.0);
    const auto G = ChangeOfVariables::g_alpha(0.5);
    const auto full = estimate_density(z, G, {1e2, 1e3});
    const auto part = estimate_density(zs, G, {1e2, 1e3});
    CHECK(part.upper <= full.upper + 1e-12);
    CHECK(part.lower <= full.lower + 1e-12);
}

TEST_CASE("pulled-back intervals reproduce the image counts") {
    const DiscreteSet z = generate_set(Generator::z_alpha(0.5), 100.0);
    const auto G = ChangeOfVariables::g_alpha(0.5);
    const std::vector<double> rs{50.0, 500.0};
    const auto direct = estimate_density(image_set(z, G), ChangeOfVariables::identity(1), rs);
    const auto pulled = estimate_density_pullback(z, G, rs);
    const auto mapped = estimate_density(z, G, rs);
    CHECK(pulled.sup_ratios == direct.sup_ratios);
    CHECK(pulled.inf_ratios == direct.inf_ratios);
    CHECK(mapped.sup_ratios == direct.sup_ratios);
    CHECK(mapped.inf_ratios == direct.inf_ratios);
}
