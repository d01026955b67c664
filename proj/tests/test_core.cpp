#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fracnup/core.hpp"
#include "fracnup/errors.hpp"
#include "fracnup/io.hpp"

using namespace fracnup;

namespace {

std::vector<double> first_coords(const DiscreteSet& s) {
    std::vector<double> out;
    for (const Point& p : s.points) out.push_back(p[0]);
    return out;
}

}  // namespace

TEST_CASE("grid layout") {
    const Grid g = Grid::make(2, 3.0, 8);
    CHECK(g.h() == doctest::Approx(0.75));
    CHECK(g.size() == 64);
    CHECK(g.coord(0) == -3.0);
    CHECK(g.coord(7) == doctest::Approx(2.25));
    CHECK(g.frequency(0) == 0.0);
    CHECK(g.frequency(4) == doctest::Approx(-4.0 / 6.0));
    const Point x = g.node(9);  // row 1, column 1
    CHECK(x[0] == doctest::Approx(-2.25));
    CHECK(x[1] == doctest::Approx(-2.25));
    CHECK_THROWS_AS(Grid::make(1, 1.0, 7), Error);
    CHECK_THROWS_AS(Grid::make(1, -1.0, 8), Error);
}

TEST_CASE("sampled closed forms match their evaluator") {
    const Grid g = Grid::make(1, 4.0, 64);
    const ClosedForm gf = gaussian(1);
    const SampledFunction f = sample(g, gf);
    REQUIRE(f.values.size() == g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const cplx ref = gf.eval(g.node(j));
        CHECK(std::abs(f.values[j] - ref) <= 1e-12 * (1.0 + std::abs(ref)));
    }
    CHECK(f.max_abs() == doctest::Approx(1.0));
    CHECK(zero_function(g).max_abs() == 0.0);
}

TEST_CASE("matrix algebra") {
    const Matrix A(2, {1.0, 0.3, 0.0, 1.0});
    const Matrix I = A * A.inverse();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(I(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    CHECK(A.determinant() == doctest::Approx(1.0));
    CHECK_THROWS_AS(Matrix(2, {1.0, 2.0, 2.0, 4.0}).inverse(), Error);
}

TEST_CASE("set generators: examples") {
    CHECK(first_coords(generate_set(Generator::z_alpha(1.0), 3.5)) ==
          std::vector<double>{-3, -2, -1, 1, 2, 3});

    const auto lam = first_coords(generate_set(Generator::lambda_alpha_c(1, 1.0, 1.0), std::log(4.0) + 0.01));
    REQUIRE(lam.size() == 6);
    const double expect[] = {-std::log(4.0), -std::log(3.0), -std::log(2.0),
                             std::log(2.0),  std::log(3.0),  std::log(4.0)};
    for (int i = 0; i < 6; ++i) CHECK(lam[i] == doctest::Approx(expect[i]).epsilon(1e-15));

    // Oracle: enumerate n <= R^{1/alpha} and filter.
    const double R = 2.01;
    std::vector<double> oracle;
    for (int n = 1; n <= static_cast<int>(std::pow(R, 2.0)) + 1; ++n)
        if (std::sqrt(double(n)) <= R) {
            oracle.push_back(std::sqrt(double(n)));
            oracle.push_back(-std::sqrt(double(n)));
        }
    std::sort(oracle.begin(), oracle.end());
    const auto z = first_coords(generate_set(Generator::z_alpha(0.5), R));
    REQUIRE(z.size() == 8);
    for (std::size_t i = 0; i < z.size(); ++i) CHECK(z[i] == doctest::Approx(oracle[i]).epsilon(1e-15));
}

TEST_CASE("set generators: errors and invariants") {
    CHECK_THROWS_AS(generate_set(Generator::z_alpha(-1.0), 3.0), Error);
    CHECK_THROWS_AS(generate_set(Generator::lambda_alpha_c(1, 1.0, 0.0), 3.0), Error);
    CHECK_THROWS_AS(generate_set(Generator::z_alpha(1.0), 0.0), Error);
    try {
        generate_set(Generator::z_alpha(0.5), 1e4, 1000);
        FAIL("expected capacity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::capacity);
    }

    const DiscreteSet s = generate_set(Generator::lambda_alpha_c(2, 1.0, 1.0), 3.0);
    CHECK(std::is_sorted(s.points.begin(), s.points.end()));
    CHECK(std::adjacent_find(s.points.begin(), s.points.end()) == s.points.end());
    for (const Point& p : s.points) CHECK(norm(p) <= 3.0);

    const DiscreteSet lat = generate_set(Generator::lattice(Matrix(2, {1.0, 0.3, 0.0, 1.0})), 4.0);
    // Exhaustive: every A k with |A k| <= R appears.
    std::size_t count = 0;
    for (int i = -10; i <= 10; ++i)
        for (int j = -10; j <= 10; ++j)
            if (std::hypot(i + 0.3 * j, double(j)) <= 4.0) ++count;
    CHECK(lat.points.size() == count);
}

TEST_CASE("regenerating a set is bit-identical") {
    for (const Generator& g : {Generator::z_alpha(0.5), Generator::lambda_alpha_c(2, 0.5, 2.0),
                               Generator::lattice(Matrix(2, {2.0, 1.0, 0.0, 1.0}))}) {
        const DiscreteSet a = generate_set(g, 4.0);
        const DiscreteSet b = generate_set(g, 4.0);
        CHECK(a.points == b.points);
    }
}

TEST_CASE("set CSV round trip") {
    const DiscreteSet a = generate_set(Generator::z_alpha(0.5), 5.0);
    std::stringstream ss;
    write_set_csv(ss, a);
    const DiscreteSet b = read_set_csv(ss);
    CHECK(b.points == a.points);
    CHECK(b.generator.name() == "Z_alpha");
    CHECK(b.R == a.R);
    std::stringstream bad("x,y\n1,2\n");
    CHECK_THROWS_AS(read_set_csv(bad), Error);
}

TEST_CASE("change of variables: examples") {
    const auto G = ChangeOfVariables::g_alpha(0.5);
    const auto P11 = ChangeOfVariables::phi_alpha_c(1, 1.0, 1.0);
    CHECK(cov_forward_1d(G, 2.0) == doctest::Approx(4.0));
    CHECK(cov_forward_1d(G, 0.0) == 0.0);
    CHECK(cov_forward_1d(P11, 1.0) == doctest::Approx(std::numbers::e).epsilon(1e-15));
    CHECK(cov_forward_1d(P11, -std::log(3.0)) == doctest::Approx(-3.0).epsilon(1e-15));

    const Point e2 = cov_inverse(ChangeOfVariables::phi_alpha_c(2, 1.0, 1.0), {std::exp(2.0), 0.0});
    CHECK(e2[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(e2[1] == 0.0);
    CHECK(cov_inverse_1d(G, 9.0) == doctest::Approx(3.0));

    // c (log|xi|)^alpha = 2 * 4^{1/2} = 4, confirmed by the round trip.
    const auto P = ChangeOfVariables::phi_alpha_c(2, 0.5, 2.0);
    const Point y = cov_inverse(P, {std::exp(4.0), 0.0});
    CHECK(y[0] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(cov_forward(P, y)[0] == doctest::Approx(std::exp(4.0)).epsilon(1e-14));

    CHECK_THROWS_AS(cov_forward_1d(P11, 0.0), Error);
    CHECK_THROWS_AS(cov_inverse_1d(P11, 1.0), Error);
    CHECK_THROWS_AS(cov_inverse_1d(P11, -0.5), Error);
    CHECK_THROWS_AS(ChangeOfVariables::phi_alpha_c(1, 0.0, 1.0), Error);
}

TEST_CASE("change of variables: round trip on random points") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-6.0, 6.0);
    const ChangeOfVariables maps[] = {ChangeOfVariables::g_alpha(0.5), ChangeOfVariables::g_alpha(0.75),
                                      ChangeOfVariables::phi_alpha_c(1, 1.0, 1.0),
                                      ChangeOfVariables::phi_alpha_c(2, 0.5, 2.0),
                                      ChangeOfVariables::phi_alpha_c(2, 1.0, 2.0)};
    for (const auto& F : maps) {
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            Point x(F.d);
            for (double& c : x) c = U(rng);
            if (F.kind == CovKind::Phi_alpha_c) {
                // keep the image within double range and away from the excluded origin
                const double r = norm(x);
                if (r < 1e-3 || r > 5.0) continue;
            }
            const Point back = cov_inverse(F, cov_forward(F, x));
            for (int k = 0; k < F.d; ++k) worst = std::max(worst, std::abs(back[k] - x[k]) / std::max(1.0, norm(x)));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("change of variables: monotone in d = 1") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-5.0, 5.0);
    std::vector<double> xs(2000);
    for (double& x : xs) x = U(rng);
    std::sort(xs.begin(), xs.end());
    const auto G = ChangeOfVariables::g_alpha(0.4);
    for (std::size_t i = 1; i < xs.size(); ++i) CHECK(cov_forward_1d(G, xs[i]) > cov_forward_1d(G, xs[i - 1]));
    const auto P = ChangeOfVariables::phi_alpha_c(1, 0.5, 1.0);
    double prev = 0.0;
    for (double x : xs) {
        if (x <= 0.0) continue;
        const double y = cov_forward_1d(P, x);
        CHECK(y > prev);
        prev = y;
    }
}

TEST_CASE("dual lattice cells tile the plane") {
    const LatticeSpec L = LatticeSpec::make(Matrix(2, {1.0, 0.3, 0.0, 1.0}));
    CHECK(L.det_A == doctest::Approx(1.0));
    CHECK(L.cell_volume() == doctest::Approx(1.0));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-5.0, 5.0);
    for (int i = 0; i < 10000; ++i) {
        const Point xi{U(rng), U(rng)};
        int hits = 0;
        for (int a = -8; a <= 8; ++a)
            for (int b = -8; b <= 8; ++b) {
                const Point l = L.from_cell_coords({double(a), double(b)});
                if (L.in_cell({xi[0] - l[0], xi[1] - l[1]})) ++hits;
            }
        CHECK(hits == 1);
    }
    CHECK_THROWS_AS(LatticeSpec::make(Matrix(2, {1.0, 1.0, 1.0, 1.0})), Error);
}
