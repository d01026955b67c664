#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracnup/errors.hpp"
#include "fracnup/quadrature.hpp"
#include "fracnup/special.hpp"

using namespace fracnup;
using std::numbers::pi;

TEST_CASE("zeta functions at classical values") {
    CHECK(riemann_zeta(2.0) == doctest::Approx(pi * pi / 6).epsilon(1e-14));
    CHECK(riemann_zeta(4.0) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-14));
    CHECK(riemann_zeta(0.0) == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(riemann_zeta(-1.0) == doctest::Approx(-1.0 / 12).epsilon(1e-12));
    CHECK(hurwitz_zeta(2.0, 0.5) == doctest::Approx(pi * pi / 2).epsilon(1e-14));
    CHECK(dirichlet_beta(1.0) == doctest::Approx(pi / 4).epsilon(1e-13));
    CHECK(dirichlet_beta(2.0) == doctest::Approx(0.915965594177219015).epsilon(1e-13));
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), Error);
}

TEST_CASE("lattice zeta against direct summation") {
    CHECK(lattice_zeta(1, 3.0) == doctest::Approx(2.0 * riemann_zeta(3.0)).epsilon(1e-14));
    // Z^2 with p = 8: the tail beyond |k|_inf > 200 is below 1e-13.
    double direct = 0.0;
    for (int i = -200; i <= 200; ++i)
        for (int j = -200; j <= 200; ++j)
            if (i || j) direct += std::pow(double(i * i + j * j), -4.0);
    CHECK(lattice_zeta(2, 8.0) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("fractional Laplacian constant") {
    CHECK(frac_laplacian_constant(1, 0.5) == doctest::Approx(1.0 / pi).epsilon(1e-15));
    // d = 2, s = 1/2: 2 Gamma(3/2) / (pi 2 sqrt(pi)) = 1/(2 pi)
    CHECK(frac_laplacian_constant(2, 0.5) == doctest::Approx(0.5 / pi).epsilon(1e-15));
    for (double s : {0.1, 0.25, 0.75, 0.9})
        CHECK(frac_laplacian_constant(1, s) ==
              doctest::Approx(std::pow(4.0, s) * std::tgamma(0.5 + s) / (-std::sqrt(pi) * std::tgamma(-s)))
                  .epsilon(1e-14));
}

TEST_CASE("sphere and ball measures") {
    CHECK(unit_sphere_area(1) == doctest::Approx(2.0));
    CHECK(unit_sphere_area(2) == doctest::Approx(2 * pi));
    CHECK(unit_sphere_area(3) == doctest::Approx(4 * pi));
    CHECK(unit_ball_volume(2) == doctest::Approx(pi));
    CHECK(unit_ball_volume(3) == doctest::Approx(4 * pi / 3));
}

TEST_CASE("Gauss-Legendre rules") {
    for (int n : {1, 4, 16, 64, 200}) {
        const GaussRule& r = gauss_legendre(n);
        REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
        double wsum = 0.0;
        for (double w : r.weights) wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        // exact for degree 2n - 1
        double m = 0.0;
        const int deg = 2 * n - 2;
        for (int i = 0; i < n; ++i) m += r.weights[i] * std::pow(r.nodes[i], deg);
        CHECK(m == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-13));
    }
    CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 3.0, 6, 12) ==
          doctest::Approx(std::exp(3.0) - 1.0).epsilon(1e-14));
}
