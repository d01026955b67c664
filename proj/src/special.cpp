#include "fracnup/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fracnup/errors.hpp"

namespace fracnup {

namespace {

// B_{2k} / (2k)! for k = 1..12.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
};

}  // namespace

double hurwitz_zeta(double z, double a) {
    require(a > 0.0, ErrorKind::parameter, "hurwitz_zeta needs a > 0");
    require(z != 1.0, ErrorKind::domain, "hurwitz_zeta has a pole at z = 1");
    constexpr int N = 30;
    double sum = 0.0;
    for (int n = 0; n < N; ++n) sum += std::pow(n + a, -z);
    const double q = N + a;
    sum += std::pow(q, 1.0 - z) / (z - 1.0);
    sum += 0.5 * std::pow(q, -z);
    // Rising product z (z+1) ... (z+2k-2) times q^{-z-2k+1}.
    double rising = z;
    double qpow = std::pow(q, -z - 1.0);
    for (int k = 1; k <= static_cast<int>(kBernoulliOverFactorial.size()); ++k) {
        sum += kBernoulliOverFactorial[k - 1] * rising * qpow;
        rising *= (z + 2.0 * k - 1.0) * (z + 2.0 * k);
        qpow /= q * q;
    }
    return sum;
}

double riemann_zeta(double z) { return hurwitz_zeta(z, 1.0); }

double dirichlet_beta(double z) {
    // The Hurwitz poles cancel at z = 1.
    if (z == 1.0) return std::numbers::pi / 4.0;
    return std::pow(4.0, -z) * (hurwitz_zeta(z, 0.25) - hurwitz_zeta(z, 0.75));
}

double lattice_zeta(int d, double p) {
    if (d == 1) return 2.0 * riemann_zeta(p);
    if (d == 2) return 4.0 * riemann_zeta(0.5 * p) * dirichlet_beta(0.5 * p);
    fail(ErrorKind::parameter, "lattice_zeta implemented for d = 1, 2 only");
}

double frac_laplacian_constant(int d, double s) {
    require(d >= 1, ErrorKind::parameter, "dimension must be positive");
    require(s > 0.0 && s < 1.0, ErrorKind::parameter, "s must lie in (0, 1)");
    return std::pow(4.0, s) * std::tgamma(0.5 * d + s) /
           (-std::pow(std::numbers::pi, 0.5 * d) * std::tgamma(-s));
}

double unit_sphere_area(int d) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

double unit_ball_volume(int d) {
    return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

}  // namespace fracnup
