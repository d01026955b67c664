#pragma once

namespace fracnup {

// Hurwitz zeta zeta(z, a) for real z != 1 and a > 0, by Euler-Maclaurin.
// Reliable for z in roughly (-10, 60).
double hurwitz_zeta(double z, double a);

double riemann_zeta(double z);

// Dirichlet beta(z) = sum_{n>=0} (-1)^n (2n+1)^{-z}, continued to real z.
double dirichlet_beta(double z);

// Analytic continuation of sum_{k in Z^d, k != 0} |k|^{-p}; d = 1 or 2.
double lattice_zeta(int d, double p);

// c(d, s) = 4^s Gamma(d/2 + s) / (-pi^{d/2} Gamma(-s)), s in (0, 1).
double frac_laplacian_constant(int d, double s);

// Surface measure of the unit sphere S^{d-1}.
double unit_sphere_area(int d);

// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

}  // namespace fracnup
