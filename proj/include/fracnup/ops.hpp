#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fracnup/core.hpp"

namespace fracnup {

enum class MultiplierKind { frac_laplacian, shifted_frac, unimodular, mixed, custom_radial };

// Symbol m(xi) from the catalog. All kinds are radial.
//   frac_laplacian  |xi|^{2s}
//   shifted_frac    (|xi|^2 + lambda)^s
//   unimodular      exp(i (|xi|^2 + lambda)^s)
//   mixed           exp(i |xi|^{2s}) / (1 + |xi|^2)^{gamma/2}
//   custom_radial   piecewise-linear table in |xi|, constant beyond the last entry
struct MultiplierSpec {
    MultiplierKind kind = MultiplierKind::frac_laplacian;
    int d = 1;
    double s = 0.5;
    double lambda = 0.0;
    double gamma = 1.0;
    std::vector<double> table_r;
    std::vector<cplx> table_m;

    static MultiplierSpec frac_laplacian(int d, double s);
    static MultiplierSpec shifted_frac(int d, double s, double lambda);
    static MultiplierSpec unimodular(int d, double s, double lambda);
    static MultiplierSpec mixed(int d, double s, double gamma);
    static MultiplierSpec custom_radial(int d, std::vector<double> r, std::vector<cplx> m);

    void validate() const;
    cplx radial(double r) const;
    cplx operator()(const Point& xi) const { return radial(norm(xi)); }
    std::string name() const;
    // p with |m(xi)| <= C (1 + |xi|)^p.
    double growth_exponent() const;
    // True when the symbol is exactly |xi|^{2s} (frac_laplacian, or shifted_frac at lambda = 0).
    bool is_pure_power() const;
};

struct SpectralOptions {
    double tail_tolerance = 1e-10;
    bool check_tail = true;
    // Replace the xi = 0 weight of |xi|^{2s} by the lattice-zeta endpoint
    // correction of the trapezoid rule (d = 1, 2).
    bool origin_correction = true;
};

// Largest |f| on the outermost grid layer divided by max |f|.
double boundary_ratio(const SampledFunction& f);

SampledFunction apply_symbol(const SampledFunction& f, const std::function<cplx(const Point&)>& symbol,
                             const SpectralOptions& opt = {});
SampledFunction apply_multiplier(const SampledFunction& f, const MultiplierSpec& m,
                                 const SpectralOptions& opt = {});
SampledFunction spectral_derivative(const SampledFunction& f, const SpectralOptions& opt = {});
SampledFunction hilbert_transform(const SampledFunction& f, const SpectralOptions& opt = {});

// Fraction of spectral energy on xi < 0 (d = 1).
double negative_spectral_mass(const SampledFunction& f);

struct QuadratureConfig {
    double near_radius = 0.5;
    double far_cutoff = 12.0;
    int panel_order = 12;
    bool pv_symmetric = true;
    double far_panel_width = 0.25;
    // Radius below which the symmetric second difference is replaced by a
    // polynomial fit in rho^2 and integrated exactly.
    double taylor_radius = 0.02;
    int angular_nodes = 256;
    int subdivisions = 1;
    double target_abs = 1e-6;

    void validate() const;
    QuadratureConfig refined() const;
};

struct SingularResult {
    cplx value;
    double error_estimate = 0.0;
    double tail_bound = 0.0;
    double refinement_change = 0.0;
};

// c(d, s) (2 pi)^{-2s} p.v. int (f(x) - f(w)) / |x - w|^{d+2s} dw, the same operator as the
// multiplier |xi|^{2s} under f^(xi) = int f(x) exp(-2 pi i x.xi) dx.
SingularResult frac_laplacian_singular(const ClosedForm& f, int d, double s, const Point& x,
                                       const QuadratureConfig& q = {});
SingularResult frac_laplacian_singular(const SampledFunction& f, double s, const Point& x,
                                       const QuadratureConfig& q = {});

double extension_constant(double s);

struct HalflineReport {
    double hilbert_residual = 0.0;      // max |Hf + i f|
    double half_laplacian_residual = 0.0;  // max |2 pi (-Delta)^{1/2} f - (Hf)'|
    double derivative_residual = 0.0;   // max |(-Delta)^{1/2} f - f' / (2 pi i)|
    double f_sup = 0.0;
    double negative_mass = 0.0;

    double max_relative() const;
};

HalflineReport verify_halfline_identities(const SampledFunction& f, double mass_tolerance = 1e-10,
                                          const SpectralOptions& opt = {});

}  // namespace fracnup
