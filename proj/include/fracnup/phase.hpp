#pragma once

#include <optional>
#include <vector>

#include "fracnup/core.hpp"

namespace fracnup {

// Zeros +-x_n + i y_n (n >= 1), each of multiplicity ell, with x_n = n^alpha and
// y_n = n^{alpha-1} for alpha <= 1/2, y_n = 1 otherwise.
struct PhaseSequence {
    double alpha = 0.5;
    int ell = 1;
    // Cap on tolerance-driven doubling. Indices up to x_n = 2|x| + 2 are always
    // admissible, since those terms are local to the evaluation point.
    long long N_max = 1'000'000;

    static PhaseSequence make(double alpha, int ell, long long N_max = 1'000'000);
    void validate() const;

    double beta() const { return 1.0 / alpha; }
    double x(double n) const;
    double y(double n) const;
};

struct PhaseOptions {
    // Tail tolerance relative to ell (1+|x|)^{k(beta-1)}.
    double rel_tol = 1e-8;
    double higher_rel_tol = 1e-5;  // k >= 2
    // Exact truncation, skipping the tolerance search (must clear the monotone region).
    std::optional<long long> force_N;
};

struct PhaseValue {
    double value = 0.0;
    double tail_bound = 0.0;
    long long N = 0;
};

// phi^{(k)}(x) = ell sum_n [P^{(k-1)}(x - x_n) + P^{(k-1)}(x + x_n)], P_v(u) = v/(u^2+v^2).
// For k = 1 the tail is bracketed by the integrals over [N+1, inf) and [N, inf) and the
// midpoint is added; for k >= 2 the value is the partial sum and the bound is absolute.
PhaseValue phase_derivative(const PhaseSequence& seq, double x, int k, const PhaseOptions& opt = {});

// phi(x) with phi(0) = 0, via the arctangent series.
PhaseValue phase_value(const PhaseSequence& seq, double x, const PhaseOptions& opt = {});

// First n with x_n >= |x| + margin.
long long first_index_beyond(const PhaseSequence& seq, double x, double margin);

struct SeriesCertificate {
    double partial = 0.0;
    double tail_bound = 0.0;
    long long N = 0;
    bool certified = false;
};

// sum over all zeros of Im z / |z|^2, truncated at N.
SeriesCertificate blaschke_condition(const PhaseSequence& seq, long long N);

// sum over all zeros of Im z / |x0 - z|^{2k+2}, truncated at N (0 picks a default).
SeriesCertificate regularity_sum(const PhaseSequence& seq, double x0, int k, long long N = 0);

struct BlaschkeValue {
    cplx value;
    // Bound on |Theta(z) - Theta_N(z)|; infinite when not available.
    double tail_bound = 0.0;
};

BlaschkeValue blaschke_eval(const PhaseSequence& seq, cplx z, long long N);

// k_w(z) = (i / 2 pi) (1 - conj(Theta(w)) Theta(z)) / (z - conj(w)) with truncated Theta.
cplx model_kernel(const PhaseSequence& seq, cplx w, cplx z, long long N);
double model_kernel_norm(const PhaseSequence& seq, cplx w, long long N);

struct PhaseReport {
    int k = 1;
    std::vector<double> xs;
    std::vector<double> values;
    std::vector<double> ratios;
    std::vector<double> tail_bounds;
    double band_lo = 0.0;
    double band_hi = 0.0;
    // Band spread hi/lo over [0, X] divided by that over [0, X/2].
    double drift = 0.0;
    // Regularity sums at each sample (k-th order).
    std::vector<double> regularity_partial;
    std::vector<double> regularity_tail;
    bool regularity_certified = false;
    bool pass = false;
};

PhaseReport verify_P1(const PhaseSequence& seq, double X, int samples, const PhaseOptions& opt = {});
PhaseReport verify_P2(const PhaseSequence& seq, int k, double X, int samples = 24, const PhaseOptions& opt = {});

// Theta^{(n)}(x) / Theta(x) for n = 0..order, from phi-derivatives via complete Bell polynomials.
std::vector<cplx> theta_derivative_ratios(const std::vector<double>& phi_derivs);

struct TheoremBResult {
    double bound = 0.0;
    // Imaginary part left by the sum after conjugation; zero up to rounding.
    double imag_residual = 0.0;
    // Spread of the bound over the phi-derivative tail intervals.
    double tail_spread = 0.0;
};

TheoremBResult theorem_b_bound(const PhaseSequence& seq, double x0, int k, const PhaseOptions& opt = {});

struct DoublingDiag {
    double max_ratio = 0.0;
    double worst_left = 0.0;
    double worst_length = 0.0;
    int intervals = 0;
};

// max over dyadic I in [-X, X] with 2I inside the window of mu(2I)/mu(I), mu = phi' dx.
DoublingDiag doubling_diagnostic(const PhaseSequence& seq, double X, const PhaseOptions& opt = {});

struct TheoremAOptions {
    // Interval lengths for the image density, as fractions of the image span.
    std::vector<double> r_fractions{0.05, 0.1, 0.2};
    double doubling_cap = 16.0;
    int panel_order = 8;
    PhaseOptions phase{1e-6, 1e-5, std::nullopt};
};

struct TheoremAReport {
    bool phi_separated = false;
    double min_image_gap = 0.0;
    double upper_density = 0.0;
    double lower_density = 0.0;
    DoublingDiag doubling;
    // Certified error of the integrated phase, and its distance to the arctangent series.
    double integration_error = 0.0;
    double integration_discrepancy = 0.0;
    std::vector<double> image;
    bool pass = false;
};

TheoremAReport theorem_a_hypotheses(const DiscreteSet& set, const PhaseSequence& seq,
                                    const TheoremAOptions& opt = {});

}  // namespace fracnup
