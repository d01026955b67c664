#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracnup/core.hpp"

namespace fracnup {

struct DensityEstimate {
    ChangeOfVariables F;
    std::vector<double> r_values;
    std::vector<double> sup_ratios;
    std::vector<double> inf_ratios;
    double upper = 0.0;
    double lower = 0.0;
    // sup ratios non-increasing and inf ratios non-decreasing in r.
    bool monotone_trend = false;
    std::string center_rule;
};

// Extremal #(F(set) n B)/|B| over closed intervals (d = 1) or closed balls
// (d >= 2) of volume r that lie inside F(R^d) and inside the image of the window.
DensityEstimate estimate_density(const DiscreteSet& set, const ChangeOfVariables& F,
                                 const std::vector<double>& r_values);

// d = 1 only: counts pulled back to the original line, F^{-1}([a, a + r]).
DensityEstimate estimate_density_pullback(const DiscreteSet& set, const ChangeOfVariables& F,
                                          const std::vector<double>& r_values);

struct SeparationResult {
    bool separated = false;
    double min_gap = 0.0;
};

SeparationResult check_separated(const DiscreteSet& set, const std::optional<ChangeOfVariables>& F = std::nullopt);

struct GapCriterion {
    double limsup_weighted_gap = 0.0;
    double liminf_weighted_gap = 0.0;
    // Per dyadic sub-window [2^j, 2^{j+1}) of |lambda|: (window start, max, min).
    std::vector<double> window_start;
    std::vector<double> window_max;
    std::vector<double> window_min;
    // Weighted gap at the outermost positive pair.
    double edge_value = 0.0;
};

GapCriterion gap_criterion(const DiscreteSet& set, const ChangeOfVariables& F);

struct MeshProbe {
    double probe_norm = 0.0;
    double nn_distance = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

struct MeshAudit {
    double C_fit = 0.0;
    int violations = 0;
    std::vector<MeshProbe> probes;
    // True when nearest neighbours came from the generator rather than the window.
    bool generator_backed = false;
};

// Nearest-neighbour distance to the set divided by exp(-delta (|y|/c)^{1/alpha}).
// Sets tagged Lambda_alpha_c are searched through the generator, so probes may
// exceed the stored window; other sets need |y| + nn <= R.
MeshAudit mesh_bound_audit(const DiscreteSet& set, const ChangeOfVariables& F, double delta,
                           const std::vector<Point>& probes);

// Brute-force nearest neighbour over the stored points.
double nearest_distance_bruteforce(const DiscreteSet& set, const Point& y);

enum class DecayModel { exp_power, poly, zero };

struct DecayEnvelope {
    DecayModel model = DecayModel::zero;
    double log_amplitude = 0.0;
    double rate_b = 0.0;      // exp_power: |v| <= A exp(-b |x|^p)
    double exponent_p = 0.0;
    double exponent_q = 0.0;  // poly: |v| <= A |x|^{-q}
    double residual = 0.0;    // max positive deviation of log|v| above the fit
    std::size_t envelope_points = 0;

    std::string model_name() const;
};

DecayEnvelope decay_audit(const std::vector<std::pair<double, double>>& samples, DecayModel model);

}  // namespace fracnup
