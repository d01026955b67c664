#include "fracnup/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "fracnup/errors.hpp"
#include "fracnup/special.hpp"

namespace fracnup {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Segment {
    double lo, hi;
};

// Image of the radius-R window under F, minus the Phi exclusion zone.
std::vector<Segment> admissible_segments_1d(const ChangeOfVariables& F, double R, double r) {
    switch (F.kind) {
        case CovKind::identity: return {{-R, R}};
        case CovKind::G_alpha: {
            const double e = cov_forward_1d(F, R);
            return {{-e, e}};
        }
        case CovKind::Phi_alpha_c: {
            const double e = cov_forward_1d(F, R);
            const double inner = 1.0 + r;
            if (e <= inner) return {};
            return {{-e, -inner}, {inner, e}};
        }
    }
    return {};
}

struct Extremes {
    long long max_count = 0;
    long long min_count = std::numeric_limits<long long>::max();
};

// Image points come out of a map and sit a few ulps off their exact positions; a point
// within this distance of an interval endpoint counts as on it.
double slack(double v) { return 1e-9 * std::max(1.0, std::abs(v)); }

// Counting with a pluggable membership test keeps the image and pulled-back
// estimators on identical candidate positions.
template <class CountClosed, class CountLeftOpen>
Extremes interval_extremes(const std::vector<double>& ys, const std::vector<Segment>& segs, double r,
                           CountClosed&& closed, CountLeftOpen&& left_open) {
    Extremes ex;
    bool any = false;
    for (const Segment& s : segs) {
        if (s.hi - s.lo < r) continue;
        const double amax = s.hi - r;
        auto consider = [&](double a, bool edge) {
            if (a < s.lo || a > amax) return;
            any = true;
            const long long cc = closed(a, a + r);
            ex.max_count = std::max(ex.max_count, cc);
            ex.min_count = std::min(ex.min_count, edge ? cc : left_open(a, a + r));
        };
        consider(s.lo, false);
        consider(amax, true);
        auto first = std::lower_bound(ys.begin(), ys.end(), s.lo);
        auto last = std::upper_bound(ys.begin(), ys.end(), s.hi);
        for (auto it = first; it != last; ++it) {
            consider(*it, false);
            consider(*it - r, false);
        }
    }
    require(any, ErrorKind::coverage,
            "window too small: no admissible interval of length " + std::to_string(r));
    return ex;
}

void finish_estimate(DensityEstimate& est) {
    est.upper = est.sup_ratios.back();
    est.lower = est.inf_ratios.back();
    est.monotone_trend = true;
    for (std::size_t i = 1; i < est.r_values.size(); ++i) {
        if (est.sup_ratios[i] > est.sup_ratios[i - 1] + 1e-12) est.monotone_trend = false;
        if (est.inf_ratios[i] < est.inf_ratios[i - 1] - 1e-12) est.monotone_trend = false;
    }
}

void check_r_values(const std::vector<double>& r_values) {
    require(!r_values.empty(), ErrorKind::parameter, "need at least one window size");
    for (std::size_t i = 0; i < r_values.size(); ++i) {
        require(r_values[i] > 0.0, ErrorKind::parameter, "window sizes must be positive");
        if (i) require(r_values[i] > r_values[i - 1], ErrorKind::parameter, "window sizes must increase");
    }
}

std::vector<double> image_1d(const DiscreteSet& set, const ChangeOfVariables& F) {
    std::vector<double> ys;
    ys.reserve(set.points.size());
    for (const Point& p : set.points) ys.push_back(cov_forward_1d(F, p[0]));
    std::sort(ys.begin(), ys.end());
    return ys;
}

// Uniform bucket grid for closed-ball counting in d >= 2.
class BucketIndex {
public:
    BucketIndex(const std::vector<Point>& pts, double cell) : pts_(pts), cell_(cell) {
        for (std::size_t i = 0; i < pts.size(); ++i) buckets_[key(pts[i])].push_back(i);
    }

    long long count_ball(const Point& c, double rad) const {
        long long n = 0;
        visit_ball(c, rad, [&](std::size_t i) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < c.size(); ++k) d2 += (pts_[i][k] - c[k]) * (pts_[i][k] - c[k]);
            if (d2 <= rad * rad) ++n;
        });
        return n;
    }

private:
    std::vector<long long> key(const Point& p) const {
        std::vector<long long> k(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) k[i] = static_cast<long long>(std::floor(p[i] / cell_));
        return k;
    }

    template <class V>
    void visit_ball(const Point& c, double rad, V&& visit) const {
        const int d = static_cast<int>(c.size());
        std::vector<long long> lo(d), hi(d), k(d);
        for (int i = 0; i < d; ++i) {
            lo[i] = static_cast<long long>(std::floor((c[i] - rad) / cell_));
            hi[i] = static_cast<long long>(std::floor((c[i] + rad) / cell_));
            k[i] = lo[i];
        }
        while (true) {
            auto it = buckets_.find(k);
            if (it != buckets_.end())
                for (std::size_t i : it->second) visit(i);
            int axis = d - 1;
            while (axis >= 0 && k[axis] == hi[axis]) {
                k[axis] = lo[axis];
                --axis;
            }
            if (axis < 0) break;
            ++k[axis];
        }
    }

    const std::vector<Point>& pts_;
    double cell_;
    std::map<std::vector<long long>, std::vector<std::size_t>> buckets_;
};

double image_radius(const ChangeOfVariables& F, double R) {
    if (F.kind == CovKind::Phi_alpha_c) return std::exp(std::pow(R / F.c, 1.0 / F.alpha));
    return R;
}

DensityEstimate estimate_balls(const DiscreteSet& set, const ChangeOfVariables& F,
                               const std::vector<double>& r_values) {
    const int d = set.d;
    std::vector<Point> ys;
    ys.reserve(set.points.size());
    for (const Point& p : set.points) ys.push_back(cov_forward(F, p));
    const double outer = image_radius(F, set.R);

    DensityEstimate est;
    est.F = F;
    est.r_values = r_values;
    est.center_rule = "grid pitch r^(1/d)/8 plus image points; closed balls";
    for (double r : r_values) {
        const double rad = std::pow(r / unit_ball_volume(d), 1.0 / d);
        const double inner = (F.kind == CovKind::Phi_alpha_c) ? 1.0 + std::pow(r, 1.0 / d) : -kInf;
        auto admissible = [&](const Point& c) {
            const double n = norm(c);
            return n + rad <= outer && n - rad >= inner;
        };
        const double pitch = std::pow(r, 1.0 / d) / 8.0;
        const double span = outer - rad;
        require(span > 0.0, ErrorKind::coverage, "window too small for the requested ball volume");
        const auto steps = static_cast<long long>(std::floor(span / pitch));
        const double grid_count = std::pow(2.0 * steps + 1.0, d);
        require(grid_count <= 4e6, ErrorKind::capacity, "too many candidate ball centers");

        BucketIndex index(ys, rad);
        long long mx = 0, mn = std::numeric_limits<long long>::max();
        bool any = false;
        auto consider = [&](const Point& c) {
            if (!admissible(c)) return;
            any = true;
            const long long n = index.count_ball(c, rad);
            mx = std::max(mx, n);
            mn = std::min(mn, n);
        };
        std::vector<long long> k(d, -steps);
        Point c(d);
        while (true) {
            for (int i = 0; i < d; ++i) c[i] = static_cast<double>(k[i]) * pitch;
            consider(c);
            int axis = d - 1;
            while (axis >= 0 && k[axis] == steps) {
                k[axis] = -steps;
                --axis;
            }
            if (axis < 0) break;
            ++k[axis];
        }
        for (const Point& y : ys) consider(y);
        require(any, ErrorKind::coverage, "window too small: no admissible ball of volume " + std::to_string(r));
        est.sup_ratios.push_back(static_cast<double>(mx) / r);
        est.inf_ratios.push_back(static_cast<double>(mn) / r);
    }
    finish_estimate(est);
    return est;
}

}  // namespace

DensityEstimate estimate_density(const DiscreteSet& set, const ChangeOfVariables& F,
                                 const std::vector<double>& r_values) {
    check_r_values(r_values);
    require(set.d == F.d, ErrorKind::parameter, "set and map dimensions differ");
    if (set.d >= 2) return estimate_balls(set, F, r_values);

    const std::vector<double> ys = image_1d(set, F);
    DensityEstimate est;
    est.F = F;
    est.r_values = r_values;
    est.center_rule = "interval endpoints at image points";
    auto closed = [&](double a, double b) {
        return static_cast<long long>(std::upper_bound(ys.begin(), ys.end(), b + slack(b)) -
                                      std::lower_bound(ys.begin(), ys.end(), a - slack(a)));
    };
    auto left_open = [&](double a, double b) {
        return static_cast<long long>(std::upper_bound(ys.begin(), ys.end(), b + slack(b)) -
                                      std::upper_bound(ys.begin(), ys.end(), a + slack(a)));
    };
    for (double r : r_values) {
        const Extremes ex = interval_extremes(ys, admissible_segments_1d(F, set.R, r), r, closed, left_open);
        est.sup_ratios.push_back(static_cast<double>(ex.max_count) / r);
        est.inf_ratios.push_back(static_cast<double>(ex.min_count) / r);
    }
    finish_estimate(est);
    return est;
}

DensityEstimate estimate_density_pullback(const DiscreteSet& set, const ChangeOfVariables& F,
                                          const std::vector<double>& r_values) {
    check_r_values(r_values);
    require(set.d == 1 && F.d == 1, ErrorKind::parameter, "pulled-back estimator is one-dimensional");
    const std::vector<double> ys = image_1d(set, F);
    std::vector<double> xs;
    for (const Point& p : set.points) xs.push_back(p[0]);
    DensityEstimate est;
    est.F = F;
    est.r_values = r_values;
    est.center_rule = "interval endpoints at image points, counted on the original line";
    auto closed = [&](double a, double b) {
        const double pa = cov_inverse_1d(F, a), pb = cov_inverse_1d(F, b);
        return static_cast<long long>(std::upper_bound(xs.begin(), xs.end(), pb + slack(pb)) -
                                      std::lower_bound(xs.begin(), xs.end(), pa - slack(pa)));
    };
    auto left_open = [&](double a, double b) {
        const double pa = cov_inverse_1d(F, a), pb = cov_inverse_1d(F, b);
        return static_cast<long long>(std::upper_bound(xs.begin(), xs.end(), pb + slack(pb)) -
                                      std::upper_bound(xs.begin(), xs.end(), pa + slack(pa)));
    };
    for (double r : r_values) {
        const Extremes ex = interval_extremes(ys, admissible_segments_1d(F, set.R, r), r, closed, left_open);
        est.sup_ratios.push_back(static_cast<double>(ex.max_count) / r);
        est.inf_ratios.push_back(static_cast<double>(ex.min_count) / r);
    }
    finish_estimate(est);
    return est;
}

SeparationResult check_separated(const DiscreteSet& set, const std::optional<ChangeOfVariables>& F) {
    require(set.d == 1, ErrorKind::parameter, "separation check is one-dimensional");
    require(!set.points.empty(), ErrorKind::size, "separation check needs a nonempty set");
    const ChangeOfVariables map = F.value_or(ChangeOfVariables::identity(1));
    const std::vector<double> ys = image_1d(set, map);
    SeparationResult res;
    if (ys.size() < 2) {
        res.separated = true;
        res.min_gap = kInf;
        return res;
    }
    res.min_gap = kInf;
    for (std::size_t i = 1; i < ys.size(); ++i) res.min_gap = std::min(res.min_gap, ys[i] - ys[i - 1]);
    res.separated = res.min_gap > 0.0;
    return res;
}

GapCriterion gap_criterion(const DiscreteSet& set, const ChangeOfVariables& F) {
    require(set.d == 1, ErrorKind::parameter, "gap criterion is one-dimensional");
    require(set.points.size() >= 2, ErrorKind::size, "gap criterion needs at least two points");
    std::vector<double> xs;
    for (const Point& p : set.points) xs.push_back(p[0]);
    for (std::size_t i = 1; i < xs.size(); ++i)
        require(xs[i] > xs[i - 1], ErrorKind::parameter, "points must be strictly increasing");

    // Dyadic window index by the larger |lambda| of the pair.
    std::map<int, std::pair<double, double>> windows;
    GapCriterion g;
    double edge_norm = -1.0;
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        const double outer = std::max(std::abs(xs[j]), std::abs(xs[j + 1]));
        const double w = cov_derivative_1d(F, xs[j]) * (xs[j + 1] - xs[j]);
        const int key = outer < 1.0 ? -1 : static_cast<int>(std::floor(std::log2(outer)));
        auto it = windows.find(key);
        if (it == windows.end()) windows.emplace(key, std::make_pair(w, w));
        else {
            it->second.first = std::max(it->second.first, w);
            it->second.second = std::min(it->second.second, w);
        }
        if (xs[j] >= 0.0 && outer >= edge_norm) {
            edge_norm = outer;
            g.edge_value = w;
        }
    }
    for (const auto& [key, mm] : windows) {
        g.window_start.push_back(key < 0 ? 0.0 : std::ldexp(1.0, key));
        g.window_max.push_back(mm.first);
        g.window_min.push_back(mm.second);
    }
    g.limsup_weighted_gap = g.window_max.back();
    g.liminf_weighted_gap = g.window_min.back();
    return g;
}

// ---- mesh bound ----

double nearest_distance_bruteforce(const DiscreteSet& set, const Point& y) {
    double best = kInf;
    for (const Point& p : set.points) {
        double d2 = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) d2 += (p[i] - y[i]) * (p[i] - y[i]);
        best = std::min(best, d2);
    }
    return std::sqrt(best);
}

namespace {

double nearest_distance_window(const DiscreteSet& set, const Point& y) {
    if (set.d == 1) {
        // Points are lexicographically sorted, which for d = 1 is numeric order.
        auto it = std::lower_bound(set.points.begin(), set.points.end(), y);
        double best = kInf;
        if (it != set.points.end()) best = std::min(best, std::abs((*it)[0] - y[0]));
        if (it != set.points.begin()) best = std::min(best, std::abs((*(it - 1))[0] - y[0]));
        return best;
    }
    return nearest_distance_bruteforce(set, y);
}

// Exact nearest point of c (log|k|)^alpha k/|k| to y, searching only the k
// that can beat the initial guess.
double nearest_distance_generator(const Generator& gen, const Point& y) {
    const int d = gen.d;
    const double rho_y = norm(y);
    require(rho_y > 0.0, ErrorKind::domain, "probe at the origin");
    const auto F = ChangeOfVariables::phi_alpha_c(d, gen.alpha, gen.c);
    auto psi = [&](const std::vector<long long>& k, double& dist) {
        double n2 = 0.0;
        for (long long v : k) n2 += static_cast<double>(v) * static_cast<double>(v);
        if (n2 <= 1.0) return false;
        const double nk = std::sqrt(n2);
        const double rad = gen.c * std::pow(std::log(nk), gen.alpha);
        double d2 = 0.0;
        for (int i = 0; i < d; ++i) {
            const double diff = rad * static_cast<double>(k[i]) / nk - y[i];
            d2 += diff * diff;
        }
        dist = std::sqrt(d2);
        return true;
    };
    auto radial = [&](double r) { return std::exp(std::pow(std::max(r, 0.0) / gen.c, 1.0 / gen.alpha)); };

    // Initial guess: round Phi(y); push outward until |k| >= 2.
    const Point fy = cov_forward(F, y);
    std::vector<long long> k0(d);
    for (int i = 0; i < d; ++i) k0[i] = std::llround(fy[i]);
    double d0 = kInf;
    for (int grow = 0; !psi(k0, d0); ++grow) {
        for (int i = 0; i < d; ++i) k0[i] = std::llround(fy[i] / norm(fy) * (2.0 + grow));
    }
    if (d0 == 0.0) return 0.0;

    const double rho1 = rho_y - d0 > 0.0 ? radial(rho_y - d0) : 0.0;
    const double rho2 = radial(rho_y + d0);
    require(std::isfinite(rho2), ErrorKind::coverage, "probe too far out for the generator search");
    double eps = 2.0;
    if (rho_y - d0 > 0.0) eps = std::min(2.0, d0 / std::sqrt((rho_y - d0) * rho_y));
    const double mid = 0.5 * (rho1 + rho2);
    const double half = 0.5 * (rho2 - rho1) + rho2 * eps + 1.0;
    std::vector<long long> lo(d), hi(d), k(d);
    double box = 1.0;
    for (int i = 0; i < d; ++i) {
        const double center = mid * y[i] / rho_y;
        lo[i] = static_cast<long long>(std::floor(center - half));
        hi[i] = static_cast<long long>(std::ceil(center + half));
        box *= static_cast<double>(hi[i] - lo[i] + 1);
        k[i] = lo[i];
    }
    require(box <= 5e7, ErrorKind::capacity, "generator nearest-neighbour search box too large");
    double best = d0;
    while (true) {
        double dist;
        if (psi(k, dist)) best = std::min(best, dist);
        int axis = d - 1;
        while (axis >= 0 && k[axis] == hi[axis]) {
            k[axis] = lo[axis];
            --axis;
        }
        if (axis < 0) break;
        ++k[axis];
    }
    return best;
}

}  // namespace

MeshAudit mesh_bound_audit(const DiscreteSet& set, const ChangeOfVariables& F, double delta,
                           const std::vector<Point>& probes) {
    require(F.kind == CovKind::Phi_alpha_c, ErrorKind::parameter, "mesh bound audit needs a Phi map");
    require(delta > 0.0 && delta < 1.0, ErrorKind::parameter, "delta must lie in (0, 1)");
    require(set.d == F.d, ErrorKind::parameter, "set and map dimensions differ");
    require(!probes.empty(), ErrorKind::size, "mesh bound audit needs probes");
    MeshAudit audit;
    const Generator& gen = set.generator;
    audit.generator_backed = gen.kind == GeneratorKind::Lambda_alpha_c && gen.alpha == F.alpha && gen.c == F.c;
    for (const Point& y : probes) {
        require(static_cast<int>(y.size()) == set.d, ErrorKind::parameter, "probe dimension mismatch");
        MeshProbe mp;
        mp.probe_norm = norm(y);
        if (audit.generator_backed) {
            mp.nn_distance = nearest_distance_generator(gen, y);
        } else {
            require(!set.points.empty(), ErrorKind::size, "empty set");
            mp.nn_distance = nearest_distance_window(set, y);
            require(mp.probe_norm + mp.nn_distance <= set.R, ErrorKind::coverage,
                    "probe too close to the window edge for a reliable nearest neighbour");
        }
        mp.bound = std::exp(-delta * std::pow(mp.probe_norm / F.c, 1.0 / F.alpha));
        mp.ratio = mp.nn_distance / mp.bound;
        audit.C_fit = std::max(audit.C_fit, mp.ratio);
        audit.probes.push_back(mp);
    }

    // Growth check: a probe in the outer half violates when its ratio exceeds
    // kSlack times the largest ratio seen in the inner half.
    constexpr double kSlack = 4.0;
    std::vector<MeshProbe> sorted = audit.probes;
    std::sort(sorted.begin(), sorted.end(),
              [](const MeshProbe& a, const MeshProbe& b) { return a.probe_norm < b.probe_norm; });
    const std::size_t half = sorted.size() / 2;
    double inner_max = 0.0;
    for (std::size_t i = 0; i < half; ++i) inner_max = std::max(inner_max, sorted[i].ratio);
    if (half > 0)
        for (std::size_t i = half; i < sorted.size(); ++i)
            if (sorted[i].ratio > kSlack * inner_max) ++audit.violations;
    return audit;
}

// ---- decay envelopes ----

std::string DecayEnvelope::model_name() const {
    switch (model) {
        case DecayModel::exp_power: return "exp_power";
        case DecayModel::poly: return "poly";
        case DecayModel::zero: return "zero";
    }
    return "zero";
}

namespace {

struct LineFit {
    double a = 0.0, b = 0.0, sse = 0.0, max_excess = 0.0;
};

// Least squares y = a + b t.
LineFit fit_line(const std::vector<double>& t, const std::vector<double>& y) {
    const double n = static_cast<double>(t.size());
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    LineFit f;
    const double den = n * stt - st * st;
    f.b = den != 0.0 ? (n * sty - st * sy) / den : 0.0;
    f.a = (sy - f.b * st) / n;
    f.max_excess = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double e = y[i] - (f.a + f.b * t[i]);
        f.sse += e * e;
        f.max_excess = std::max(f.max_excess, e);
    }
    return f;
}

}  // namespace

DecayEnvelope decay_audit(const std::vector<std::pair<double, double>>& samples, DecayModel model) {
    DecayEnvelope env;
    bool all_zero = true;
    for (const auto& s : samples)
        if (s.second != 0.0) all_zero = false;
    if (all_zero) {
        env.model = DecayModel::zero;
        return env;
    }
    require(samples.size() >= 10, ErrorKind::size, "decay audit needs at least 10 samples");
    std::vector<std::pair<double, double>> pts;
    for (const auto& [x, v] : samples)
        if (x != 0.0) pts.emplace_back(std::abs(x), std::abs(v));
    std::sort(pts.begin(), pts.end());
    require(!pts.empty() && pts.back().first >= 10.0 * pts.front().first, ErrorKind::size,
            "decay audit needs samples spanning at least one decade of |x|");

    // Upper envelope: points not exceeded by anything farther out.
    std::vector<double> ax, ly;
    double run = 0.0;
    for (std::size_t i = pts.size(); i-- > 0;) {
        if (pts[i].second > 0.0 && pts[i].second >= run) {
            ax.push_back(pts[i].first);
            ly.push_back(std::log(pts[i].second));
        }
        run = std::max(run, pts[i].second);
    }
    std::reverse(ax.begin(), ax.end());
    std::reverse(ly.begin(), ly.end());
    env.envelope_points = ax.size();
    require(ax.size() >= 2, ErrorKind::size, "upper envelope has fewer than two points");

    env.model = model;
    if (model == DecayModel::poly) {
        std::vector<double> t(ax.size());
        for (std::size_t i = 0; i < ax.size(); ++i) t[i] = std::log(ax[i]);
        const LineFit f = fit_line(t, ly);
        env.log_amplitude = f.a;
        env.exponent_q = -f.b;
        env.residual = f.max_excess;
        return env;
    }
    require(model == DecayModel::exp_power, ErrorKind::parameter, "unknown decay model");
    auto fit_p = [&](double p) {
        std::vector<double> t(ax.size());
        for (std::size_t i = 0; i < ax.size(); ++i) t[i] = std::pow(ax[i], p);
        return fit_line(t, ly);
    };
    // Coarse log-spaced scan over p, then golden-section refinement.
    constexpr int kScan = 240;
    const double lp0 = std::log(0.05), lp1 = std::log(5.0);
    int best = 0;
    double best_sse = kInf;
    for (int i = 0; i <= kScan; ++i) {
        const double sse = fit_p(std::exp(lp0 + (lp1 - lp0) * i / kScan)).sse;
        if (sse < best_sse) {
            best_sse = sse;
            best = i;
        }
    }
    double lo = lp0 + (lp1 - lp0) * std::max(0, best - 1) / kScan;
    double hi = lp0 + (lp1 - lp0) * std::min(kScan, best + 1) / kScan;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = fit_p(std::exp(x1)).sse, f2 = fit_p(std::exp(x2)).sse;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = fit_p(std::exp(x1)).sse;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = fit_p(std::exp(x2)).sse;
        }
    }
    const double p = std::exp(0.5 * (lo + hi));
    const LineFit f = fit_p(p);
    env.exponent_p = p;
    env.rate_b = -f.b;
    env.log_amplitude = f.a;
    env.residual = f.max_excess;
    return env;
}

}  // namespace fracnup
