#include "fracnup/ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracnup/errors.hpp"
#include "fracnup/fft.hpp"
#include "fracnup/quadrature.hpp"
#include "fracnup/special.hpp"

namespace fracnup {

namespace {
constexpr double kPi = std::numbers::pi;
}

// ---- MultiplierSpec ----

MultiplierSpec MultiplierSpec::frac_laplacian(int d, double s) {
    MultiplierSpec m;
    m.kind = MultiplierKind::frac_laplacian;
    m.d = d;
    m.s = s;
    m.validate();
    return m;
}

MultiplierSpec MultiplierSpec::shifted_frac(int d, double s, double lambda) {
    MultiplierSpec m = frac_laplacian(d, s);
    m.kind = MultiplierKind::shifted_frac;
    m.lambda = lambda;
    m.validate();
    return m;
}

MultiplierSpec MultiplierSpec::unimodular(int d, double s, double lambda) {
    MultiplierSpec m = shifted_frac(d, s, lambda);
    m.kind = MultiplierKind::unimodular;
    return m;
}

MultiplierSpec MultiplierSpec::mixed(int d, double s, double gamma) {
    MultiplierSpec m = frac_laplacian(d, s);
    m.kind = MultiplierKind::mixed;
    m.gamma = gamma;
    m.validate();
    return m;
}

MultiplierSpec MultiplierSpec::custom_radial(int d, std::vector<double> r, std::vector<cplx> values) {
    MultiplierSpec m;
    m.kind = MultiplierKind::custom_radial;
    m.d = d;
    m.table_r = std::move(r);
    m.table_m = std::move(values);
    m.validate();
    return m;
}

void MultiplierSpec::validate() const {
    require(d >= 1, ErrorKind::parameter, "multiplier dimension must be positive");
    if (kind == MultiplierKind::custom_radial) {
        require(table_r.size() >= 2 && table_r.size() == table_m.size(), ErrorKind::parameter,
                "custom radial table needs at least two matching entries");
        require(table_r.front() == 0.0, ErrorKind::parameter, "custom radial table must start at 0");
        for (std::size_t i = 1; i < table_r.size(); ++i)
            require(table_r[i] > table_r[i - 1], ErrorKind::parameter, "custom radial table must increase");
        return;
    }
    require(s > 0.0 && std::isfinite(s), ErrorKind::parameter, "multiplier needs s > 0");
    require(lambda >= 0.0 && std::isfinite(lambda), ErrorKind::parameter, "multiplier needs lambda >= 0");
    require(gamma > 0.0 && std::isfinite(gamma), ErrorKind::parameter, "multiplier needs gamma > 0");
}

cplx MultiplierSpec::radial(double r) const {
    switch (kind) {
        case MultiplierKind::frac_laplacian: return std::pow(r, 2.0 * s);
        case MultiplierKind::shifted_frac: return std::pow(r * r + lambda, s);
        case MultiplierKind::unimodular: return std::polar(1.0, std::pow(r * r + lambda, s));
        case MultiplierKind::mixed:
            return std::polar(std::pow(1.0 + r * r, -0.5 * gamma), std::pow(r, 2.0 * s));
        case MultiplierKind::custom_radial: {
            if (r >= table_r.back()) return table_m.back();
            auto it = std::upper_bound(table_r.begin(), table_r.end(), r);
            const std::size_t i = static_cast<std::size_t>(it - table_r.begin()) - 1;
            const double t = (r - table_r[i]) / (table_r[i + 1] - table_r[i]);
            return (1.0 - t) * table_m[i] + t * table_m[i + 1];
        }
    }
    return 0.0;
}

std::string MultiplierSpec::name() const {
    switch (kind) {
        case MultiplierKind::frac_laplacian: return "frac_laplacian";
        case MultiplierKind::shifted_frac: return "shifted_frac";
        case MultiplierKind::unimodular: return "unimodular";
        case MultiplierKind::mixed: return "mixed";
        case MultiplierKind::custom_radial: return "custom_radial";
    }
    return "custom_radial";
}

double MultiplierSpec::growth_exponent() const {
    switch (kind) {
        case MultiplierKind::frac_laplacian:
        case MultiplierKind::shifted_frac: return 2.0 * s;
        case MultiplierKind::unimodular: return 0.0;
        case MultiplierKind::mixed: return -gamma;
        case MultiplierKind::custom_radial: return 0.0;
    }
    return 0.0;
}

bool MultiplierSpec::is_pure_power() const {
    return kind == MultiplierKind::frac_laplacian ||
           (kind == MultiplierKind::shifted_frac && lambda == 0.0);
}

// ---- spectral operators ----

double boundary_ratio(const SampledFunction& f) {
    const Grid& g = f.grid;
    const double top = f.max_abs();
    if (top == 0.0) return 0.0;
    double edge = 0.0;
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        std::size_t rest = j;
        bool on_edge = false;
        for (int axis = 0; axis < g.d; ++axis) {
            const auto q = static_cast<int>(rest % g.N);
            rest /= g.N;
            if (q == 0 || q == g.N - 1) on_edge = true;
        }
        if (on_edge) edge = std::max(edge, std::abs(f.values[j]));
    }
    return edge / top;
}

namespace {

void check_input(const SampledFunction& f, const SpectralOptions& opt) {
    require(f.values.size() == f.grid.size(), ErrorKind::size, "sample count does not match the grid");
    for (const cplx& v : f.values)
        require(std::isfinite(v.real()) && std::isfinite(v.imag()), ErrorKind::parameter,
                "sampled function has non-finite values");
    if (opt.check_tail) {
        const double ratio = boundary_ratio(f);
        require(ratio <= opt.tail_tolerance, ErrorKind::tail_mass,
                "function does not decay on the grid: boundary/max ratio " + sci(ratio));
    }
}

std::vector<cplx> forward_spectrum(const SampledFunction& f) {
    std::vector<cplx> data = f.values;
    dft_inplace(data, f.grid.d, f.grid.N, -1);
    return data;
}

SampledFunction from_spectrum(const SampledFunction& like, std::vector<cplx> spec) {
    dft_inplace(spec, like.grid.d, like.grid.N, +1);
    const double scale = 1.0 / static_cast<double>(like.grid.size());
    for (cplx& v : spec) v *= scale;
    return SampledFunction{like.grid, std::move(spec), std::nullopt};
}

}  // namespace

SampledFunction apply_symbol(const SampledFunction& f, const std::function<cplx(const Point&)>& symbol,
                             const SpectralOptions& opt) {
    check_input(f, opt);
    std::vector<cplx> spec = forward_spectrum(f);
    for (std::size_t k = 0; k < spec.size(); ++k) {
        const cplx m = symbol(f.grid.frequency_point(k));
        require(std::isfinite(m.real()) && std::isfinite(m.imag()), ErrorKind::symbol,
                "symbol is undefined at a grid frequency");
        spec[k] *= m;
    }
    return from_spectrum(f, std::move(spec));
}

SampledFunction apply_multiplier(const SampledFunction& f, const MultiplierSpec& m, const SpectralOptions& opt) {
    m.validate();
    require(m.d == f.grid.d, ErrorKind::parameter, "multiplier and grid dimensions differ");
    std::function<cplx(const Point&)> symbol = [&m](const Point& xi) { return m(xi); };
    if (opt.origin_correction && m.is_pure_power() && f.grid.d <= 2) {
        // Trapezoid sums of |xi|^{2s} F(xi) carry an O(Delta^{d+2s}) endpoint error
        // proportional to F(0); the lattice zeta value cancels it.
        const double delta = f.grid.frequency_step();
        const cplx m0 = -lattice_zeta(f.grid.d, -2.0 * m.s) * std::pow(delta, 2.0 * m.s);
        symbol = [&m, m0](const Point& xi) {
            for (double v : xi)
                if (v != 0.0) return m(xi);
            return m0;
        };
    }
    return apply_symbol(f, symbol, opt);
}

SampledFunction spectral_derivative(const SampledFunction& f, const SpectralOptions& opt) {
    require(f.grid.d == 1, ErrorKind::parameter, "spectral derivative implemented for d = 1");
    return apply_symbol(f, [](const Point& xi) { return cplx(0.0, 2.0 * kPi * xi[0]); }, opt);
}

SampledFunction hilbert_transform(const SampledFunction& f, const SpectralOptions& opt) {
    require(f.grid.d == 1, ErrorKind::parameter, "Hilbert transform is one-dimensional");
    return apply_symbol(
        f,
        [](const Point& xi) {
            const double sg = (xi[0] > 0.0) - (xi[0] < 0.0);
            return cplx(0.0, -sg);
        },
        opt);
}

double negative_spectral_mass(const SampledFunction& f) {
    require(f.grid.d == 1, ErrorKind::parameter, "negative spectral mass defined for d = 1");
    const std::vector<cplx> spec = forward_spectrum(f);
    double neg = 0.0, total = 0.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        const double e = std::norm(spec[k]);
        total += e;
        if (f.grid.frequency(static_cast<int>(k)) < 0.0) neg += e;
    }
    return total == 0.0 ? 0.0 : neg / total;
}

// ---- singular integral ----

void QuadratureConfig::validate() const {
    require(near_radius > 0.0 && near_radius < far_cutoff, ErrorKind::parameter,
            "quadrature needs 0 < r0 < R_inf");
    require(panel_order >= 4, ErrorKind::parameter, "panel order must be at least 4");
    require(pv_symmetric, ErrorKind::parameter, "principal value requires symmetric pairing");
    require(far_panel_width > 0.0, ErrorKind::parameter, "far panel width must be positive");
    require(taylor_radius > 0.0, ErrorKind::parameter, "Taylor radius must be positive");
    require(angular_nodes >= 4 && subdivisions >= 1, ErrorKind::parameter, "invalid angular or panel counts");
}

QuadratureConfig QuadratureConfig::refined() const {
    QuadratureConfig q = *this;
    q.subdivisions *= 2;
    return q;
}

namespace {

struct PassResult {
    cplx value;
    double tail = 0.0;
    double fit_error = 0.0;
};

PassResult singular_pass(const ClosedForm& f, int d, double s, const Point& x, const QuadratureConfig& q) {
    const cplx fx = f.eval(x);
    const int half_nodes = q.angular_nodes * q.subdivisions / 2;
    Point w(d);

    auto eval_at = [&](const Point& dir, double rho) {
        for (int i = 0; i < d; ++i) w[i] = x[i] + rho * dir[i];
        return f.eval(w);
    };
    // Integral over the sphere of f(x) - f(x + rho theta), paired as theta, -theta.
    auto second_difference = [&](double rho) {
        if (d == 1) return 2.0 * fx - eval_at({1.0}, rho) - eval_at({-1.0}, rho);
        cplx acc = 0.0;
        const double dt = kPi / half_nodes;
        for (int k = 0; k < half_nodes; ++k) {
            const double t = k * dt;
            const Point dir{std::cos(t), std::sin(t)};
            acc += 2.0 * fx - eval_at(dir, rho) - eval_at({-dir[0], -dir[1]}, rho);
        }
        return acc * dt;
    };
    // Integral over the sphere of f(x + rho theta).
    auto sphere_sum = [&](double rho) {
        if (d == 1) return eval_at({1.0}, rho) + eval_at({-1.0}, rho);
        cplx acc = 0.0;
        const double dt = kPi / half_nodes;
        for (int k = 0; k < 2 * half_nodes; ++k) {
            const double t = k * dt;
            acc += eval_at({std::cos(t), std::sin(t)}, rho);
        }
        return acc * dt;
    };

    const double r0 = q.near_radius;
    const double rt = std::min(q.taylor_radius, 0.5 * r0);

    // Innermost ball: A(rho)/rho^2 is smooth in tau = (rho/rt)^2. Fit a cubic and
    // integrate rho^{1-2s} tau^k exactly; a quadratic fit bounds the fit error.
    const double taus[4] = {1.0, 0.5625, 0.25, 0.0625};
    cplx g[4];
    for (int i = 0; i < 4; ++i) {
        const double rho = rt * std::sqrt(taus[i]);
        g[i] = second_difference(rho) / (rho * rho);
    }
    auto fit_integral = [&](int npts) {
        Matrix V(npts, std::vector<double>(static_cast<std::size_t>(npts) * npts));
        for (int i = 0; i < npts; ++i)
            for (int k = 0; k < npts; ++k) V(i, k) = std::pow(taus[i], k);
        const Matrix Vi = V.inverse();
        cplx total = 0.0;
        for (int k = 0; k < npts; ++k) {
            cplx bk = 0.0;
            for (int i = 0; i < npts; ++i) bk += Vi(k, i) * g[i];
            total += bk * std::pow(rt, 2.0 - 2.0 * s) / (2.0 * k + 2.0 - 2.0 * s);
        }
        return total;
    };
    const cplx inner = fit_integral(4);
    const double fit_error = std::abs(inner - fit_integral(3));

    // Geometric panels on [rt, r0].
    cplx near = 0.0;
    for (double a = rt; a < r0;) {
        const double b = std::min(2.0 * a, r0);
        const PanelRule pr = panel_rule(a, b, q.subdivisions, q.panel_order);
        for (std::size_t i = 0; i < pr.nodes.size(); ++i) {
            const double rho = pr.nodes[i];
            near += pr.weights[i] * std::pow(rho, -1.0 - 2.0 * s) * second_difference(rho);
        }
        a = b;
    }

    const double sphere = unit_sphere_area(d);
    const double rinf = q.far_cutoff;
    const cplx far_analytic = fx * sphere * std::pow(r0, -2.0 * s) / (2.0 * s);
    const int far_panels =
        std::max(1, static_cast<int>(std::ceil((rinf - r0) / q.far_panel_width))) * q.subdivisions;
    const PanelRule fr = panel_rule(r0, rinf, far_panels, q.panel_order);
    cplx far_numeric = 0.0;
    for (std::size_t i = 0; i < fr.nodes.size(); ++i) {
        const double rho = fr.nodes[i];
        far_numeric += fr.weights[i] * std::pow(rho, -1.0 - 2.0 * s) * sphere_sum(rho);
    }
    const double reach = rinf - norm(x);
    const double maj = reach > 0.0 ? f.majorant(reach) : f.majorant(0.0);
    const double tail = sphere * maj * std::pow(rinf, -2.0 * s) / (2.0 * s);

    // c(d, s) belongs to the e^{-i x xi} convention; with e^{-2 pi i x xi} and symbol
    // |xi|^{2s} the kernel picks up (2 pi)^{-2s}.
    const double c = frac_laplacian_constant(d, s) * std::pow(2.0 * kPi, -2.0 * s);
    return PassResult{c * (inner + near + far_analytic - far_numeric), c * tail, c * fit_error};
}

}  // namespace

SingularResult frac_laplacian_singular(const ClosedForm& f, int d, double s, const Point& x,
                                       const QuadratureConfig& q) {
    require(static_cast<bool>(f.eval), ErrorKind::evaluator, "singular quadrature needs a closed-form evaluator");
    require(static_cast<bool>(f.majorant), ErrorKind::evaluator, "singular quadrature needs a decay majorant");
    require(d == 1 || d == 2, ErrorKind::parameter, "singular quadrature implemented for d = 1, 2");
    require(s > 0.0 && s < 1.0, ErrorKind::parameter, "s must lie in (0, 1)");
    require(static_cast<int>(x.size()) == d, ErrorKind::parameter, "evaluation point dimension mismatch");
    q.validate();
    const PassResult coarse = singular_pass(f, d, s, x, q);
    const PassResult fine = singular_pass(f, d, s, x, q.refined());
    SingularResult r;
    r.value = fine.value;
    r.refinement_change = std::abs(fine.value - coarse.value);
    r.tail_bound = fine.tail;
    r.error_estimate = 2.0 * r.refinement_change + fine.tail + fine.fit_error + 1e-14 * (1.0 + std::abs(fine.value));
    require(r.error_estimate <= q.target_abs, ErrorKind::accuracy,
            "singular quadrature did not converge: estimate " + sci(r.error_estimate));
    return r;
}

SingularResult frac_laplacian_singular(const SampledFunction& f, double s, const Point& x, const QuadratureConfig& q) {
    require(f.closed_form.has_value(), ErrorKind::evaluator, "singular quadrature needs a closed-form evaluator");
    return frac_laplacian_singular(*f.closed_form, f.grid.d, s, x, q);
}

double extension_constant(double s) {
    require(s > 0.0 && s < 1.0, ErrorKind::parameter, "extension constant needs s in (0, 1)");
    return std::pow(2.0, 2.0 * s - 1.0) * std::tgamma(s) / std::tgamma(1.0 - s);
}

// ---- half-line identities ----

double HalflineReport::max_relative() const {
    if (f_sup == 0.0) return 0.0;
    return std::max({hilbert_residual, half_laplacian_residual, derivative_residual}) / f_sup;
}

HalflineReport verify_halfline_identities(const SampledFunction& f, double mass_tolerance,
                                          const SpectralOptions& opt) {
    require(f.grid.d == 1, ErrorKind::parameter, "half-line identities are one-dimensional");
    HalflineReport rep;
    rep.f_sup = f.max_abs();
    rep.negative_mass = negative_spectral_mass(f);
    require(rep.negative_mass <= mass_tolerance, ErrorKind::precondition,
            "spectrum is not supported in xi >= 0: negative mass " + sci(rep.negative_mass));
    const SampledFunction Hf = hilbert_transform(f, opt);
    const SampledFunction half = apply_multiplier(f, MultiplierSpec::frac_laplacian(1, 0.5), opt);
    SpectralOptions loose = opt;
    loose.check_tail = false;
    const SampledFunction dHf = spectral_derivative(Hf, loose);
    const SampledFunction df = spectral_derivative(f, opt);
    const cplx two_pi_i(0.0, 2.0 * kPi);
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        rep.hilbert_residual = std::max(rep.hilbert_residual, std::abs(Hf.values[j] + cplx(0.0, 1.0) * f.values[j]));
        rep.half_laplacian_residual =
            std::max(rep.half_laplacian_residual, std::abs(2.0 * kPi * half.values[j] - dHf.values[j]));
        rep.derivative_residual =
            std::max(rep.derivative_residual, std::abs(half.values[j] - df.values[j] / two_pi_i));
    }
    return rep;
}

}  // namespace fracnup
