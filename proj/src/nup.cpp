#include "fracnup/nup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracnup/errors.hpp"
#include "fracnup/fft.hpp"
#include "fracnup/quadrature.hpp"

namespace fracnup {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double bump_profile(double u2) { return u2 < 1.0 ? std::exp(-1.0 / (1.0 - u2)) : 0.0; }
}  // namespace

// ---- bump and hyperplane ----

double BumpSpec::operator()(const Point& xi) const {
    double u2 = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        const double t = (xi[i] - center[i]) / radius;
        u2 += t * t;
    }
    return amplitude * bump_profile(u2);
}

double BumpSpec::sup() const { return std::abs(amplitude) * std::exp(-1.0); }

double Hyperplane::distance(const Point& xi) const { return std::abs(dot(xi, normal) - offset) / norm(normal); }

Hyperplane hyperplane_Hv(const Point& v) {
    const double v2 = dot(v, v);
    require(v2 > 0.0, ErrorKind::degenerate, "H_v needs v != 0");
    return Hyperplane{v, -1.5 * v2};
}

namespace {

// Distance from xi to the boundary of Q_A = {xi : 0 <= (A^t xi)_i <= 1}.
double distance_to_cell_boundary(const LatticeSpec& L, const Point& xi) {
    const Point u = L.cell_coords(xi);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < L.d(); ++i) {
        double row = 0.0;
        for (int j = 0; j < L.d(); ++j) row += L.dual_inv(i, j) * L.dual_inv(i, j);
        row = std::sqrt(row);
        best = std::min(best, std::min(std::abs(u[i]), std::abs(1.0 - u[i])) / row);
    }
    return best;
}

}  // namespace

BumpSpec choose_bump(const LatticeSpec& lattice, const Point& v, int grid_per_axis) {
    require(grid_per_axis >= 2, ErrorKind::parameter, "bump search grid too coarse");
    const Hyperplane H = hyperplane_Hv(v);
    const int d = lattice.d();
    std::vector<int> idx(d, 1);
    Point u(d);
    double best = -1.0;
    Point best_xi;
    while (true) {
        for (int i = 0; i < d; ++i) u[i] = static_cast<double>(idx[i]) / grid_per_axis;
        const Point xi = lattice.from_cell_coords(u);
        const double dist = std::min(distance_to_cell_boundary(lattice, xi), H.distance(xi));
        if (dist > best) {
            best = dist;
            best_xi = xi;
        }
        int axis = d - 1;
        while (axis >= 0 && idx[axis] == grid_per_axis - 1) {
            idx[axis] = 1;
            --axis;
        }
        if (axis < 0) break;
        ++idx[axis];
    }
    return BumpSpec{best_xi, 0.5 * best, 1.0};
}

// ---- construction ----

std::array<Point, 3> default_triple(const LatticeSpec& lattice) {
    const Point v = lattice.dual_vector(0);
    Point v2 = v, v3 = v;
    for (std::size_t i = 0; i < v.size(); ++i) {
        v2[i] = 2.0 * v[i];
        v3[i] = 3.0 * v[i];
    }
    return {v, v2, v3};
}

cplx NupFunction::g(int j, const Point& xi) const {
    Point p1 = xi, pj = xi;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        p1[i] += v[0][i];
        pj[i] += v[j - 1][i];
    }
    return m(p1) - m(pj);
}

cplx NupFunction::a(int j, const Point& xi) const {
    const double phi = bump(xi);
    if (phi == 0.0) return 0.0;
    const cplx a3 = phi;
    const cplx a2 = -phi * g(3, xi) / g(2, xi);
    switch (j) {
        case 1: return -a2 - a3;
        case 2: return a2;
        case 3: return a3;
        default: fail(ErrorKind::parameter, "coefficient index must be 1, 2 or 3");
    }
}

bool NupFunction::in_support_cells(const Point& xi) const {
    for (int j = 0; j < 3; ++j) {
        Point eta = xi;
        for (std::size_t i = 0; i < xi.size(); ++i) eta[i] -= v[j][i];
        if (lattice.in_cell(eta)) return true;
    }
    return false;
}

cplx NupFunction::fhat(const Point& xi) const {
    for (int j = 0; j < 3; ++j) {
        Point eta = xi;
        for (std::size_t i = 0; i < xi.size(); ++i) eta[i] -= v[j][i];
        if (lattice.in_cell(eta)) return a(j + 1, eta);
    }
    return 0.0;
}

namespace {

// Calls visit(xi) on a cube grid of the closed ball, including the sphere's extreme points.
template <class Visit>
void scan_closed_ball(const BumpSpec& b, int per_axis, Visit&& visit) {
    const int d = static_cast<int>(b.center.size());
    std::vector<int> idx(d, 0);
    Point xi(d);
    while (true) {
        double u2 = 0.0;
        for (int i = 0; i < d; ++i) {
            const double t = -1.0 + 2.0 * idx[i] / (per_axis - 1);
            u2 += t * t;
            xi[i] = b.center[i] + b.radius * t;
        }
        if (u2 <= 1.0 + 1e-12) visit(xi);
        int axis = d - 1;
        while (axis >= 0 && idx[axis] == per_axis - 1) {
            idx[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
        ++idx[axis];
    }
}

}  // namespace

NupFunction build_nup(const LatticeSpec& lattice, const MultiplierSpec& m, const BumpSpec& bump,
                      const std::optional<std::array<Point, 3>>& triple) {
    const int d = lattice.d();
    m.validate();
    require(m.d == d, ErrorKind::parameter, "multiplier and lattice dimensions differ");
    require(static_cast<int>(bump.center.size()) == d && bump.radius > 0.0 && bump.amplitude != 0.0,
            ErrorKind::parameter, "invalid bump");
    NupFunction nup;
    nup.lattice = lattice;
    nup.m = m;
    nup.bump = bump;
    nup.v = triple.value_or(default_triple(lattice));
    for (int j = 0; j < 3; ++j) {
        require(static_cast<int>(nup.v[j].size()) == d, ErrorKind::parameter, "shift dimension mismatch");
        const Point n = lattice.dual_inv.apply(nup.v[j]);
        for (double c : n)
            require(std::abs(c - std::round(c)) < 1e-9, ErrorKind::parameter, "shift is not in the dual lattice");
        for (int i = 0; i < j; ++i) require(nup.v[i] != nup.v[j], ErrorKind::parameter, "shifts must be distinct");
    }

    // Support closure strictly inside the cell.
    require(distance_to_cell_boundary(lattice, bump.center) > bump.radius &&
                lattice.in_cell(bump.center),
            ErrorKind::support, "bump support is not inside the open cell");
    if (!triple) {
        require(hyperplane_Hv(nup.v[0]).distance(bump.center) > bump.radius, ErrorKind::support,
                "bump support meets H_v");
    }

    // g_2 on closure(supp phi), and on the cell for reference.
    double scale = 0.0;
    nup.g2_min_support = std::numeric_limits<double>::infinity();
    const int per_axis = d == 1 ? 401 : 41;
    scan_closed_ball(bump, per_axis, [&](const Point& xi) {
        nup.g2_min_support = std::min(nup.g2_min_support, std::abs(nup.g(2, xi)));
        for (int j = 0; j < 3; ++j) {
            Point p = xi;
            for (int i = 0; i < d; ++i) p[i] += nup.v[j][i];
            scale = std::max(scale, std::abs(m(p)));
        }
    });
    const double margin = 1e-10 * std::max(1.0, scale);
    require(nup.g2_min_support > margin, ErrorKind::denominator_vanishing,
            "g_2 vanishes (to margin) on the bump support; choose another bump placement");
    nup.certified_condition = "closure(supp phi)";

    nup.g2_min_cell = std::numeric_limits<double>::infinity();
    const int cell_axis = d == 1 ? 401 : 41;
    std::vector<int> idx(d, 0);
    Point u(d);
    while (true) {
        for (int i = 0; i < d; ++i) u[i] = (idx[i] + 0.5) / cell_axis;
        nup.g2_min_cell = std::min(nup.g2_min_cell, std::abs(nup.g(2, lattice.from_cell_coords(u))));
        int axis = d - 1;
        while (axis >= 0 && idx[axis] == cell_axis - 1) {
            idx[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
        ++idx[axis];
    }
    nup.cell_condition_holds = nup.g2_min_cell > margin;
    return nup;
}

NupFunction build_nup(const LatticeSpec& lattice, double s, const BumpSpec& bump) {
    require(s > 0.0 && s < 1.0, ErrorKind::parameter, "s must lie in (0, 1)");
    return build_nup(lattice, MultiplierSpec::frac_laplacian(lattice.d(), s), bump);
}

cplx periodize(const NupFunction& nup, const Point& xi, const std::optional<MultiplierSpec>& weight) {
    cplx sum = 0.0;
    for (int j = 0; j < 3; ++j) {
        Point p = xi;
        for (std::size_t i = 0; i < xi.size(); ++i) p[i] += nup.v[j][i];
        const cplx val = nup.fhat(p);
        if (val == 0.0) continue;
        sum += weight ? (*weight)(p) * val : val;
    }
    return sum;
}

// ---- Fourier quadrature ----

namespace {

struct TensorRule {
    std::vector<std::vector<double>> nodes;
    std::vector<std::vector<double>> weights;

    std::size_t size() const {
        std::size_t n = 1;
        for (const auto& a : nodes) n *= a.size();
        return n;
    }
};

TensorRule tensor_rule(const std::vector<double>& lo, const std::vector<double>& hi, int ppu, int order) {
    TensorRule t;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const int panels = std::max(1, static_cast<int>(std::ceil((hi[i] - lo[i]) * ppu)));
        PanelRule pr = panel_rule(lo[i], hi[i], panels, order);
        t.nodes.push_back(std::move(pr.nodes));
        t.weights.push_back(std::move(pr.weights));
    }
    return t;
}

// Contracts data (shape = rule sizes) against exp(2 pi i targets[a][t] * nodes[a][j]) on every axis.
std::vector<cplx> contract(std::vector<cplx> data, const TensorRule& rule,
                           const std::vector<std::vector<double>>& targets) {
    const std::size_t d = rule.nodes.size();
    std::vector<std::size_t> shape(d);
    for (std::size_t a = 0; a < d; ++a) shape[a] = rule.nodes[a].size();
    for (std::size_t a = 0; a < d; ++a) {
        const std::size_t n = shape[a], m = targets[a].size();
        std::size_t pre = 1, post = 1;
        for (std::size_t b = 0; b < a; ++b) pre *= shape[b];
        for (std::size_t b = a + 1; b < d; ++b) post *= shape[b];
        std::vector<cplx> E(m * n);
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t j = 0; j < n; ++j)
                E[t * n + j] = std::polar(1.0, kTwoPi * targets[a][t] * rule.nodes[a][j]);
        std::vector<cplx> out(pre * m * post, 0.0);
        for (std::size_t p = 0; p < pre; ++p)
            for (std::size_t t = 0; t < m; ++t) {
                cplx* o = &out[(p * m + t) * post];
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx e = E[t * n + j];
                    const cplx* src = &data[(p * n + j) * post];
                    for (std::size_t q = 0; q < post; ++q) o[q] += e * src[q];
                }
            }
        data = std::move(out);
        shape[a] = m;
    }
    return data;
}

// Integrand samples w * g(xi(u)) / |det A| on the tensor nodes.
template <class G>
std::vector<cplx> sample_integrand(const NupFunction& nup, const TensorRule& rule, G&& g) {
    const int d = nup.lattice.d();
    const double jac = nup.lattice.cell_volume();
    std::vector<cplx> out(rule.size());
    std::vector<std::size_t> idx(d, 0);
    Point u(d);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        std::size_t rest = flat;
        double w = jac;
        for (int a = d - 1; a >= 0; --a) {
            idx[a] = rest % rule.nodes[a].size();
            rest /= rule.nodes[a].size();
            u[a] = rule.nodes[a][idx[a]];
            w *= rule.weights[a][idx[a]];
        }
        out[flat] = w * g(nup.lattice.from_cell_coords(u));
    }
    return out;
}

// Bounding box, in cell coordinates, of the three translated bump supports.
void support_box(const NupFunction& nup, std::vector<double>& lo, std::vector<double>& hi) {
    const int d = nup.lattice.d();
    const Point uc = nup.lattice.cell_coords(nup.bump.center);
    lo.assign(d, std::numeric_limits<double>::infinity());
    hi.assign(d, -std::numeric_limits<double>::infinity());
    for (int j = 0; j < 3; ++j) {
        const Point n = nup.lattice.cell_coords(nup.v[j]);
        for (int i = 0; i < d; ++i) {
            double row = 0.0;
            for (int k = 0; k < d; ++k) row += nup.lattice.dual_inv(i, k) * nup.lattice.dual_inv(i, k);
            const double ext = nup.bump.radius * std::sqrt(row);
            lo[i] = std::min(lo[i], uc[i] + n[i] - ext);
            hi[i] = std::max(hi[i], uc[i] + n[i] + ext);
        }
    }
}

int choose_ppu(const VanishingOptions& opt, int K) {
    const int ppu = opt.panels_per_unit > 0 ? opt.panels_per_unit : std::max(opt.base_panels_per_unit, 2 * K);
    const double per_wavelength = static_cast<double>(ppu) * opt.order / std::max(1, K);
    if (per_wavelength < opt.min_nodes_per_wavelength) {
        const int need = static_cast<int>(std::ceil(opt.min_nodes_per_wavelength * K / opt.order));
        fail(ErrorKind::resolution, "oscillation under-resolved: need panels_per_unit >= " + std::to_string(need) +
                                        " (about " + std::to_string(need * opt.order) + " nodes per unit)");
    }
    return ppu;
}

}  // namespace

VanishingReport verify_lattice_vanishing(const NupFunction& nup, int K, VerifyMode mode, const VanishingOptions& opt) {
    require(K >= 1, ErrorKind::parameter, "verifier needs K >= 1");
    require(opt.order >= 4, ErrorKind::parameter, "quadrature order must be at least 4");
    const int d = nup.lattice.d();
    const int ppu = choose_ppu(opt, K);

    std::vector<double> lo, hi;
    support_box(nup, lo, hi);
    const TensorRule box = tensor_rule(lo, hi, ppu, opt.order);
    const std::vector<cplx> F = sample_integrand(nup, box, [&](const Point& xi) { return nup.fhat(xi); });
    const std::vector<cplx> TF =
        sample_integrand(nup, box, [&](const Point& xi) { return nup.m(xi) * nup.fhat(xi); });

    // Sup norms over x = A y, y on a 1/8-spaced grid of a window around the origin.
    std::vector<std::vector<double>> ygrid(d);
    const int yr = 8 * std::min(K, 4);
    for (int a = 0; a < d; ++a)
        for (int j = -yr; j <= yr; ++j) ygrid[a].push_back(j / 8.0);
    VanishingReport rep;
    rep.mode = mode;
    rep.K = K;
    for (const cplx& v : contract(F, box, ygrid)) rep.f_sup = std::max(rep.f_sup, std::abs(v));
    for (const cplx& v : contract(TF, box, ygrid)) rep.Tf_sup = std::max(rep.Tf_sup, std::abs(v));
    require(rep.f_sup > 0.0 && rep.Tf_sup > 0.0, ErrorKind::degenerate, "constructed function is numerically null");

    std::vector<std::vector<double>> kgrid(d);
    for (int a = 0; a < d; ++a)
        for (int j = -K; j <= K; ++j) kgrid[a].push_back(j);

    std::vector<cplx> fk, Tfk;
    if (mode == VerifyMode::direct_quadrature) {
        fk = contract(F, box, kgrid);
        Tfk = contract(TF, box, kgrid);
        rep.nodes = box.size();
    } else {
        const TensorRule cell = tensor_rule(std::vector<double>(d, 0.0), std::vector<double>(d, 1.0), ppu, opt.order);
        const std::vector<cplx> FA = sample_integrand(nup, cell, [&](const Point& xi) { return periodize(nup, xi); });
        const std::vector<cplx> GA =
            sample_integrand(nup, cell, [&](const Point& xi) { return periodize(nup, xi, nup.m); });
        fk = contract(FA, cell, kgrid);
        Tfk = contract(GA, cell, kgrid);
        rep.nodes = cell.size();
    }

    std::vector<long long> k(d, -K);
    for (std::size_t flat = 0; flat < fk.size(); ++flat) {
        std::size_t rest = flat;
        for (int a = d - 1; a >= 0; --a) {
            k[a] = static_cast<long long>(rest % (2 * K + 1)) - K;
            rest /= (2 * K + 1);
        }
        VanishingRow row{k, std::abs(fk[flat]) / rep.f_sup, std::abs(Tfk[flat]) / rep.Tf_sup};
        rep.max_f_residual = std::max(rep.max_f_residual, row.f_residual);
        rep.max_Tf_residual = std::max(rep.max_Tf_residual, row.Tf_residual);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

NupValues evaluate_nup(const NupFunction& nup, const std::vector<Point>& xs, const VanishingOptions& opt, int K_hint) {
    const int d = nup.lattice.d();
    const int ppu = choose_ppu(opt, K_hint);
    std::vector<double> lo, hi;
    support_box(nup, lo, hi);
    const TensorRule box = tensor_rule(lo, hi, ppu, opt.order);
    const std::vector<cplx> F = sample_integrand(nup, box, [&](const Point& xi) { return nup.fhat(xi); });
    const std::vector<cplx> TF =
        sample_integrand(nup, box, [&](const Point& xi) { return nup.m(xi) * nup.fhat(xi); });
    const Matrix Ainv = nup.lattice.A.inverse();
    NupValues out;
    for (const Point& x : xs) {
        require(static_cast<int>(x.size()) == d, ErrorKind::parameter, "evaluation point dimension mismatch");
        const Point y = Ainv.apply(x);
        std::vector<std::vector<double>> target(d);
        for (int a = 0; a < d; ++a) target[a] = {y[a]};
        out.f.push_back(contract(F, box, target)[0]);
        out.Tf.push_back(contract(TF, box, target)[0]);
    }
    return out;
}

// ---- half-line test function ----

Grid default_halfline_grid() { return Grid::make(1, 256.0, 8192); }

SampledFunction halfline_test_function(double a, double width, const Grid& grid) {
    require(width > 0.0 && a > width, ErrorKind::support, "half-line generator needs a > width > 0");
    require(grid.d == 1, ErrorKind::parameter, "half-line generator is one-dimensional");
    const double nyquist = grid.N / (4.0 * grid.L);
    require(a + width < nyquist, ErrorKind::parameter, "grid does not resolve the spectral support");
    const double delta = grid.frequency_step();
    std::vector<cplx> spec(grid.size());
    for (int q = 0; q < grid.N; ++q) {
        const int k = q < grid.N / 2 ? q : q - grid.N;
        const double xi = k * delta;
        const double t = (xi - a) / width;
        // x_j = -L + j h contributes the phase exp(-2 pi i xi L) = (-1)^k.
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        spec[q] = sign * delta * bump_profile(t * t);
    }
    dft_inplace(spec, 1, grid.N, +1);
    return SampledFunction{grid, std::move(spec), std::nullopt};
}

}  // namespace fracnup
