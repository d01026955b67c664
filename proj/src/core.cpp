#include "fracnup/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracnup/errors.hpp"

namespace fracnup {

double norm(const Point& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// ---- Matrix ----

Matrix::Matrix(int n_, std::vector<double> values) : n(n_), a(std::move(values)) {
    require(n > 0 && a.size() == static_cast<std::size_t>(n) * n, ErrorKind::parameter,
            "matrix data must have n*n entries");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0));
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t = *this;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = (*this)(j, i);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix r(n, std::vector<double>(a.size(), 0.0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    return r;
}

Point Matrix::apply(const Point& x) const {
    Point y(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

double Matrix::determinant() const {
    Matrix m = *this;
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
        if (m(piv, c) == 0.0) return 0.0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            det = -det;
        }
        det *= m(c, c);
        for (int r = c + 1; r < n; ++r) {
            const double f = m(r, c) / m(c, c);
            for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    Matrix m = *this;
    Matrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
        require(m(piv, c) != 0.0, ErrorKind::parameter, "matrix is singular");
        if (piv != c) {
            for (int j = 0; j < n; ++j) {
                std::swap(m(c, j), m(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        }
        const double p = m(c, c);
        for (int j = 0; j < n; ++j) {
            m(c, j) /= p;
            inv(c, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = m(r, c);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// ---- Grid and sampled functions ----

Grid Grid::make(int d, double L, int N) {
    require(d >= 1, ErrorKind::parameter, "grid dimension must be positive");
    require(L > 0.0 && std::isfinite(L), ErrorKind::parameter, "grid half-width must be positive");
    require(N >= 2 && N % 2 == 0, ErrorKind::parameter, "points per axis must be positive and even");
    return Grid{d, L, N};
}

std::size_t Grid::size() const {
    std::size_t s = 1;
    for (int i = 0; i < d; ++i) s *= static_cast<std::size_t>(N);
    return s;
}

Point Grid::node(std::size_t flat) const {
    Point x(d);
    for (int axis = d - 1; axis >= 0; --axis) {
        x[axis] = coord(static_cast<int>(flat % N));
        flat /= N;
    }
    return x;
}

Point Grid::frequency_point(std::size_t flat) const {
    Point xi(d);
    for (int axis = d - 1; axis >= 0; --axis) {
        xi[axis] = frequency(static_cast<int>(flat % N));
        flat /= N;
    }
    return xi;
}

double SampledFunction::max_abs() const {
    double m = 0.0;
    for (const cplx& v : values) m = std::max(m, std::abs(v));
    return m;
}

SampledFunction sample(const Grid& grid, const ClosedForm& f) {
    require(static_cast<bool>(f.eval), ErrorKind::evaluator, "closed form has no evaluator");
    SampledFunction out{grid, std::vector<cplx>(grid.size()), f};
    for (std::size_t j = 0; j < out.values.size(); ++j) {
        out.values[j] = f.eval(grid.node(j));
        require(std::isfinite(out.values[j].real()) && std::isfinite(out.values[j].imag()),
                ErrorKind::evaluator, "closed form produced a non-finite value");
    }
    return out;
}

SampledFunction zero_function(const Grid& grid) {
    ClosedForm z{"zero", [](const Point&) { return cplx(0.0); }, [](double) { return 0.0; }};
    return sample(grid, z);
}

ClosedForm gaussian(int d) {
    (void)d;
    return ClosedForm{
        "gaussian",
        [](const Point& x) {
            double r2 = 0.0;
            for (double v : x) r2 += v * v;
            return cplx(std::exp(-std::numbers::pi * r2));
        },
        [](double rho) { return rho <= 0.0 ? 1.0 : std::exp(-std::numbers::pi * rho * rho); },
    };
}

// ---- Generators ----

Generator Generator::z_alpha(double alpha) {
    Generator g;
    g.kind = GeneratorKind::Z_alpha;
    g.d = 1;
    g.alpha = alpha;
    return g;
}

Generator Generator::lambda_alpha_c(int d, double alpha, double c) {
    Generator g;
    g.kind = GeneratorKind::Lambda_alpha_c;
    g.d = d;
    g.alpha = alpha;
    g.c = c;
    return g;
}

Generator Generator::lattice(const Matrix& A) {
    Generator g;
    g.kind = GeneratorKind::lattice;
    g.d = A.n;
    g.A = A;
    return g;
}

Generator Generator::explicit_points(int d) {
    Generator g;
    g.kind = GeneratorKind::explicit_points;
    g.d = d;
    return g;
}

std::string Generator::name() const {
    switch (kind) {
        case GeneratorKind::Z_alpha: return "Z_alpha";
        case GeneratorKind::Lambda_alpha_c: return "Lambda_alpha_c";
        case GeneratorKind::lattice: return "lattice";
        case GeneratorKind::explicit_points: return "explicit";
    }
    return "explicit";
}

std::string Generator::params() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
        case GeneratorKind::Z_alpha: os << "alpha=" << alpha; break;
        case GeneratorKind::Lambda_alpha_c: os << "d=" << d << ";alpha=" << alpha << ";c=" << c; break;
        case GeneratorKind::lattice:
            os << "A=";
            for (std::size_t i = 0; i < A.a.size(); ++i) os << (i ? " " : "") << A.a[i];
            break;
        case GeneratorKind::explicit_points: os << "d=" << d; break;
    }
    return os.str();
}

namespace {

void sort_unique(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

void check_cap(double expected, std::size_t cap) {
    require(expected <= static_cast<double>(cap), ErrorKind::capacity,
            "window would hold about " + std::to_string(static_cast<long double>(expected)) +
                " points, above the cap of " + std::to_string(cap));
}

// Calls visit(k) for every k in Z^d with |k_i| <= bound[i].
template <class Visit>
void for_each_in_box(const std::vector<long long>& bound, Visit&& visit) {
    const int d = static_cast<int>(bound.size());
    std::vector<long long> k(d);
    for (int i = 0; i < d; ++i) k[i] = -bound[i];
    while (true) {
        visit(k);
        int axis = d - 1;
        while (axis >= 0 && k[axis] == bound[axis]) {
            k[axis] = -bound[axis];
            --axis;
        }
        if (axis < 0) break;
        ++k[axis];
    }
}

}  // namespace

DiscreteSet generate_set(const Generator& gen, double R, std::size_t cap) {
    require(R > 0.0 && std::isfinite(R), ErrorKind::parameter, "window radius R must be positive");
    DiscreteSet out;
    out.d = gen.d;
    out.generator = gen;
    out.R = R;
    switch (gen.kind) {
        case GeneratorKind::Z_alpha: {
            require(gen.alpha > 0.0, ErrorKind::parameter, "Z_alpha needs alpha > 0");
            const double nmax_real = std::pow(R, 1.0 / gen.alpha);
            check_cap(2.0 * nmax_real, cap);
            auto nmax = static_cast<long long>(nmax_real) + 2;
            for (long long n = 1; n <= nmax; ++n) {
                const double x = std::pow(static_cast<double>(n), gen.alpha);
                if (x > R) break;
                out.points.push_back({x});
                out.points.push_back({-x});
            }
            break;
        }
        case GeneratorKind::Lambda_alpha_c: {
            require(gen.alpha > 0.0 && gen.c > 0.0, ErrorKind::parameter,
                    "Lambda_alpha_c needs alpha > 0 and c > 0");
            require(gen.d >= 1, ErrorKind::parameter, "dimension must be positive");
            const double log_kmax = std::pow(R / gen.c, 1.0 / gen.alpha);
            require(log_kmax < 700.0, ErrorKind::capacity, "window radius too large for this generator");
            const double kmax = std::exp(log_kmax);
            check_cap(std::pow(2.0 * kmax + 1.0, gen.d), cap);
            const auto kb = static_cast<long long>(kmax) + 1;
            for_each_in_box(std::vector<long long>(gen.d, kb), [&](const std::vector<long long>& k) {
                double n2 = 0.0;
                for (long long ki : k) n2 += static_cast<double>(ki) * static_cast<double>(ki);
                // |k| = 1 maps to the origin, where the straightening map is undefined.
                if (n2 <= 1.0) return;
                const double nk = std::sqrt(n2);
                const double rad = gen.c * std::pow(std::log(nk), gen.alpha);
                if (rad > R) return;
                Point p(gen.d);
                for (int i = 0; i < gen.d; ++i) p[i] = rad * static_cast<double>(k[i]) / nk;
                out.points.push_back(std::move(p));
            });
            break;
        }
        case GeneratorKind::lattice: {
            require(gen.A.n == gen.d && gen.d >= 1, ErrorKind::parameter, "lattice matrix size mismatch");
            const double det = gen.A.determinant();
            require(std::abs(det) > 0.0, ErrorKind::parameter, "lattice matrix is singular");
            const Matrix inv = gen.A.inverse();
            std::vector<long long> bound(gen.d);
            for (int i = 0; i < gen.d; ++i) {
                double row = 0.0;
                for (int j = 0; j < gen.d; ++j) row += inv(i, j) * inv(i, j);
                bound[i] = static_cast<long long>(std::sqrt(row) * R) + 1;
            }
            double box = 1.0;
            for (long long b : bound) box *= 2.0 * static_cast<double>(b) + 1.0;
            check_cap(box, cap);
            for_each_in_box(bound, [&](const std::vector<long long>& k) {
                Point kk(k.begin(), k.end());
                Point x = gen.A.apply(kk);
                if (norm(x) <= R) out.points.push_back(std::move(x));
            });
            break;
        }
        case GeneratorKind::explicit_points:
            fail(ErrorKind::parameter, "explicit sets are built with make_explicit_set");
    }
    sort_unique(out.points);
    return out;
}

DiscreteSet make_explicit_set(int d, std::vector<Point> points, double R) {
    require(d >= 1, ErrorKind::parameter, "dimension must be positive");
    for (const Point& p : points) {
        require(static_cast<int>(p.size()) == d, ErrorKind::parameter, "point dimension mismatch");
        require(norm(p) <= R, ErrorKind::parameter, "point lies outside the window radius");
    }
    DiscreteSet out;
    out.d = d;
    out.generator = Generator::explicit_points(d);
    out.R = R;
    out.points = std::move(points);
    sort_unique(out.points);
    return out;
}

// ---- Changes of variables ----

ChangeOfVariables ChangeOfVariables::identity(int d) {
    require(d >= 1, ErrorKind::parameter, "dimension must be positive");
    return ChangeOfVariables{CovKind::identity, d, 1.0, 1.0};
}

ChangeOfVariables ChangeOfVariables::g_alpha(double alpha) {
    require(alpha > 0.0 && std::isfinite(alpha), ErrorKind::parameter, "G_alpha needs alpha > 0");
    return ChangeOfVariables{CovKind::G_alpha, 1, alpha, 1.0};
}

ChangeOfVariables ChangeOfVariables::phi_alpha_c(int d, double alpha, double c) {
    require(d >= 1, ErrorKind::parameter, "dimension must be positive");
    require(alpha > 0.0 && c > 0.0, ErrorKind::parameter, "Phi needs alpha > 0 and c > 0");
    return ChangeOfVariables{CovKind::Phi_alpha_c, d, alpha, c};
}

std::string ChangeOfVariables::name() const {
    switch (kind) {
        case CovKind::identity: return "identity";
        case CovKind::G_alpha: return "G_alpha";
        case CovKind::Phi_alpha_c: return "Phi_alpha_c";
    }
    return "identity";
}

namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

void check_dim(const ChangeOfVariables& F, const Point& x) {
    require(static_cast<int>(x.size()) == F.d, ErrorKind::parameter, "point dimension mismatch");
    require(F.kind != CovKind::G_alpha || F.d == 1, ErrorKind::parameter, "G_alpha is one-dimensional");
}

}  // namespace

Point cov_forward(const ChangeOfVariables& F, const Point& x) {
    check_dim(F, x);
    switch (F.kind) {
        case CovKind::identity: return x;
        case CovKind::G_alpha: return {sgn(x[0]) * std::pow(std::abs(x[0]), 1.0 / F.alpha)};
        case CovKind::Phi_alpha_c: {
            const double r = norm(x);
            require(r > 0.0, ErrorKind::domain, "Phi is undefined at x = 0");
            const double rad = std::exp(std::pow(r / F.c, 1.0 / F.alpha));
            require(std::isfinite(rad), ErrorKind::domain, "Phi overflows at this point");
            Point y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] / r * rad;
            return y;
        }
    }
    return x;
}

Point cov_inverse(const ChangeOfVariables& F, const Point& xi) {
    check_dim(F, xi);
    switch (F.kind) {
        case CovKind::identity: return xi;
        case CovKind::G_alpha: return {sgn(xi[0]) * std::pow(std::abs(xi[0]), F.alpha)};
        case CovKind::Phi_alpha_c: {
            const double r = norm(xi);
            require(r > 1.0, ErrorKind::domain, "Psi needs |xi| > 1");
            const double rad = F.c * std::pow(std::log(r), F.alpha);
            Point y(xi.size());
            for (std::size_t i = 0; i < xi.size(); ++i) y[i] = xi[i] / r * rad;
            return y;
        }
    }
    return xi;
}

double cov_forward_1d(const ChangeOfVariables& F, double x) { return cov_forward(F, Point{x})[0]; }

double cov_inverse_1d(const ChangeOfVariables& F, double xi) { return cov_inverse(F, Point{xi})[0]; }

double cov_derivative_1d(const ChangeOfVariables& F, double x) {
    require(F.d == 1, ErrorKind::parameter, "derivative defined for d = 1");
    switch (F.kind) {
        case CovKind::identity: return 1.0;
        case CovKind::G_alpha: return std::pow(std::abs(x), 1.0 / F.alpha - 1.0) / F.alpha;
        case CovKind::Phi_alpha_c: {
            const double r = std::abs(x);
            require(r > 0.0, ErrorKind::domain, "Phi is undefined at x = 0");
            const double beta = 1.0 / F.alpha;
            const double t = std::pow(r / F.c, beta);
            return std::exp(t) * beta * t / r;
        }
    }
    return 1.0;
}

// ---- Lattice ----

LatticeSpec LatticeSpec::make(const Matrix& A) {
    LatticeSpec L;
    L.A = A;
    L.det_A = A.determinant();
    require(std::abs(L.det_A) > 0.0, ErrorKind::parameter, "lattice matrix is singular");
    L.dual = A.inverse().transpose();
    L.dual_inv = A.transpose();
    return L;
}

bool LatticeSpec::in_cell(const Point& xi) const {
    const Point u = cell_coords(xi);
    for (double v : u)
        if (v < 0.0 || v >= 1.0) return false;
    return true;
}

Point LatticeSpec::dual_vector(int axis) const {
    Point v(d());
    for (int i = 0; i < d(); ++i) v[i] = dual(i, axis);
    return v;
}

double LatticeSpec::cell_volume() const { return 1.0 / std::abs(det_A); }

}  // namespace fracnup
