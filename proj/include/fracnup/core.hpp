#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fracnup {

using cplx = std::complex<double>;
using Point = std::vector<double>;

double norm(const Point& x);
double dot(const Point& a, const Point& b);

// Small dense square matrix, row-major.
struct Matrix {
    int n = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int n_, std::vector<double> values);
    static Matrix identity(int n);

    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }

    Matrix transpose() const;
    Matrix inverse() const;
    double determinant() const;
    Matrix operator*(const Matrix& o) const;
    Point apply(const Point& x) const;
};

// Uniform grid on [-L, L)^d with N nodes per axis, row-major flattening.
struct Grid {
    int d = 1;
    double L = 1.0;
    int N = 2;

    static Grid make(int d, double L, int N);

    double h() const { return 2.0 * L / N; }
    double frequency_step() const { return 1.0 / (2.0 * L); }
    std::size_t size() const;
    double coord(int j) const { return -L + j * h(); }
    Point node(std::size_t flat) const;
    // Frequency of DFT index q along one axis, in the e^{-2 pi i x xi} convention.
    double frequency(int q) const { return (q < N / 2 ? q : q - N) * frequency_step(); }
    Point frequency_point(std::size_t flat) const;
};

// Closed-form evaluator attached to a sampled function. `majorant(rho)` bounds
// |f(w)| for all |w| >= rho; it feeds far-field tail estimates.
struct ClosedForm {
    std::string tag;
    std::function<cplx(const Point&)> eval;
    std::function<double(double)> majorant;
};

struct SampledFunction {
    Grid grid;
    std::vector<cplx> values;
    std::optional<ClosedForm> closed_form;

    double max_abs() const;
};

SampledFunction sample(const Grid& grid, const ClosedForm& f);
SampledFunction zero_function(const Grid& grid);
ClosedForm gaussian(int d);

enum class GeneratorKind { Z_alpha, Lambda_alpha_c, lattice, explicit_points };

struct Generator {
    GeneratorKind kind = GeneratorKind::explicit_points;
    int d = 1;
    double alpha = 1.0;
    double c = 1.0;
    Matrix A;

    static Generator z_alpha(double alpha);
    static Generator lambda_alpha_c(int d, double alpha, double c);
    static Generator lattice(const Matrix& A);
    static Generator explicit_points(int d);

    std::string name() const;
    std::string params() const;
};

struct DiscreteSet {
    int d = 1;
    std::vector<Point> points;
    Generator generator;
    double R = 0.0;
};

constexpr std::size_t kDefaultPointCap = 10'000'000;

DiscreteSet generate_set(const Generator& gen, double R, std::size_t cap = kDefaultPointCap);

// Wraps arbitrary points: sorted, deduplicated, and checked against R.
DiscreteSet make_explicit_set(int d, std::vector<Point> points, double R);

enum class CovKind { identity, G_alpha, Phi_alpha_c };

struct ChangeOfVariables {
    CovKind kind = CovKind::identity;
    int d = 1;
    double alpha = 1.0;
    double c = 1.0;

    static ChangeOfVariables identity(int d);
    static ChangeOfVariables g_alpha(double alpha);
    static ChangeOfVariables phi_alpha_c(int d, double alpha, double c);

    std::string name() const;
};

Point cov_forward(const ChangeOfVariables& F, const Point& x);
Point cov_inverse(const ChangeOfVariables& F, const Point& xi);
double cov_forward_1d(const ChangeOfVariables& F, double x);
double cov_inverse_1d(const ChangeOfVariables& F, double xi);
double cov_derivative_1d(const ChangeOfVariables& F, double x);

// Lambda = A Z^d, dual Lambda* = A^{-t} Z^d, cell Q_A = A^{-t} [0,1)^d.
struct LatticeSpec {
    Matrix A;
    double det_A = 0.0;
    Matrix dual;       // A^{-t}
    Matrix dual_inv;   // A^t

    static LatticeSpec make(const Matrix& A);

    int d() const { return A.n; }
    // Coordinates u with xi = A^{-t} u.
    Point cell_coords(const Point& xi) const { return dual_inv.apply(xi); }
    Point from_cell_coords(const Point& u) const { return dual.apply(u); }
    bool in_cell(const Point& xi) const;
    // A^{-t} e_axis.
    Point dual_vector(int axis) const;
    double cell_volume() const;
};

}  // namespace fracnup
