#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fracnup/core.hpp"
#include "fracnup/ops.hpp"

namespace fracnup {

// phi(xi) = amplitude * exp(-1 / (1 - |u|^2)) with u = (xi - center)/radius, zero for |u| >= 1.
struct BumpSpec {
    Point center;
    double radius = 0.0;
    double amplitude = 1.0;

    double operator()(const Point& xi) const;
    double sup() const;
};

// {xi : xi . normal = offset}
struct Hyperplane {
    Point normal;
    double offset = 0.0;

    bool contains(const Point& xi) const { return dot(xi, normal) == offset; }
    double distance(const Point& xi) const;
};

// {xi : xi . v = -(3/2) |v|^2}
Hyperplane hyperplane_Hv(const Point& v);

// Center on a coarse grid of Q_A maximizing the distance to H_v and the cell
// boundary; radius half that distance; amplitude 1.
BumpSpec choose_bump(const LatticeSpec& lattice, const Point& v, int grid_per_axis = 64);

struct NupFunction {
    LatticeSpec lattice;
    MultiplierSpec m;
    std::array<Point, 3> v;  // shifts v_1, v_2, v_3 in the dual lattice
    BumpSpec bump;
    // Which nonvanishing condition on g_2 was certified: "closure(supp phi)" always,
    // plus the cell-wide minimum for reference.
    std::string certified_condition;
    double g2_min_support = 0.0;
    double g2_min_cell = 0.0;
    bool cell_condition_holds = false;

    // g_j(xi) = m(xi + v_1) - m(xi + v_j)
    cplx g(int j, const Point& xi) const;
    // Coefficients on Q_A: a_3 = phi, a_2 = -phi g_3/g_2, a_1 = -a_2 - a_3.
    cplx a(int j, const Point& xi) const;
    // Shift formula: sum_j 1_{v_j + Q_A}(xi) a_j(xi - v_j).
    cplx fhat(const Point& xi) const;
    bool in_support_cells(const Point& xi) const;
};

NupFunction build_nup(const LatticeSpec& lattice, const MultiplierSpec& m, const BumpSpec& bump,
                      const std::optional<std::array<Point, 3>>& triple = std::nullopt);
NupFunction build_nup(const LatticeSpec& lattice, double s, const BumpSpec& bump);

// Default triple v, 2v, 3v with v = A^{-t} e_1.
std::array<Point, 3> default_triple(const LatticeSpec& lattice);

// F_A(xi) = sum_{l in Lambda*} w(xi + l) fhat(xi + l); only l = v_1, v_2, v_3 can
// contribute. weight = nullopt means w = 1.
cplx periodize(const NupFunction& nup, const Point& xi, const std::optional<MultiplierSpec>& weight = std::nullopt);

enum class VerifyMode { direct_quadrature, periodization };

struct VanishingOptions {
    int order = 16;
    // Panels per unit length in cell coordinates; 0 picks max(base, 2K).
    int panels_per_unit = 0;
    int base_panels_per_unit = 16;
    // Minimum quadrature nodes per oscillation period of exp(2 pi i k.u).
    double min_nodes_per_wavelength = 6.0;
};

struct VanishingRow {
    std::vector<long long> k;
    double f_residual = 0.0;
    double Tf_residual = 0.0;
};

struct VanishingReport {
    VerifyMode mode = VerifyMode::direct_quadrature;
    int K = 0;
    std::vector<VanishingRow> rows;
    double max_f_residual = 0.0;
    double max_Tf_residual = 0.0;
    double f_sup = 0.0;
    double Tf_sup = 0.0;
    std::size_t nodes = 0;
};

VanishingReport verify_lattice_vanishing(const NupFunction& nup, int K, VerifyMode mode,
                                         const VanishingOptions& opt = {});

// f(x) and T_m f(x) at arbitrary points by the direct Fourier quadrature.
struct NupValues {
    std::vector<cplx> f;
    std::vector<cplx> Tf;
};
NupValues evaluate_nup(const NupFunction& nup, const std::vector<Point>& xs, const VanishingOptions& opt = {},
                       int K_hint = 8);

// Function with fhat = bump((xi - a)/width), supported in [a - width, a + width].
Grid default_halfline_grid();
SampledFunction halfline_test_function(double a, double width, const Grid& grid = default_halfline_grid());

}  // namespace fracnup
