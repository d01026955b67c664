#include "fracnup/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "fracnup/density.hpp"
#include "fracnup/errors.hpp"
#include "fracnup/quadrature.hpp"

namespace fracnup {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Runs f(i) for i in [0, n) on a few threads; each index is independent.
template <class F>
void parallel_for(int n, F&& f) {
    const int workers = std::max(1, std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency())));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < n; i += workers) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}
}  // namespace

PhaseSequence PhaseSequence::make(double alpha, int ell, long long N_max) {
    PhaseSequence s{alpha, ell, N_max};
    s.validate();
    return s;
}

void PhaseSequence::validate() const {
    require(alpha > 0.0 && alpha < 1.0, ErrorKind::parameter, "alpha must lie in (0, 1)");
    require(ell >= 1, ErrorKind::parameter, "ell must be a positive integer");
    require(N_max >= 1, ErrorKind::parameter, "N_max must be positive");
}

double PhaseSequence::x(double n) const { return std::pow(n, alpha); }
double PhaseSequence::y(double n) const { return alpha <= 0.5 ? std::pow(n, alpha - 1.0) : 1.0; }

long long first_index_beyond(const PhaseSequence& seq, double x, double margin) {
    const double target = std::abs(x) + margin;
    auto n = static_cast<long long>(std::floor(std::pow(target, seq.beta())));
    n = std::max(1LL, n - 1);
    while (seq.x(static_cast<double>(n)) < target) ++n;
    return n;
}

// ---- tail integrals ----

namespace {

// Upper bound for int_N^inf c y(t) [(d_-^2 + y^2)^{-p} + (d_s^2 + y^2)^{-p}] dt, where
// d_- = x(t) - |x| and d_s = x(t) + |x| (or d_- again when both_minus). The integral is
// taken in tau with x(t) = |x| + d_N e^tau; beyond U the integrand is bounded analytically.
// Returns {estimate, allowance}.
struct TailIntegral {
    double value = 0.0;
    double allowance = 0.0;
};

// Integral of f over [x_N, inf) in u = x(t), substituting u = |x| + d_N e^tau; the part
// beyond U is covered by remainder(U).
template <class F, class Rem>
TailIntegral tau_integral(double ax, double dN, F&& integrand_u, Rem&& remainder, double target) {
    double T = 1.0;
    const double goal = std::max(0.01 * target, 1e-300);
    while (T < 700.0 && remainder(ax + dN * std::exp(T)) > goal) T *= 1.25;
    const double U = ax + dN * std::exp(T);
    const int panels = std::max(4, static_cast<int>(std::ceil(2.0 * T)));
    auto integrand_tau = [&](double tau) {
        const double dist = dN * std::exp(tau);
        return integrand_u(ax + dist) * dist;
    };
    const double fine = integrate(integrand_tau, 0.0, T, panels, 16);
    const double coarse = integrate(integrand_tau, 0.0, T, panels, 8);
    return {fine, std::abs(fine - coarse) + remainder(U)};
}

TailIntegral tail_integral(const PhaseSequence& seq, double x, double N, double c, double p, bool both_minus,
                           double target) {
    const double ax = std::abs(x);
    const double beta = seq.beta();
    const double dN = seq.x(N) - ax;
    require(dN > 0.0, ErrorKind::precondition, "tail integral needs x_N > |x|");

    auto integrand_u = [&](double u) {
        // dt/du = beta u^{beta-1}; y as a function of u.
        const double y = seq.alpha <= 0.5 ? std::pow(u, 1.0 - beta) : 1.0;
        const double jac = beta * std::pow(u, beta - 1.0);
        const double dm = u - ax;
        const double ds = both_minus ? dm : u + ax;
        return c * y * jac * (std::pow(dm * dm + y * y, -p) + std::pow(ds * ds + y * y, -p));
    };
    // Remainder beyond U: integrand <= 2 c y jac (u - |x|)^{-2p}.
    auto remainder = [&](double U) {
        if (seq.alpha <= 0.5) return 2.0 * c * beta * std::pow(U - ax, 1.0 - 2.0 * p) / (2.0 * p - 1.0);
        const double Ue = std::max(U, 2.0 * ax);
        return 2.0 * c * beta * std::pow(4.0, p) * std::pow(Ue, beta - 2.0 * p) / (2.0 * p - beta);
    };
    return tau_integral(ax, dN, integrand_u, remainder, target);
}

// int_N^inf atan(2|x| y(t) / (y^2 + x(t)^2 - x^2)) dt, the continuous version of the
// collapsed arctangent terms of phi(x).
TailIntegral arctan_tail_integral(const PhaseSequence& seq, double x, double N, double target) {
    const double ax = std::abs(x);
    const double beta = seq.beta();
    const double dN = seq.x(N) - ax;
    require(dN > 0.0, ErrorKind::precondition, "tail integral needs x_N > |x|");
    auto integrand_u = [&](double u) {
        const double y = seq.alpha <= 0.5 ? std::pow(u, 1.0 - beta) : 1.0;
        const double jac = beta * std::pow(u, beta - 1.0);
        return jac * std::atan(2.0 * ax * y / (y * y + (u - ax) * (u + ax)));
    };
    // Beyond U >= 2|x|: integrand <= (8/3) |x| y jac / u^2.
    auto remainder = [&](double U) {
        const double Ue = std::max(U, 2.0 * ax);
        if (seq.alpha <= 0.5) return (8.0 / 3.0) * ax * beta / Ue;
        return (8.0 / 3.0) * ax * beta * std::pow(Ue, beta - 2.0) / (2.0 - beta);
    };
    return tau_integral(ax, dN, integrand_u, remainder, target);
}

double poisson_term(double u, double v) { return v / (u * u + v * v); }

// sum_{n <= N} [P^{(m)}(x - x_n) + P^{(m)}(x + x_n)], ascending n.
double poisson_partial(const PhaseSequence& seq, double x, int m, long long N) {
    double sum = 0.0;
    if (m == 0) {
        for (long long n = 1; n <= N; ++n) {
            const double xn = seq.x(static_cast<double>(n));
            const double yn = seq.alpha <= 0.5 ? xn / static_cast<double>(n) : 1.0;
            sum += poisson_term(x - xn, yn) + poisson_term(x + xn, yn);
        }
        return sum;
    }
    // P^{(m)}(u) = Im((-1)^m m! / (u - i v)^{m+1})
    const double pre = (m % 2 == 0 ? 1.0 : -1.0) * factorial(m);
    for (long long n = 1; n <= N; ++n) {
        const double xn = seq.x(static_cast<double>(n));
        const double yn = seq.alpha <= 0.5 ? xn / static_cast<double>(n) : 1.0;
        const cplx w1 = 1.0 / cplx(x - xn, -yn);
        const cplx w2 = 1.0 / cplx(x + xn, -yn);
        cplx p1 = w1, p2 = w2;
        for (int i = 0; i < m; ++i) {
            p1 *= w1;
            p2 *= w2;
        }
        sum += pre * (p1.imag() + p2.imag());
    }
    return sum;
}

long long resolve_N(const PhaseSequence& seq, const PhaseOptions& opt, long long n_min, long long n_local,
                    const std::function<double(long long)>& bound, double tol, const char* what) {
    if (opt.force_N) {
        require(*opt.force_N >= n_min, ErrorKind::truncation,
                std::string(what) + ": forced N below the monotone region, need N >= " + std::to_string(n_min));
        return *opt.force_N;
    }
    // N_max caps the tolerance-driven doubling, but never below the index where x_n
    // reaches 2|x| + 2: the terms up to there are local to x and must be summed.
    long long N = std::max(std::min(1000LL, seq.N_max), n_min);
    const long long cap = std::max({seq.N_max, n_min, n_local});
    while (bound(N) > tol) {
        if (N >= cap) {
            while (bound(N) > tol && N < (1LL << 50)) N *= 2;
            fail(ErrorKind::truncation, std::string(what) + ": tail bound above tolerance at N_max = " +
                                            std::to_string(seq.N_max) + "; suggested N = " + std::to_string(N));
        }
        N = std::min(2 * N, cap);
    }
    return N;
}

}  // namespace

PhaseValue phase_derivative(const PhaseSequence& seq, double x, int k, const PhaseOptions& opt) {
    seq.validate();
    require(k >= 1, ErrorKind::parameter, "derivative order must be >= 1");
    require(std::isfinite(x), ErrorKind::parameter, "x must be finite");
    const double scale = seq.ell * std::pow(1.0 + std::abs(x), k * (seq.beta() - 1.0));
    const double tol = (k == 1 ? opt.rel_tol : opt.higher_rel_tol) * scale;
    // Terms are monotone in n once x_n - |x| >= sqrt(k) y_n; y_n <= 1.
    const long long n_min = first_index_beyond(seq, x, std::sqrt(static_cast<double>(k)) + 1.0);
    const double ell = seq.ell;

    PhaseValue out;
    if (k == 1) {
        auto bracket = [&](long long N) {
            const TailIntegral a = tail_integral(seq, x, static_cast<double>(N + 1), 1.0, 1.0, false, tol / ell);
            const TailIntegral b = tail_integral(seq, x, static_cast<double>(N), 1.0, 1.0, false, tol / ell);
            return std::pair{a, b};
        };
        auto half_width = [&](long long N) {
            auto [a, b] = bracket(N);
            return ell * (0.5 * (b.value - a.value) + std::max(a.allowance, b.allowance));
        };
        out.N = resolve_N(seq, opt, n_min, first_index_beyond(seq, 2.0 * std::abs(x), 2.0), half_width, tol, "phase derivative");
        auto [a, b] = bracket(out.N);
        out.value = ell * (poisson_partial(seq, x, 0, out.N) + 0.5 * (a.value + b.value));
        out.tail_bound = ell * (0.5 * (b.value - a.value) + std::max(a.allowance, b.allowance));
        return out;
    }
    const int m = k - 1;
    auto bound = [&](long long N) {
        const TailIntegral t =
            tail_integral(seq, x, static_cast<double>(N), factorial(k), 0.5 * (k + 1), false, tol / ell);
        return ell * (t.value + t.allowance);
    };
    out.N = resolve_N(seq, opt, n_min, first_index_beyond(seq, 2.0 * std::abs(x), 2.0), bound, tol, "phase derivative");
    out.value = ell * poisson_partial(seq, x, m, out.N);
    out.tail_bound = bound(out.N);
    return out;
}

PhaseValue phase_value(const PhaseSequence& seq, double x, const PhaseOptions& opt) {
    seq.validate();
    const double ax = std::abs(x);
    PhaseValue out;
    if (ax == 0.0) return out;
    const double scale = seq.ell * std::pow(1.0 + ax, seq.beta());
    const double tol = opt.rel_tol * scale;
    const long long n_min = first_index_beyond(seq, x, 2.0);
    const double ell = seq.ell;
    // Past n_min the collapsed arctangent terms decrease in n, so the tail lies between the
    // integrals from N+1 and from N; the midpoint is added.
    auto bracket = [&](long long N) {
        const TailIntegral a = arctan_tail_integral(seq, x, static_cast<double>(N + 1), tol / ell);
        const TailIntegral b = arctan_tail_integral(seq, x, static_cast<double>(N), tol / ell);
        return std::pair{a, b};
    };
    auto half_width = [&](long long N) {
        auto [a, b] = bracket(N);
        return ell * (0.5 * (b.value - a.value) + std::max(a.allowance, b.allowance));
    };
    out.N = resolve_N(seq, opt, n_min, first_index_beyond(seq, 2.0 * ax, 2.0), half_width, tol, "phase value");
    double sum = 0.0;
    for (long long n = 1; n <= out.N; ++n) {
        const double xn = seq.x(static_cast<double>(n));
        const double yn = seq.alpha <= 0.5 ? xn / static_cast<double>(n) : 1.0;
        if (xn > ax) {
            // arctan(a) + arctan(b) with ab < 0 collapses to one arctangent.
            sum += std::atan(2.0 * x * yn / (yn * yn + xn * xn - x * x));
        } else {
            sum += std::atan((x - xn) / yn) + std::atan((x + xn) / yn);
        }
    }
    auto [a, b] = bracket(out.N);
    out.value = ell * (sum + std::copysign(0.5 * (a.value + b.value), x));
    out.tail_bound = half_width(out.N);
    return out;
}

// ---- convergence sums ----

SeriesCertificate blaschke_condition(const PhaseSequence& seq, long long N) {
    seq.validate();
    require(N >= 1, ErrorKind::parameter, "N must be positive");
    SeriesCertificate c;
    c.N = N;
    for (long long n = 1; n <= N; ++n) {
        const double xn = seq.x(static_cast<double>(n));
        const double yn = seq.y(static_cast<double>(n));
        c.partial += 2.0 * yn / (xn * xn + yn * yn);
    }
    // Terms y/(x^2 + y^2) decrease once x_n >= y_n, which holds for n >= 1.
    const double Nn = static_cast<double>(std::max<long long>(N, 1));
    const TailIntegral t = tail_integral(seq, 0.0, Nn, 1.0, 1.0, false, 1e-16);
    c.tail_bound = t.value + t.allowance;
    c.certified = std::isfinite(c.partial + c.tail_bound);
    return c;
}

SeriesCertificate regularity_sum(const PhaseSequence& seq, double x0, int k, long long N) {
    seq.validate();
    require(k >= 0, ErrorKind::parameter, "k must be >= 0");
    const double p = k + 1.0;
    const long long n_min = first_index_beyond(seq, x0, std::sqrt(2.0 * k + 1.0) + 1.0);
    SeriesCertificate c;
    c.N = std::max(N > 0 ? N : 10000LL, n_min);
    for (long long n = 1; n <= c.N; ++n) {
        const double xn = seq.x(static_cast<double>(n));
        const double yn = seq.y(static_cast<double>(n));
        const double a = (x0 - xn) * (x0 - xn) + yn * yn;
        const double b = (x0 + xn) * (x0 + xn) + yn * yn;
        c.partial += yn * (std::pow(a, -p) + std::pow(b, -p));
    }
    const TailIntegral t = tail_integral(seq, x0, static_cast<double>(c.N), 1.0, p, false, 1e-16);
    c.tail_bound = t.value + t.allowance;
    c.certified = std::isfinite(c.partial) && std::isfinite(c.tail_bound);
    return c;
}

// ---- Blaschke product and model-space kernel ----

BlaschkeValue blaschke_eval(const PhaseSequence& seq, cplx z, long long N) {
    seq.validate();
    require(z.imag() >= 0.0, ErrorKind::domain, "Theta is evaluated on the closed upper half-plane");
    require(N >= 1 && N <= seq.N_max, ErrorKind::parameter, "truncation must satisfy 1 <= N <= N_max");
    cplx prod = 1.0;
    for (long long n = 1; n <= N; ++n) {
        const double xn = seq.x(static_cast<double>(n));
        const double yn = seq.y(static_cast<double>(n));
        for (double sx : {xn, -xn}) {
            const cplx zn(sx, yn);
            require(std::abs(z - std::conj(zn)) >= 1e-12, ErrorKind::pole, "evaluation point at a pole of Theta");
            prod *= (1.0 - z / zn) / (1.0 - z / std::conj(zn));
        }
    }
    cplx value = 1.0;
    cplx base = prod;
    for (int e = seq.ell; e > 0; e >>= 1) {
        if (e & 1) value *= base;
        base *= base;
    }
    BlaschkeValue out{value, 0.0};
    if (z.imag() > 0.0) {
        // |1 - b_n(z)| <= 4 |z| y_n / |z_n|^2 once |z_n| >= 2|z|.
        if (seq.x(static_cast<double>(N + 1)) >= 2.0 * std::abs(z)) {
            const TailIntegral t = tail_integral(seq, 0.0, static_cast<double>(N), 1.0, 1.0, false, 1e-16);
            const double S = 4.0 * std::abs(z) * (t.value + t.allowance);
            out.tail_bound = std::abs(value) * std::expm1(seq.ell * S);
        } else {
            out.tail_bound = kInf;
        }
    }
    return out;
}

cplx model_kernel(const PhaseSequence& seq, cplx w, cplx z, long long N) {
    const cplx tw = blaschke_eval(seq, w, N).value;
    const cplx tz = blaschke_eval(seq, z, N).value;
    const cplx den = z - std::conj(w);
    require(std::abs(den) > 0.0, ErrorKind::domain, "kernel undefined at z = conj(w)");
    return cplx(0.0, 1.0 / (2.0 * kPi)) * (1.0 - std::conj(tw) * tz) / den;
}

double model_kernel_norm(const PhaseSequence& seq, cplx w, long long N) {
    require(w.imag() > 0.0, ErrorKind::domain, "kernel norm needs Im w > 0");
    const double t = std::abs(blaschke_eval(seq, w, N).value);
    return std::sqrt((1.0 - t * t) / (4.0 * kPi * w.imag()));
}

// ---- property reports ----

namespace {

std::vector<double> sample_points(double X, int samples) {
    std::vector<double> xs(samples);
    for (int i = 0; i < samples; ++i) xs[i] = std::pow(1.0 + X, static_cast<double>(i) / (samples - 1)) - 1.0;
    xs.back() = X;
    return xs;
}

PhaseReport derivative_report(const PhaseSequence& seq, int k, double X, int samples, const PhaseOptions& opt) {
    seq.validate();
    require(X >= 2.0, ErrorKind::parameter, "window radius must be >= 2");
    require(samples >= 3, ErrorKind::parameter, "need at least 3 samples");
    PhaseReport rep;
    rep.k = k;
    rep.xs = sample_points(X, samples);
    rep.values.resize(samples);
    rep.ratios.resize(samples);
    rep.tail_bounds.resize(samples);
    parallel_for(samples, [&](int i) {
        const PhaseValue v = phase_derivative(seq, rep.xs[i], k, opt);
        rep.values[i] = v.value;
        rep.tail_bounds[i] = v.tail_bound;
        rep.ratios[i] = std::abs(v.value) / (seq.ell * std::pow(1.0 + rep.xs[i], k * (seq.beta() - 1.0)));
    });
    rep.band_lo = *std::min_element(rep.ratios.begin(), rep.ratios.end());
    rep.band_hi = *std::max_element(rep.ratios.begin(), rep.ratios.end());
    double lo_half = kInf, hi_half = 0.0;
    for (int i = 0; i < samples; ++i)
        if (rep.xs[i] <= 0.5 * X) {
            lo_half = std::min(lo_half, rep.ratios[i]);
            hi_half = std::max(hi_half, rep.ratios[i]);
        }
    rep.drift = (rep.band_hi / rep.band_lo) / (hi_half / lo_half);
    return rep;
}

}  // namespace

PhaseReport verify_P1(const PhaseSequence& seq, double X, int samples, const PhaseOptions& opt) {
    PhaseReport rep = derivative_report(seq, 1, X, samples, opt);
    rep.regularity_certified = true;
    rep.pass = rep.band_lo > 0.0 && std::isfinite(rep.band_hi) && rep.drift < 10.0;
    return rep;
}

PhaseReport verify_P2(const PhaseSequence& seq, int k, double X, int samples, const PhaseOptions& opt) {
    require(k >= 1 && k <= 6, ErrorKind::parameter, "P2 check supports 1 <= k <= 6");
    PhaseReport rep = derivative_report(seq, k, X, samples, opt);
    rep.regularity_partial.resize(samples);
    rep.regularity_tail.resize(samples);
    rep.regularity_certified = true;
    for (int i = 0; i < samples; ++i) {
        const SeriesCertificate c = regularity_sum(seq, rep.xs[i], k);
        rep.regularity_partial[i] = c.partial;
        rep.regularity_tail[i] = c.tail_bound;
        rep.regularity_certified = rep.regularity_certified && c.certified;
    }
    rep.pass = std::isfinite(rep.band_hi) && rep.regularity_certified;
    return rep;
}

std::vector<cplx> theta_derivative_ratios(const std::vector<double>& phi_derivs) {
    // Theta = exp(2 i phi): Theta^{(n)} / Theta = B_n(2 i phi', ..., 2 i phi^{(n)}),
    // B_{n+1} = sum_i C(n, i) B_{n-i} x_{i+1}.
    const std::size_t order = phi_derivs.size();
    std::vector<cplx> xs(order);
    for (std::size_t i = 0; i < order; ++i) xs[i] = cplx(0.0, 2.0 * phi_derivs[i]);
    std::vector<cplx> B(order + 1, 0.0);
    B[0] = 1.0;
    for (std::size_t n = 0; n < order; ++n) {
        double binom = 1.0;
        cplx acc = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            acc += binom * B[n - i] * xs[i];
            binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
        }
        B[n + 1] = acc;
    }
    return B;
}

namespace {

// (k!)^2/(2 pi i) sum_j conj(Theta^{(j)}) Theta^{(2k+1-j)} / (j! (2k+1-j)!), the kernel norm
// squared. Equals minus the conjugate of the same sum with the conjugation on the high-order
// factor; at k = 0 it is |Theta'|/(2 pi) = phi'/pi > 0.
cplx theorem_b_sum(const std::vector<double>& phi_derivs, int k) {
    const std::vector<cplx> B = theta_derivative_ratios(phi_derivs);
    cplx s = 0.0;
    for (int j = 0; j <= k; ++j)
        s += B[j] * std::conj(B[2 * k + 1 - j]) / (factorial(j) * factorial(2 * k + 1 - j));
    const double kf = factorial(k);
    return -std::conj(kf * kf * s / cplx(0.0, 2.0 * kPi));
}

}  // namespace

TheoremBResult theorem_b_bound(const PhaseSequence& seq, double x0, int k, const PhaseOptions& opt) {
    seq.validate();
    require(k >= 0 && k <= 4, ErrorKind::parameter, "Theorem B evaluator supports 0 <= k <= 4");
    const SeriesCertificate reg = regularity_sum(seq, x0, k);
    require(reg.certified, ErrorKind::precondition, "regularity sum at x0 is not certified finite");
    const int order = 2 * k + 1;
    std::vector<double> d(order), tb(order);
    for (int j = 0; j < order; ++j) {
        const PhaseValue v = phase_derivative(seq, x0, j + 1, opt);
        d[j] = v.value;
        tb[j] = v.tail_bound;
    }
    const cplx s = theorem_b_sum(d, k);
    TheoremBResult out;
    require(s.real() >= 0.0, ErrorKind::accuracy, "Theorem B sum has negative real part");
    out.bound = std::sqrt(s.real());
    out.imag_residual = std::abs(s.imag());
    // Corners of the tail intervals.
    for (int mask = 0; mask < (1 << order); ++mask) {
        std::vector<double> e = d;
        for (int j = 0; j < order; ++j) e[j] += (mask >> j & 1 ? 1.0 : -1.0) * tb[j];
        const cplx se = theorem_b_sum(e, k);
        out.tail_spread = std::max(out.tail_spread, std::abs(std::sqrt(std::max(0.0, se.real())) - out.bound));
    }
    return out;
}

// ---- Theorem A hypotheses ----

DoublingDiag doubling_diagnostic(const PhaseSequence& seq, double X, const PhaseOptions& opt) {
    require(X >= 1.0, ErrorKind::parameter, "doubling window must have X >= 1");
    DoublingDiag diag;
    // Dyadic lengths 2^j from 1/4 up to X/2.
    std::vector<std::pair<double, double>> intervals;
    for (double len = 0.25; len <= 0.5 * X; len *= 2.0) {
        const auto m_lo = static_cast<long long>(std::ceil((-X + 0.5 * len) / len));
        const auto m_hi = static_cast<long long>(std::floor((X - 1.5 * len) / len));
        for (long long m = m_lo; m <= m_hi; ++m) intervals.emplace_back(m * len, len);
    }
    std::vector<double> ratios(intervals.size());
    parallel_for(static_cast<int>(intervals.size()), [&](int i) {
        const auto [a, len] = intervals[i];
        const double mu_I = phase_value(seq, a + len, opt).value - phase_value(seq, a, opt).value;
        const double mu_2I = phase_value(seq, a + 1.5 * len, opt).value - phase_value(seq, a - 0.5 * len, opt).value;
        ratios[i] = mu_2I / mu_I;
    });
    for (std::size_t i = 0; i < intervals.size(); ++i)
        if (ratios[i] > diag.max_ratio) {
            diag.max_ratio = ratios[i];
            diag.worst_left = intervals[i].first;
            diag.worst_length = intervals[i].second;
        }
    diag.intervals = static_cast<int>(intervals.size());
    return diag;
}

TheoremAReport theorem_a_hypotheses(const DiscreteSet& set, const PhaseSequence& seq, const TheoremAOptions& opt) {
    seq.validate();
    require(set.d == 1, ErrorKind::parameter, "Theorem A checks are one-dimensional");
    require(set.points.size() >= 3, ErrorKind::size, "need at least three points");
    TheoremAReport rep;

    // phi(x) = int_0^x phi' by Gauss-Legendre panels between consecutive sorted nodes.
    std::vector<double> xs;
    xs.reserve(set.points.size() + 1);
    for (const Point& p : set.points) xs.push_back(p[0]);
    xs.push_back(0.0);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const GaussRule& g = gauss_legendre(opt.panel_order);
    const std::size_t M = xs.size();
    std::vector<double> incr(M, 0.0), incr_err(M, 0.0);
    parallel_for(static_cast<int>(M - 1), [&](int i) {
        const double a = xs[i], b = xs[i + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double s = 0.0, e = 0.0;
        for (std::size_t q = 0; q < g.nodes.size(); ++q) {
            const PhaseValue v = phase_derivative(seq, mid + half * g.nodes[q], 1, opt.phase);
            s += g.weights[q] * v.value;
            e += g.weights[q] * v.tail_bound;
        }
        incr[i + 1] = half * s;
        incr_err[i + 1] = half * e;
    });
    const auto zero = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), 0.0) - xs.begin());
    std::vector<double> phi(M, 0.0), err(M, 0.0);
    for (std::size_t i = zero + 1; i < M; ++i) {
        phi[i] = phi[i - 1] + incr[i];
        err[i] = err[i - 1] + incr_err[i];
    }
    for (std::size_t i = zero; i-- > 0;) {
        phi[i] = phi[i + 1] - incr[i + 1];
        err[i] = err[i + 1] + incr_err[i + 1];
    }
    // Dual route: arctangent series at the outermost nodes.
    for (std::size_t i : {std::size_t{0}, M - 1}) {
        const PhaseValue v = phase_value(seq, xs[i], opt.phase);
        rep.integration_discrepancy = std::max(rep.integration_discrepancy, std::abs(v.value - phi[i]));
    }
    rep.integration_error = *std::max_element(err.begin(), err.end());

    std::vector<Point> image;
    for (const Point& p : set.points) {
        const auto it = std::lower_bound(xs.begin(), xs.end(), p[0]);
        const double v = phi[static_cast<std::size_t>(it - xs.begin())];
        image.push_back({v});
        rep.image.push_back(v);
    }
    double span = 0.0;
    for (const Point& p : image) span = std::max(span, std::abs(p[0]));
    const DiscreteSet img = make_explicit_set(1, image, span);
    const SeparationResult sep = check_separated(img);
    rep.phi_separated = sep.separated;
    rep.min_image_gap = sep.min_gap;

    std::vector<double> rs;
    for (double f : opt.r_fractions) rs.push_back(f * 2.0 * span);
    const DensityEstimate est = estimate_density(img, ChangeOfVariables::identity(1), rs);
    rep.upper_density = *std::max_element(est.sup_ratios.begin(), est.sup_ratios.end());
    rep.lower_density = *std::min_element(est.inf_ratios.begin(), est.inf_ratios.end());

    double X = 0.0;
    for (double x : xs) X = std::max(X, std::abs(x));
    rep.doubling = doubling_diagnostic(seq, X, opt.phase);
    rep.pass = rep.phi_separated && rep.upper_density < 1.0 / kPi && rep.doubling.max_ratio <= opt.doubling_cap;
    return rep;
}

}  // namespace fracnup
