#include "fracnup/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "fracnup/errors.hpp"
#include "fracnup/io.hpp"

namespace fracnup {

namespace {

// Flag values after defaults, CLI flags and `--config` overrides (in that order).
struct CommonArgs {
    std::string config;
    std::string out_dir;
    bool json_stdout = false;
    unsigned long long seed = 1;
};

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::config, "cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::config, std::string("malformed JSON in '") + path + "': " + e.what());
    }
    require(j.is_object(), ErrorKind::config, "config must be a JSON object");
    return j;
}

template <class T>
void override(const json& cfg, const char* key, T& field) {
    if (!cfg.contains(key)) return;
    try {
        field = cfg.at(key).get<T>();
    } catch (const json::exception& e) {
        fail(ErrorKind::config, std::string("bad value for '") + key + "': " + e.what());
    }
}

void add_common(CLI::App* sub, CommonArgs& c) {
    sub->add_option("--config", c.config, "JSON file whose keys override flags");
    sub->add_option("--out", c.out_dir, "directory for CSV/JSON outputs");
    sub->add_flag("--json", c.json_stdout, "print the JSON summary instead of the CSV");
    sub->add_option("--seed", c.seed, "seed for randomized sampling");
}

// Emits the CSV and JSON summary to stdout and, when requested, to files.
void emit(const CommonArgs& c, const std::string& name, const std::string& csv, json summary, std::ostream& out) {
    summary["schema_version"] = kSchemaVersion;
    summary["command"] = name;
    summary["seed"] = c.seed;
    const std::string js = summary.dump(2) + "\n";
    if (!c.out_dir.empty()) {
        std::filesystem::create_directories(c.out_dir);
        const auto base = std::filesystem::path(c.out_dir) / name;
        if (!csv.empty()) std::ofstream(base.string() + ".csv") << csv;
        std::ofstream(base.string() + ".json") << js;
    }
    if (c.json_stdout || csv.empty()) out << js;
    else out << csv;
}

Point parse_point(const std::string& text) {
    Point p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            p.push_back(std::stod(item));
        } catch (const std::exception&) {
            fail(ErrorKind::config, "bad coordinate '" + item + "'");
        }
    }
    require(!p.empty(), ErrorKind::config, "empty point");
    return p;
}

// ---- density ----

struct DensityArgs {
    std::string set = "Z_alpha";
    double alpha = 1.0;
    double c = 1.0;
    int d = 1;
    std::string A = "1";
    std::string map = "identity";
    double R = 1e4;
    std::vector<double> r;
    bool pullback = false;
};

int cmd_density(const CommonArgs& c, DensityArgs a, std::ostream& out) {
    const json cfg = load_config(c.config);
    override(cfg, "set", a.set);
    override(cfg, "alpha", a.alpha);
    override(cfg, "c", a.c);
    override(cfg, "d", a.d);
    override(cfg, "A", a.A);
    override(cfg, "map", a.map);
    override(cfg, "R", a.R);
    override(cfg, "r", a.r);
    override(cfg, "pullback", a.pullback);

    Generator gen;
    if (a.set == "Z_alpha") gen = Generator::z_alpha(a.alpha);
    else if (a.set == "Lambda_alpha_c") gen = Generator::lambda_alpha_c(a.d, a.alpha, a.c);
    else if (a.set == "lattice") gen = Generator::lattice(parse_matrix(a.A));
    else fail(ErrorKind::config, "unknown set '" + a.set + "'");
    const int d = gen.kind == GeneratorKind::lattice ? gen.A.n : gen.d;

    ChangeOfVariables F;
    if (a.map == "identity") F = ChangeOfVariables::identity(d);
    else if (a.map == "G_alpha") F = ChangeOfVariables::g_alpha(a.alpha);
    else if (a.map == "Phi_alpha_c") F = ChangeOfVariables::phi_alpha_c(d, a.alpha, a.c);
    else fail(ErrorKind::config, "unknown map '" + a.map + "'");

    // --R is the window radius on the image side; pull it back for generation.
    require(a.R > 0.0, ErrorKind::parameter, "R must be positive");
    double R_orig = a.R;
    if (F.kind == CovKind::G_alpha) R_orig = cov_inverse_1d(F, a.R);
    if (F.kind == CovKind::Phi_alpha_c) R_orig = norm(cov_inverse(F, Point(d, 0.0 + a.R / std::sqrt(d))));
    if (a.r.empty()) a.r = {a.R / 100.0, a.R / 10.0};
    std::sort(a.r.begin(), a.r.end());

    const DiscreteSet set = generate_set(gen, R_orig);
    const DensityEstimate est =
        a.pullback ? estimate_density_pullback(set, F, a.r) : estimate_density(set, F, a.r);
    std::ostringstream csv;
    write_density_csv(csv, est);
    json summary{{"set", gen.name()},      {"params", gen.params()},       {"map", F.name()},
                 {"R_image", a.R},          {"R_original", R_orig},         {"points", set.points.size()},
                 {"upper", est.upper},      {"lower", est.lower},           {"monotone_trend", est.monotone_trend},
                 {"center_rule", est.center_rule}};
    emit(c, "density", csv.str(), summary, out);
    return 0;
}

// ---- nup ----

struct NupArgs {
    int d = 1;
    std::string A;
    std::string multiplier = "frac_laplacian";
    double s = 0.5;
    double lambda = 0.0;
    double gamma = 1.0;
    int K = 20;
    std::string mode = "direct";
    int order = 16;
    int panels_per_unit = 0;
};

int cmd_nup(const CommonArgs& c, NupArgs a, std::ostream& out) {
    const json cfg = load_config(c.config);
    override(cfg, "d", a.d);
    override(cfg, "A", a.A);
    override(cfg, "s", a.s);
    override(cfg, "lambda", a.lambda);
    override(cfg, "gamma", a.gamma);
    override(cfg, "K", a.K);
    override(cfg, "mode", a.mode);
    override(cfg, "order", a.order);
    override(cfg, "panels_per_unit", a.panels_per_unit);
    if (cfg.contains("multiplier") && cfg["multiplier"].is_string()) override(cfg, "multiplier", a.multiplier);

    require(a.K >= 1, ErrorKind::parameter, "verifier needs K >= 1");
    require(a.d >= 1, ErrorKind::parameter, "d must be positive");
    const Matrix A = a.A.empty() ? Matrix::identity(a.d) : parse_matrix(a.A);
    require(A.n == a.d, ErrorKind::parameter, "matrix size does not match d");
    const LatticeSpec L = LatticeSpec::make(A);

    MultiplierSpec m;
    if (cfg.contains("multiplier") && cfg["multiplier"].is_object()) {
        m = multiplier_from_json(cfg["multiplier"], a.d);
    } else {
        m = multiplier_from_json(json{{"kind", a.multiplier}, {"s", a.s}, {"lambda", a.lambda}, {"gamma", a.gamma}},
                                 a.d);
    }
    std::optional<std::array<Point, 3>> triple;
    if (cfg.contains("triple")) {
        const json& t = cfg["triple"];
        require(t.is_array() && t.size() == 3, ErrorKind::config, "triple must list three vectors");
        triple = std::array<Point, 3>{t[0].get<Point>(), t[1].get<Point>(), t[2].get<Point>()};
    }
    BumpSpec bump;
    if (cfg.contains("bump")) {
        const json& b = cfg["bump"];
        bump = BumpSpec{b.at("center").get<Point>(), b.at("radius").get<double>(), b.value("amplitude", 1.0)};
    } else {
        bump = choose_bump(L, triple ? (*triple)[0] : L.dual_vector(0));
    }
    const NupFunction nup = build_nup(L, m, bump, triple);

    VerifyMode mode;
    if (a.mode == "direct") mode = VerifyMode::direct_quadrature;
    else if (a.mode == "periodization") mode = VerifyMode::periodization;
    else fail(ErrorKind::config, "unknown mode '" + a.mode + "'");
    VanishingOptions vo;
    vo.order = a.order;
    vo.panels_per_unit = a.panels_per_unit;
    const VanishingReport rep = verify_lattice_vanishing(nup, a.K, mode, vo);

    std::ostringstream csv;
    write_vanishing_csv(csv, rep);
    json summary = nup_to_json(nup);
    summary["K"] = a.K;
    summary["mode"] = a.mode;
    summary["max_f_residual"] = rep.max_f_residual;
    summary["max_Tf_residual"] = rep.max_Tf_residual;
    summary["f_sup"] = rep.f_sup;
    summary["Tf_sup"] = rep.Tf_sup;
    summary["nodes"] = rep.nodes;
    emit(c, "nup", csv.str(), summary, out);
    return 0;
}

// ---- phase ----

struct PhaseArgs {
    double alpha = 0.5;
    int ell = 1;
    long long N_max = 1'000'000;
    double X = 1000.0;
    int samples = 24;
    std::string check = "P1";
    int k = 2;
    std::string gamma = "Z_alpha";
    double R = 20.0;
    double x0 = 0.0;
};

int cmd_phase(const CommonArgs& c, PhaseArgs a, std::ostream& out) {
    const json cfg = load_config(c.config);
    override(cfg, "alpha", a.alpha);
    override(cfg, "ell", a.ell);
    override(cfg, "N_max", a.N_max);
    override(cfg, "X", a.X);
    override(cfg, "samples", a.samples);
    override(cfg, "check", a.check);
    override(cfg, "k", a.k);
    override(cfg, "gamma", a.gamma);
    override(cfg, "R", a.R);
    override(cfg, "x0", a.x0);
    const PhaseSequence seq = PhaseSequence::make(a.alpha, a.ell, a.N_max);
    json summary = phase_config_to_json(seq);
    summary["check"] = a.check;

    if (a.check == "P1" || a.check == "P2") {
        const PhaseReport rep = a.check == "P1" ? verify_P1(seq, a.X, a.samples) : verify_P2(seq, a.k, a.X, a.samples);
        std::ostringstream csv;
        write_phase_csv(csv, rep);
        summary["X"] = a.X;
        summary["k"] = rep.k;
        summary["band_lo"] = rep.band_lo;
        summary["band_hi"] = rep.band_hi;
        summary["drift"] = rep.drift;
        summary["regularity_certified"] = rep.regularity_certified;
        summary["pass"] = rep.pass;
        emit(c, "phase", csv.str(), summary, out);
        return 0;
    }
    if (a.check == "theoremA") {
        require(a.gamma == "Z_alpha", ErrorKind::config, "theoremA supports --gamma Z_alpha");
        const DiscreteSet set = generate_set(Generator::z_alpha(a.alpha), a.R);
        const TheoremAReport rep = theorem_a_hypotheses(set, seq);
        summary["gamma"] = a.gamma;
        summary["R"] = a.R;
        summary["phi_separated"] = rep.phi_separated;
        summary["min_image_gap"] = rep.min_image_gap;
        summary["upper_density"] = rep.upper_density;
        summary["lower_density"] = rep.lower_density;
        summary["doubling_max_ratio"] = rep.doubling.max_ratio;
        summary["integration_error"] = rep.integration_error;
        summary["integration_discrepancy"] = rep.integration_discrepancy;
        summary["pass"] = rep.pass;
        emit(c, "phase", "", summary, out);
        return 0;
    }
    if (a.check == "theoremB") {
        const TheoremBResult r = theorem_b_bound(seq, a.x0, a.k);
        summary["x0"] = a.x0;
        summary["k"] = a.k;
        summary["bound"] = r.bound;
        summary["imag_residual"] = r.imag_residual;
        summary["tail_spread"] = r.tail_spread;
        emit(c, "phase", "", summary, out);
        return 0;
    }
    if (a.check == "blaschke") {
        const SeriesCertificate b = blaschke_condition(seq, seq.N_max);
        summary["N"] = b.N;
        summary["partial"] = b.partial;
        summary["tail_bound"] = b.tail_bound;
        summary["certified"] = b.certified;
        emit(c, "phase", "", summary, out);
        return 0;
    }
    fail(ErrorKind::config, "unknown check '" + a.check + "' (P1, P2, theoremA, theoremB, blaschke)");
}

// ---- fraclap ----

struct FraclapArgs {
    int d = 1;
    double s = 0.5;
    std::string x = "0";
    int random_points = 0;
    double L = 0.0;
    int N = 0;
};

int cmd_fraclap(const CommonArgs& c, FraclapArgs a, std::ostream& out) {
    const json cfg = load_config(c.config);
    override(cfg, "d", a.d);
    override(cfg, "s", a.s);
    override(cfg, "x", a.x);
    override(cfg, "random_points", a.random_points);
    override(cfg, "L", a.L);
    override(cfg, "N", a.N);
    require(a.d == 1 || a.d == 2, ErrorKind::parameter, "fraclap supports d = 1, 2");
    require(a.s > 0.0 && a.s < 1.0, ErrorKind::parameter, "s must lie in (0, 1)");
    // The |x|^{-d-2s} tail of the output aliases across the periodic box; these sizes keep
    // that below 1e-6 relative on [-3, 3]^d with spacing 1/8.
    if (a.L == 0.0) a.L = a.d == 1 ? 128.0 : 64.0;
    if (a.N == 0) a.N = static_cast<int>(std::lround(16.0 * a.L));
    const Grid grid = Grid::make(a.d, a.L, a.N);
    const ClosedForm g = gaussian(a.d);
    const SampledFunction f = sample(grid, g);
    const SampledFunction spec = apply_multiplier(f, MultiplierSpec::frac_laplacian(a.d, a.s));

    auto node_of = [&](const Point& x) {
        std::size_t flat = 0;
        Point used(a.d);
        for (int i = 0; i < a.d; ++i) {
            const auto j = static_cast<long long>(std::llround((x[i] + grid.L) / grid.h()));
            require(j >= 0 && j < grid.N, ErrorKind::domain, "point outside the grid");
            flat = flat * grid.N + static_cast<std::size_t>(j);
            used[i] = grid.coord(static_cast<int>(j));
        }
        return std::pair{flat, used};
    };
    std::vector<Point> xs;
    if (a.random_points > 0) {
        std::mt19937_64 rng(c.seed);
        std::uniform_real_distribution<double> U(-3.0, 3.0);
        for (int i = 0; i < a.random_points; ++i) {
            Point p(a.d);
            for (double& v : p) v = U(rng);
            xs.push_back(p);
        }
    } else {
        xs.push_back(parse_point(a.x));
        require(static_cast<int>(xs[0].size()) == a.d, ErrorKind::config, "point dimension does not match d");
    }
    std::ostringstream csv;
    csv << (a.d == 1 ? "x" : "x1,x2") << ",spectral,singular,error_estimate\n";
    json rows = json::array();
    double worst = 0.0;
    for (const Point& x : xs) {
        const auto [flat, used] = node_of(x);
        const double sp = spec.values[flat].real();
        const SingularResult si = frac_laplacian_singular(g, a.d, a.s, used);
        for (double u : used) csv << format_double(u) << ',';
        csv << format_double(sp) << ',' << format_double(si.value.real()) << ',' << format_double(si.error_estimate)
            << '\n';
        worst = std::max(worst, std::abs(sp - si.value.real()) / std::abs(sp));
        rows.push_back({{"x", used}, {"spectral", sp}, {"singular", si.value.real()}, {"error_estimate", si.error_estimate}});
    }
    json summary{{"function", "gaussian"}, {"d", a.d}, {"s", a.s}, {"L", a.L}, {"N", a.N},
                 {"max_relative_difference", worst}, {"points", rows}};
    emit(c, "fraclap", csv.str(), summary, out);
    return 0;
}

// ---- decay-audit ----

struct DecayArgs {
    std::string input;
    std::string model = "exp_power";
};

int cmd_decay(const CommonArgs& c, DecayArgs a, std::ostream& out) {
    const json cfg = load_config(c.config);
    override(cfg, "input", a.input);
    override(cfg, "model", a.model);
    require(!a.input.empty(), ErrorKind::config, "decay-audit needs --input samples.csv");
    std::ifstream in(a.input);
    require(static_cast<bool>(in), ErrorKind::config, "cannot open '" + a.input + "'");
    std::vector<std::pair<double, double>> samples;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        require(comma != std::string::npos, ErrorKind::config, "samples need two columns x,value");
        try {
            samples.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            require(header, ErrorKind::config, "bad sample row '" + line + "'");
        }
        header = false;
    }
    DecayModel model;
    if (a.model == "exp_power") model = DecayModel::exp_power;
    else if (a.model == "poly") model = DecayModel::poly;
    else fail(ErrorKind::config, "unknown model '" + a.model + "'");
    const DecayEnvelope env = decay_audit(samples, model);
    json summary{{"model", env.model_name()},      {"log_amplitude", env.log_amplitude},
                 {"rate_b", env.rate_b},            {"exponent_p", env.exponent_p},
                 {"exponent_q", env.exponent_q},    {"residual", env.residual},
                 {"envelope_points", env.envelope_points}};
    emit(c, "decay-audit", "", summary, out);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"fracnup: fractional Laplacian, densities, lattice non-uniqueness and Blaschke phases"};
    app.require_subcommand(1);
    CommonArgs common;
    DensityArgs da;
    NupArgs na;
    PhaseArgs pa;
    FraclapArgs fa;
    DecayArgs ea;

    auto* density = app.add_subcommand("density", "windowed Beurling density estimates");
    add_common(density, common);
    density->add_option("--set", da.set, "Z_alpha | Lambda_alpha_c | lattice");
    density->add_option("--alpha", da.alpha);
    density->add_option("--c", da.c);
    density->add_option("--d", da.d);
    density->add_option("--A", da.A, "lattice matrix, rows separated by ';'");
    density->add_option("--map", da.map, "identity | G_alpha | Phi_alpha_c");
    density->add_option("--R", da.R, "window radius on the image side");
    density->add_option("--r", da.r, "interval lengths / ball volumes");
    density->add_flag("--pullback", da.pullback, "count on the original line (d = 1)");

    auto* nup = app.add_subcommand("nup", "build the lattice non-uniqueness function and verify vanishing");
    add_common(nup, common);
    nup->add_option("--d", na.d);
    nup->add_option("--A", na.A, "lattice matrix, rows separated by ';'");
    nup->add_option("--multiplier", na.multiplier, "frac_laplacian | shifted_frac | unimodular | mixed");
    nup->add_option("--s", na.s);
    nup->add_option("--lambda", na.lambda);
    nup->add_option("--gamma", na.gamma);
    nup->add_option("--K", na.K, "verify |k_i| <= K");
    nup->add_option("--mode", na.mode, "direct | periodization");
    nup->add_option("--order", na.order);
    nup->add_option("--panels-per-unit", na.panels_per_unit);

    auto* phase = app.add_subcommand("phase", "Blaschke phase properties");
    add_common(phase, common);
    phase->add_option("--alpha", pa.alpha);
    phase->add_option("--ell", pa.ell);
    phase->add_option("--N-max", pa.N_max);
    phase->add_option("--X", pa.X);
    phase->add_option("--samples", pa.samples);
    phase->add_option("--check", pa.check, "P1 | P2 | theoremA | theoremB | blaschke");
    phase->add_option("--k", pa.k);
    phase->add_option("--gamma", pa.gamma, "point set for theoremA (Z_alpha)");
    phase->add_option("--R", pa.R, "window radius of the point set");
    phase->add_option("--x0", pa.x0);

    auto* fraclap = app.add_subcommand("fraclap", "evaluate (-Delta)^s of the Gaussian by both definitions");
    add_common(fraclap, common);
    fraclap->add_option("--d", fa.d);
    fraclap->add_option("--s", fa.s);
    fraclap->add_option("--x", fa.x, "comma-separated point, snapped to the grid");
    fraclap->add_option("--random-points", fa.random_points, "seeded random points in [-3,3]^d");
    fraclap->add_option("--L", fa.L);
    fraclap->add_option("--N", fa.N);

    auto* decay = app.add_subcommand("decay-audit", "fit a decay envelope to x,value samples");
    add_common(decay, common);
    decay->add_option("--input", ea.input, "CSV with columns x,value");
    decay->add_option("--model", ea.model, "exp_power | poly");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "E_CONFIG: " << e.what() << "\n";
        return 2;
    }

    try {
        if (density->parsed()) return cmd_density(common, da, out);
        if (nup->parsed()) return cmd_nup(common, na, out);
        if (phase->parsed()) return cmd_phase(common, pa, out);
        if (fraclap->parsed()) return cmd_fraclap(common, fa, out);
        if (decay->parsed()) return cmd_decay(common, ea, out);
    } catch (const Error& e) {
        err << e.code() << ": " << e.what() << "\n";
        return e.exit_code();
    } catch (const json::exception& e) {
        err << "E_CONFIG: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "E_INTERNAL: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace fracnup
