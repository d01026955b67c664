#include "fracnup/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "fracnup/errors.hpp"

namespace fracnup {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        fail(ErrorKind::config, "not a number: '" + s + "'");
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    require(used == s.size(), ErrorKind::config, "trailing characters in number: '" + s + "'");
    return v;
}

// "alpha=0.5;c=2" -> value of key
double param_value(const std::string& params, const std::string& key) {
    for (const std::string& kv : split(params, ';')) {
        const auto eq = kv.find('=');
        if (eq != std::string::npos && kv.substr(0, eq) == key) return parse_double(kv.substr(eq + 1));
    }
    fail(ErrorKind::config, "missing parameter '" + key + "' in '" + params + "'");
}

Generator generator_from(const std::string& name, const std::string& params) {
    if (name == "Z_alpha") return Generator::z_alpha(param_value(params, "alpha"));
    if (name == "Lambda_alpha_c")
        return Generator::lambda_alpha_c(static_cast<int>(param_value(params, "d")), param_value(params, "alpha"),
                                         param_value(params, "c"));
    if (name == "explicit") return Generator::explicit_points(static_cast<int>(param_value(params, "d")));
    if (name == "lattice") {
        require(params.rfind("A=", 0) == 0, ErrorKind::config, "lattice params must start with A=");
        std::istringstream is(params.substr(2));
        std::vector<double> vals;
        double v;
        while (is >> v) vals.push_back(v);
        const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(vals.size()))));
        require(n >= 1 && static_cast<std::size_t>(n * n) == vals.size(), ErrorKind::config,
                "lattice matrix is not square");
        return Generator::lattice(Matrix(n, vals));
    }
    fail(ErrorKind::config, "unknown generator '" + name + "'");
}

}  // namespace

void write_set_csv(std::ostream& os, const DiscreteSet& set) {
    os << "dim,generator,params,R\n";
    os << set.d << ',' << set.generator.name() << ',' << set.generator.params() << ',' << format_double(set.R)
       << '\n';
    for (const Point& p : set.points) {
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << format_double(p[i]);
        os << '\n';
    }
}

DiscreteSet read_set_csv(std::istream& is) {
    std::string line;
    require(static_cast<bool>(std::getline(is, line)) && line == "dim,generator,params,R", ErrorKind::config,
            "set CSV must start with the header dim,generator,params,R");
    require(static_cast<bool>(std::getline(is, line)), ErrorKind::config, "set CSV lacks the metadata row");
    const auto meta = split(line, ',');
    require(meta.size() == 4, ErrorKind::config, "metadata row needs four fields");
    DiscreteSet set;
    set.d = static_cast<int>(parse_double(meta[0]));
    require(set.d >= 1, ErrorKind::config, "dimension must be positive");
    set.generator = generator_from(meta[1], meta[2]);
    set.R = parse_double(meta[3]);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        require(static_cast<int>(fields.size()) == set.d, ErrorKind::config, "point row has the wrong width");
        Point p;
        for (const auto& f : fields) p.push_back(parse_double(f));
        set.points.push_back(std::move(p));
    }
    return set;
}

void write_density_csv(std::ostream& os, const DensityEstimate& est) {
    os << "r,sup_ratio,inf_ratio\n";
    for (std::size_t i = 0; i < est.r_values.size(); ++i)
        os << format_double(est.r_values[i]) << ',' << format_double(est.sup_ratios[i]) << ','
           << format_double(est.inf_ratios[i]) << '\n';
}

void write_mesh_csv(std::ostream& os, const MeshAudit& audit) {
    os << "probe_norm,nn_distance,bound,ratio\n";
    for (const MeshProbe& p : audit.probes)
        os << format_double(p.probe_norm) << ',' << format_double(p.nn_distance) << ',' << format_double(p.bound)
           << ',' << format_double(p.ratio) << '\n';
}

void write_vanishing_csv(std::ostream& os, const VanishingReport& rep) {
    os << "k_index,f_residual,Tf_residual\n";
    for (const VanishingRow& r : rep.rows) {
        for (std::size_t i = 0; i < r.k.size(); ++i) os << (i ? ":" : "") << r.k[i];
        os << ',' << format_double(r.f_residual) << ',' << format_double(r.Tf_residual) << '\n';
    }
}

void write_phase_csv(std::ostream& os, const PhaseReport& rep) {
    os << "x,phi_prime,ratio,tail_bound\n";
    for (std::size_t i = 0; i < rep.xs.size(); ++i)
        os << format_double(rep.xs[i]) << ',' << format_double(rep.values[i]) << ',' << format_double(rep.ratios[i])
           << ',' << format_double(rep.tail_bounds[i]) << '\n';
}

json multiplier_to_json(const MultiplierSpec& m) {
    json j;
    j["kind"] = m.name();
    j["s"] = m.s;
    j["lambda"] = m.lambda;
    j["gamma"] = m.gamma;
    if (m.kind == MultiplierKind::custom_radial) {
        j["table_r"] = m.table_r;
        json re = json::array(), im = json::array();
        for (const cplx& v : m.table_m) {
            re.push_back(v.real());
            im.push_back(v.imag());
        }
        j["table_re"] = re;
        j["table_im"] = im;
    }
    return j;
}

MultiplierSpec multiplier_from_json(const json& j, int d) {
    require(j.is_object(), ErrorKind::config, "multiplier must be a JSON object");
    try {
        const std::string kind = j.at("kind").get<std::string>();
        const double s = j.value("s", 0.5);
        const double lambda = j.value("lambda", 0.0);
        const double gamma = j.value("gamma", 1.0);
        MultiplierSpec m;
        if (kind == "frac_laplacian") m = MultiplierSpec::frac_laplacian(d, s);
        else if (kind == "shifted_frac") m = MultiplierSpec::shifted_frac(d, s, lambda);
        else if (kind == "unimodular") m = MultiplierSpec::unimodular(d, s, lambda);
        else if (kind == "mixed") m = MultiplierSpec::mixed(d, s, gamma);
        else if (kind == "custom_radial") {
            const auto r = j.at("table_r").get<std::vector<double>>();
            const auto re = j.at("table_re").get<std::vector<double>>();
            const auto im = j.value("table_im", std::vector<double>(re.size(), 0.0));
            require(re.size() == im.size(), ErrorKind::config, "table_re and table_im differ in length");
            std::vector<cplx> vals;
            for (std::size_t i = 0; i < re.size(); ++i) vals.emplace_back(re[i], im[i]);
            m = MultiplierSpec::custom_radial(d, r, vals);
        } else {
            fail(ErrorKind::config, "unknown multiplier kind '" + kind + "'");
        }
        m.validate();
        return m;
    } catch (const json::exception& e) {
        fail(ErrorKind::config, std::string("bad multiplier JSON: ") + e.what());
    }
}

namespace {

json point_json(const Point& p) { return json(p); }

Point point_from(const json& j) { return j.get<std::vector<double>>(); }

}  // namespace

json nup_to_json(const NupFunction& nup) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["d"] = nup.lattice.d();
    j["A"] = nup.lattice.A.a;
    j["multiplier"] = multiplier_to_json(nup.m);
    j["bump"] = {{"center", point_json(nup.bump.center)},
                 {"radius", nup.bump.radius},
                 {"amplitude", nup.bump.amplitude}};
    j["triple"] = {point_json(nup.v[0]), point_json(nup.v[1]), point_json(nup.v[2])};
    j["certified_condition"] = nup.certified_condition;
    j["g2_min_support"] = nup.g2_min_support;
    j["g2_min_cell"] = nup.g2_min_cell;
    j["cell_condition_holds"] = nup.cell_condition_holds;
    return j;
}

NupFunction nup_from_json(const json& j) {
    try {
        const int d = j.at("d").get<int>();
        const Matrix A(d, j.at("A").get<std::vector<double>>());
        const LatticeSpec L = LatticeSpec::make(A);
        const MultiplierSpec m = multiplier_from_json(j.at("multiplier"), d);
        const json& b = j.at("bump");
        const BumpSpec bump{point_from(b.at("center")), b.at("radius").get<double>(), b.value("amplitude", 1.0)};
        std::optional<std::array<Point, 3>> triple;
        if (j.contains("triple")) {
            const json& t = j.at("triple");
            require(t.is_array() && t.size() == 3, ErrorKind::config, "triple must list three vectors");
            triple = std::array<Point, 3>{point_from(t[0]), point_from(t[1]), point_from(t[2])};
        }
        return build_nup(L, m, bump, triple);
    } catch (const json::exception& e) {
        fail(ErrorKind::config, std::string("bad nup JSON: ") + e.what());
    }
}

json phase_config_to_json(const PhaseSequence& seq) {
    return json{{"alpha", seq.alpha}, {"ell", seq.ell}, {"N_max", seq.N_max}};
}

PhaseSequence phase_config_from_json(const json& j) {
    try {
        return PhaseSequence::make(j.at("alpha").get<double>(), j.value("ell", 1),
                                   j.value("N_max", 1'000'000LL));
    } catch (const json::exception& e) {
        fail(ErrorKind::config, std::string("bad phase JSON: ") + e.what());
    }
}

Matrix parse_matrix(const std::string& text) {
    std::vector<double> vals;
    const auto rows = split(text, ';');
    require(!rows.empty(), ErrorKind::config, "empty matrix");
    for (const std::string& row : rows) {
        const auto cols = split(row, ',');
        require(cols.size() == rows.size(), ErrorKind::config, "matrix '" + text + "' is not square");
        for (const std::string& c : cols) vals.push_back(parse_double(c));
    }
    return Matrix(static_cast<int>(rows.size()), vals);
}

}  // namespace fracnup
