#include "cremona/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace cremona;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Shared {
    std::string variant = "spatial9";
    std::size_t steps = 0;
    std::uint64_t seed = 1;
    std::string config;
    std::string format = "json";
    std::string refine_width = "1/1000000000000";
    std::string word;
    int n = 0, k = 0;
};

Configuration load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open configuration file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("configuration file is not valid JSON: ") + e.what());
    }
    return configuration_from_json(j);
}

Rational width_of(const std::string& text) {
    const Rational w = parse_rational(text);
    if (w <= 0) throw UsageError("--refine-width must be positive");
    return w;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// --word with --n/--k, else the variant's sigma map.
LatticeMap selected_map(const Shared& s) {
    if (s.word.empty()) return m_sigma(parse_variant(s.variant));
    if (s.n <= 0 || s.k <= 0) throw UsageError("--word needs --n and --k");
    const BlowupSignature sig = BlowupSignature::make(s.n, s.k);
    return map_of(sig, parse_word(s.word, sig));
}

Json map_header(const Shared& s, const LatticeMap& map) {
    Json j;
    if (s.word.empty()) j["variant"] = s.variant;
    else j["word"] = format_word(map.word());
    j["signature"] = to_string(map.signature());
    return j;
}

int cmd_verify(const Shared& s, std::size_t track_steps, bool timing, const std::string& fault) {
    VerifyOptions o;
    o.steps = s.steps == 0 ? 50 : s.steps;
    o.track_steps = track_steps;
    o.seed = s.seed;
    o.refine_width = width_of(s.refine_width);
    if (!s.config.empty()) o.spatial_config = load_config(s.config);
    if (fault == "adjointness") o.fault = Fault::adjointness;
    const VerificationReport r = verify_paper(o);
    if (s.format == "json") emit(to_json(r, timing));
    else if (s.format == "csv") std::cout << to_csv(r, timing);
    else std::cout << to_markdown(r, timing);
    std::cerr << summary(r);
    return r.all_pass() ? 0 : 1;
}

int cmd_charpoly(const Shared& s) {
    const LatticeMap map = selected_map(s);
    const Polynomial cp = charpoly(map.div_matrix());
    Json j = map_header(s, map);
    j["charpoly"] = to_json(cp);
    Polynomial rest = cp;
    const Polynomial t = Polynomial::t();
    std::size_t zero = 0, plus = 0, minus = 0;
    while (rest.degree() > 0 && rest.coeffs().front() == 0) rest = exact_div(rest, t), ++zero;
    while (rest.degree() > 0 && (rest % (t - Polynomial(1))).is_zero()) rest = exact_div(rest, t - Polynomial(1)), ++plus;
    while (rest.degree() > 0 && (rest % (t + Polynomial(1))).is_zero()) rest = exact_div(rest, t + Polynomial(1)), ++minus;
    j["t_power"] = zero;
    j["plus_one"] = plus;
    j["minus_one"] = minus;
    const auto q = reciprocal_unlift(rest);
    j["q"] = q ? to_json(*q) : Json(nullptr);
    emit(j);
    return 0;
}

int cmd_eigen(const Shared& s) {
    const LatticeMap map = selected_map(s);
    const Rational width = width_of(s.refine_width);
    const Eigendivisor ed = eigendivisor(map);
    Json j = map_header(s, map);
    j["lambda"] = to_json(refine(ed.lambda, width));
    j["q"] = to_json(ed.certificate.q);
    j["q_roots_in_band"] = ed.certificate.q_roots_in_band;
    j["mu"] = to_json(ed.certificate.mu);
    Json coords = Json::array();
    for (const auto& x : ed.divisor.raw()) {
        const auto [lo, hi] = enclose(x, width);
        coords.push_back({{"rep", to_json(x.rep())}, {"lo", to_string(lo)}, {"hi", to_string(hi)},
                          {"decimal", decimal_string((lo + hi) / 2, 6)}});
    }
    j["eigenvector"] = coords;
    emit(j);
    return 0;
}

int cmd_orbit(const Shared& s, const std::string& seed_class) {
    const LatticeMap map = selected_map(s);
    const BlowupSignature& sig = map.signature();
    QCurve seed = seed_class.empty() ? QCurve(sig, [&] {
        std::vector<Rational> raw(sig.rank(), Rational(0));
        raw[0] = 1;
        raw[1] = raw[2] = -1;
        return raw;
    }())
                                     : parse_curve(seed_class, sig);
    const std::size_t steps = s.steps == 0 ? 5 : s.steps;
    const std::vector<OrbitRecord> orbit = curve_orbit(map, seed, steps);
    if (s.format == "json") {
        Json j = map_header(s, map);
        j["seed_class"] = format_class(seed);
        j["rows"] = orbit_table_json(orbit);
        emit(j);
    } else if (s.format == "csv") {
        std::cout << orbit_table_csv(orbit);
    } else {
        std::cout << orbit_table_markdown(orbit);
    }
    return 0;
}

Configuration chosen_config(const Shared& s, const BlowupSignature& sig) {
    if (!s.config.empty()) {
        Configuration c = load_config(s.config);
        if (!(c.signature() == sig)) throw UsageError("configuration does not match " + to_string(sig));
        return c;
    }
    return random_configuration(sig, s.seed);
}

int cmd_simulate(const Shared& s) {
    const Variant v = parse_variant(s.variant);
    Configuration cfg = chosen_config(s, signature_of(v));
    const std::size_t steps = s.steps == 0 ? 3 : s.steps;
    Json rows = Json::array();
    for (std::size_t i = 0;; ++i) {
        const DegeneracyReport deg = degeneracy_report(cfg);
        rows.push_back({{"step", i}, {"bits", cfg.bits()}, {"degeneracy", to_json(deg)}, {"configuration", to_json(cfg)}});
        if (i == steps) break;
        cfg = rho(cfg, v);
    }
    emit({{"variant", s.variant}, {"seed", s.seed}, {"steps", rows}});
    return 0;
}

int cmd_track(const Shared& s) {
    const Variant v = parse_variant(s.variant);
    const Configuration cfg = chosen_config(s, signature_of(v));
    const TrackReport r = track_line_orbit(cfg, s.steps == 0 ? 4 : s.steps);
    emit({{"variant", s.variant}, {"configuration", to_json(cfg)}, {"track", to_json(r)}});
    return r.ok() ? 0 : 1;
}

int cmd_matrix(const Shared& s) {
    const LatticeMap map = selected_map(s);
    Json j = map_header(s, map);
    j["div_matrix"] = to_json(map.div_matrix());
    j["curve_matrix"] = to_json(map.curve_matrix());
    j["adjoint"] = map.is_adjoint();
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cremona actions on Picard lattices of point blow-ups"};
    app.require_subcommand(1);
    Shared s;

    auto add_variant = [&](CLI::App* c) {
        c->add_option("--variant", s.variant, "planar10 or spatial9")->check(CLI::IsMember({"planar10", "spatial9"}));
    };
    auto add_word = [&](CLI::App* c) {
        c->add_option("--word", s.word, "generator word, e.g. \"perm(2,1,3,4,5); cr(1,2,3)\"");
        c->add_option("--n", s.n, "dimension for --word");
        c->add_option("--k", s.k, "number of points for --word");
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", s.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    };

    std::size_t track_steps = 4;
    bool timing = false;
    std::string fault;
    auto* verify = app.add_subcommand("verify-paper", "run every claim check");
    verify->add_option("--steps", s.steps, "negativity certificates for n <= N (default 50)");
    verify->add_option("--track-steps", track_steps, "geometric realization depth");
    verify->add_option("--seed", s.seed, "seed for random words and configurations");
    verify->add_option("--config", s.config, "JSON file with the 9 spatial points");
    verify->add_option("--refine-width", s.refine_width, "isolating interval width p/q");
    verify->add_flag("--timing", timing, "include per-item seconds");
    verify->add_option("--inject-fault", fault, "corrupt a fixture")->check(CLI::IsMember({"adjointness"}));
    add_format(verify);

    auto* spectra = app.add_subcommand("spectra", "characteristic polynomial and eigendata");
    spectra->require_subcommand(1);
    auto* charpoly_cmd = spectra->add_subcommand("charpoly", "exact characteristic polynomial");
    add_variant(charpoly_cmd);
    add_word(charpoly_cmd);
    auto* eigen_cmd = spectra->add_subcommand("eigen", "dominant eigenvalue and eigenvector");
    add_variant(eigen_cmd);
    add_word(eigen_cmd);
    eigen_cmd->add_option("--refine-width", s.refine_width, "isolating interval width p/q");

    std::string seed_class;
    auto* orbit = app.add_subcommand("orbit", "curve class orbits");
    orbit->require_subcommand(1);
    auto* table = orbit->add_subcommand("table", "orbit table with pairing signs");
    add_variant(table);
    add_word(table);
    add_format(table);
    table->add_option("--steps", s.steps, "rows 0..N (default 5)");
    table->add_option("--class", seed_class, "seed curve class \"d; m1,...,mk\"");

    auto* geom = app.add_subcommand("geom", "explicit configurations");
    geom->require_subcommand(1);
    auto* simulate = geom->add_subcommand("simulate", "iterate rho on a configuration");
    auto* track = geom->add_subcommand("track", "follow the line through p1, p2");
    for (auto* c : {simulate, track}) {
        add_variant(c);
        c->add_option("--steps", s.steps, "number of steps");
        c->add_option("--seed", s.seed, "configuration seed");
        c->add_option("--config", s.config, "JSON file with the points");
    }

    auto* weyl = app.add_subcommand("weyl", "lattice maps");
    weyl->require_subcommand(1);
    auto* matrix = weyl->add_subcommand("matrix", "divisor and curve matrices");
    add_variant(matrix);
    add_word(matrix);
    std::array<int, 3> pqr{};
    auto* finite = weyl->add_subcommand("finite", "is T_{p,q,r} finite");
    finite->add_option("p", pqr[0])->required()->check(CLI::PositiveNumber);
    finite->add_option("q", pqr[1])->required()->check(CLI::PositiveNumber);
    finite->add_option("r", pqr[2])->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(s, track_steps, timing, fault);
        if (charpoly_cmd->parsed()) return cmd_charpoly(s);
        if (eigen_cmd->parsed()) return cmd_eigen(s);
        if (table->parsed()) return cmd_orbit(s, seed_class);
        if (simulate->parsed()) return cmd_simulate(s);
        if (track->parsed()) return cmd_track(s);
        if (matrix->parsed()) return cmd_matrix(s);
        if (finite->parsed()) {
            const bool f = is_coxeter_finite(pqr[0], pqr[1], pqr[2]);
            emit({{"p", pqr[0]}, {"q", pqr[1]}, {"r", pqr[2]}, {"finite", f}});
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
