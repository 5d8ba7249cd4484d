#include "cremona/report.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace cremona {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
ReportItem run_item(std::string_view id, Fn&& fn) {
    const Claim& c = claim(id);
    ReportItem item{std::string(c.id), std::string(c.anchor), false, Json::object(), 0.0};
    const auto t0 = Clock::now();
    try {
        item.pass = fn(item.witness);
    } catch (const std::exception& e) {
        item.pass = false;
        item.witness["error"] = e.what();
    }
    item.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return item;
}

Rational power_of_ten(int e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

// t^d q(t + 1/t), q given by descending integer coefficients.
Polynomial descending(std::initializer_list<long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    std::reverse(v.begin(), v.end());
    return Polynomial(std::move(v));
}

QCurve seed_curve(Variant v) {
    const BlowupSignature sig = signature_of(v);
    std::vector<Rational> raw(sig.rank(), Rational(0));
    raw[0] = 1;
    raw[1] = raw[2] = -1;
    if (v == Variant::planar10) raw[3] = -1;
    return {sig, std::move(raw)};
}

std::vector<int> iota_from(int first, int count) {
    std::vector<int> c(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) c[static_cast<std::size_t>(i)] = first + i;
    return c;
}

// (delta; mu) rows of the spatial orbit table.
const std::vector<std::vector<long>>& spatial_table() {
    static const std::vector<std::vector<long>> rows{
        {1, 1, 1, 0, 0, 0, 0, 0, 0, 0},        {3, 1, 1, 1, 1, 1, 1, 0, 0, 0},
        {7, 3, 2, 2, 2, 1, 1, 1, 1, 1},        {13, 4, 4, 4, 4, 3, 2, 2, 2, 1},
        {25, 8, 8, 8, 7, 4, 4, 4, 4, 3},       {45, 14, 14, 14, 13, 8, 8, 8, 7, 4},
    };
    return rows;
}

const std::vector<Rational>& printed_digits(Variant v) {
    static const std::vector<Rational> spatial = [] {
        std::vector<Rational> d;
        for (long x : {640, 634, 615, 554, 355, 352, 341, 307, 197}) d.push_back(ratio(x, 1000));
        return d;
    }();
    static const std::vector<Rational> planar = [] {
        std::vector<Rational> d;
        for (long x : {451, 440, 408, 315, 307, 285, 220, 215, 199, 154}) d.push_back(ratio(x, 1000));
        return d;
    }();
    return v == Variant::spatial9 ? spatial : planar;
}

bool charpoly_item(Variant v, Json& w) {
    const Polynomial cp = charpoly(m_sigma(v).div_matrix());
    const Polynomial t = Polynomial::t();
    Polynomial q, expected;
    if (v == Variant::spatial9) {
        q = descending({1, -3, 0, 4, -1});
        expected = (t + Polynomial(1)) * (t - Polynomial(1)) * reciprocal_lift(q);
    } else {
        q = descending({1, -1, -6, 5, 8, -5});
        expected = (t - Polynomial(1)) * reciprocal_lift(q);
    }
    w["charpoly"] = to_json(cp);
    w["q"] = to_json(q);
    w["expected"] = to_json(expected);
    return cp == expected;
}

bool lambda_item(Variant v, const VerifyOptions& opts, Json& w) {
    const DominantEigenvalue de = dominant_eigenvalue(m_sigma(v));
    const RealAlgebraic lam = refine(de.lambda, opts.refine_width);
    const Rational target = v == Variant::spatial9 ? ratio(1800, 1000) : ratio(1431, 1000);
    const Rational tol = ratio(5, 10000);
    const std::size_t band_needed = static_cast<std::size_t>(de.certificate.q.degree()) - 1;
    w["lambda"] = to_json(lam);
    w["mu"] = to_json(de.certificate.mu);
    w["minpoly"] = to_json(de.certificate.minpoly);
    w["q"] = to_json(de.certificate.q);
    w["q_roots_in_band"] = de.certificate.q_roots_in_band;
    w["q_degree"] = de.certificate.q.degree();
    w["width"] = to_string(lam.width());
    return lam.width() <= opts.refine_width && lam.lo() >= target - tol && lam.hi() <= target + tol &&
           de.certificate.q_roots_in_band == band_needed;
}

bool eigenvector_item(Variant v, const VerifyOptions& opts, Json& w) {
    const LatticeMap map = m_sigma(v);
    const Eigendivisor ed = eigendivisor(map);
    const std::vector<Rational>& digits = printed_digits(v);
    const Rational tol(Integer(1), Integer(1000));
    bool ok = is_eigenvector(map.div_matrix(), ed.divisor.raw()) && ed.divisor[0] == FieldElement(ed.field, Rational(1));
    Json coords = Json::array();
    Rational worst = 0;
    for (std::size_t i = 1; i < ed.divisor.raw().size(); ++i) {
        const auto [lo, hi] = enclose(-ed.divisor[i], opts.refine_width);
        const Rational& d = digits[i - 1];
        ok = ok && lo >= d - tol && hi <= d + tol;
        worst = std::max(worst, Rational(std::max(Rational(abs(lo - d)), Rational(abs(hi - d)))));
        coords.push_back(decimal_string((lo + hi) / 2, 6));
    }
    w["r"] = coords;
    Json printed = Json::array();
    for (const auto& d : digits) printed.push_back(decimal_string(d, 3));
    w["printed"] = printed;
    w["max_deviation"] = decimal_string(worst, 6);
    return ok;
}

bool inequality_item(Variant v, Json& w) {
    const Eigendivisor ed = eigendivisor(m_sigma(v));
    const std::size_t count = v == Variant::spatial9 ? 2 : 3;
    FieldElement x(ed.field, Rational(-1));
    for (std::size_t i = 1; i <= count; ++i) x -= ed.divisor[i];
    const int s = sign_of(x, ed.lambda);
    w["difference"] = to_json(x.rep());
    w["sign"] = s;
    return s == 1;
}

bool orbit_table_item(Json& w) {
    const std::vector<QCurve> rows = curve_iterates(m_sigma(Variant::spatial9), seed_curve(Variant::spatial9), 5);
    bool ok = true;
    Json out = Json::array();
    for (std::size_t n = 0; n < rows.size(); ++n) {
        std::vector<Rational> expected;
        for (std::size_t i = 0; i < spatial_table()[n].size(); ++i)
            expected.emplace_back(i == 0 ? spatial_table()[n][i] : -spatial_table()[n][i]);
        ok = ok && rows[n].raw() == expected;
        out.push_back(format_class(rows[n]));
    }
    w["rows"] = out;
    return ok;
}

bool orbit_row6_item(Json& w) {
    const LatticeMap map = m_sigma(Variant::spatial9);
    const QCurve row6 = curve_iterates(map, seed_curve(Variant::spatial9), 6).back();
    QMatrix power = QMatrix::identity(map.signature().rank());
    for (int i = 0; i < 6; ++i) power = power * map.curve_matrix();
    const std::vector<Rational> oracle = power.apply(seed_curve(Variant::spatial9).raw());
    w["row6"] = format_class(row6);
    w["oracle"] = format_class(oracle);
    return row6.raw() == oracle;
}

bool negativity_item(Variant v, std::size_t steps, const VerifyOptions& opts, Json& w) {
    const LatticeMap map = m_sigma(v);
    const Eigendivisor ed = eigendivisor(map);
    const std::vector<OrbitRecord> orbit = curve_orbit(map, seed_curve(v), steps, ed.divisor);
    const NegativityCertificate cert = negativity_certificate(ed.divisor, orbit, ed.lambda);
    const auto [lo, hi] = enclose(cert.base_value, opts.refine_width);
    w["steps"] = steps;
    w["base_value"] = to_json(cert.base_value.rep());
    w["base_value_decimal"] = decimal_string((lo + hi) / 2, 6);
    w["identities_verified"] = cert.items.size();
    w["last_class"] = format_class(orbit.back().curve_class);
    return cert.base_sign == -1 && cert.items.size() == steps + 1 &&
           std::all_of(orbit.begin(), orbit.end(), [](const OrbitRecord& r) { return r.pairing_sign == -1; });
}

bool cremona_adjoint_item(Variant v, Fault fault, Json& w) {
    const BlowupSignature sig = signature_of(v);
    LatticeMap map = cremona_matrices(sig, iota_from(1, sig.n + 1));
    if (fault == Fault::adjointness && v == Variant::spatial9) {
        QMatrix div = map.div_matrix();
        div(0, 0) += 1;
        map = LatticeMap::unchecked(sig, div, map.curve_matrix(), map.word());
        w["fault_injected"] = true;
    }
    w["div_matrix"] = to_json(map.div_matrix());
    w["curve_matrix"] = to_json(map.curve_matrix());
    return map.is_adjoint();
}

bool msigma_adjoint_item(Json& w) {
    bool ok = true;
    for (Variant v : {Variant::planar10, Variant::spatial9}) {
        const bool a = m_sigma(v).is_adjoint();
        w[to_string(v)] = a;
        ok = ok && a;
    }
    return ok;
}

std::vector<Word> random_words(const BlowupSignature& sig, std::mt19937_64& gen, std::size_t count) {
    std::vector<Word> words;
    words.reserve(count);
    for (std::size_t i = 0; i < count; ++i) words.push_back(random_word(sig, gen, 1 + gen() % 8));
    return words;
}

bool random_words_item(const VerifyOptions& opts, Json& w) {
    std::mt19937_64 gen(opts.seed);
    bool ok = true;
    for (Variant v : {Variant::planar10, Variant::spatial9}) {
        const BlowupSignature sig = signature_of(v);
        const std::vector<Word> words = random_words(sig, gen, opts.random_words);
        const auto flags = map_indices(
            words.size(), [&](std::size_t i) { return map_of(sig, words[i]).is_adjoint(); }, Exec::parallel);
        Json failures = Json::array();
        for (std::size_t i = 0; i < words.size(); ++i)
            if (!flags[i]) failures.push_back(format_word(words[i]));
        w[to_string(v)] = {{"words", words.size()}, {"failures", failures}};
        ok = ok && failures.empty();
    }
    return ok;
}

std::vector<Rational> random_raw(const BlowupSignature& sig, std::mt19937_64& gen) {
    std::vector<Rational> raw;
    for (std::size_t i = 0; i < sig.rank(); ++i) raw.emplace_back(static_cast<long>(gen() % 11) - 5);
    return raw;
}

bool pairing_item(const VerifyOptions& opts, Json& w) {
    std::mt19937_64 gen(opts.seed + 1);
    bool ok = true;
    for (Variant v : {Variant::planar10, Variant::spatial9}) {
        const BlowupSignature sig = signature_of(v);
        struct Sample {
            Word word;
            QDivisor d;
            QCurve c;
        };
        std::vector<Sample> samples;
        for (std::size_t i = 0; i < opts.random_words; ++i) {
            Word word = random_word(sig, gen, 1 + gen() % 8);
            QDivisor d(sig, random_raw(sig, gen));
            QCurve c(sig, random_raw(sig, gen));
            samples.push_back({std::move(word), std::move(d), std::move(c)});
        }
        const auto flags = map_indices(
            samples.size(),
            [&](std::size_t i) {
                const LatticeMap m = map_of(sig, samples[i].word);
                return pair(m.apply(samples[i].d), m.apply(samples[i].c)) == pair(samples[i].d, samples[i].c);
            },
            Exec::parallel);
        const auto bad = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), 0));
        w[to_string(v)] = {{"pairs", samples.size()}, {"failures", bad}};
        ok = ok && bad == 0;
    }
    return ok;
}

Configuration spatial_config(const VerifyOptions& opts) {
    return opts.spatial_config ? *opts.spatial_config : random_configuration(signature_of(Variant::spatial9), opts.seed);
}

bool track_item(const VerifyOptions& opts, Json& w) {
    const Configuration cfg = spatial_config(opts);
    const DegeneracyReport deg = degeneracy_report(cfg);
    w["configuration"] = to_json(cfg);
    w["degeneracy"] = to_json(deg);
    if (!deg.clean()) {
        w["error"] = "configuration is not in general position";
        return false;
    }
    const TrackReport rep = track_line_orbit(cfg, opts.track_steps);
    w["track"] = to_json(rep);
    return rep.ok();
}

Configuration planar_generic(const VerifyOptions& opts) {
    return random_configuration(signature_of(Variant::planar10), opts.seed);
}

Configuration planar_v0(const VerifyOptions& opts) {
    const Configuration g = planar_generic(opts);
    std::vector<ProjPoint> pts = g.points();
    std::vector<Integer> sum;
    for (std::size_t i = 0; i < 3; ++i) sum.push_back(pts[0][i] + pts[1][i]);
    pts[2] = ProjPoint(std::span<const Integer>(sum));
    return {g.signature(), std::move(pts)};
}

QDivisor conic_class() {
    const BlowupSignature sig = signature_of(Variant::planar10);
    std::vector<Rational> raw(sig.rank(), Rational(0));
    raw[0] = 2;
    for (std::size_t i = 1; i <= 6; ++i) raw[i] = -1;
    return {sig, std::move(raw)};
}

bool nodal_v0_item(const VerifyOptions& opts, Json& w) {
    const Configuration cfg = planar_v0(opts);
    const DegeneracyReport deg = degeneracy_report(cfg);
    const bool only_123 = deg.coincident.empty() && deg.collinear.size() == 1 &&
                          deg.collinear.front() == std::array<int, 3>{1, 2, 3};
    const bool member = v_n_membership(cfg, 0);
    w["configuration"] = to_json(cfg);
    w["degeneracy"] = to_json(deg);
    w["member_v0"] = member;
    return only_123 && member;
}

bool nodal_v1_item(const VerifyOptions& opts, Json& w) {
    const Configuration image = rho_planar(planar_v0(opts));
    const Rational det = conic_determinant(std::span<const ProjPoint>(image.points()).subspan(0, 6));
    const std::size_t rank = interpolation_rank(image, conic_class());
    const bool member = v_n_membership(image, 1);
    w["image"] = to_json(image);
    w["conic_determinant"] = to_string(det);
    w["conic_kernel_dimension"] = rank;
    w["member_v1"] = member;
    return det == 0 && rank == 1 && member;
}

bool nodal_generic_item(const VerifyOptions& opts, Json& w) {
    const Configuration cfg = planar_generic(opts);
    const DegeneracyReport deg = degeneracy_report(cfg);
    const Configuration image = rho_planar(cfg);
    const Rational det = conic_determinant(std::span<const ProjPoint>(image.points()).subspan(0, 6));
    const std::size_t rank = interpolation_rank(image, conic_class());
    const bool v0 = v_n_membership(cfg, 0);
    const bool v1 = v_n_membership(image, 1);
    w["configuration"] = to_json(cfg);
    w["clean"] = deg.clean();
    w["member_v0"] = v0;
    w["conic_determinant"] = to_string(det);
    w["conic_kernel_dimension"] = rank;
    w["member_v1"] = v1;
    return deg.clean() && !v0 && det != 0 && rank == 0 && !v1;
}

bool coxeter_item(Json& w) {
    const std::array<std::array<int, 3>, 4> cases{{{2, 3, 5}, {2, 3, 6}, {2, 3, 7}, {2, 4, 5}}};
    const std::array<bool, 4> expected{true, false, false, false};
    bool ok = true;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto [p, q, r] = cases[i];
        const bool finite = is_coxeter_finite(p, q, r);
        w["T_" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r)] = finite ? "finite" : "infinite";
        ok = ok && finite == expected[i];
    }
    return ok;
}

bool power_iteration_item(Json& w) {
    w["approximate"] = true;
    bool ok = true;
    for (const auto& [v, iterations] : {std::pair{Variant::spatial9, std::size_t{40}}, std::pair{Variant::planar10, std::size_t{60}}}) {
        const LatticeMap map = m_sigma(v);
        const PowerIteration pi = power_iteration(map, hyperplane_class(map.signature()), iterations);
        w[to_string(v)] = {{"iterations", iterations}, {"final_sine", pi.final_sine}};
        ok = ok && pi.final_sine < 1e-6;
    }
    return ok;
}

} // namespace

bool VerificationReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
}

VerificationReport verify_paper(const VerifyOptions& opts) {
    VerificationReport r;
    auto add = [&](ReportItem item) { r.items.push_back(std::move(item)); };
    add(run_item("adjoint.cremona.planar10", [&](Json& w) { return cremona_adjoint_item(Variant::planar10, opts.fault, w); }));
    add(run_item("adjoint.cremona.spatial9", [&](Json& w) { return cremona_adjoint_item(Variant::spatial9, opts.fault, w); }));
    add(run_item("adjoint.msigma", msigma_adjoint_item));
    add(run_item("adjoint.random_words", [&](Json& w) { return random_words_item(opts, w); }));
    add(run_item("charpoly.planar10", [](Json& w) { return charpoly_item(Variant::planar10, w); }));
    add(run_item("charpoly.spatial9", [](Json& w) { return charpoly_item(Variant::spatial9, w); }));
    add(run_item("coxeter.finite", coxeter_item));
    add(run_item("eigenvector.planar10", [&](Json& w) { return eigenvector_item(Variant::planar10, opts, w); }));
    add(run_item("eigenvector.spatial9", [&](Json& w) { return eigenvector_item(Variant::spatial9, opts, w); }));
    add(run_item("geometry.track", [&](Json& w) { return track_item(opts, w); }));
    add(run_item("inequality.planar10", [](Json& w) { return inequality_item(Variant::planar10, w); }));
    add(run_item("inequality.spatial9", [](Json& w) { return inequality_item(Variant::spatial9, w); }));
    add(run_item("lambda.planar10", [&](Json& w) { return lambda_item(Variant::planar10, opts, w); }));
    add(run_item("lambda.spatial9", [&](Json& w) { return lambda_item(Variant::spatial9, opts, w); }));
    add(run_item("negativity.planar10", [&](Json& w) { return negativity_item(Variant::planar10, opts.steps, opts, w); }));
    add(run_item("negativity.spatial9", [&](Json& w) { return negativity_item(Variant::spatial9, opts.steps, opts, w); }));
    add(run_item("nodal.generic", [&](Json& w) { return nodal_generic_item(opts, w); }));
    add(run_item("nodal.v0", [&](Json& w) { return nodal_v0_item(opts, w); }));
    add(run_item("nodal.v1", [&](Json& w) { return nodal_v1_item(opts, w); }));
    add(run_item("orbit.row6", orbit_row6_item));
    add(run_item("orbit.table", orbit_table_item));
    add(run_item("pairing.random", [&](Json& w) { return pairing_item(opts, w); }));
    add(run_item("power_iteration", power_iteration_item));
    std::stable_sort(r.items.begin(), r.items.end(), [](const ReportItem& a, const ReportItem& b) { return a.id < b.id; });
    return r;
}

// ---------------------------------------------------------------------------
// Serialization

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

Json to_json(const RealAlgebraic& a) {
    return {{"minpoly", to_json(a.minpoly())}, {"lo", to_string(a.lo())}, {"hi", to_string(a.hi())}};
}

Json to_json(const ProjPoint& p) {
    Json out = Json::array();
    for (const auto& c : p.coords()) out.push_back(to_string(c));
    return out;
}

Json to_json(const Configuration& c) {
    Json out = Json::array();
    for (const auto& p : c.points()) out.push_back(to_json(p));
    return out;
}

Json to_json(std::span<const Rational> raw) {
    Json out = Json::array();
    for (const auto& x : raw) out.push_back(to_string(x));
    return out;
}

Json to_json(const QMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Json to_json(const DegeneracyReport& r) {
    return {{"coincident", r.coincident}, {"collinear", r.collinear}, {"coplanar", r.coplanar}, {"clean", r.clean()}};
}

Json to_json(const TrackReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json meets = Json::array();
        for (const auto& [a, b] : s.meets) meets.push_back({a, b});
        steps.push_back({{"step", s.step},
                         {"expected", format_class(s.expected)},
                         {"realized", s.realized ? Json(format_class(*s.realized)) : Json(nullptr)},
                         {"meets_indeterminacy", meets},
                         {"curve_degree", s.curve_degree},
                         {"config_bits", s.config_bits},
                         {"curve_bits", s.curve_bits},
                         {"ok", s.ok},
                         {"error", s.error}});
    }
    return {{"requested", r.requested}, {"ok", r.ok()}, {"steps", steps}};
}

Json to_json(const VerificationReport& r, bool timing) {
    Json items = Json::array();
    for (const auto& i : r.items) {
        Json j = {{"id", i.id}, {"anchor", i.anchor}, {"status", i.pass ? "pass" : "fail"}, {"witness", i.witness}};
        if (timing) j["seconds"] = i.seconds;
        items.push_back(std::move(j));
    }
    return {{"all_pass", r.all_pass()}, {"items", items}};
}

Configuration configuration_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("configuration must be a nonempty list of points");
    std::vector<ProjPoint> pts;
    std::size_t dim = 0;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() < 3) throw ParseError("each point must be a list of at least 3 coordinates");
        if (dim == 0) dim = p.size();
        if (p.size() != dim) throw ParseError("points have different numbers of coordinates");
        std::vector<Rational> c;
        for (const auto& x : p) {
            if (x.is_string()) c.push_back(parse_rational(x.get<std::string>()));
            else if (x.is_number_integer()) c.emplace_back(x.get<long>());
            else throw ParseError("coordinates must be rational strings or integers");
        }
        try {
            pts.emplace_back(std::span<const Rational>(c));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    const BlowupSignature sig = BlowupSignature::make(static_cast<int>(dim) - 1, static_cast<int>(pts.size()));
    return {sig, std::move(pts)};
}

std::string decimal_string(const Rational& q, unsigned digits) {
    const Rational scaled = abs(q) * power_of_ten(static_cast<int>(digits)) + Rational(Integer(1), Integer(2));
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    std::string s = r.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (q < 0 && r != 0) s.insert(0, "-");
    return s;
}

std::string summary(const VerificationReport& r) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& i : r.items) {
        out << (i.pass ? "PASS " : "FAIL ") << i.id << "  " << i.anchor << "\n";
        passed += i.pass ? 1 : 0;
    }
    out << passed << "/" << r.items.size() << " claims verified\n";
    return out.str();
}

std::string to_markdown(const VerificationReport& r, bool timing) {
    std::ostringstream out;
    out << "| status | claim | anchor |" << (timing ? " seconds |" : "") << "\n";
    out << "|---|---|---|" << (timing ? "---|" : "") << "\n";
    for (const auto& i : r.items) {
        out << "| " << (i.pass ? "pass" : "fail") << " | " << i.id << " | `" << i.anchor << "` |";
        if (timing) out << " " << i.seconds << " |";
        out << "\n";
    }
    return out.str();
}

namespace {

std::string csv_field(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_csv(const VerificationReport& r, bool timing) {
    std::ostringstream out;
    out << "id,status,anchor" << (timing ? ",seconds" : "") << "\n";
    for (const auto& i : r.items) {
        out << i.id << "," << (i.pass ? "pass" : "fail") << "," << csv_field(i.anchor);
        if (timing) out << "," << i.seconds;
        out << "\n";
    }
    return out.str();
}

std::string orbit_table_csv(std::span<const OrbitRecord> orbit) {
    std::ostringstream out;
    if (orbit.empty()) return {};
    const std::size_t k = orbit.front().curve_class.raw().size() - 1;
    out << "n,delta";
    for (std::size_t i = 1; i <= k; ++i) out << ",mu_" << i;
    out << ",sign\n";
    for (const auto& r : orbit) {
        out << r.step << "," << to_string(r.curve_class[0]);
        for (std::size_t i = 1; i <= k; ++i) out << "," << to_string(-r.curve_class[i]);
        out << "," << r.pairing_sign << "\n";
    }
    return out.str();
}

std::string orbit_table_markdown(std::span<const OrbitRecord> orbit) {
    std::ostringstream out;
    if (orbit.empty()) return {};
    const std::size_t k = orbit.front().curve_class.raw().size() - 1;
    out << "| n | delta |";
    for (std::size_t i = 1; i <= k; ++i) out << " mu_" << i << " |";
    out << " sign |\n|---|---|";
    for (std::size_t i = 0; i <= k; ++i) out << "---|";
    out << "\n";
    for (const auto& r : orbit) {
        out << "| " << r.step << " | " << to_string(r.curve_class[0]) << " |";
        for (std::size_t i = 1; i <= k; ++i) out << " " << to_string(-r.curve_class[i]) << " |";
        out << " " << r.pairing_sign << " |\n";
    }
    return out.str();
}

Json orbit_table_json(std::span<const OrbitRecord> orbit) {
    Json rows = Json::array();
    for (const auto& r : orbit) {
        Json mu = Json::array();
        for (std::size_t i = 1; i < r.curve_class.raw().size(); ++i) mu.push_back(to_string(-r.curve_class[i]));
        rows.push_back({{"n", r.step},
                        {"delta", to_string(r.curve_class[0])},
                        {"mu", mu},
                        {"pairing_sign", r.pairing_sign},
                        {"pairing_value", to_json(r.pairing_value.rep())}});
    }
    return rows;
}

} // namespace cremona
