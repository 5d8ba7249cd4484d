#include "cremona/orbit.hpp"

#include <cmath>

namespace cremona {

namespace {

void check_integral(std::span<const Rational> raw) {
    for (const auto& x : raw)
        if (x.get_den() != 1) throw std::invalid_argument("orbit seed must be integral");
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double sine_to(const std::vector<double>& unit, const std::vector<double>& dir) {
    double dot = 0;
    for (std::size_t i = 0; i < unit.size(); ++i) dot += unit[i] * dir[i];
    double s = 0;
    for (std::size_t i = 0; i < unit.size(); ++i) {
        const double r = unit[i] - dot * dir[i];
        s += r * r;
    }
    return std::sqrt(s);
}

} // namespace

Eigendivisor eigendivisor(const LatticeMap& map, Exec exec) {
    DominantEigenvalue de = dominant_eigenvalue(map, exec);
    std::vector<FieldElement> v = eigenvector(map, de.lambda);
    FieldPtr field = v.front().field();
    return {de.lambda, field, FieldDivisor(map.signature(), std::move(v)), std::move(de.certificate)};
}

std::vector<QCurve> curve_iterates(const LatticeMap& map, const QCurve& seed, std::size_t steps) {
    if (!(seed.signature() == map.signature())) throw DimensionError("seed signature does not match map");
    check_integral(seed.raw());
    std::vector<QCurve> out{seed};
    out.reserve(steps + 1);
    for (std::size_t n = 1; n <= steps; ++n) out.push_back(map.apply(out.back()));
    return out;
}

std::vector<OrbitRecord> curve_orbit(const LatticeMap& map, const QCurve& seed, std::size_t steps,
                                     const FieldDivisor& d) {
    if (!(d.signature() == map.signature())) throw DimensionError("eigendivisor signature does not match map");
    std::vector<OrbitRecord> out;
    out.reserve(steps + 1);
    std::size_t n = 0;
    for (auto& c : curve_iterates(map, seed, steps)) {
        FieldElement value = pair(d, c);
        const int s = sign_of(value);
        out.push_back({n++, std::move(c), s, std::move(value)});
    }
    return out;
}

std::vector<OrbitRecord> curve_orbit(const LatticeMap& map, const QCurve& seed, std::size_t steps) {
    return curve_orbit(map, seed, steps, eigendivisor(map).divisor);
}

std::vector<QDivisor> divisor_orbit(const LatticeMap& map, const QDivisor& seed, std::size_t steps) {
    if (!(seed.signature() == map.signature())) throw DimensionError("seed signature does not match map");
    std::vector<QDivisor> out{seed};
    out.reserve(steps + 1);
    for (std::size_t n = 1; n <= steps; ++n) out.push_back(map.apply(out.back()));
    return out;
}

NegativityCertificate negativity_certificate(const FieldDivisor& d, const std::vector<OrbitRecord>& orbit,
                                             const RealAlgebraic& lambda) {
    if (orbit.empty()) throw CertificateError("empty orbit");
    if (orbit.front().step != 0) throw CertificateError("orbit does not start at n = 0");
    const FieldPtr& field = d[0].field();
    if (compare(lambda, 0) <= 0) throw CertificateError("lambda is not positive");

    const FieldElement base = pair(d, orbit.front().curve_class);
    const int base_sign = sign_of(base, lambda);
    if (base_sign != -1) throw CertificateError("D . C_0 is not negative (sign " + std::to_string(base_sign) + ")");

    const FieldElement lam = FieldElement::generator(field);
    NegativityCertificate cert{base, base_sign, {}};
    cert.items.reserve(orbit.size());
    FieldElement power(field, Rational(1));
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        const OrbitRecord& r = orbit[i];
        if (r.step != i) throw CertificateError("orbit steps are not consecutive at index " + std::to_string(i));
        if (i > 0) power *= lam;
        const FieldElement value = pair(d, r.curve_class);
        if (!(value == r.pairing_value)) {
            throw CertificateError("stored pairing value disagrees with D . C_n at n = " + std::to_string(i));
        }
        FieldElement scaled = power * value;
        if (!(scaled == base)) {
            throw CertificateError("identity lambda^n (D . C_n) = D . C_0 fails at n = " + std::to_string(i));
        }
        // lambda^n > 0, so sign(D . C_n) = sign(D . C_0).
        if (r.pairing_sign != base_sign) {
            throw CertificateError("stored sign disagrees with the certified sign at n = " + std::to_string(i));
        }
        cert.items.push_back({i, value, std::move(scaled), base_sign});
    }
    return cert;
}

PowerIteration power_iteration(const LatticeMap& map, const QDivisor& start, std::size_t iterations,
                               double tolerance) {
    if (!(start.signature() == map.signature())) throw DimensionError("start signature does not match map");
    const Eigendivisor ed = eigendivisor(map);
    const QMatrix& a = map.div_matrix();
    const std::size_t dim = a.rows();
    const Rational width(Integer(1), Integer(Integer(1) << 80));

    // Left eigenvector w: w . (A v) = lambda (w . v), so w . v measures the
    // lambda-component of v.
    const std::vector<FieldElement> w = kernel_vector(a.transpose(), ed.field);
    FieldElement proj(ed.field, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) proj += w[i] * start[i];
    if (proj.is_zero()) throw DegenerateStartError("start has zero component along the dominant eigenvector");

    std::vector<double> wd = approximate(w, width);
    std::vector<double> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = to_double(start[i]);
    const double scale = norm2(wd) * norm2(v);
    const double pd = approximate(std::span<const FieldElement>(&proj, 1), width).front();
    if (scale == 0 || std::abs(pd) / scale < tolerance) {
        throw DegenerateStartError("start has negligible component along the dominant eigenvector");
    }

    PowerIteration out;
    out.eigendirection = approximate(ed.divisor.raw(), width);
    const double en = norm2(out.eigendirection);
    for (double& x : out.eigendirection) x /= en;

    std::vector<std::vector<double>> m(dim, std::vector<double>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m[i][j] = to_double(a(i, j));

    const double vn = norm2(v);
    for (double& x : v) x /= vn;
    out.iterates.push_back(v);
    out.sines.push_back(sine_to(v, out.eigendirection));
    for (std::size_t it = 0; it < iterations; ++it) {
        std::vector<double> next(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) next[i] += m[i][j] * v[j];
        const double nn = norm2(next);
        for (double& x : next) x /= nn;
        v = std::move(next);
        out.iterates.push_back(v);
        out.sines.push_back(sine_to(v, out.eigendirection));
    }
    out.final_sine = out.sines.back();
    return out;
}

} // namespace cremona
