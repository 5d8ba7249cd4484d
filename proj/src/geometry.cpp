#include "cremona/geometry.hpp"

#include "cremona/orbit.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace cremona {

namespace {

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Scales a nonzero rational matrix to coprime integers.
QMatrix primitive_matrix(const QMatrix& m) {
    Integer den = 1, num = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), m(i, j).get_num_mpz_t());
        }
    const Rational scale(den, num);
    QMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= scale;
    return out;
}

std::vector<int> iota_from(int first, int count) {
    std::vector<int> v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), first);
    return v;
}

Variant variant_of(const BlowupSignature& sig) {
    if (sig == signature_of(Variant::spatial9)) return Variant::spatial9;
    if (sig == signature_of(Variant::planar10)) return Variant::planar10;
    throw DimensionError("no sigma-pattern variant for signature " + to_string(sig));
}

} // namespace

// ---------------------------------------------------------------------------
// Points and configurations

ProjPoint::ProjPoint(std::span<const Rational> coords) {
    Integer den = 1;
    for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    coords_.reserve(coords.size());
    for (const auto& c : coords) coords_.push_back(Integer(c.get_num() * (den / c.get_den())));
    normalize();
}

ProjPoint::ProjPoint(std::span<const Integer> coords) : coords_(coords.begin(), coords.end()) { normalize(); }

ProjPoint ProjPoint::of(std::initializer_list<long> coords) {
    std::vector<Integer> v;
    for (long c : coords) v.emplace_back(c);
    return ProjPoint(std::span<const Integer>(v));
}

void ProjPoint::normalize() {
    if (coords_.size() < 2) throw std::invalid_argument("a projective point needs at least two coordinates");
    Integer g = 0;
    for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) throw std::invalid_argument("the zero vector is not a projective point");
    const auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Integer& c) { return c != 0; });
    if (*lead < 0) g = -g;
    for (auto& c : coords_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

std::size_t ProjPoint::bits() const {
    std::size_t b = 0;
    for (const auto& c : coords_) b = std::max(b, bit_size(c));
    return b;
}

std::string to_string(const ProjPoint& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ":" : "") + to_string(p[i]);
    return out + "]";
}

Configuration::Configuration(BlowupSignature sig, std::vector<ProjPoint> points)
    : sig_(sig), points_(std::move(points)) {
    if (points_.size() != static_cast<std::size_t>(sig_.k)) {
        throw DimensionError("configuration has " + std::to_string(points_.size()) + " points, signature " +
                             to_string(sig_) + " needs " + std::to_string(sig_.k));
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].dim() != sig_.n) {
            throw DimensionError("point " + std::to_string(i + 1) + " is not in P^" + std::to_string(sig_.n));
        }
        for (std::size_t j = 0; j < i; ++j)
            if (points_[i] == points_[j]) {
                throw DistinctnessError("points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                        " coincide");
            }
    }
}

const ProjPoint& Configuration::point(std::size_t i) const {
    if (i < 1 || i > points_.size()) throw std::out_of_range("point index " + std::to_string(i));
    return points_[i - 1];
}

std::size_t Configuration::bits() const {
    std::size_t b = 0;
    for (const auto& p : points_) b = std::max(b, p.bits());
    return b;
}

// ---------------------------------------------------------------------------
// Cremona on points

namespace {

std::vector<std::size_t> zero_coords(std::span<const Rational> h) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] == 0) z.push_back(i);
    return z;
}

template <typename T>
std::vector<T> products_of_others(const std::vector<T>& h) {
    const std::size_t n = h.size();
    std::vector<T> prefix(n + 1, T(1)), suffix(n + 1, T(1));
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * h[i];
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * h[i];
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = prefix[i] * suffix[i + 1];
    return out;
}

void check_centers_ref(const Configuration& config, std::span<const int> centers, int ref) {
    const int k = config.signature().k;
    if (centers.size() != static_cast<std::size_t>(config.signature().n + 1)) {
        throw std::invalid_argument("frame needs " + std::to_string(config.signature().n + 1) + " centers");
    }
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (int c : centers) {
        if (c < 1 || c > k || seen[static_cast<std::size_t>(c)]) throw std::invalid_argument("bad center index");
        seen[static_cast<std::size_t>(c)] = true;
    }
    if (ref < 1 || ref > k || seen[static_cast<std::size_t>(ref)]) {
        throw std::invalid_argument("reference index must be a non-center point");
    }
}

Configuration cremona_step_in_frame(const Configuration& config, std::span<const int> centers, const QMatrix& g) {
    const QMatrix ginv = primitive_matrix(inverse(g));
    std::vector<ProjPoint> out = config.points();
    for (std::size_t i = 1; i <= out.size(); ++i) {
        if (std::find(centers.begin(), centers.end(), static_cast<int>(i)) != centers.end()) continue;
        const std::vector<Rational> pr = config.point(i).rationals();
        const std::vector<Rational> h = g.apply(pr);
        const auto z = zero_coords(h);
        if (z.size() >= 2) {
            const int a = static_cast<int>(z[0]) + 1, b = static_cast<int>(z[1]) + 1;
            throw IndeterminacyError(i, {a, b},
                                     "point " + std::to_string(i) + " lies in the indeterminacy locus: frame coordinates " +
                                         pair_text(a, b) + " vanish");
        }
        if (z.size() == 1) {
            throw DistinctnessError("point " + std::to_string(i) + " is sent onto center " +
                                    std::to_string(centers[z[0]]) + " (frame coordinate " +
                                    std::to_string(z[0] + 1) + " vanishes)");
        }
        const std::vector<Rational> r = products_of_others(h);
        out[i - 1] = ProjPoint(std::span<const Rational>(ginv.apply(r)));
    }
    return {config.signature(), std::move(out)};
}

} // namespace

ProjPoint standard_cremona_point(const ProjPoint& p) {
    const std::vector<Rational> x = p.rationals();
    const auto z = zero_coords(x);
    if (z.size() >= 2) {
        const int a = static_cast<int>(z[0]) + 1, b = static_cast<int>(z[1]) + 1;
        throw IndeterminacyError(0, {a, b}, "point " + to_string(p) + " lies in the indeterminacy locus: coordinates " +
                                                pair_text(a, b) + " vanish");
    }
    return ProjPoint(std::span<const Rational>(products_of_others(x)));
}

ProjPoint apply(const QMatrix& g, const ProjPoint& p) {
    const std::vector<Rational> x = p.rationals();
    return ProjPoint(std::span<const Rational>(g.apply(x)));
}

QMatrix normalize_frame(const Configuration& config, std::span<const int> centers, int ref) {
    check_centers_ref(config, centers, ref);
    const std::size_t m = centers.size();
    QMatrix p(m, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) p(i, j) = config.point(static_cast<std::size_t>(centers[j]))[i];
    QMatrix pinv;
    try {
        pinv = inverse(p);
    } catch (const std::domain_error&) {
        throw GeneralPositionError("frame centers are linearly dependent");
    }
    const std::vector<Rational> pr = config.point(static_cast<std::size_t>(ref)).rationals();
    const std::vector<Rational> lam = pinv.apply(pr);
    for (std::size_t i = 0; i < m; ++i) {
        if (lam[i] == 0) {
            throw GeneralPositionError("reference point " + std::to_string(ref) +
                                       " lies on the hyperplane through the centers other than " +
                                       std::to_string(centers[i]));
        }
        for (std::size_t j = 0; j < m; ++j) pinv(i, j) /= lam[i];
    }
    return primitive_matrix(pinv);
}

Configuration cremona_step(const Configuration& config, std::span<const int> centers, int ref) {
    return cremona_step_in_frame(config, centers, normalize_frame(config, centers, ref));
}

Configuration relabel(const Configuration& config, std::span<const int> sigma) {
    const int k = config.signature().k;
    if (sigma.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("relabeling has the wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    std::vector<ProjPoint> out;
    out.reserve(sigma.size());
    for (int s : sigma) {
        if (s < 1 || s > k || seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("relabeling is not a bijection");
        seen[static_cast<std::size_t>(s)] = true;
        out.push_back(config.point(static_cast<std::size_t>(s)));
    }
    return {config.signature(), std::move(out)};
}

Configuration rho(const Configuration& config, Variant v) {
    if (!(config.signature() == signature_of(v))) throw DimensionError("configuration does not match " + to_string(v));
    const int n = config.signature().n;
    const std::vector<int> sigma = sigma_of(v);
    return cremona_step(relabel(config, sigma), iota_from(1, n + 1), n + 2);
}

Configuration rho_planar(const Configuration& config) { return rho(config, Variant::planar10); }
Configuration rho_spatial(const Configuration& config) { return rho(config, Variant::spatial9); }

Configuration rho_inverse(const Configuration& config, Variant v) {
    if (!(config.signature() == signature_of(v))) throw DimensionError("configuration does not match " + to_string(v));
    const int n = config.signature().n;
    const std::vector<int> sigma = sigma_of(v);
    std::vector<int> inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i) + 1;
    return relabel(cremona_step(config, iota_from(1, n + 1), n + 2), inv);
}

// ---------------------------------------------------------------------------
// Degeneracies

namespace {

template <std::size_t R>
void tuples(std::size_t k, std::size_t start, std::array<int, R>& cur, std::size_t depth,
            std::vector<std::array<int, R>>& out) {
    if (depth == R) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < k; ++i) {
        cur[depth] = static_cast<int>(i) + 1;
        tuples(k, i + 1, cur, depth + 1, out);
    }
}

template <std::size_t R>
std::vector<std::array<int, R>> dependent_tuples(std::span<const ProjPoint> points, Exec exec) {
    std::vector<std::array<int, R>> all;
    std::array<int, R> cur{};
    tuples(points.size(), 0, cur, 0, all);
    const std::size_t dim = points.front().size();
    const auto flags = map_indices(
        all.size(),
        [&](std::size_t t) {
            QMatrix m(R, dim);
            for (std::size_t r = 0; r < R; ++r)
                for (std::size_t c = 0; c < dim; ++c) m(r, c) = points[static_cast<std::size_t>(all[t][r] - 1)][c];
            return rank(m) < R;
        },
        exec);
    std::vector<std::array<int, R>> out;
    for (std::size_t t = 0; t < all.size(); ++t)
        if (flags[t]) out.push_back(all[t]);
    return out;
}

} // namespace

DegeneracyReport degeneracy_report(int n, std::span<const ProjPoint> points, Exec exec) {
    DegeneracyReport rep;
    if (points.empty()) return rep;
    for (const auto& p : points)
        if (p.dim() != n) throw DimensionError("point " + to_string(p) + " is not in P^" + std::to_string(n));
    rep.coincident = dependent_tuples<2>(points, exec);
    rep.collinear = dependent_tuples<3>(points, exec);
    if (n == 3) rep.coplanar = dependent_tuples<4>(points, exec);
    return rep;
}

DegeneracyReport degeneracy_report(const Configuration& config, Exec exec) {
    return degeneracy_report(config.signature().n, config.points(), exec);
}

Rational conic_determinant(std::span<const ProjPoint> six) {
    if (six.size() != 6) throw std::invalid_argument("conic determinant needs six points");
    QMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        if (six[i].dim() != 2) throw DimensionError("conic determinant needs points of P^2");
        const Rational x = six[i][0], y = six[i][1], z = six[i][2];
        const Rational row[6] = {x * x, x * y, x * z, y * y, y * z, z * z};
        for (std::size_t j = 0; j < 6; ++j) m(i, j) = row[j];
    }
    return determinant(m);
}

// ---------------------------------------------------------------------------
// Rational curves

RationalCurve::RationalCurve(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
    if (polys_.size() < 2) throw std::invalid_argument("a curve needs at least two coordinate polynomials");
    Polynomial g;
    for (const auto& p : polys_) {
        g = gcd(g, p);
        if (g.degree() == 0) break;
    }
    if (g.is_zero()) throw std::invalid_argument("all coordinate polynomials vanish");
    if (g.degree() > 0)
        for (auto& p : polys_) p = exact_div(p, g);

    Integer den = 1, num = 0;
    for (const auto& p : polys_)
        for (const auto& c : p.coeffs()) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        }
    const auto lead = std::find_if(polys_.begin(), polys_.end(), [](const Polynomial& p) { return !p.is_zero(); });
    Rational scale(den, num);
    if (lead->leading() < 0) scale = -scale;
    degree_ = 0;
    for (auto& p : polys_) {
        p *= scale;
        degree_ = std::max(degree_, p.degree());
    }
    if (degree_ == 0) throw std::invalid_argument("constant parameterization");
}

RationalCurve RationalCurve::line_through(const ProjPoint& a, const ProjPoint& b) {
    if (a.size() != b.size()) throw DimensionError("line through points of different spaces");
    std::vector<Polynomial> f;
    for (std::size_t i = 0; i < a.size(); ++i) f.emplace_back(std::vector<Rational>{Rational(a[i]), Rational(b[i])});
    return RationalCurve(std::move(f));
}

std::size_t RationalCurve::bits() const {
    std::size_t b = 0;
    for (const auto& p : polys_)
        for (const auto& c : p.coeffs()) b = std::max(b, bit_size(c.get_num()));
    return b;
}

std::string to_string(const RationalCurve& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " : " : "") + c[i].str();
    return out + "]";
}

RationalCurve apply(const QMatrix& g, const RationalCurve& c) {
    if (g.cols() != c.size()) throw DimensionError("transformation size does not match the curve");
    std::vector<Polynomial> h(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g(i, j) != 0) h[i] += c[j] * g(i, j);
    return RationalCurve(std::move(h));
}

int multiplicity_at(const RationalCurve& c, const ProjPoint& p) {
    if (p.size() != c.size()) throw DimensionError("point and curve live in different spaces");
    const int d = c.degree();
    Polynomial g;
    int order_at_infinity = std::numeric_limits<int>::max();
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            const Polynomial m = c[b] * Rational(p[a]) - c[a] * Rational(p[b]);
            if (m.is_zero()) continue;
            order_at_infinity = std::min(order_at_infinity, d - m.degree());
            if (g.is_zero() || g.degree() > 0) g = gcd(g, m);
        }
    if (g.is_zero()) throw std::logic_error("nonconstant curve has all minors zero");
    return g.degree() + order_at_infinity;
}

QCurve curve_class_of(const RationalCurve& c, const Configuration& config) {
    if (c.size() != static_cast<std::size_t>(config.signature().n + 1)) {
        throw DimensionError("curve and configuration live in different spaces");
    }
    std::vector<Rational> raw{Rational(c.degree())};
    for (const auto& p : config.points()) raw.emplace_back(-multiplicity_at(c, p));
    return {config.signature(), std::move(raw)};
}

std::vector<std::pair<int, int>> meets_indeterminacy(const RationalCurve& c) {
    const std::size_t m = c.size();
    const int d = c.degree();
    std::vector<int> mult(m, -1);
    auto mult_at = [&](std::size_t i) {
        if (mult[i] < 0) {
            std::vector<Integer> e(m, Integer(0));
            e[i] = 1;
            mult[i] = multiplicity_at(c, ProjPoint(std::span<const Integer>(e)));
        }
        return mult[i];
    };
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const Polynomial& fa = c[a];
            const Polynomial& fb = c[b];
            int hdeg;
            if (fa.is_zero() && fb.is_zero()) {
                hdeg = std::numeric_limits<int>::max();
            } else if (fa.is_zero() || fb.is_zero()) {
                hdeg = d;
            } else {
                hdeg = gcd(fa, fb).degree() + std::min(d - fa.degree(), d - fb.degree());
            }
            if (hdeg == 0) continue;
            int accounted = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (i != a && i != b) accounted += mult_at(i);
            if (hdeg > accounted) out.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
        }
    return out;
}

RationalCurve curve_strict_transform(const RationalCurve& c, const QMatrix& g) {
    if (!g.square() || g.cols() != c.size()) throw DimensionError("frame size does not match the curve");
    std::vector<Polynomial> h(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g(i, j) != 0) h[i] += c[j] * g(i, j);
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i].is_zero()) zeros.push_back(i);
    if (zeros.size() >= 2) {
        const int a = static_cast<int>(zeros[0]) + 1, b = static_cast<int>(zeros[1]) + 1;
        throw FlopLineError({a, b}, "curve lies in the flopped line X_" + std::to_string(a) + " = X_" +
                                        std::to_string(b) + " = 0");
    }
    if (zeros.size() == 1) {
        throw ContainmentError("curve lies in the coordinate hyperplane X_" + std::to_string(zeros[0] + 1) +
                               " = 0 of the frame");
    }
    const RationalCurve in_frame(products_of_others(h));
    return apply(primitive_matrix(inverse(g)), in_frame);
}

// ---------------------------------------------------------------------------
// Orbit tracking

bool TrackReport::ok() const {
    if (steps.size() != requested + 1) return false;
    return std::all_of(steps.begin(), steps.end(), [](const TrackStep& s) { return s.ok; });
}

TrackReport track_line_orbit(const Configuration& config, std::size_t steps) {
    const BlowupSignature sig = config.signature();
    const Variant v = variant_of(sig);
    const LatticeMap map = m_sigma(v);
    std::vector<Rational> seed(sig.rank(), Rational(0));
    seed[0] = 1;
    seed[1] = -1;
    seed[2] = -1;
    const std::vector<QCurve> expected = curve_iterates(map, QCurve(sig, seed), steps);
    const std::vector<int> sigma = sigma_of(v);
    const std::vector<int> centers = iota_from(1, sig.n + 1);
    const int ref = sig.n + 2;

    TrackReport report;
    report.requested = steps;
    Configuration cfg = config;
    RationalCurve curve = RationalCurve::line_through(config.point(1), config.point(2));
    for (std::size_t n = 0; n <= steps; ++n) {
        TrackStep st{n, expected[n], std::nullopt, {}, 0, 0, 0, {}, false};
        try {
            if (n > 0) {
                const Configuration q = relabel(cfg, sigma);
                const QMatrix g = normalize_frame(q, centers, ref);
                st.meets = meets_indeterminacy(apply(g, curve));
                if (!st.meets.empty()) {
                    st.error = "curve meets the indeterminacy locus of the step";
                    report.steps.push_back(std::move(st));
                    break;
                }
                curve = curve_strict_transform(curve, g);
                cfg = cremona_step_in_frame(q, centers, g);
            }
            st.realized = curve_class_of(curve, cfg);
            st.ok = *st.realized == st.expected;
            if (!st.ok) st.error = "realized class differs from the lattice orbit";
        } catch (const std::exception& e) {
            st.error = e.what();
        }
        st.config_bits = cfg.bits();
        st.curve_bits = curve.bits();
        st.curve_degree = curve.degree();
        const bool ok = st.ok;
        report.steps.push_back(std::move(st));
        if (!ok) break;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Interpolation

namespace {

Integer falling(long a, long k) {
    Integer r = 1;
    for (long i = 0; i < k; ++i) r *= a - i;
    return r;
}

Integer int_pow(const Integer& x, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

} // namespace

std::size_t interpolation_rank(const Configuration& config, const QDivisor& cls) {
    if (config.signature().n != 2) throw DimensionError("interpolation is implemented on P^2");
    if (!(cls.signature() == config.signature())) throw DimensionError("class and configuration signatures differ");
    for (const auto& x : cls.raw())
        if (x.get_den() != 1) throw std::invalid_argument("interpolation class must be integral");
    const long d = cls[0].get_num().get_si();
    if (d < 0) throw std::invalid_argument("interpolation degree must be nonnegative");

    std::vector<std::array<long, 3>> monomials;
    for (long a = d; a >= 0; --a)
        for (long b = d - a; b >= 0; --b) monomials.push_back({a, b, d - a - b});

    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i <= config.points().size(); ++i) {
        const long m = -cls[i].get_num().get_si();
        if (m < 0) throw std::invalid_argument("interpolation multiplicities must be nonnegative");
        const ProjPoint& p = config.point(i);
        for (long order = 0; order < m; ++order)
            for (long al = order; al >= 0; --al)
                for (long be = order - al; be >= 0; --be) {
                    const long ga = order - al - be;
                    std::vector<Rational> row;
                    row.reserve(monomials.size());
                    for (const auto& [a, b, c] : monomials) {
                        if (a < al || b < be || c < ga) {
                            row.emplace_back(0);
                            continue;
                        }
                        Integer v = falling(a, al) * falling(b, be) * falling(c, ga);
                        v *= int_pow(p[0], static_cast<unsigned long>(a - al)) *
                             int_pow(p[1], static_cast<unsigned long>(b - be)) *
                             int_pow(p[2], static_cast<unsigned long>(c - ga));
                        row.emplace_back(v);
                    }
                    rows.push_back(std::move(row));
                }
    }
    if (rows.empty()) return monomials.size();
    QMatrix mat(rows.size(), monomials.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < monomials.size(); ++c) mat(r, c) = rows[r][c];
    return monomials.size() - rank(std::move(mat));
}

bool v_n_membership(const Configuration& config, std::size_t n) {
    const BlowupSignature sig = signature_of(Variant::planar10);
    if (!(config.signature() == sig)) throw DimensionError("nodal-family membership needs a planar10 configuration");
    std::vector<Rational> seed(sig.rank(), Rational(0));
    seed[0] = 1;
    seed[1] = seed[2] = seed[3] = -1;
    const QDivisor cls = divisor_orbit(m_sigma(Variant::planar10), QDivisor(sig, seed), n).back();
    if (cls[0] < 0) throw NotApplicableError("orbit class " + format_class(cls) + " has negative degree");
    for (std::size_t i = 1; i < cls.raw().size(); ++i)
        if (cls[i] > 0) throw NotApplicableError("orbit class " + format_class(cls) + " has a negative multiplicity");
    return interpolation_rank(config, cls) >= 1;
}

Configuration random_configuration(const BlowupSignature& sig, std::uint64_t seed, unsigned bound) {
    if (bound == 0) throw std::invalid_argument("coordinate bound must be positive");
    std::mt19937_64 gen(seed);
    const std::uint64_t span = 2ULL * bound + 1;
    std::vector<ProjPoint> pts;
    while (pts.size() < static_cast<std::size_t>(sig.k)) {
        std::vector<Integer> c;
        bool zero = true;
        for (int i = 0; i <= sig.n; ++i) {
            const long v = static_cast<long>(gen() % span) - static_cast<long>(bound);
            zero = zero && v == 0;
            c.emplace_back(v);
        }
        if (zero) continue;
        ProjPoint p{std::span<const Integer>(c)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    return {sig, std::move(pts)};
}

} // namespace cremona
