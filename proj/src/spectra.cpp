#include "cremona/spectra.hpp"

#include <algorithm>
#include <utility>

namespace cremona {

// ---------------------------------------------------------------------------
// Characteristic polynomial

Polynomial charpoly(const QMatrix& a, Exec exec) {
    if (!a.square()) throw std::invalid_argument("charpoly of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Polynomial(1);

    Matrix<Polynomial> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Polynomial::t() : Polynomial()) - Polynomial(a(i, j));

    Polynomial prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return Polynomial();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        bareiss_step(m, k, prev, exec);
        prev = m(k, k);
    }
    Polynomial det = m(n - 1, n - 1);
    if (negate) det = -det;
    if (det.is_zero() || det.leading() != 1) throw std::logic_error("charpoly elimination lost monicity");
    return det;
}

// ---------------------------------------------------------------------------
// Reciprocal structure and cyclotomic factors

Polynomial reciprocal_lift(const Polynomial& q) {
    if (q.is_zero()) return {};
    const auto d = static_cast<std::size_t>(q.degree());
    const Polynomial t2p1 = Polynomial::monomial(1, 2) + Polynomial(1);
    Polynomial out;
    Polynomial power(1);  // (t^2 + 1)^j
    for (std::size_t j = 0; j <= d; ++j) {
        if (q.coeff(j) != 0) out += power * Polynomial::monomial(q.coeff(j), d - j);
        power *= t2p1;
    }
    return out;
}

std::optional<Polynomial> reciprocal_unlift(const Polynomial& p) {
    if (p.is_zero()) return Polynomial();
    if (p.degree() % 2 != 0) return std::nullopt;
    const auto d = static_cast<std::size_t>(p.degree() / 2);
    const Polynomial t2p1 = Polynomial::monomial(1, 2) + Polynomial(1);
    std::vector<Rational> q(d + 1, Rational(0));
    Polynomial rem = p;
    for (std::size_t j = d + 1; j-- > 0;) {
        q[j] = rem.coeff(d + j);
        if (q[j] != 0) rem -= t2p1.pow(static_cast<unsigned>(j)) * Polynomial::monomial(q[j], d - j);
        if (rem.degree() >= static_cast<int>(d + j)) return std::nullopt;
    }
    if (!rem.is_zero()) return std::nullopt;
    return Polynomial(std::move(q));
}

namespace {

int mobius(unsigned m) {
    int result = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
    }
    if (m > 1) result = -result;
    return result;
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

Polynomial t_power_minus_one(unsigned d) { return Polynomial::monomial(1, d) - Polynomial(1); }

} // namespace

Polynomial cyclotomic(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic index must be positive");
    Polynomial num(1), den(1);
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        const int mu = mobius(m / d);
        if (mu == 1) num *= t_power_minus_one(d);
        if (mu == -1) den *= t_power_minus_one(d);
    }
    return exact_div(num, den);
}

Polynomial strip_cyclotomic_factors(Polynomial p) {
    // phi(m) >= sqrt(m/2), so a cyclotomic factor of degree <= D has m <= 2 D^2.
    for (unsigned m = 1; p.degree() > 0 && m <= 2U * static_cast<unsigned>(p.degree() * p.degree()); ++m) {
        if (euler_phi(m) > static_cast<unsigned>(p.degree())) continue;
        const Polynomial phi = cyclotomic(m);
        auto [quo, rem] = divmod(p, phi);
        if (rem.is_zero()) p = std::move(quo);
    }
    return p.primitive();
}

std::vector<Polynomial> squarefree_factorization(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free factorization of zero");
    std::vector<Polynomial> out;
    if (p.degree() == 0) return out;
    Polynomial c = gcd(p, p.derivative());
    Polynomial w = exact_div(p, c);
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        out.push_back(exact_div(w, y).primitive());
        c = exact_div(c, y);
        w = std::move(y);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

// Positive rescaling to coprime integer coefficients; keeps the sign.
Polynomial positive_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial q = p.primitive();
    return (p.leading() < 0) ? -q : q;
}

int sign_at(const Polynomial& p, const Rational& x) { return sgn(p.eval(x)); }

} // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
    seq_.push_back(p.degree() == 0 ? p : squarefree_part(p));
    if (seq_.front().degree() == 0) return;
    seq_.push_back(positive_primitive(seq_.front().derivative()));
    while (true) {
        Polynomial r = -(seq_[seq_.size() - 2] % seq_.back());
        if (r.is_zero()) break;
        seq_.push_back(positive_primitive(r));
    }
}

int SturmSequence::variations(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& p : seq_) {
        const int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::variations_at_infinity(bool positive) const {
    int changes = 0, last = 0;
    for (const auto& p : seq_) {
        int s = sgn(p.leading());
        if (!positive && p.degree() % 2 != 0) s = -s;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::size_t SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
    if (b <= a) return 0;
    return static_cast<std::size_t>(variations(a) - variations(b));
}

std::size_t SturmSequence::count_closed(const Rational& a, const Rational& b) const {
    if (b < a) return 0;
    return count_half_open(a, b) + (sign_at(seq_.front(), a) == 0 ? 1 : 0);
}

std::size_t SturmSequence::count_above(const Rational& a) const {
    return static_cast<std::size_t>(variations(a) - variations_at_infinity(true));
}

std::size_t SturmSequence::count_below(const Rational& a) const {
    const int upto = variations_at_infinity(false) - variations(a);
    return static_cast<std::size_t>(upto - (sign_at(seq_.front(), a) == 0 ? 1 : 0));
}

std::size_t SturmSequence::count_all() const {
    return static_cast<std::size_t>(variations_at_infinity(false) - variations_at_infinity(true));
}

// ---------------------------------------------------------------------------
// Real algebraic numbers

RealAlgebraic::RealAlgebraic(Polynomial minpoly, Rational lo, Rational hi) {
    if (minpoly.is_zero() || minpoly.degree() < 1) throw std::invalid_argument("real algebraic needs a nonconstant minpoly");
    minpoly_ = squarefree_part(minpoly);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    if (hi_ < lo_) throw std::invalid_argument("isolating interval has lo > hi");
    if (lo_ == hi_) {
        if (minpoly_.eval(lo_) != 0) throw std::invalid_argument("degenerate interval is not a root");
        return;
    }
    if (minpoly_.eval(lo_) == 0 || minpoly_.eval(hi_) == 0) {
        throw std::invalid_argument("isolating interval endpoint is a root; use the degenerate interval");
    }
    if (SturmSequence(minpoly_).count_closed(lo_, hi_) != 1) {
        throw std::invalid_argument("interval does not isolate exactly one root");
    }
}

std::vector<RealAlgebraic> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
    std::vector<RealAlgebraic> roots;
    if (p.degree() < 1) return roots;
    const Polynomial sf = squarefree_part(p);
    const SturmSequence sturm(sf);

    // Cauchy bound: every root has |x| < 1 + max |c_i / c_d|.
    Rational maxratio = 0;
    for (int i = 0; i < sf.degree(); ++i) maxratio = std::max<Rational>(maxratio, abs(sf.coeff(static_cast<std::size_t>(i)) / sf.leading()));
    Integer bound;
    mpz_cdiv_q(bound.get_mpz_t(), maxratio.get_num_mpz_t(), maxratio.get_den_mpz_t());
    bound += 1;

    struct Span {
        Rational a, b;
        std::size_t count;
    };
    std::vector<Span> work{{Rational(-bound), Rational(bound), sturm.count_half_open(Rational(-bound), Rational(bound))}};
    while (!work.empty()) {
        Span s = std::move(work.back());
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            if (sf.eval(s.b) == 0) {
                roots.push_back(RealAlgebraic(RealAlgebraic::Trusted{}, sf, s.b, s.b));
                continue;
            }
            if (sf.eval(s.a) != 0) {
                roots.push_back(RealAlgebraic(RealAlgebraic::Trusted{}, sf, s.a, s.b));
                continue;
            }
        }
        const Rational m = (s.a + s.b) / 2;
        const std::size_t left = sturm.count_half_open(s.a, m);
        work.push_back({m, s.b, s.count - left});
        work.push_back({s.a, m, left});
    }
    std::sort(roots.begin(), roots.end(), [](const RealAlgebraic& x, const RealAlgebraic& y) { return x.lo() < y.lo(); });
    return roots;
}

RealAlgebraic refine(const RealAlgebraic& a, const Rational& width) {
    if (width <= 0) throw std::invalid_argument("refinement width must be positive");
    if (a.is_rational() || a.width() <= width) return a;
    const Polynomial& p = a.minpoly();
    Rational lo = a.lo(), hi = a.hi();
    const int sign_lo = sign_at(p, lo);
    while (hi - lo > width) {
        const Rational m = (lo + hi) / 2;
        const int s = sign_at(p, m);
        if (s == 0) return RealAlgebraic(RealAlgebraic::Trusted{}, p, m, m);
        if (s == sign_lo) lo = m;
        else hi = m;
    }
    return RealAlgebraic(RealAlgebraic::Trusted{}, p, lo, hi);
}

int compare(const RealAlgebraic& a, const Rational& r) {
    if (a.is_rational()) return sgn(a.lo() - r);
    if (r <= a.lo()) return 1;
    if (r >= a.hi()) return -1;
    const int s = sign_at(a.minpoly(), r);
    if (s == 0) return 0;
    return s == sign_at(a.minpoly(), a.lo()) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Q(lambda)

FieldPtr NumberField::make(const RealAlgebraic& generator) {
    Polynomial mod = generator.minpoly();
    if (mod.degree() > 1) {
        for (unsigned m = 1; mod.degree() > 1 && m <= 2U * static_cast<unsigned>(mod.degree() * mod.degree()); ++m) {
            if (euler_phi(m) > static_cast<unsigned>(mod.degree())) continue;
            const Polynomial phi = cyclotomic(m);
            auto [quo, rem] = divmod(mod, phi);
            if (!rem.is_zero()) continue;
            const bool contains = generator.is_rational() ? phi.eval(generator.lo()) == 0
                                                          : SturmSequence(phi).count_closed(generator.lo(), generator.hi()) > 0;
            mod = contains ? phi : quo.primitive();
        }
    }
    RealAlgebraic gen = mod == generator.minpoly() ? generator : refine(RealAlgebraic(mod, generator.lo(), generator.hi()), generator.width() + 1);
    return FieldPtr(new NumberField(std::move(gen)));
}

FieldElement::FieldElement(FieldPtr field, const Polynomial& rep) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("field element without a field");
    rep_ = rep.degree() < field_->degree() ? rep : rep % field_->modulus();
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (field_ != o.field_ && !(field_->modulus() == o.field_->modulus())) {
        throw std::invalid_argument("field elements from different number fields");
    }
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_field(o);
    rep_ += o.rep_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_field(o);
    rep_ -= o.rep_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_field(o);
    rep_ = (rep_ * o.rep_) % field_->modulus();
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
    rep_ *= c;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(lambda)");
    auto [g, s] = half_extended_gcd(rep_, field_->modulus());
    if (g.degree() != 0) throw std::domain_error("field modulus is reducible: element shares factor " + g.str());
    return {field_, s};
}

FieldElement FieldElement::pow(unsigned e) const {
    FieldElement result(field_, Rational(1));
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check_same_field(b);
    return a.rep_ == b.rep_;
}

namespace {

std::pair<Rational, Rational> interval_eval(const Polynomial& p, const Rational& lo, const Rational& hi) {
    Rational acc_lo = p.leading(), acc_hi = p.leading();
    for (int k = p.degree() - 1; k >= 0; --k) {
        const Rational c[4] = {acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi};
        acc_lo = *std::min_element(c, c + 4) + p.coeff(static_cast<std::size_t>(k));
        acc_hi = *std::max_element(c, c + 4) + p.coeff(static_cast<std::size_t>(k));
    }
    return {acc_lo, acc_hi};
}

// 2^-213 < 10^-64
const Rational& width_cap() {
    static const Rational cap = [] {
        Integer den = 1;
        den <<= 213;
        return Rational(Integer(1), den);
    }();
    return cap;
}

} // namespace

int sign_of(const FieldElement& x, const RealAlgebraic& lambda) {
    const Polynomial& rep = x.rep();
    if (rep.is_zero()) return 0;
    if (rep.degree() == 0) return sgn(rep.leading());
    if (!(lambda.minpoly() % x.field()->modulus()).is_zero()) {
        throw std::invalid_argument("lambda's minimal polynomial does not match the element's field");
    }
    if (lambda.is_rational()) return sgn(rep.eval(lambda.lo()));

    // Zero test: rep(lambda) = 0 iff gcd(rep, minpoly) has lambda as a root,
    // i.e. has a root inside the isolating interval.
    const Polynomial g = gcd(rep, lambda.minpoly());
    if (g.degree() >= 1 && SturmSequence(g).count_closed(lambda.lo(), lambda.hi()) > 0) return 0;

    RealAlgebraic cur = lambda;
    while (true) {
        const auto [lo, hi] = interval_eval(rep, cur.lo(), cur.hi());
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (cur.is_rational()) return sgn(rep.eval(cur.lo()));
        if (cur.width() < width_cap()) {
            throw SignUndecidedError("sign refinement reached width 2^-213 without a decision");
        }
        cur = refine(cur, cur.width() / 2);
    }
}

int sign_of(const FieldElement& x) { return sign_of(x, x.field()->generator()); }

std::vector<double> approximate(std::span<const FieldElement> xs, const Rational& width) {
    std::vector<double> out;
    if (xs.empty()) return out;
    const RealAlgebraic g = refine(xs.front().field()->generator(), width);
    const Rational m = g.midpoint();
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(to_double(x.rep().eval(m)));
    return out;
}

std::pair<Rational, Rational> enclose(const FieldElement& x, const Rational& width) {
    if (x.rep().is_zero()) return {Rational(0), Rational(0)};
    const RealAlgebraic g = refine(x.field()->generator(), width);
    return interval_eval(x.rep(), g.lo(), g.hi());
}

// ---------------------------------------------------------------------------
// Dominant eigenvalue and eigenvectors

DominantEigenvalue dominant_eigenvalue(const LatticeMap& map, Exec exec) {
    const Polynomial cp = charpoly(map.div_matrix(), exec);
    DominanceCertificate cert{cp, 0, 0, 0, Polynomial(), RealAlgebraic(Polynomial::t(), 0, 0), 0, Polynomial()};

    const Polynomial t_minus_1 = Polynomial::t() - Polynomial(1);
    const Polynomial t_plus_1 = Polynomial::t() + Polynomial(1);
    cert.t_power = cp.trailing_zeros();
    Polynomial rest = exact_div(cp, Polynomial::monomial(1, cert.t_power));
    while (rest.degree() > 0 && rest.eval(1) == 0) {
        rest = exact_div(rest, t_minus_1);
        ++cert.plus_one;
    }
    while (rest.degree() > 0 && rest.eval(-1) == 0) {
        rest = exact_div(rest, t_plus_1);
        ++cert.minus_one;
    }
    const auto q = reciprocal_unlift(rest);
    if (!q) throw SpectralStructureError("not a reciprocal-structured map: charpoly " + cp.str());
    const Polynomial rebuilt = t_minus_1.pow(static_cast<unsigned>(cert.plus_one)) *
                               t_plus_1.pow(static_cast<unsigned>(cert.minus_one)) *
                               Polynomial::monomial(1, cert.t_power) * reciprocal_lift(*q);
    if (!(rebuilt == cp)) throw SpectralStructureError("not a reciprocal-structured map: factor mismatch");
    cert.q = *q;
    if (q->degree() < 1) throw SpectralStructureError("no eigenvalue of magnitude greater than 1");

    // Dominance: q is real-rooted, exactly one root (simple) above 2, none
    // below -2. Then lambda + 1/lambda = mu gives the unique pair (lambda,
    // 1/lambda) off the unit circle.
    const auto factors = squarefree_factorization(*q);
    std::size_t real = 0, above = 0, below = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        const SturmSequence s(factors[i]);
        real += (i + 1) * s.count_all();
        above += (i + 1) * s.count_above(2);
        below += (i + 1) * s.count_below(-2);
    }
    if (real != static_cast<std::size_t>(q->degree())) {
        throw SpectralStructureError("q has non-real roots; no dominance certificate");
    }
    if (above != 1 || below != 0) {
        throw SpectralStructureError(above == 0 && below == 0 ? "no eigenvalue of magnitude greater than 1"
                                                              : "dominant eigenvalue is not unique");
    }
    cert.q_roots_in_band = real - above - below;
    for (const auto& r : isolate_real_roots(factors.front()))
        if (compare(r, 2) > 0) cert.mu = r;

    cert.minpoly = strip_cyclotomic_factors(squarefree_part(rest));
    std::vector<RealAlgebraic> big;
    for (const auto& r : isolate_real_roots(cert.minpoly))
        if (compare(r, 1) > 0) big.push_back(r);
    if (big.size() != 1) throw SpectralStructureError("expected exactly one real eigenvalue above 1");
    return {big.front(), std::move(cert)};
}

std::vector<FieldElement> kernel_vector(const QMatrix& a, const FieldPtr& field) {
    if (!a.square()) throw std::invalid_argument("kernel_vector needs a square matrix");
    const std::size_t n = a.rows();
    const FieldElement lambda = FieldElement::generator(field);
    std::vector<std::vector<FieldElement>> b(n, std::vector<FieldElement>(n, FieldElement(field, Rational(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i][j] = i == j ? FieldElement(field, a(i, j)) - lambda : FieldElement(field, a(i, j));

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t p = r;
        while (p < n && b[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(b[p], b[r]);
        const FieldElement inv = b[r][col].inverse();
        for (std::size_t j = col; j < n; ++j) b[r][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || b[i][col].is_zero()) continue;
            const FieldElement f = b[i][col];
            for (std::size_t j = col; j < n; ++j) b[i][j] -= f * b[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    const std::size_t dim = n - r;
    if (dim == 0) throw EigenspaceError(0, "no kernel: lambda is not an eigenvalue");
    if (dim > 1) throw EigenspaceError(dim, "eigenspace has dimension " + std::to_string(dim) + ", expected 1");

    std::size_t free_col = 0;
    for (std::size_t c = 0, pi = 0; c < n; ++c) {
        if (pi < pivot_cols.size() && pivot_cols[pi] == c) {
            ++pi;
            continue;
        }
        free_col = c;
        break;
    }
    std::vector<FieldElement> v(n, FieldElement(field, Rational(0)));
    v[free_col] = FieldElement(field, Rational(1));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -b[i][free_col];
    const auto first = std::find_if(v.begin(), v.end(), [](const FieldElement& x) { return !x.is_zero(); });
    const FieldElement scale = first->inverse();
    for (auto& x : v) x *= scale;
    return v;
}

std::vector<FieldElement> eigenvector(const LatticeMap& map, const RealAlgebraic& lambda) {
    const FieldPtr field = NumberField::make(lambda);
    std::vector<FieldElement> v = kernel_vector(map.div_matrix(), field);
    if (v.front().is_zero()) throw EigenspaceError(1, "eigenvector has zero H-coordinate; cannot normalize");
    return v;
}

bool is_eigenvector(const QMatrix& a, std::span<const FieldElement> v) {
    if (v.size() != a.cols() || v.empty()) return false;
    const FieldPtr& field = v.front().field();
    const FieldElement lambda = FieldElement::generator(field);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        FieldElement acc(field, Rational(0));
        for (std::size_t j = 0; j < a.cols(); ++j) acc += v[j] * a(i, j);
        if (!(acc == lambda * v[i])) return false;
    }
    return true;
}

} // namespace cremona
