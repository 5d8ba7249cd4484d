#include "cremona/polynomial.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cremona {

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial Polynomial::t() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(std::span<const long> ascending) {
    std::vector<Rational> v;
    v.reserve(ascending.size());
    for (long c : ascending) v.emplace_back(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial p = *this;
    const Rational lc = leading();
    for (auto& c : p.coeffs_) c /= lc;
    return p;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    Integer den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& c : coeffs_) {
        const Integer scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Polynomial p = *this;
    const Rational factor(den_lcm, num_gcd);
    for (auto& c : p.coeffs_) c *= factor;
    if (p.leading() < 0)
        for (auto& c : p.coeffs_) c = -c;
    return p;
}

bool Polynomial::has_integer_coefficients() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

std::size_t Polynomial::trailing_zeros() const {
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
    return k;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string Polynomial::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || k == 0) os << to_string(mag);
        if (k >= 1) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(a.coeffs().size() - b.coeffs().size() + 1, Rational(0));
    const auto& bc = b.coeffs();
    const Rational lc = b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational f = rem[k + bc.size() - 1] / lc;
        quo[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= f * bc[j];
    }
    rem.resize(bc.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

namespace {

// Quotient of integer polynomials when every step divides exactly by the
// leading coefficient of b; nullopt otherwise (the quotient may still exist
// over Q, or b may not divide a at all).
std::optional<std::vector<Integer>> integer_quotient(std::vector<Integer> rem, const std::vector<Integer>& b) {
    if (rem.size() < b.size()) {
        for (const auto& c : rem)
            if (c != 0) return std::nullopt;
        return std::vector<Integer>{};
    }
    const Integer& lc = b.back();
    std::vector<Integer> quo(rem.size() - b.size() + 1);
    Integer f;
    for (std::size_t k = quo.size(); k-- > 0;) {
        Integer& lead = rem[k + b.size() - 1];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        mpz_divexact(f.get_mpz_t(), lead.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(rem[k + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
        quo[k] = f;
    }
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
        if (rem[j] != 0) return std::nullopt;
    return quo;
}

std::vector<Integer> integer_coeffs(const Polynomial& p) {
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num());
    return out;
}

Polynomial from_integer_coeffs(const std::vector<Integer>& c) { return Polynomial(std::vector<Rational>(c.begin(), c.end())); }

} // namespace

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.has_integer_coefficients() && b.has_integer_coefficients()) {
        if (auto q = integer_quotient(integer_coeffs(a), integer_coeffs(b))) return from_integer_coeffs(*q);
    }
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Polynomial gcd_euclidean(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a.primitive();
    Polynomial y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Polynomial r = (x % y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e > 0) {
        if (e & 1U) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

const std::vector<u64>& gcd_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        Integer x = Integer(1) << 62;
        for (int i = 0; i < 4096; ++i) {
            mpz_nextprime(x.get_mpz_t(), x.get_mpz_t());
            out.push_back(x.get_ui());
        }
        return out;
    }();
    return primes;
}

using ModPoly = std::vector<u64>;

void trim_mod(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const std::vector<Integer>& a, u64 p) {
    ModPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    trim_mod(out);
    return out;
}

// a <- a mod b, b nonzero with invertible leading coefficient.
void rem_mod(ModPoly& a, const ModPoly& b, u64 p) {
    const u64 inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        const u64 f = mulmod(a.back(), inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            const u64 t = mulmod(f, b[j], p);
            u64& x = a[shift + j];
            x = x >= t ? x - t : x + (p - t);
        }
        trim_mod(a);
    }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        rem_mod(a, b, p);
        std::swap(a, b);
    }
    const u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

std::vector<Integer> symmetric(const std::vector<Integer>& h, const Integer& m) {
    std::vector<Integer> out = h;
    const Integer half = m / 2;
    for (auto& c : out)
        if (c > half) c -= m;
    return out;
}

std::vector<Integer> primitive_integers(std::vector<Integer> c) {
    Integer g = 0;
    for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (c.back() < 0) g = -g;
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return c;
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return (a.is_zero() ? b : a).primitive();
    const Polynomial pa = a.primitive(), pb = b.primitive();
    if (pa.degree() == 0 || pb.degree() == 0) return Polynomial(1);
    const std::vector<Integer> za = integer_coeffs(pa), zb = integer_coeffs(pb);
    Integer c;
    mpz_gcd(c.get_mpz_t(), za.back().get_mpz_t(), zb.back().get_mpz_t());

    // Modular gcd: images mod large primes, CRT, and an exact divisibility
    // test once the lifted candidate stops changing. The candidate's degree
    // equals the degree of a mod-p gcd with p not dividing the leading
    // coefficients, an upper bound for the true degree, so a candidate that
    // divides both inputs is the gcd.
    std::vector<Integer> h;
    Integer m = 1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const u64 p : gcd_primes()) {
        if (mpz_fdiv_ui(za.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(zb.back().get_mpz_t(), p) == 0) continue;
        ModPoly g = gcd_mod(reduce(za, p), reduce(zb, p), p);
        const std::size_t d = g.size() - 1;
        if (d == 0) return Polynomial(1);
        if (d > best) continue;
        const u64 cp = mpz_fdiv_ui(c.get_mpz_t(), p);
        for (auto& x : g) x = mulmod(x, cp, p);
        if (d < best) {
            best = d;
            h.resize(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) h[i] = Integer(static_cast<unsigned long>(g[i]));
            m = Integer(static_cast<unsigned long>(p));
            continue;
        }
        const std::vector<Integer> before = symmetric(h, m);
        const u64 minv = invmod(mpz_fdiv_ui(m.get_mpz_t(), p), p);
        for (std::size_t i = 0; i < h.size(); ++i) {
            const u64 hi = mpz_fdiv_ui(h[i].get_mpz_t(), p);
            const u64 diff = g[i] >= hi ? g[i] - hi : g[i] + (p - hi);
            const u64 delta = mulmod(diff, minv, p);
            mpz_addmul_ui(h[i].get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(delta));
        }
        m *= static_cast<unsigned long>(p);
        const std::vector<Integer> after = symmetric(h, m);
        if (after != before) continue;
        const std::vector<Integer> cand = primitive_integers(after);
        if (integer_quotient(za, cand) && integer_quotient(zb, cand)) return from_integer_coeffs(cand);
    }
    return gcd_euclidean(a, b);
}

std::pair<Polynomial, Polynomial> half_extended_gcd(const Polynomial& a, const Polynomial& m) {
    // Invariant: s0*a = r0, s1*a = r1 (mod m).
    Polynomial r0 = m, r1 = a % m;
    Polynomial s0, s1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Polynomial s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {Polynomial(), Polynomial()};
    const Rational lc = r0.leading();
    return {r0 * (Rational(1) / lc), (s0 % m) * (Rational(1) / lc)};
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (p.degree() == 0) return Polynomial(1);
    return exact_div(p, gcd(p, p.derivative())).primitive();
}

} // namespace cremona
