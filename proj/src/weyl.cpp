#include "cremona/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cremona {

QDivisor LatticeMap::apply(const QDivisor& d) const {
    if (!(d.signature() == sig_)) throw DimensionError("divisor signature does not match map");
    return {sig_, div_.apply(std::span<const Rational>(d.raw()))};
}

QCurve LatticeMap::apply(const QCurve& c) const {
    if (!(c.signature() == sig_)) throw DimensionError("curve signature does not match map");
    return {sig_, curve_.apply(std::span<const Rational>(c.raw()))};
}

bool LatticeMap::is_adjoint() const {
    const QMatrix g = pairing_form(sig_.rank());
    return div_.transpose() * g * curve_ == g;
}

LatticeMap LatticeMap::unchecked(BlowupSignature sig, QMatrix div, QMatrix curve, Word word) {
    return {sig, std::move(div), std::move(curve), std::move(word)};
}

QMatrix adjoint_curve_matrix(const QMatrix& div) {
    const QMatrix g = pairing_form(div.rows());
    return g * inverse(div).transpose() * g;
}

namespace {

void check_perm(const BlowupSignature& sig, std::span<const int> pi) {
    if (pi.size() != static_cast<std::size_t>(sig.k)) {
        throw std::invalid_argument("permutation has " + std::to_string(pi.size()) + " entries, need " +
                                    std::to_string(sig.k));
    }
    std::vector<bool> seen(pi.size() + 1, false);
    for (int v : pi) {
        if (v < 1 || v > sig.k || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a bijection of 1.." + std::to_string(sig.k));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

void check_centers(const BlowupSignature& sig, std::span<const int> centers) {
    if (centers.size() != static_cast<std::size_t>(sig.n + 1)) {
        throw std::invalid_argument("Cremona on P^" + std::to_string(sig.n) + " needs " + std::to_string(sig.n + 1) +
                                    " centers");
    }
    std::vector<bool> seen(static_cast<std::size_t>(sig.k) + 1, false);
    for (int c : centers) {
        if (c < 1 || c > sig.k) throw std::invalid_argument("center index " + std::to_string(c) + " out of range");
        if (seen[static_cast<std::size_t>(c)]) throw std::invalid_argument("repeated center index " + std::to_string(c));
        seen[static_cast<std::size_t>(c)] = true;
    }
}

QMatrix perm_block(const BlowupSignature& sig, std::span<const int> pi) {
    QMatrix p(sig.rank(), sig.rank());
    p(0, 0) = 1;
    for (std::size_t i = 0; i < pi.size(); ++i) p(i + 1, static_cast<std::size_t>(pi[i])) = 1;
    return p;
}

// Divisor block for centers 1..n+1: H -> nH - (n-1) sum E_j, E_i -> H - sum_{j != i} E_j.
QMatrix standard_cremona_block(const BlowupSignature& sig) {
    QMatrix m = QMatrix::identity(sig.rank());
    const auto c = static_cast<std::size_t>(sig.n + 1);
    m(0, 0) = sig.n;
    for (std::size_t i = 1; i <= c; ++i) {
        m(i, 0) = -(sig.n - 1);
        m(0, i) = 1;
        for (std::size_t j = 1; j <= c; ++j) m(j, i) = i == j ? 0 : -1;
    }
    return m;
}

} // namespace

LatticeMap identity_map(const BlowupSignature& sig) {
    return {sig, QMatrix::identity(sig.rank()), QMatrix::identity(sig.rank()), {}};
}

LatticeMap perm_matrix(const BlowupSignature& sig, std::span<const int> pi) {
    check_perm(sig, pi);
    QMatrix p = perm_block(sig, pi);
    return {sig, p, p, {Perm{{pi.begin(), pi.end()}}}};
}

LatticeMap cremona_matrices(const BlowupSignature& sig, std::span<const int> centers) {
    check_centers(sig, centers);
    // Conjugate the standard block by the relabeling that moves the centers
    // to the front (remaining indices keep their relative order).
    std::vector<int> front(centers.begin(), centers.end());
    for (int i = 1; i <= sig.k; ++i)
        if (std::find(centers.begin(), centers.end(), i) == centers.end()) front.push_back(i);
    const QMatrix p = perm_block(sig, front);
    const QMatrix div = p.transpose() * standard_cremona_block(sig) * p;
    return {sig, div, adjoint_curve_matrix(div), {CremonaGen{{centers.begin(), centers.end()}}}};
}

LatticeMap compose(std::span<const LatticeMap> maps) {
    if (maps.empty()) throw std::invalid_argument("compose needs at least one map");
    const BlowupSignature sig = maps.front().signature();
    QMatrix div = QMatrix::identity(sig.rank());
    QMatrix curve = QMatrix::identity(sig.rank());
    Word word;
    for (const auto& m : maps) {
        if (!(m.signature() == sig)) throw DimensionError("compose across signatures");
        div = m.div_matrix() * div;
        curve = m.curve_matrix() * curve;
        word.insert(word.end(), m.word().begin(), m.word().end());
    }
    return {sig, std::move(div), std::move(curve), std::move(word)};
}

LatticeMap map_of(const BlowupSignature& sig, const WeylGenerator& gen) {
    if (const auto* p = std::get_if<Perm>(&gen)) return perm_matrix(sig, p->images);
    return cremona_matrices(sig, std::get<CremonaGen>(gen).centers);
}

LatticeMap map_of(const BlowupSignature& sig, const Word& word) {
    if (word.empty()) return identity_map(sig);
    std::vector<LatticeMap> maps;
    maps.reserve(word.size());
    for (const auto& g : word) maps.push_back(map_of(sig, g));
    return compose(maps);
}

BlowupSignature signature_of(Variant v) {
    return v == Variant::planar10 ? BlowupSignature::make(2, 10) : BlowupSignature::make(3, 9);
}

std::vector<int> sigma_of(Variant v) {
    if (v == Variant::planar10) return {8, 9, 10, 1, 2, 3, 4, 5, 6, 7};
    return {6, 7, 8, 9, 1, 2, 3, 4, 5};
}

LatticeMap m_sigma(Variant v) {
    const BlowupSignature sig = signature_of(v);
    std::vector<int> centers(static_cast<std::size_t>(sig.n + 1));
    std::iota(centers.begin(), centers.end(), 1);
    const std::vector<int> sigma = sigma_of(v);
    const LatticeMap parts[] = {perm_matrix(sig, sigma), cremona_matrices(sig, centers)};
    return compose(parts);
}

std::string to_string(Variant v) { return v == Variant::planar10 ? "planar10" : "spatial9"; }

Variant parse_variant(std::string_view text) {
    if (text == "planar10") return Variant::planar10;
    if (text == "spatial9") return Variant::spatial9;
    throw ParseError("unknown variant '" + std::string(text) + "' (expected planar10 or spatial9)");
}

bool is_coxeter_finite(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) throw std::invalid_argument("Coxeter arm lengths must be at least 2");
    // 1/p + 1/q + 1/r > 1  <=>  qr + pr + pq > pqr
    const long lp = p, lq = q, lr = r;
    return lq * lr + lp * lr + lp * lq > lp * lq * lr;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    while (true) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (item.empty()) throw ParseError("empty entry in generator argument list");
        for (char ch : item)
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad index '" + std::string(item) + "'");
        out.push_back(std::stoi(std::string(item)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

Word parse_word(std::string_view text, const BlowupSignature& sig) {
    Word word;
    std::string_view rest = text;
    while (!trim(rest).empty()) {
        const auto semi = rest.find(';');
        const auto item = trim(rest.substr(0, semi));
        const auto open = item.find('(');
        if (open == std::string_view::npos || item.back() != ')') {
            throw ParseError("generator must look like name(i,j,...): '" + std::string(item) + "'");
        }
        const auto name = trim(item.substr(0, open));
        const auto args = parse_int_list(item.substr(open + 1, item.size() - open - 2));
        // Validate now so errors carry the text position rather than surfacing later.
        try {
            if (name == "perm") {
                check_perm(sig, args);
                word.emplace_back(Perm{args});
            } else if (name == "cr") {
                check_centers(sig, args);
                word.emplace_back(CremonaGen{args});
            } else {
                throw ParseError("unknown generator '" + std::string(name) + "' (expected perm or cr)");
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(e.what()) + " in '" + std::string(item) + "'");
        }
        if (semi == std::string_view::npos) break;
        rest.remove_prefix(semi + 1);
    }
    return word;
}

std::string format_word(const Word& word) {
    std::string out;
    for (const auto& g : word) {
        if (!out.empty()) out += "; ";
        const bool perm = std::holds_alternative<Perm>(g);
        const auto& idx = perm ? std::get<Perm>(g).images : std::get<CremonaGen>(g).centers;
        out += perm ? "perm(" : "cr(";
        for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
        out += ")";
    }
    return out;
}

namespace {

// Fisher-Yates on 1..k with gen() % bound, so the sequence depends only on
// the engine (std::shuffle and the distributions are library-specific).
std::vector<int> random_permutation(int k, std::mt19937_64& gen) {
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 1);
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[gen() % i]);
    return v;
}

} // namespace

Word random_word(const BlowupSignature& sig, std::mt19937_64& gen, std::size_t length) {
    Word word;
    word.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<int> p = random_permutation(sig.k, gen);
        if (gen() % 2 == 0) {
            word.emplace_back(Perm{std::move(p)});
        } else {
            p.resize(static_cast<std::size_t>(sig.n + 1));
            word.emplace_back(CremonaGen{std::move(p)});
        }
    }
    return word;
}

} // namespace cremona
