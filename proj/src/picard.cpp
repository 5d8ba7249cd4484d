#include "cremona/picard.hpp"

#include <stdexcept>

namespace cremona {

BlowupSignature BlowupSignature::make(int n, int k) {
    if (n < 2) throw std::invalid_argument("ambient dimension must be at least 2, got " + std::to_string(n));
    if (k < 1) throw std::invalid_argument("need at least one blown-up point, got " + std::to_string(k));
    return BlowupSignature{n, k};
}

std::string to_string(const BlowupSignature& sig) {
    return "(n=" + std::to_string(sig.n) + ", k=" + std::to_string(sig.k) + ")";
}

namespace {

std::vector<Rational> unit(const BlowupSignature& sig, std::size_t pos, int value) {
    std::vector<Rational> v(sig.rank(), Rational(0));
    v[pos] = value;
    return v;
}

std::size_t checked_index(const BlowupSignature& sig, int i) {
    if (i < 1 || i > sig.k) throw std::out_of_range("exceptional index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i);
}

} // namespace

QDivisor hyperplane_class(const BlowupSignature& sig) { return {sig, unit(sig, 0, 1)}; }
QDivisor exceptional_class(const BlowupSignature& sig, int i) { return {sig, unit(sig, checked_index(sig, i), 1)}; }
QCurve line_class(const BlowupSignature& sig) { return {sig, unit(sig, 0, 1)}; }
QCurve exceptional_line_class(const BlowupSignature& sig, int i) {
    return {sig, unit(sig, checked_index(sig, i), 1)};
}

std::vector<Rational> raw_from_presentation(const Rational& d, std::span<const Rational> m) {
    std::vector<Rational> raw;
    raw.reserve(m.size() + 1);
    raw.push_back(d);
    for (const auto& mi : m) raw.push_back(-mi);
    return raw;
}

std::vector<Rational> parse_class_raw(std::string_view text, const BlowupSignature& sig) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("class text needs 'd; m1,...,mk': '" + std::string(text) + "'");
    const Rational d = parse_rational(text.substr(0, semi));
    std::vector<Rational> m;
    std::string_view rest = text.substr(semi + 1);
    while (true) {
        const auto comma = rest.find(',');
        m.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (m.size() != static_cast<std::size_t>(sig.k)) {
        throw ParseError("expected " + std::to_string(sig.k) + " multiplicities, got " + std::to_string(m.size()));
    }
    return raw_from_presentation(d, m);
}

QDivisor parse_divisor(std::string_view text, const BlowupSignature& sig) { return {sig, parse_class_raw(text, sig)}; }
QCurve parse_curve(std::string_view text, const BlowupSignature& sig) { return {sig, parse_class_raw(text, sig)}; }

std::string format_class(std::span<const Rational> raw) {
    if (raw.empty()) throw std::invalid_argument("empty class vector");
    std::string out = to_string(raw[0]) + ";";
    for (std::size_t i = 1; i < raw.size(); ++i) {
        out += i == 1 ? " " : ",";
        out += to_string(Rational(-raw[i]));
    }
    return out;
}

} // namespace cremona
