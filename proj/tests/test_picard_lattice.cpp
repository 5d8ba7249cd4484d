#include "cremona/picard.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cremona;
using testing::draw;

namespace {

std::vector<Rational> random_raw(std::mt19937_64& gen, const BlowupSignature& sig) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < sig.rank(); ++i) v.emplace_back(draw(gen, 9));
    return v;
}

} // namespace

TEST_CASE("standard basis pairings") {
    const auto sig = BlowupSignature::make(3, 9);
    CHECK(pair(hyperplane_class(sig), line_class(sig)) == 1);
    for (int i = 1; i <= 9; ++i) {
        CHECK(pair(exceptional_class(sig, i), exceptional_line_class(sig, i)) == -1);
        CHECK(pair(hyperplane_class(sig), exceptional_line_class(sig, i)) == 0);
        CHECK(pair(exceptional_class(sig, i), line_class(sig)) == 0);
        for (int j = 1; j <= 9; ++j)
            if (j != i) CHECK(pair(exceptional_class(sig, i), exceptional_line_class(sig, j)) == 0);
    }
    CHECK_THROWS_AS(exceptional_class(sig, 0), std::out_of_range);
    CHECK_THROWS_AS(exceptional_class(sig, 10), std::out_of_range);
}

TEST_CASE("presentation and raw coordinates") {
    const auto sig = BlowupSignature::make(2, 3);
    const QDivisor d = parse_divisor("2; 1,1,1", sig);
    CHECK(d.raw() == testing::ints({2, -1, -1, -1}));
    CHECK(format_class(d) == "2; 1,1,1");
    const QCurve c = parse_curve("1; 1,1,0", sig);
    CHECK(pair(d, c) == 0);
    CHECK(pair(hyperplane_class(sig), parse_curve("3/2; 0,0,-1/2", sig)) == ratio(3, 2));
    const std::vector<Rational> m = testing::ints({1, 2, 3});
    CHECK(raw_from_presentation(4, m) == testing::ints({4, -1, -2, -3}));
}

TEST_CASE("class text round trip") {
    std::mt19937_64 gen(3);
    const auto sig = BlowupSignature::make(3, 9);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> raw = random_raw(gen, sig);
        raw[1] /= Rational(1 + static_cast<long>(gen() % 5));
        CHECK(parse_class_raw(format_class(raw), sig) == raw);
    }
}

TEST_CASE("malformed class text") {
    const auto sig = BlowupSignature::make(2, 3);
    CHECK_THROWS_AS(parse_divisor("2 1,1,1", sig), ParseError);
    CHECK_THROWS_AS(parse_divisor("2; 1,1", sig), ParseError);
    CHECK_THROWS_AS(parse_divisor("2; 1,a,1", sig), ParseError);
    CHECK_THROWS_AS(QDivisor(sig, testing::ints({1, 0})), DimensionError);
    CHECK_THROWS_AS(BlowupSignature::make(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(BlowupSignature::make(2, 0), std::invalid_argument);
}

TEST_CASE("pairing across signatures is rejected") {
    const auto a = BlowupSignature::make(2, 3);
    const auto b = BlowupSignature::make(2, 4);
    CHECK_THROWS_AS(pair(hyperplane_class(a), line_class(b)), DimensionError);
}

TEST_CASE("pairing is bilinear") {
    std::mt19937_64 gen(7);
    const auto sig = BlowupSignature::make(2, 10);
    for (int i = 0; i < 200; ++i) {
        const auto d1 = random_raw(gen, sig), d2 = random_raw(gen, sig), c1 = random_raw(gen, sig);
        const Rational a(draw(gen, 7)), b(draw(gen, 7));
        std::vector<Rational> comb(sig.rank());
        for (std::size_t j = 0; j < sig.rank(); ++j) comb[j] = a * d1[j] + b * d2[j];
        const QCurve c(sig, c1);
        CHECK(pair(QDivisor(sig, comb), c) == a * pair(QDivisor(sig, d1), c) + b * pair(QDivisor(sig, d2), c));
        std::vector<Rational> ccomb(sig.rank());
        for (std::size_t j = 0; j < sig.rank(); ++j) ccomb[j] = a * c1[j] + b * d2[j];
        const QDivisor d(sig, d1);
        CHECK(pair(d, QCurve(sig, ccomb)) == a * pair(d, c) + b * pair(d, QCurve(sig, d2)));
    }
}
