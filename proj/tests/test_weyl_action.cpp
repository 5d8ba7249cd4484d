#include "cremona/weyl.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cremona;
using testing::ints;

namespace {

QDivisor anticanonical(const BlowupSignature& sig) {
    std::vector<Rational> raw(sig.rank(), Rational(-(sig.n - 1)));
    raw[0] = sig.n + 1;
    return {sig, raw};
}

std::vector<int> iota(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return v;
}

} // namespace

TEST_CASE("planar Cremona block") {
    const auto sig = BlowupSignature::make(2, 4);
    const LatticeMap cr = cremona_matrices(sig, iota(3));
    CHECK(cr.apply(hyperplane_class(sig)).raw() == ints({2, -1, -1, -1, 0}));
    CHECK(cr.apply(exceptional_class(sig, 1)).raw() == ints({1, 0, -1, -1, 0}));
    CHECK(cr.apply(exceptional_class(sig, 4)) == exceptional_class(sig, 4));
    CHECK(cr.apply(line_class(sig)).raw() == ints({2, -1, -1, -1, 0}));
    CHECK(cr.is_adjoint());
}

TEST_CASE("spatial Cremona block") {
    const auto sig = BlowupSignature::make(3, 9);
    const LatticeMap cr = cremona_matrices(sig, iota(4));
    CHECK(cr.apply(hyperplane_class(sig)).raw() == ints({3, -2, -2, -2, -2, 0, 0, 0, 0, 0}));
    CHECK(cr.apply(exceptional_class(sig, 1)).raw() == ints({1, 0, -1, -1, -1, 0, 0, 0, 0, 0}));
    CHECK(cr.apply(line_class(sig)).raw() == ints({3, -1, -1, -1, -1, 0, 0, 0, 0, 0}));
    CHECK(cr.apply(exceptional_line_class(sig, 2)).raw() == ints({2, -1, 0, -1, -1, 0, 0, 0, 0, 0}));
    CHECK(cr.is_adjoint());
}

TEST_CASE("Cremona is an involution, centers in any order") {
    for (auto [n, k] : {std::pair{2, 6}, std::pair{3, 9}, std::pair{4, 8}}) {
        const auto sig = BlowupSignature::make(n, k);
        std::vector<int> centers = iota(n + 1);
        for (int& c : centers) c = k + 1 - c;
        const LatticeMap cr = cremona_matrices(sig, centers);
        const LatticeMap twice = compose(std::vector<LatticeMap>{cr, cr});
        CHECK(twice.div_matrix() == QMatrix::identity(sig.rank()));
        CHECK(twice.curve_matrix() == QMatrix::identity(sig.rank()));
    }
}

TEST_CASE("permutation convention") {
    const auto sig = BlowupSignature::make(2, 3);
    const std::vector<int> swap{2, 1, 3};
    CHECK(perm_matrix(sig, swap).apply(exceptional_class(sig, 1)) == exceptional_class(sig, 2));
    const std::vector<int> cycle{2, 3, 1};
    const LatticeMap p = perm_matrix(sig, cycle);
    CHECK(p.apply(exceptional_class(sig, 1)) == exceptional_class(sig, 3));
    CHECK(p.apply(exceptional_class(sig, 2)) == exceptional_class(sig, 1));
    CHECK(p.apply(parse_curve("1; 5,6,7", sig)).raw() == ints({1, -6, -7, -5}));
    CHECK_THROWS_AS(perm_matrix(sig, std::vector<int>{1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(perm_matrix(sig, std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cremona_matrices(sig, std::vector<int>{1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cremona_matrices(sig, std::vector<int>{1, 2, 4}), std::invalid_argument);
}

TEST_CASE("composition order") {
    const auto sig = BlowupSignature::make(2, 5);
    const LatticeMap a = perm_matrix(sig, std::vector<int>{2, 3, 4, 5, 1});
    const LatticeMap b = cremona_matrices(sig, iota(3));
    const LatticeMap ab = compose(std::vector<LatticeMap>{a, b});
    CHECK(ab.div_matrix() == b.div_matrix() * a.div_matrix());
    CHECK(ab.curve_matrix() == b.curve_matrix() * a.curve_matrix());
    CHECK(ab.word().size() == 2);
    CHECK_THROWS_AS(compose(std::vector<LatticeMap>{a, identity_map(BlowupSignature::make(2, 4))}), DimensionError);
}

TEST_CASE("sigma maps") {
    CHECK(sigma_of(Variant::spatial9) == std::vector<int>{6, 7, 8, 9, 1, 2, 3, 4, 5});
    CHECK(sigma_of(Variant::planar10) == std::vector<int>{8, 9, 10, 1, 2, 3, 4, 5, 6, 7});
    for (Variant v : {Variant::planar10, Variant::spatial9}) {
        const BlowupSignature sig = signature_of(v);
        const LatticeMap expected = compose(std::vector<LatticeMap>{perm_matrix(sig, sigma_of(v)), cremona_matrices(sig, iota(sig.n + 1))});
        CHECK(m_sigma(v).div_matrix() == expected.div_matrix());
        CHECK(m_sigma(v).is_adjoint());
        CHECK(parse_variant(to_string(v)) == v);
    }
    const BlowupSignature planar = signature_of(Variant::planar10);
    CHECK(m_sigma(Variant::planar10).apply(hyperplane_class(planar)).raw() == ints({2, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(parse_variant("cubic"), ParseError);
}

TEST_CASE("word text round trip") {
    const auto sig = BlowupSignature::make(3, 9);
    const Word w = parse_word("perm(6,7,8,9,1,2,3,4,5); cr(1,2,3,4)", sig);
    REQUIRE(w.size() == 2);
    CHECK(map_of(sig, w).div_matrix() == m_sigma(Variant::spatial9).div_matrix());
    std::mt19937_64 gen(41);
    for (int i = 0; i < 50; ++i) {
        const Word r = random_word(sig, gen, 1 + gen() % 6);
        CHECK(parse_word(format_word(r), sig) == r);
    }
    CHECK_THROWS(parse_word("cr(1,2,3)", sig));
    CHECK_THROWS(parse_word("perm(1,2)", sig));
    CHECK_THROWS(parse_word("flip(1,2,3,4)", sig));
    CHECK_THROWS(parse_word("cr(1,2,3,4", sig));
}

TEST_CASE("random words preserve the pairing and the anticanonical class") {
    std::mt19937_64 gen(43);
    for (auto [n, k] : {std::pair{2, 10}, std::pair{3, 9}, std::pair{2, 7}, std::pair{4, 9}}) {
        const auto sig = BlowupSignature::make(n, k);
        const QMatrix g = pairing_form(sig.rank());
        for (int i = 0; i < 25; ++i) {
            const LatticeMap m = map_of(sig, random_word(sig, gen, 1 + gen() % 10));
            CHECK(m.is_adjoint());
            CHECK(m.div_matrix().transpose() * g * m.curve_matrix() == g);
            CHECK(m.apply(anticanonical(sig)) == anticanonical(sig));
            const Rational det = determinant(m.div_matrix());
            CHECK((det == 1 || det == -1));
            CHECK(adjoint_curve_matrix(m.div_matrix()) == m.curve_matrix());
        }
    }
}

TEST_CASE("unchecked maps can break adjointness") {
    const auto sig = BlowupSignature::make(3, 9);
    const LatticeMap cr = cremona_matrices(sig, iota(4));
    QMatrix div = cr.div_matrix();
    div(0, 0) += 1;
    CHECK_FALSE(LatticeMap::unchecked(sig, div, cr.curve_matrix(), cr.word()).is_adjoint());
}

TEST_CASE("Coxeter finiteness") {
    CHECK(is_coxeter_finite(2, 3, 5));
    CHECK(is_coxeter_finite(2, 3, 4));
    CHECK(is_coxeter_finite(2, 2, 100));
    CHECK_FALSE(is_coxeter_finite(2, 3, 6));
    CHECK_FALSE(is_coxeter_finite(2, 3, 7));
    CHECK_FALSE(is_coxeter_finite(2, 4, 5));
    CHECK_FALSE(is_coxeter_finite(3, 3, 3));
    CHECK(is_coxeter_finite(5, 3, 2) == is_coxeter_finite(2, 3, 5));
}
