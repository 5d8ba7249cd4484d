#include "cremona/kernels.hpp"
#include "cremona/matrix.hpp"
#include "cremona/polynomial.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace cremona;
using testing::draw;
using testing::random_poly;

TEST_CASE("rational text form") {
    CHECK(to_string(ratio(6, 4)) == "3/2");
    CHECK(to_string(ratio(-4, 2)) == "-2");
    CHECK(parse_rational(" -10/4 ") == ratio(-5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(bit_size(Integer(0)) == 0);
    CHECK(bit_size(Integer(-8)) == 4);

    std::mt19937_64 gen(5);
    for (int i = 0; i < 200; ++i) {
        Rational q(Integer(draw(gen, 1000000)), Integer(1 + gen() % 999));
        q.canonicalize();
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("matrix inverse, determinant, rank") {
    const QMatrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    CHECK(determinant(a) == 18);
    CHECK(inverse(a) * a == QMatrix::identity(3));
    CHECK(rank(a) == 3);
    const QMatrix s{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(determinant(s) == 0);
    CHECK(rank(s) == 2);
    CHECK_THROWS_AS(inverse(s), std::domain_error);

    std::mt19937_64 gen(11);
    for (int i = 0; i < 30; ++i) {
        const QMatrix m = testing::random_matrix(gen, 5, 6);
        const QMatrix n = testing::random_matrix(gen, 5, 6);
        CHECK(determinant(m * n) == determinant(m) * determinant(n));
        CHECK(determinant(m.transpose()) == determinant(m));
        if (determinant(m) != 0) CHECK(m * inverse(m) == QMatrix::identity(5));
    }
}

TEST_CASE("pairing form") {
    const QMatrix g = pairing_form(4);
    CHECK(g(0, 0) == 1);
    CHECK(g(3, 3) == -1);
    CHECK(g(1, 2) == 0);
}

TEST_CASE("polynomial division identity") {
    std::mt19937_64 gen(17);
    for (int i = 0; i < 100; ++i) {
        const Polynomial a = random_poly(gen, 2 + static_cast<int>(gen() % 8), 20);
        const Polynomial b = random_poly(gen, 1 + static_cast<int>(gen() % 4), 20);
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK(exact_div(a * b, b) == a);
    }
    CHECK_THROWS_AS(divmod(Polynomial::t(), Polynomial()), std::domain_error);
    CHECK_THROWS_AS(exact_div(Polynomial::t() + Polynomial(1), Polynomial::t()), std::domain_error);
}

TEST_CASE("polynomial basics") {
    const Polynomial t = Polynomial::t();
    const Polynomial p = t * t - Polynomial(2) * t + Polynomial(1);
    CHECK(p.eval(1) == 0);
    CHECK(p.derivative() == Polynomial(2) * t - Polynomial(2));
    CHECK(p.pow(3).degree() == 6);
    CHECK(Polynomial::monomial(3, 4).reversed() == Polynomial(3));
    CHECK((t * t * t).trailing_zeros() == 3);
    CHECK((Polynomial(ratio(1, 2)) * t + Polynomial(ratio(3, 4))).primitive() == Polynomial(2) * t + Polynomial(3));
    CHECK(squarefree_part(p * (t + Polynomial(3))) == (t - Polynomial(1)) * (t + Polynomial(3)));
}

TEST_CASE("modular gcd agrees with the Euclidean reference") {
    std::mt19937_64 gen(23);
    for (int i = 0; i < 120; ++i) {
        const Polynomial g = random_poly(gen, static_cast<int>(gen() % 5), 50);
        const Polynomial a = g * random_poly(gen, static_cast<int>(gen() % 7), 1000);
        const Polynomial b = g * random_poly(gen, static_cast<int>(gen() % 7), 1000);
        const Polynomial fast = gcd(a, b);
        CHECK(fast == gcd_euclidean(a, b));
        CHECK((a % fast).is_zero());
        CHECK((b % fast).is_zero());
    }
    CHECK(gcd(Polynomial(), Polynomial()).is_zero());
    CHECK(gcd(Polynomial(), Polynomial(6) * Polynomial::t()) == Polynomial::t());
}

TEST_CASE("modular gcd with large coefficients") {
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 400);
    const Polynomial t = Polynomial::t();
    const Polynomial g = Polynomial(Rational(big)) * t + Polynomial(Rational(big + 1));
    const Polynomial a = g * g * (t - Polynomial(7));
    const Polynomial b = g * (t * t + Polynomial(Rational(big)));
    CHECK(gcd(a, b) == g.primitive());
    CHECK(gcd(a, b) == gcd_euclidean(a, b));
}

TEST_CASE("half extended gcd inverts modulo an irreducible") {
    const Polynomial t = Polynomial::t();
    const Polynomial m = t * t * t - Polynomial(2);
    const Polynomial a = t * t + Polynomial(1);
    const auto [g, s] = half_extended_gcd(a, m);
    CHECK(g == Polynomial(1));
    CHECK((s * a) % m == Polynomial(1));
}

TEST_CASE("parallel kernels match serial") {
    std::mt19937_64 gen(29);
    Matrix<Polynomial> m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) m(i, j) = random_poly(gen, 2, 9);
    Matrix<Polynomial> a = m, b = m;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < 6; ++k) {
        if (a(k, k).is_zero()) break;
        bareiss_step(a, k, prev, Exec::serial);
        bareiss_step(b, k, prev, Exec::parallel);
        CHECK(a == b);
        prev = a(k, k);
    }

    const auto pred = [](std::size_t i) { return i % 3 == 1; };
    CHECK(map_indices(1000, pred, Exec::serial) == map_indices(1000, pred, Exec::parallel));
    CHECK_THROWS_AS(map_indices(
                        10, [](std::size_t i) -> bool { throw std::runtime_error("boom " + std::to_string(i)); },
                        Exec::parallel),
                    std::runtime_error);
    CHECK(parallel_threads() >= 1);
}
