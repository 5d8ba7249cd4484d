#include "cremona/spectra.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace cremona;
using testing::draw;
using testing::random_poly;

namespace {

Polynomial desc(std::initializer_list<long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    std::reverse(v.begin(), v.end());
    return Polynomial(std::move(v));
}

const Polynomial t = Polynomial::t();

Rational det_at(const QMatrix& a, const Rational& x) {
    QMatrix m = a;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (i == j ? x : Rational(0)) - a(i, j);
    return determinant(m);
}

double bisect(const Polynomial& p, double lo, double hi) {
    auto f = [&](double x) {
        double acc = 0;
        for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].get_d();
        return acc;
    };
    const bool rising = f(hi) > 0;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        ((f(mid) > 0) == rising ? hi : lo) = mid;
    }
    return (lo + hi) / 2;
}

Rational tiny(unsigned digits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    return {Integer(1), p};
}

} // namespace

TEST_CASE("charpoly agrees with det(xI - A) at sample points") {
    std::mt19937_64 gen(101);
    std::vector<QMatrix> cases{m_sigma(Variant::spatial9).div_matrix(), m_sigma(Variant::planar10).div_matrix()};
    for (int i = 0; i < 10; ++i) cases.push_back(testing::random_matrix(gen, 1 + gen() % 7, 5));
    QMatrix zeros(4, 4);
    cases.push_back(zeros);
    for (const QMatrix& a : cases) {
        const Polynomial cp = charpoly(a, Exec::serial);
        CHECK(cp.degree() == static_cast<int>(a.rows()));
        CHECK(cp.leading() == 1);
        CHECK(cp == charpoly(a, Exec::parallel));
        for (long x : {-3L, 0L, 2L, 7L}) CHECK(cp.eval(x) == det_at(a, x));
        CHECK(cp.eval(ratio(1, 3)) == det_at(a, ratio(1, 3)));
    }
}

TEST_CASE("sigma-map characteristic polynomials") {
    const Polynomial qs = desc({1, -3, 0, 4, -1});
    const Polynomial qp = desc({1, -1, -6, 5, 8, -5});
    CHECK(charpoly(m_sigma(Variant::spatial9).div_matrix()) ==
          (t + Polynomial(1)) * (t - Polynomial(1)) * reciprocal_lift(qs));
    CHECK(charpoly(m_sigma(Variant::planar10).div_matrix()) == (t - Polynomial(1)) * reciprocal_lift(qp));
    CHECK(charpoly(m_sigma(Variant::spatial9).div_matrix()) ==
          desc({1, -3, 3, -2, 1, 0, -1, 2, -3, 3, -1}));
    CHECK(charpoly(m_sigma(Variant::planar10).div_matrix()) ==
          desc({1, -2, 0, 2, -1, -1, 1, 1, -2, 0, 2, -1}));
}

TEST_CASE("reciprocal lift evaluates as x^d q(x + 1/x)") {
    std::mt19937_64 gen(103);
    for (int i = 0; i < 40; ++i) {
        const int d = 1 + static_cast<int>(gen() % 6);
        const Polynomial q = random_poly(gen, d, 12);
        const Polynomial p = reciprocal_lift(q);
        CHECK(p.degree() == 2 * d);
        CHECK(p.reversed() == p);
        for (long num : {1L, 2L, -3L, 5L}) {
            const Rational x = ratio(num, 3);
            Rational xd = 1;
            for (int j = 0; j < d; ++j) xd *= x;
            CHECK(p.eval(x) == xd * q.eval(x + 1 / x));
        }
        const auto back = reciprocal_unlift(p);
        REQUIRE(back.has_value());
        CHECK(*back == q);
    }
    CHECK_FALSE(reciprocal_unlift(t * t + Polynomial(2) * t + Polynomial(3)).has_value());
    CHECK_FALSE(reciprocal_unlift(t * t * t + Polynomial(1)).has_value());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == t - Polynomial(1));
    CHECK(cyclotomic(2) == t + Polynomial(1));
    CHECK(cyclotomic(4) == t * t + Polynomial(1));
    CHECK(cyclotomic(6) == t * t - t + Polynomial(1));
    CHECK(cyclotomic(12) == desc({1, 0, -1, 0, 1}));
    for (unsigned n = 1; n <= 30; ++n) {
        Polynomial prod(1);
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        CHECK(prod == Polynomial::monomial(1, n) - Polynomial(1));
    }
    CHECK(strip_cyclotomic_factors(desc({1, -3, 1}) * cyclotomic(5) * cyclotomic(9)) == desc({1, -3, 1}));
    CHECK(strip_cyclotomic_factors(cyclotomic(7) * (t - Polynomial(3))) == t - Polynomial(3));
}

TEST_CASE("square-free factorization reassembles the input") {
    std::mt19937_64 gen(107);
    for (int i = 0; i < 30; ++i) {
        const Polynomial a = random_poly(gen, 1 + static_cast<int>(gen() % 3), 6);
        const Polynomial b = random_poly(gen, 1 + static_cast<int>(gen() % 3), 6);
        const Polynomial p = a * b.pow(2) * a.pow(2);
        const auto parts = squarefree_factorization(p);
        Polynomial prod(1);
        for (std::size_t j = 0; j < parts.size(); ++j) prod *= parts[j].pow(static_cast<unsigned>(j + 1));
        CHECK(prod.primitive() == p.primitive());
        for (const auto& f : parts) CHECK(squarefree_part(f).degree() == f.degree());
    }
}

TEST_CASE("Sturm counts") {
    const Polynomial p = (t - Polynomial(1)) * (t - Polynomial(2)) * (t + Polynomial(3)) * (t * t + Polynomial(1));
    const SturmSequence s(p * (t - Polynomial(1)));
    CHECK(s.count_all() == 3);
    CHECK(s.count_half_open(1, 2) == 1);
    CHECK(s.count_closed(1, 2) == 2);
    CHECK(s.count_above(0) == 2);
    CHECK(s.count_below(0) == 1);
    CHECK(s.count_closed(-10, 10) == 3);
    CHECK(s.count_half_open(ratio(3, 2), 100) == 1);

    std::mt19937_64 gen(109);
    for (int i = 0; i < 25; ++i) {
        const Polynomial q = random_poly(gen, 2 + static_cast<int>(gen() % 6), 20);
        const SturmSequence sq(q);
        const auto roots = isolate_real_roots(q);
        CHECK(roots.size() == sq.count_all());
        for (std::size_t j = 0; j + 1 < roots.size(); ++j) CHECK(roots[j].hi() <= roots[j + 1].lo());
        for (const auto& r : roots) {
            CHECK(sq.count_closed(r.lo(), r.hi()) == 1);
            const RealAlgebraic fine = refine(r, tiny(15));
            CHECK(fine.width() <= tiny(15));
            CHECK(fine.lo() >= r.lo());
            CHECK(fine.hi() <= r.hi());
        }
    }
}

TEST_CASE("real algebraic validation") {
    const Polynomial p = t * t - Polynomial(2);
    CHECK_NOTHROW(RealAlgebraic(p, 1, 2));
    CHECK_THROWS(RealAlgebraic(p, -2, 2));
    CHECK_THROWS(RealAlgebraic(p, 2, 3));
    CHECK_THROWS(RealAlgebraic(p * (t - Polynomial(1)) * (t - Polynomial(1)), 0, 1));
    const RealAlgebraic r(t - Polynomial(1), 1, 1);
    CHECK(r.is_rational());
    CHECK(compare(RealAlgebraic(p, 1, 2), ratio(141, 100)) == 1);
    CHECK(compare(RealAlgebraic(p, 1, 2), ratio(142, 100)) == -1);
    CHECK_THROWS_AS(isolate_real_roots(Polynomial()), std::domain_error);
}

TEST_CASE("number field arithmetic") {
    const RealAlgebraic cube(t * t * t - Polynomial(2), 1, 2);
    const FieldPtr k = NumberField::make(cube);
    const FieldElement a = FieldElement::generator(k);
    CHECK(a.pow(3) == FieldElement(k, Rational(2)));
    CHECK(a.inverse() * a == FieldElement(k, Rational(1)));
    CHECK(sign_of(a - ratio(5, 4)) == 1);
    CHECK(sign_of(a - ratio(127, 100)) == -1);
    CHECK(sign_of(FieldElement(k, Rational(0))) == 0);
    CHECK_THROWS(FieldElement(k, Rational(0)).inverse());

    std::mt19937_64 gen(113);
    const DominantEigenvalue de = dominant_eigenvalue(m_sigma(Variant::spatial9));
    const FieldPtr f = NumberField::make(de.lambda);
    for (int i = 0; i < 40; ++i) {
        const FieldElement x(f, random_poly(gen, 7, 9));
        FieldElement y(f, random_poly(gen, 1 + static_cast<int>(gen() % 6), 9));
        if (y.is_zero()) continue;
        CHECK((x * y) / y == x);
        CHECK((x + y) - y == x);
        CHECK(x * (y + x) == x * y + x * x);
        const auto [lo, hi] = enclose(x * y, tiny(20));
        const auto [xl, xh] = enclose(x, tiny(20));
        const auto [yl, yh] = enclose(y, tiny(20));
        const double prod = to_double((xl + xh) / 2) * to_double((yl + yh) / 2);
        CHECK(prod >= lo.get_d() - 1e-6 * (1 + std::abs(prod)));
        CHECK(prod <= hi.get_d() + 1e-6 * (1 + std::abs(prod)));
    }
}

TEST_CASE("modulus must be irreducible for inverses") {
    const Polynomial reducible = (t * t - Polynomial(2)) * (t - Polynomial(5));
    const FieldPtr k = NumberField::make(RealAlgebraic(reducible, 1, 2));
    const FieldElement x(k, t - Polynomial(5));
    CHECK_THROWS(x.inverse());
}

TEST_CASE("dominant eigenvalues") {
    const DominantEigenvalue s = dominant_eigenvalue(m_sigma(Variant::spatial9));
    const DominantEigenvalue p = dominant_eigenvalue(m_sigma(Variant::planar10));
    const RealAlgebraic ls = refine(s.lambda, tiny(12));
    const RealAlgebraic lp = refine(p.lambda, tiny(12));
    CHECK(ls.width() <= tiny(12));
    CHECK(std::abs(ls.approx() - 1.800171739332487) < 1e-12);
    CHECK(std::abs(lp.approx() - 1.431000959137272) < 1e-12);
    CHECK(s.certificate.q == desc({1, -3, 0, 4, -1}));
    CHECK(s.certificate.q_roots_in_band == 3);
    CHECK(p.certificate.q_roots_in_band == 4);
    CHECK(s.certificate.minpoly == desc({1, -3, 4, -5, 5, -5, 4, -3, 1}));
    CHECK(s.certificate.plus_one == 1);
    CHECK(s.certificate.minus_one == 1);
    CHECK(p.certificate.plus_one == 1);
    CHECK(p.certificate.minus_one == 0);

    const double mu = bisect(s.certificate.q, 2, 4);
    const RealAlgebraic mus = refine(s.certificate.mu, tiny(14));
    CHECK(std::abs(mus.approx() - mu) < 1e-12);
    CHECK(std::abs(mu - (ls.approx() + 1 / ls.approx())) < 1e-10);
    CHECK(std::abs(mu - 2.35567) < 1e-5);
}

TEST_CASE("finite-order maps have no dominant eigenvalue") {
    const auto sig = BlowupSignature::make(2, 5);
    const LatticeMap m = map_of(sig, parse_word("cr(1,2,3); perm(2,3,4,5,1)", sig));
    CHECK_THROWS_AS(dominant_eigenvalue(m), SpectralStructureError);
    CHECK_THROWS_AS(dominant_eigenvalue(identity_map(sig)), SpectralStructureError);
}

TEST_CASE("eigenvectors") {
    const std::vector<double> spatial{1, -0.640275, -0.634440, -0.615530, -0.554253, -0.355674,
                                      -0.352433, -0.341929, -0.307889, -0.197578};
    const std::vector<double> planar{1, -0.451587, -0.440721, -0.408880, -0.315574, -0.307981,
                                     -0.285730, -0.220527, -0.215221, -0.199672, -0.154107};
    for (auto [v, frozen] : {std::pair{Variant::spatial9, spatial}, std::pair{Variant::planar10, planar}}) {
        const LatticeMap map = m_sigma(v);
        const DominantEigenvalue de = dominant_eigenvalue(map);
        const auto vec = eigenvector(map, de.lambda);
        CHECK(is_eigenvector(map.div_matrix(), vec));
        REQUIRE(vec.size() == frozen.size());
        const auto approx = approximate(vec, tiny(15));
        for (std::size_t i = 0; i < vec.size(); ++i) CHECK(std::abs(approx[i] - frozen[i]) < 1e-6);
        std::vector<FieldElement> scaled;
        for (const auto& x : vec) scaled.push_back(x * Rational(2));
        CHECK(is_eigenvector(map.div_matrix(), scaled));
        scaled[1] += FieldElement(scaled[1].field(), Rational(1));
        CHECK_FALSE(is_eigenvector(map.div_matrix(), scaled));
    }
}

TEST_CASE("kernel dimension errors") {
    const DominantEigenvalue de = dominant_eigenvalue(m_sigma(Variant::spatial9));
    const FieldPtr f = NumberField::make(de.lambda);
    CHECK_THROWS_AS(kernel_vector(QMatrix::identity(3), f), EigenspaceError);
}
