#include "doctest.h"

#include <random>

#include "liehecke/errors.hpp"
#include "liehecke/exactnum.hpp"
#include "oracle.hpp"

using namespace liehecke;

namespace {

CycloNum cyc(i64 p, std::initializer_list<Rational> c)
{
    return CycloNum(p, std::vector<Rational>(c));
}

CycloNum one(i64 p)
{
    return CycloNum(p, Rational(1));
}

const i64 kSmallPrimes[] = {3, 5, 7, 11, 13};

} // namespace

TEST_CASE("make_rational keeps lowest terms with positive denominator")
{
    const Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(make_rational(0, 7).get_den() == 1);
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        int den = d(rng);
        if (den == 0)
            continue;
        const Rational x = make_rational(d(rng), den) * make_rational(d(rng), 7) +
                           make_rational(d(rng), 3);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        CHECK(g == 1);
        CHECK(x.get_den() > 0);
    }
}

TEST_CASE("cyclo_power")
{
    CHECK(cyclo_power(5, 0) == cyc(5, {1, 0, 0, 0}));
    CHECK(cyclo_power(3, 2) == cyc(3, {-1, -1}));
    CHECK(cyclo_power(5, 7) == cyc(5, {0, 0, 1, 0}));
    CHECK(cyclo_power(7, -1) == cyclo_power(7, 6));
    CHECK_THROWS_AS(cyclo_power(9, 1), InvalidInput);
    CHECK_THROWS_AS(cyclo_power(2, 1), InvalidInput);
}

TEST_CASE("cyclo_arith")
{
    for (i64 p : kSmallPrimes)
        CHECK(cyclo_arith(cyclo_power(p, 1), cyclo_power(p, p - 1), ArithOp::mul) == one(p));

    const CycloNum a = cyc(3, {1, 2});
    CHECK(cyclo_arith(a, a, ArithOp::mul) == CycloNum(3, Rational(-3)));

    CycloNum prod = one(5);
    for (i64 k = 1; k < 5; ++k)
        prod *= one(5) - cyclo_power(5, k);
    CHECK(prod == CycloNum(5, Rational(5)));

    CHECK(cyclo_arith(a, a, ArithOp::sub).is_zero());
    CHECK(cyclo_arith(a, a, ArithOp::add) == Rational(2) * a);
    CHECK_THROWS_AS(cyclo_arith(one(3), one(5), ArithOp::add), InvalidInput);
    CHECK_THROWS_AS(CycloNum(5, std::vector<Rational>(3)), InvalidInput);
}

TEST_CASE("arithmetic agrees with the complex embedding")
{
    std::mt19937 rng(7);
    for (i64 p : kSmallPrimes) {
        for (int i = 0; i < 20; ++i) {
            const CycloNum x = oracle::random_cyclo(p, rng);
            const CycloNum y = oracle::random_cyclo(p, rng);
            CHECK(oracle::close(oracle::embed(x * y), oracle::embed(x) * oracle::embed(y)));
            CHECK(oracle::close(oracle::embed(x + y), oracle::embed(x) + oracle::embed(y)));
            CHECK(oracle::close(oracle::embed(x.conj()), std::conj(oracle::embed(x))));
        }
    }
}

TEST_CASE("cyclo_inv")
{
    CHECK(cyclo_inv(CycloNum(5, Rational(2))) == CycloNum(5, make_rational(1, 2)));
    CHECK(cyclo_inv(one(3) - cyclo_power(3, 1)) ==
          cyc(3, {make_rational(2, 3), make_rational(1, 3)}));
    CHECK_THROWS_AS(cyclo_inv(CycloNum(7)), DivisionByZero);

    SUBCASE("matches the closed form for 1/(1 - zeta^b)")
    {
        for (i64 p : {3, 5, 7, 11, 13}) {
            for (i64 b = 1; b < p; ++b) {
                const CycloNum lhs = cyclo_inv(one(p) - cyclo_power(p, b));
                CHECK(lhs == inv_one_minus_zeta(p, b));
            }
        }
    }

    SUBCASE("a * inv(a) = 1 for random a")
    {
        std::mt19937 rng(3);
        for (i64 p : kSmallPrimes) {
            for (int i = 0; i < 15; ++i) {
                const CycloNum a = oracle::random_cyclo(p, rng);
                if (a.is_zero())
                    continue;
                CHECK(a * cyclo_inv(a) == one(p));
            }
        }
    }
}

TEST_CASE("conjugation is an involutive ring automorphism")
{
    std::mt19937 rng(5);
    for (i64 p : kSmallPrimes) {
        for (int i = 0; i < 10; ++i) {
            const CycloNum x = oracle::random_cyclo(p, rng);
            const CycloNum y = oracle::random_cyclo(p, rng);
            CHECK(x.conj().conj() == x);
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x + y).conj() == x.conj() + y.conj());
        }
    }
}

TEST_CASE("gauss_sum")
{
    CHECK(gauss_sum(3, 0) == CycloNum(3, Rational(3)));
    CHECK(gauss_sum(3, 1) == cyc(3, {1, 2}));
    const CycloNum g5 = gauss_sum(5, 1);
    CHECK(g5 * g5 == CycloNum(5, Rational(5)));

    SUBCASE("G(x) = (x/p) sqrt_star for every nonzero x")
    {
        for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23}) {
            const CycloNum root = sqrt_star(p);
            for (i64 x = 1; x < p; ++x)
                CHECK(gauss_sum(p, x) == Rational(legendre(x, p)) * root);
        }
    }

    SUBCASE("sqrt_star has the expected complex value")
    {
        // |G| = sqrt(p), real for p = 1 mod 4 and purely imaginary with positive
        // imaginary part for p = 3 mod 4 under zeta = exp(2 pi i/p).
        for (i64 p : {5, 7, 11, 13, 17, 19}) {
            const auto z = oracle::embed(sqrt_star(p));
            const double s = std::sqrt(static_cast<double>(p));
            CHECK(oracle::close(z, p % 4 == 1 ? std::complex<double>(s, 0)
                                              : std::complex<double>(0, s)));
        }
    }
}

TEST_CASE("sqrt_star squares to (-1)^((p-1)/2) p")
{
    CHECK(sqrt_star(3) * sqrt_star(3) == CycloNum(3, Rational(-3)));
    CHECK(sqrt_star(7) * sqrt_star(7) == CycloNum(7, Rational(-7)));
    CHECK(sqrt_star(13) * sqrt_star(13) == CycloNum(13, Rational(13)));
}

TEST_CASE("decompose_quadratic")
{
    auto [a0, b0] = decompose_quadratic(CycloNum(7, Rational(5)));
    CHECK(a0 == 5);
    CHECK(b0 == 0);
    auto [a1, b1] = decompose_quadratic(sqrt_star(7));
    CHECK(a1 == 0);
    CHECK(b1 == 1);
    auto [a2, b2] = decompose_quadratic(inv_sum(7, Twist::residue));
    CHECK(a2 == 3);
    CHECK(b2 == 1);

    CHECK_THROWS_AS(decompose_quadratic(cyclo_power(7, 1)), NotInSubfield);
    CHECK_THROWS_AS(decompose_quadratic(cyclo_power(13, 2)), NotInSubfield);

    // reconstruction for the real quadratic case
    const CycloNum z = CycloNum(13, make_rational(-2, 3)) + Rational(4) * sqrt_star(13);
    auto [a3, b3] = decompose_quadratic(z);
    CHECK(a3 == make_rational(-2, 3));
    CHECK(b3 == 4);
}

TEST_CASE("inv_sum")
{
    CHECK(inv_sum(7, Twist::all) == CycloNum(7, Rational(3)));
    CHECK(inv_sum(7, Twist::residue) == CycloNum(7, Rational(3)) + sqrt_star(7));
    CHECK(inv_sum(5, Twist::residue) == CycloNum(5, Rational(2)));
    CHECK_THROWS_AS(inv_sum(7, Twist::nonresidue, 2), InvalidInput);

    SUBCASE("the two twists cover every nonzero exponent twice")
    {
        for (i64 p : {3, 5, 7, 11, 13, 17}) {
            const CycloNum all = inv_sum(p, Twist::all);
            CHECK(all == CycloNum(p, make_rational(p - 1, 2)));
            CHECK(inv_sum(p, Twist::residue) + inv_sum(p, Twist::nonresidue) ==
                  Rational(2) * all);
        }
    }

    SUBCASE("agrees with the term-by-term closed form")
    {
        for (i64 p : {3, 5, 7, 11}) {
            CycloNum direct(p);
            for (i64 a = 1; a < p; ++a)
                direct += inv_one_minus_zeta(p, a * a);
            CHECK(inv_sum(p, Twist::residue) == direct);
        }
    }
}
