#include "doctest.h"

#include "liehecke/cuspspace.hpp"
#include "liehecke/errors.hpp"

using namespace liehecke;

TEST_CASE("dim_cusp")
{
    CHECK(dim_cusp(3, 2) == 10);
    CHECK(dim_cusp(5, 2) == 476);
    CHECK(dim_cusp(7, 2) == 4215);

    SUBCASE("genus of X(N) from the group order")
    {
        // g = 1 + mu (N - 6) / (12 N), mu = |SL_2(Z/N)| / 2
        for (i64 p : {3, 5, 7, 11, 13})
            for (int r : {2, 3}) {
                const BigInt order = BigInt(sl2_order(p, r));
                const BigInt n = BigInt(ipow(p, static_cast<unsigned>(r)));
                const Rational g = 1 + Rational(order) / 24 - Rational(order) / (4 * Rational(n));
                CHECK(Rational(dim_cusp(p, r)) == g);
            }
    }
    CHECK_THROWS_AS(dim_cusp(9, 2), InvalidInput);
    CHECK_THROWS_AS(dim_cusp(5, 1), InvalidInput);
}

TEST_CASE("projective_line_reps")
{
    for (i64 p : {3, 5, 7}) {
        const auto reps = projective_line_reps(p, 1);
        REQUIRE(static_cast<i64>(reps.size()) == p + 1);
        // distinct lines: the first column of each rep spans a different point
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                const i64 cross = mod(reps[i].a() * reps[j].c() - reps[i].c() * reps[j].a(), p);
                CHECK(cross != 0);
            }
    }
}

TEST_CASE("chi_S degree")
{
    CHECK(chi_S(3, 2).table.degree() == CycloNum(3, Rational(20)));
    CHECK(chi_S(5, 2).table.degree() == CycloNum(5, Rational(952)));
    const SumSpaceChar s7 = chi_S(7, 2);
    CHECK(s7.dim == 8430);
    CHECK(s7.table.degree() == CycloNum(7, Rational(8430)));
}

TEST_CASE("chi_S is invariant and self-dual")
{
    for (i64 p : {3, 5}) {
        const SumSpaceChar s = chi_S(p, 2);
        CHECK(is_conjugation_invariant(s.table, 2));
        CHECK(s.table.conj() == s.table);
    }
}

TEST_CASE("chi_S agrees with the Mackey route")
{
    // S + dual S = Ind_{+-1} 1 - sum_j Ind_{G_j} 1 + 2 * 1, restricted to sl_2
    for (i64 p : {3, 5}) {
        const int r = 2;
        CharTable expected = trivial_char(p);
        expected *= Rational(2);
        CharTable reg = regular_char(p);
        reg *= Rational(sl2_order(p, r) / 2) / Rational(p * p * p);
        expected += reg;
        for (auto j : {InertiaPoint::i, InertiaPoint::rho, InertiaPoint::infinity})
            expected -= mackey_check(p, r, j).mackey;
        CHECK(chi_S(p, r).table == expected);
    }
}

TEST_CASE("mult_sum")
{
    CHECK(mult_sum_closed_form(3, 2) == 1);
    CHECK(mult_sum_closed_form(5, 2) == 8);
    CHECK(mult_sum_closed_form(7, 2) == 25);
    CHECK(mult_sum_closed_form(11, 2) == 105);

    for (i64 p : {3, 5, 7}) {
        const MultSum m = mult_sum(p, 2);
        CHECK(m.agrees());
        CHECK(m.via_u == mult_sum_closed_form(p, 2));
    }
    CHECK(mult_sum(7, 2, 5).agrees());
    CHECK(mult_sum(3, 3).agrees());

    SUBCASE("parity: odd exactly for p = 3 mod 4")
    {
        for (i64 p = 3; p < 200; p += 2) {
            if (!is_prime(p))
                continue;
            for (int r : {2, 3, 4})
                CHECK((mpz_odd_p(mult_sum_closed_form(p, r).get_mpz_t()) != 0) == (p % 4 == 3));
        }
    }
}
