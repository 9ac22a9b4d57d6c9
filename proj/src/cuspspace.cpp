#include "liehecke/cuspspace.hpp"

#include "liehecke/errors.hpp"

namespace liehecke {

namespace {

void require_level(i64 p, int r)
{
    require_odd_prime(p);
    if (r < 2)
        throw InvalidInput("level r must be at least 2");
}

BigInt big_pow(i64 p, unsigned e)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), e);
    return out;
}

BigInt require_integer(const Rational& q, const char* what)
{
    if (q.get_den() != 1)
        throw ConsistencyError(std::string(what) + " is not an integer: " + q.get_str());
    return q.get_num();
}

} // namespace

BigInt dim_cusp(i64 p, int r)
{
    require_level(p, r);
    const auto ur = static_cast<unsigned>(r);
    const BigInt pr = big_pow(p, ur);
    const Rational one_minus = 1 - make_rational(1, p * p);
    const Rational dim = 1 + Rational(pr * pr) * Rational(pr - 6) * one_minus / 24;
    return require_integer(dim, "dim S_2(Gamma(p^r))");
}

std::vector<ResidueMatrix> projective_line_reps(i64 p, int level)
{
    require_odd_prime(p);
    if (level < 1)
        throw InvalidInput("level must be positive");
    const i64 m = ipow(p, static_cast<unsigned>(level));
    std::vector<ResidueMatrix> reps;
    for (i64 t = 0; t < p; ++t)
        reps.emplace_back(m, 1, 0, t, 1);
    reps.emplace_back(m, 0, 1, -1, 0);
    return reps;
}

SumSpaceChar chi_S(i64 p, int r)
{
    require_level(p, r);
    const Rational reg_coeff =
        Rational((p * p - 1) * big_pow(p, static_cast<unsigned>(3 * r - 5))) / 12;
    const Rational borel_coeff =
        Rational((p - 1) * big_pow(p, static_cast<unsigned>(2 * (r - 2)))) / 2;

    CharTable borel_sum = CharTable::constant(p, Rational(0), "");
    for (const auto& s : projective_line_reps(p, r - 1))
        borel_sum += reg_borel_char(p, s);

    CharTable table = reg_coeff * regular_char(p) + Rational(2) * trivial_char(p) -
                      borel_coeff * borel_sum;
    table = CharTable(p, {table.values().begin(), table.values().end()}, "chi_S");

    const BigInt dim = 2 * dim_cusp(p, r);
    const Rational degree = table.degree().to_rational();
    if (degree != Rational(dim))
        throw ConsistencyError("chi_S has degree " + degree.get_str() + " but 2 dim S_2 = " +
                               dim.get_str());
    return {p, r, std::move(table), dim};
}

BigInt mult_sum_closed_form(i64 p, int r)
{
    require_level(p, r);
    const auto ur = static_cast<unsigned>(r);
    const Rational value = Rational(big_pow(p, 2 * (ur - 2)) * (p - 1) *
                                    (big_pow(p, ur) + big_pow(p, ur - 1) - 6)) /
                           12;
    return require_integer(value, "n+ + n- closed form");
}

MultSum mult_sum(i64 p, int r)
{
    return mult_sum(p, r, fixed_nonresidue(p));
}

MultSum mult_sum(i64 p, int r, i64 nonresidue)
{
    return mult_sum(chi_S(p, r), nonresidue);
}

MultSum mult_sum(const SumSpaceChar& s, i64 nonresidue)
{
    const i64 p = s.p;
    const CycloNum via_u = inner_product(s.table, psi_trace_char(p, nilpotent_u(p)));
    const CycloNum via_v = inner_product(s.table, psi_trace_char(p, nilpotent_v(p, nonresidue)));
    return {require_integer(via_u.to_rational(), "<chi_S, psi_u>"),
            require_integer(via_v.to_rational(), "<chi_S, psi_v>"),
            mult_sum_closed_form(p, s.r)};
}

} // namespace liehecke
