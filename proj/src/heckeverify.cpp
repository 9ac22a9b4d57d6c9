#include "liehecke/heckeverify.hpp"

#include "liehecke/cuspspace.hpp"
#include "liehecke/errors.hpp"

namespace liehecke {

namespace {

void require_three_mod_four(i64 p)
{
    require_odd_prime(p);
    if (p % 4 != 3)
        throw InvalidInput("-" + std::to_string(p) +
                           " is not a fundamental discriminant (need p = 3 mod 4)");
}

BigInt big_pow(i64 p, unsigned e)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), e);
    return out;
}

} // namespace

std::vector<QuadForm> reduced_forms(i64 p)
{
    require_three_mod_four(p);
    std::vector<QuadForm> forms;
    // a <= c and b^2 - 4ac = -p force 3a^2 <= p
    for (i64 a = 1; 3 * a * a <= p; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            const i64 num = b * b + p;
            if (num % (4 * a) != 0)
                continue;
            const i64 c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

BigInt class_number_forms(i64 p)
{
    return BigInt(static_cast<long>(reduced_forms(p).size()));
}

BigInt dirichlet_sum(i64 p)
{
    require_odd_prime(p);
    BigInt sum = 0;
    for (i64 k = 1; k < p; ++k)
        sum += k * legendre(k, p);
    return sum;
}

BigInt class_number_dirichlet(i64 p)
{
    require_three_mod_four(p);
    if (p == 3)
        throw InvalidInput("the Dirichlet class number formula here needs p > 3");
    const BigInt sigma = dirichlet_sum(p);
    if (sigma % p != 0)
        throw ConsistencyError("weighted Legendre sum " + sigma.get_str() +
                               " is not divisible by p");
    return -sigma / p;
}

Verdict dirichlet_sum_vanishes(i64 p)
{
    require_odd_prime(p);
    if (p % 4 != 1)
        throw InvalidInput("the weighted Legendre sum vanishes only for p = 1 mod 4");
    const BigInt sigma = dirichlet_sum(p);
    return {sigma == 0, "sum k (k/p) = " + sigma.get_str()};
}

NDiff n_diff_formula(i64 p, int r)
{
    return n_diff_formula(p, r, fixed_nonresidue(p));
}

NDiff n_diff_formula(i64 p, int r, i64 nonresidue)
{
    require_odd_prime(p);
    require_nonresidue(nonresidue, p);
    if (r < 2)
        throw InvalidInput("level r must be at least 2");

    NDiff out{0, inv_sum(p, Twist::residue, nonresidue), inv_sum(p, Twist::nonresidue, nonresidue),
              inv_sum(p, Twist::all, nonresidue), {}};
    const Rational half_pm1 = make_rational(p - 1, 2);

    auto record = [&out](std::string name, bool ok, const std::string& detail) {
        out.steps.emplace_back(std::move(name), Verdict{ok, detail});
        if (!ok)
            throw ConsistencyError(out.steps.back().first + " failed: " + detail);
    };

    record("unrestricted_sum", out.sum_all == CycloNum(p, half_pm1),
           "sum_a 1/(1-z^a) = " + out.sum_all.to_string());
    record("twists_cover_twice", out.sum_residue + out.sum_nonresidue == Rational(2) * out.sum_all,
           "sum_res + sum_nonres = " + (out.sum_residue + out.sum_nonresidue).to_string());

    // prefactor -p^(2(r-2)) sqrt_star / 2
    const Rational scale = Rational(-big_pow(p, static_cast<unsigned>(2 * (r - 2)))) / 2;
    const CycloNum prefactor = scale * sqrt_star(p);
    const CycloNum from_difference = prefactor * (out.sum_residue - out.sum_nonresidue);
    const CycloNum from_residues =
        prefactor * (CycloNum(p, Rational(1 - p)) + Rational(2) * out.sum_residue);
    record("difference_to_residue_form", from_difference == from_residues,
           from_difference.to_string() + " vs " + from_residues.to_string());

    if (!from_residues.is_rational() || from_residues.coeff(0).get_den() != 1)
        record("integral_result", false, from_residues.to_string());
    out.value = from_residues.coeff(0).get_num();
    out.steps.emplace_back("integral_result", Verdict{true, out.value.get_str()});
    return out;
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped:
        return "skipped";
    }
    return "?";
}

CheckEntry theorem_check(i64 p, int r)
{
    return theorem_check(p, r, fixed_nonresidue(p));
}

CheckEntry theorem_check(i64 p, int r, i64 nonresidue)
{
    CheckEntry entry{"n_diff_closed_form", Status::fail, "", ""};
    BigInt expected;
    if (p == 3)
        expected = big_pow(3, static_cast<unsigned>(2 * r - 4));
    else if (p % 4 == 1)
        expected = 0;
    else
        expected = big_pow(p, static_cast<unsigned>(2 * r - 3)) * class_number_forms(p);
    entry.rhs = expected.get_str();
    try {
        const NDiff d = n_diff_formula(p, r, nonresidue);
        entry.lhs = d.value.get_str();
        entry.status = d.value == expected ? Status::pass : Status::fail;
    } catch (const ConsistencyError& e) {
        entry.lhs = e.what();
    }
    return entry;
}

GrossIdentity gross_identity_check(i64 p)
{
    require_three_mod_four(p);
    if (p == 3)
        throw InvalidInput("the class-number identity for the residue sum needs p > 3");
    GrossIdentity g;
    g.h = class_number_forms(p);
    try {
        auto [a, b] = decompose_quadratic(inv_sum(p, Twist::residue));
        g.rational_part = a;
        g.root_part = b;
        g.pass = a == make_rational(p - 1, 2) && b == Rational(g.h);
    } catch (const NotInSubfield&) {
        g.pass = false;
    }
    return g;
}

Verdict single_pair_obstruction(i64 p)
{
    const BigInt h = class_number_forms(p);
    const bool odd = mpz_odd_p(h.get_mpz_t()) != 0;
    return {odd, "h(-" + std::to_string(p) + ") = " + h.get_str() +
                     (odd ? ", so h/2 is not an integer" : ", h/2 is an integer")};
}

CorollaryQuantities corollary_quantities(i64 p, int r)
{
    require_three_mod_four(p);
    if (p == 3)
        throw InvalidInput("the group-level difference is stated for p > 3");
    const NDiff d = n_diff_formula(p, r);
    const BigInt scale = big_pow(p, static_cast<unsigned>(r - 2));
    if (d.value % scale != 0)
        throw ConsistencyError("n+ - n- = " + d.value.get_str() + " is not divisible by p^(r-2)");
    return {d.value / scale, big_pow(p, static_cast<unsigned>(r - 1)) * class_number_forms(p),
            single_pair_obstruction(p)};
}

Multiplicities solve_multiplicities(const BigInt& n_sum, const BigInt& n_diff)
{
    const BigInt twice_plus = n_sum + n_diff;
    const BigInt twice_minus = n_sum - n_diff;
    if (mpz_odd_p(twice_plus.get_mpz_t()))
        throw ConsistencyError("n_sum and n_diff have different parity: " + n_sum.get_str() +
                               ", " + n_diff.get_str());
    Multiplicities m{twice_plus / 2, twice_minus / 2};
    if (m.n_plus < 0 || m.n_minus < 0)
        throw ConsistencyError("negative multiplicity: n+ = " + m.n_plus.get_str() +
                               ", n- = " + m.n_minus.get_str());
    return m;
}

Multiplicities solve_multiplicities(i64 p, int r)
{
    const MultSum sum = mult_sum(p, r);
    if (!sum.agrees())
        throw ConsistencyError("inner-product n+ + n- disagrees with the closed form");
    return solve_multiplicities(sum.via_u, n_diff_formula(p, r).value);
}

} // namespace liehecke
