#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liehecke/exactnum.hpp"
#include "liehecke/verdict.hpp"

namespace liehecke {

/// Positive-definite form a x^2 + b xy + c y^2.
struct QuadForm
{
    i64 a, b, c;
    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// Reduced forms of discriminant -p: |b| <= a <= c, b >= 0 if |b| = a or a = c.
std::vector<QuadForm> reduced_forms(i64 p);

/// h(-p) as the number of reduced forms. Requires p = 3 mod 4.
BigInt class_number_forms(i64 p);

/// sum_{k=1}^{p-1} k (k/p).
BigInt dirichlet_sum(i64 p);

/// -dirichlet_sum(p)/p, for p = 3 mod 4 and p > 3.
BigInt class_number_dirichlet(i64 p);

/// For p = 1 mod 4 the weighted Legendre sum vanishes.
Verdict dirichlet_sum_vanishes(i64 p);

/// Exact evaluation of n+ - n- from the cyclotomic fixed-point sums, with
/// the intermediate reductions recorded.
struct NDiff
{
    BigInt value;
    CycloNum sum_residue;    // sum_a 1/(1 - zeta^(a^2))
    CycloNum sum_nonresidue; // sum_a 1/(1 - zeta^(n a^2))
    CycloNum sum_all;        // sum_a 1/(1 - zeta^a)
    std::vector<std::pair<std::string, Verdict>> steps;
};

/// Throws ConsistencyError if the result is not a rational integer or an
/// intermediate reduction fails.
NDiff n_diff_formula(i64 p, int r);
NDiff n_diff_formula(i64 p, int r, i64 nonresidue);

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct CheckEntry
{
    std::string name;
    Status status = Status::skipped;
    std::string lhs;
    std::string rhs;
};

/// n+ - n- against p^(2r-3) h(-p), 0 or 3^(2r-4) depending on p.
CheckEntry theorem_check(i64 p, int r);
CheckEntry theorem_check(i64 p, int r, i64 nonresidue);

struct GrossIdentity
{
    Rational rational_part;
    Rational root_part; // coefficient of sqrt_star(p)
    BigInt h;
    bool pass = false;
};

/// inv_sum(p, residue) = (p-1)/2 + h(-p) sqrt_star(p), for p > 3, p = 3 mod 4.
GrossIdentity gross_identity_check(i64 p);

struct CorollaryQuantities
{
    BigInt diff_group_level; // (n+ - n-) / p^(r-2)
    BigInt expected;         // p^(r-1) h(-p)
    Verdict parity_obstruction;
};

CorollaryQuantities corollary_quantities(i64 p, int r);

/// Whether h(-p)/2 fails to be an integer, i.e. h(-p) is odd.
Verdict single_pair_obstruction(i64 p);

struct Multiplicities
{
    BigInt n_plus;
    BigInt n_minus;
};

/// n+- = (n_sum +- n_diff)/2; throws ConsistencyError unless both are
/// nonnegative integers.
Multiplicities solve_multiplicities(const BigInt& n_sum, const BigInt& n_diff);
/// Uses the inner-product value of n_sum (builds chi_S).
Multiplicities solve_multiplicities(i64 p, int r);

} // namespace liehecke
