#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liehecke/residue.hpp"

namespace liehecke {

using BigInt = mpz_class;

/// Arbitrary-precision fraction. GMP keeps results of arithmetic canonical;
/// values built from a numerator/denominator pair must go through
/// make_rational so that the lowest-terms invariant holds.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
std::string to_string(const Rational& q);

/*
 * Element of the cyclotomic field Q(zeta_p), p an odd prime, stored in the
 * power basis 1, zeta, ..., zeta^(p-2). The relation
 *     zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
 * makes the representation unique, so equality is coefficient-wise.
 */
class CycloNum
{
  public:
    /// Zero of Q(zeta_p).
    explicit CycloNum(i64 p);
    CycloNum(i64 p, const Rational& value);
    /// Takes coefficients in the power basis; size must be p - 1.
    CycloNum(i64 p, std::vector<Rational> coeffs);

    /// Builds sum_k counts[k] * zeta^k / den from a length-p exponent
    /// histogram (indices taken mod p).
    static CycloNum from_exponent_counts(i64 p, std::span<const i64> counts, i64 den = 1);

    i64 prime() const { return p_; }
    std::span<const Rational> coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t k) const { return coeffs_[k]; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws ConsistencyError when the value is not in Q.
    Rational to_rational() const;

    /// Complex conjugation zeta -> zeta^(p-1).
    CycloNum conj() const;
    /// Galois automorphism zeta -> zeta^k, gcd(k, p) = 1.
    CycloNum galois(i64 k) const;

    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator*=(const Rational& q);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(CycloNum a, const Rational& q) { return a *= q; }
    friend CycloNum operator*(const Rational& q, CycloNum a) { return a *= q; }
    CycloNum operator-() const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);

    /// Human-readable form, e.g. "2/3 + 1/3*z + -1*z^2".
    std::string to_string() const;

  private:
    void require_same_prime(const CycloNum& o) const;

    i64 p_;
    std::vector<Rational> coeffs_;
};

enum class ArithOp { add, sub, mul };

/// zeta_p^(k mod p) in canonical form.
CycloNum cyclo_power(i64 p, i64 k);
CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, ArithOp op);

/// Multiplicative inverse via an exact rational solve of the
/// (p-1) x (p-1) system for multiplication by a.
CycloNum cyclo_inv(const CycloNum& a);

/// Closed form 1/(1 - zeta^b) = -(1/p) * sum_{k=1}^{p-1} k * zeta^(k b), p does not divide b.
CycloNum inv_one_minus_zeta(i64 p, i64 b);

/// sum_{h in F_p} zeta^(x h^2).
CycloNum gauss_sum(i64 p, i64 x);

/// gauss_sum(p, 1); its square is (-1)^((p-1)/2) * p.
CycloNum sqrt_star(i64 p);

/// (a, b) with z = a + b * sqrt_star(p). Throws NotInSubfield otherwise.
std::pair<Rational, Rational> decompose_quadratic(const CycloNum& z);

enum class Twist { residue, nonresidue, all };

/// sum over a in F_p^x of 1/(1 - zeta^e(a)) with e(a) = a^2, nonresidue * a^2 or a.
CycloNum inv_sum(i64 p, Twist twist);
CycloNum inv_sum(i64 p, Twist twist, i64 nonresidue);

} // namespace liehecke
