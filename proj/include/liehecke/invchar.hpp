#pragma once

#include <span>
#include <string>
#include <vector>

#include "liehecke/exactnum.hpp"
#include "liehecke/modmat.hpp"
#include "liehecke/verdict.hpp"

namespace liehecke {

/*
 * Class function on the additive group sl_2(F_p), stored densely over the
 * canonical index a*p^2 + b*p + c. Values are exact elements of Q(zeta_p).
 */
class CharTable
{
  public:
    CharTable(i64 p, std::vector<CycloNum> values, std::string label);
    static CharTable constant(i64 p, const Rational& value, std::string label);

    i64 prime() const { return p_; }
    std::size_t size() const { return values_.size(); }
    std::span<const CycloNum> values() const { return values_; }
    const CycloNum& operator[](std::size_t idx) const { return values_[idx]; }
    const CycloNum& at(const LieElt& x) const;
    /// Value at 0.
    const CycloNum& degree() const { return values_[0]; }
    const std::string& label() const { return label_; }

    CharTable conj() const;

    CharTable& operator+=(const CharTable& o);
    CharTable& operator-=(const CharTable& o);
    CharTable& operator*=(const Rational& q);
    friend CharTable operator+(CharTable a, const CharTable& b) { return a += b; }
    friend CharTable operator-(CharTable a, const CharTable& b) { return a -= b; }
    friend CharTable operator*(const Rational& q, CharTable a) { return a *= q; }

    /// Equality of values; labels are ignored.
    friend bool operator==(const CharTable& a, const CharTable& b);

  private:
    void require_same_prime(const CharTable& o) const;

    i64 p_;
    std::vector<CycloNum> values_;
    std::string label_;
};

/// X -> zeta^Tr(y X).
CharTable psi_trace_char(i64 p, const LieElt& y);

/// (1/den) * sum over ys of psi_trace_char(y), accumulated as exponent counts.
CharTable psi_sum(i64 p, std::span<const LieElt> ys, i64 den, std::string label);

CharTable trivial_char(i64 p);
/// Regular character of sl_2(F_p): p^3 at 0, 0 elsewhere.
CharTable regular_char(i64 p);

enum class Sign { plus, minus };

/// Sum of psi_trace_char over the orbit of u (plus) or v (minus).
CharTable chi_invariant(i64 p, Sign sign);
CharTable chi_invariant(i64 p, Sign sign, i64 nonresidue);

/// Half-sum over the diagonal torus of psi_trace_char(s u s^-1), resp. v.
CharTable n_normalized(i64 p, Sign sign);
CharTable n_normalized(i64 p, Sign sign, i64 nonresidue);

/// (1/p^3) sum_X alpha(X) conj(beta(X)).
CycloNum inner_product(const CharTable& alpha, const CharTable& beta);

/// Whether the table is constant on orbits of the elementary generators of
/// SL_2(Z/p^r), acting by conjugation.
bool is_conjugation_invariant(const CharTable& table, int r);

/// (N+ - N-)(X) == legendre(b(X), p) * sqrt_star(p) for every X.
Verdict check_gauss_collapse(i64 p);
Verdict check_gauss_collapse(i64 p, i64 nonresidue);

/// p^2 on the line s [[0,*],[0,0]] s^-1, 0 elsewhere. Only s mod p matters.
CharTable reg_borel_char(i64 p, const ResidueMatrix& s);

enum class InertiaPoint { i, rho, infinity };
std::string to_string(InertiaPoint j);

struct MackeyResult
{
    Verdict verdict;
    std::size_t double_coset_count = 0;
    CharTable direct;   // Res Ind computed from the induced-character formula
    CharTable mackey;   // sum over double cosets of inductions from intersections
    CharTable expected; // count * Reg, or the sum of Borel-regular characters
};

/// Res_{sl_2} Ind_{G_j}^{SL_2(Z/p^r)} 1 computed two ways, compared with
/// each other and with the closed form.
MackeyResult mackey_check(i64 p, int r, InertiaPoint j, std::size_t guard = kSizeGuard);

} // namespace liehecke
