#pragma once

#include <vector>

#include "liehecke/exactnum.hpp"
#include "liehecke/invchar.hpp"

namespace liehecke {

/// dim S_2(Gamma(p^r)) = 1 + p^(2r) (p^r - 6)(1 - p^-2) / 24.
BigInt dim_cusp(i64 p, int r);

/// Representatives of SL_2(Z/p^level)/P, P = {g : g mod p upper triangular}:
/// the lower unipotents [[1,0],[t,1]], t = 0..p-1, then [[0,1],[-1,0]].
std::vector<ResidueMatrix> projective_line_reps(i64 p, int level);

/// Character of S = S_2(Gamma(p^r)) + its dual, restricted to sl_2(F_p).
struct SumSpaceChar
{
    i64 p = 0;
    int r = 0;
    CharTable table;
    BigInt dim;
};

/// (p^2-1) p^(3r-5)/12 Reg + 2 * 1 - ((p-1) p^(2(r-2))/2) sum_{s in SL_2(Z/p^(r-1))/P} Reg~b^s
SumSpaceChar chi_S(i64 p, int r);

/// p^(2(r-2)) (p-1)(p^r + p^(r-1) - 6) / 12.
BigInt mult_sum_closed_form(i64 p, int r);

struct MultSum
{
    BigInt via_u; // <chi_S, psi_u>
    BigInt via_v; // <chi_S, psi_v>
    BigInt closed_form;
    bool agrees() const { return via_u == closed_form && via_v == closed_form; }
};

/// n+ + n- from the inner products of chi_S with psi_u and psi_v.
MultSum mult_sum(i64 p, int r);
MultSum mult_sum(i64 p, int r, i64 nonresidue);
MultSum mult_sum(const SumSpaceChar& s, i64 nonresidue);

} // namespace liehecke
