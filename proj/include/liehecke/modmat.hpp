#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "liehecke/residue.hpp"

namespace liehecke {

/// Largest group the enumerating routines will build.
inline constexpr std::size_t kSizeGuard = 10'000'000;

/// Traceless matrix [[a, b], [c, -a]] over F_p. Entries are kept reduced.
struct LieElt
{
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;

    static LieElt make(i64 p, i64 a, i64 b, i64 c);
    /// Inverse of index(): idx = a*p^2 + b*p + c.
    static LieElt from_index(i64 p, i64 idx);
    i64 index(i64 p) const { return (a * p + b) * p + c; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }

    friend bool operator==(const LieElt&, const LieElt&) = default;
};

LieElt lie_add(i64 p, const LieElt& x, const LieElt& y);
LieElt lie_scale(i64 p, i64 k, const LieElt& x);
/// Tr(y * x) over F_p.
i64 trace_pairing(i64 p, const LieElt& y, const LieElt& x);

/// Regular nilpotent representatives [[0,0],[1,0]] and [[0,0],[n,0]].
LieElt nilpotent_u(i64 p);
LieElt nilpotent_v(i64 p, i64 nonresidue);
LieElt nilpotent_v(i64 p);

/// 2x2 matrix over Z/modulus.
class ResidueMatrix
{
  public:
    ResidueMatrix(i64 modulus, i64 a, i64 b, i64 c, i64 d);
    static ResidueMatrix identity(i64 modulus);

    i64 modulus() const { return m_; }
    i64 a() const { return a_; }
    i64 b() const { return b_; }
    i64 c() const { return c_; }
    i64 d() const { return d_; }

    i64 det() const;
    bool is_unimodular() const { return det() == 1 % m_; }
    /// Inverse of a unimodular matrix (adjugate); throws InvalidInput otherwise.
    ResidueMatrix inverse() const;
    /// Reduction to Z/new_modulus; new_modulus must divide modulus().
    ResidueMatrix reduce(i64 new_modulus) const;
    /// Lexicographic key on (a, b, c, d).
    i64 key() const { return ((a_ * m_ + b_) * m_ + c_) * m_ + d_; }
    bool is_identity() const;

    friend ResidueMatrix operator*(const ResidueMatrix& x, const ResidueMatrix& y);
    friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;
    friend std::strong_ordering operator<=>(const ResidueMatrix& x, const ResidueMatrix& y);

    std::string to_string() const;

  private:
    i64 m_, a_, b_, c_, d_;
};

/// x * y * x^-1.
ResidueMatrix conjugate(const ResidueMatrix& x, const ResidueMatrix& y);

/// |SL_2(Z/p^r)| = p^(3(r-1)) * p * (p-1) * (p+1).
i64 sl2_order(i64 p, int r);

/// All of SL_2(Z/p^r) in lexicographic order of entries.
std::vector<ResidueMatrix> enumerate_sl2(i64 p, int r, std::size_t guard = kSizeGuard);

/// Enumerated SL_2(Z/p^r) with index lookup.
class Sl2Group
{
  public:
    Sl2Group(i64 p, int r, std::size_t guard = kSizeGuard);

    i64 prime() const { return p_; }
    int level() const { return r_; }
    i64 modulus() const { return modulus_; }
    std::size_t size() const { return elements_.size(); }
    std::span<const ResidueMatrix> elements() const { return elements_; }
    const ResidueMatrix& operator[](std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(const ResidueMatrix& g) const;

  private:
    i64 p_;
    int r_;
    i64 modulus_;
    std::vector<ResidueMatrix> elements_;
};

/// I + p^(r-1) * X, for r >= 2.
ResidueMatrix lie_embed(i64 p, const LieElt& x, int r);
/// Inverse of lie_embed; throws NotInKernel unless g = I mod p^(r-1).
LieElt lie_project(i64 p, const ResidueMatrix& g);
bool in_kernel(i64 p, const ResidueMatrix& g);

/// g X g^-1 computed mod p (the action factors through SL_2(F_p)).
LieElt conjugate_lie(i64 p, const ResidueMatrix& g, const LieElt& x);

struct OrbitInfo
{
    std::vector<LieElt> orbit; // sorted by canonical index
    i64 centralizer_order = 0;
};

/// SL_2(Z/p^r)-orbit of X by closure under elementary generators, and the
/// order of its stabilizer. The guard applies to p^3.
OrbitInfo orbit_and_centralizer(i64 p, int r, const LieElt& x, std::size_t guard = kSizeGuard);

/// Finite subgroup of SL_2(Z/modulus), stored sorted.
class SubgroupSet
{
  public:
    SubgroupSet(i64 modulus, std::vector<ResidueMatrix> elements);
    /// Closure of the generators under multiplication.
    static SubgroupSet generate(i64 modulus, std::span<const ResidueMatrix> generators);

    i64 modulus() const { return modulus_; }
    std::size_t size() const { return elements_.size(); }
    std::span<const ResidueMatrix> elements() const { return elements_; }
    bool contains(const ResidueMatrix& g) const;
    /// Closed under products and inverses, contains I.
    bool is_closed() const;

  private:
    i64 modulus_;
    std::vector<ResidueMatrix> elements_;
};

struct InertiaGroups
{
    SubgroupSet elliptic_i;   // <[[0,1],[-1,0]]>, order 4
    SubgroupSet elliptic_rho; // <[[0,1],[-1,-1]], -I>, order 6
    SubgroupSet cusp;         // <[[1,1],[0,1]], -I>, order 2 p^r
};

InertiaGroups inertia_subgroups(i64 p, int r);

/// The kernel of SL_2(Z/p^r) -> SL_2(Z/p^(r-1)), i.e. sl_2(F_p) embedded.
SubgroupSet kernel_subgroup(i64 p, int r);

/// Elements of the group whose reduction mod p is upper triangular.
SubgroupSet borel_mod_p(const Sl2Group& group);

/// The X in sl_2(F_p) with lie_embed(X) in s K s^-1, sorted by index.
std::vector<LieElt> kernel_intersection(i64 p, const ResidueMatrix& s, const SubgroupSet& k);

/// One representative (the lexicographically least) per double coset H g K.
std::vector<ResidueMatrix> double_cosets(const SubgroupSet& h, const SubgroupSet& k,
                                         const Sl2Group& group);

} // namespace liehecke
