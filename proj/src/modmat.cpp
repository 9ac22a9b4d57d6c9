#include "liehecke/modmat.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "liehecke/errors.hpp"

namespace liehecke {

LieElt LieElt::make(i64 p, i64 a, i64 b, i64 c)
{
    return {mod(a, p), mod(b, p), mod(c, p)};
}

LieElt LieElt::from_index(i64 p, i64 idx)
{
    if (idx < 0 || idx >= p * p * p)
        throw InvalidInput("Lie algebra index " + std::to_string(idx) + " out of range");
    return {idx / (p * p), idx / p % p, idx % p};
}

LieElt lie_add(i64 p, const LieElt& x, const LieElt& y)
{
    return LieElt::make(p, x.a + y.a, x.b + y.b, x.c + y.c);
}

LieElt lie_scale(i64 p, i64 k, const LieElt& x)
{
    return LieElt::make(p, k * x.a, k * x.b, k * x.c);
}

i64 trace_pairing(i64 p, const LieElt& y, const LieElt& x)
{
    // Tr([[ya, yb], [yc, -ya]] * [[a, b], [c, -a]]) = 2 ya a + yb c + yc b
    return mod(2 * y.a * x.a + y.b * x.c + y.c * x.b, p);
}

LieElt nilpotent_u(i64 p)
{
    return LieElt::make(p, 0, 0, 1);
}

LieElt nilpotent_v(i64 p, i64 nonresidue)
{
    require_nonresidue(nonresidue, p);
    return LieElt::make(p, 0, 0, nonresidue);
}

LieElt nilpotent_v(i64 p)
{
    return nilpotent_v(p, fixed_nonresidue(p));
}

ResidueMatrix::ResidueMatrix(i64 modulus, i64 a, i64 b, i64 c, i64 d)
    : m_(modulus), a_(mod(a, modulus)), b_(mod(b, modulus)), c_(mod(c, modulus)),
      d_(mod(d, modulus))
{
    if (modulus < 2)
        throw InvalidInput("matrix modulus must be at least 2");
}

ResidueMatrix ResidueMatrix::identity(i64 modulus)
{
    return {modulus, 1, 0, 0, 1};
}

i64 ResidueMatrix::det() const
{
    return mod(a_ * d_ - b_ * c_, m_);
}

ResidueMatrix ResidueMatrix::inverse() const
{
    if (!is_unimodular())
        throw InvalidInput("matrix " + to_string() + " is not in SL_2");
    return {m_, d_, -b_, -c_, a_};
}

ResidueMatrix ResidueMatrix::reduce(i64 new_modulus) const
{
    if (new_modulus < 2 || m_ % new_modulus != 0)
        throw InvalidInput("cannot reduce mod " + std::to_string(m_) + " matrix to modulus " +
                           std::to_string(new_modulus));
    return {new_modulus, a_, b_, c_, d_};
}

bool ResidueMatrix::is_identity() const
{
    return a_ == 1 % m_ && b_ == 0 && c_ == 0 && d_ == 1 % m_;
}

ResidueMatrix operator*(const ResidueMatrix& x, const ResidueMatrix& y)
{
    if (x.m_ != y.m_)
        throw InvalidInput("multiplying matrices over different moduli");
    const i64 m = x.m_;
    return {m, (x.a_ * y.a_ + x.b_ * y.c_) % m, (x.a_ * y.b_ + x.b_ * y.d_) % m,
            (x.c_ * y.a_ + x.d_ * y.c_) % m, (x.c_ * y.b_ + x.d_ * y.d_) % m};
}

std::strong_ordering operator<=>(const ResidueMatrix& x, const ResidueMatrix& y)
{
    return std::tie(x.m_, x.a_, x.b_, x.c_, x.d_) <=> std::tie(y.m_, y.a_, y.b_, y.c_, y.d_);
}

std::string ResidueMatrix::to_string() const
{
    std::ostringstream out;
    out << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]] mod " << m_;
    return out.str();
}

ResidueMatrix conjugate(const ResidueMatrix& x, const ResidueMatrix& y)
{
    return x * y * x.inverse();
}

i64 sl2_order(i64 p, int r)
{
    require_odd_prime(p);
    if (r < 1)
        throw InvalidInput("level r must be positive");
    return ipow(p, static_cast<unsigned>(3 * (r - 1))) * p * (p - 1) * (p + 1);
}

namespace {

void check_guard(i64 p, int r, std::size_t guard)
{
    const i64 order = sl2_order(p, r);
    if (static_cast<std::size_t>(order) > guard)
        throw TooLarge("|SL_2(Z/" + std::to_string(p) + "^" + std::to_string(r) +
                       ")| = " + std::to_string(order) + " exceeds the size guard " +
                       std::to_string(guard));
}

} // namespace

std::vector<ResidueMatrix> enumerate_sl2(i64 p, int r, std::size_t guard)
{
    check_guard(p, r, guard);
    const i64 m = ipow(p, static_cast<unsigned>(r));
    std::vector<ResidueMatrix> out;
    out.reserve(static_cast<std::size_t>(sl2_order(p, r)));
    for (i64 a = 0; a < m; ++a) {
        const bool unit = a % p != 0;
        const i64 a_inv = unit ? mod_inverse(a, m) : 0;
        for (i64 b = 0; b < m; ++b) {
            for (i64 c = 0; c < m; ++c) {
                const i64 rhs = (1 + b * c) % m;
                if (unit) {
                    out.emplace_back(m, a, b, c, rhs * a_inv % m);
                } else if (b % p != 0 && c % p != 0) {
                    for (i64 d = 0; d < m; ++d)
                        if (a * d % m == rhs)
                            out.emplace_back(m, a, b, c, d);
                }
            }
        }
    }
    if (out.size() != static_cast<std::size_t>(sl2_order(p, r)))
        throw ConsistencyError("SL_2 enumeration produced " + std::to_string(out.size()) +
                               " elements");
    return out;
}

Sl2Group::Sl2Group(i64 p, int r, std::size_t guard)
    : p_(p), r_(r), modulus_(ipow(p, static_cast<unsigned>(r))),
      elements_(enumerate_sl2(p, r, guard))
{
}

std::optional<std::size_t> Sl2Group::index_of(const ResidueMatrix& g) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || !(*it == g))
        return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

ResidueMatrix lie_embed(i64 p, const LieElt& x, int r)
{
    if (r < 2)
        throw InvalidInput("the Lie algebra embeds in SL_2(Z/p^r) only for r >= 2");
    const i64 m = ipow(p, static_cast<unsigned>(r));
    const i64 s = m / p;
    return {m, 1 + s * x.a, s * x.b, s * x.c, 1 - s * x.a};
}

bool in_kernel(i64 p, const ResidueMatrix& g)
{
    const i64 s = g.modulus() / p;
    return g.modulus() % p == 0 && s % p == 0 && (g.a() - 1) % s == 0 && g.b() % s == 0 &&
           g.c() % s == 0 && (g.d() - 1) % s == 0;
}

LieElt lie_project(i64 p, const ResidueMatrix& g)
{
    if (!in_kernel(p, g))
        throw NotInKernel(g.to_string() + " is not in the kernel of reduction mod p^(r-1)");
    const i64 s = g.modulus() / p;
    return LieElt::make(p, (g.a() - 1) / s, g.b() / s, g.c() / s);
}

LieElt conjugate_lie(i64 p, const ResidueMatrix& g, const LieElt& x)
{
    const ResidueMatrix h = g.reduce(p);
    const ResidueMatrix xm(p, x.a, x.b, x.c, -x.a);
    const ResidueMatrix y = h * xm * h.inverse();
    return LieElt::make(p, y.a(), y.b(), y.c());
}

OrbitInfo orbit_and_centralizer(i64 p, int r, const LieElt& x, std::size_t guard)
{
    require_odd_prime(p);
    // the search runs over sl_2(F_p); the group itself is never listed
    if (static_cast<std::size_t>(p * p * p) > guard)
        throw TooLarge("p^3 = " + std::to_string(p * p * p) + " exceeds the size guard " +
                       std::to_string(guard));
    const std::vector<ResidueMatrix> gens = {
        {p, 1, 1, 0, 1}, {p, 1, -1, 0, 1}, {p, 1, 0, 1, 1}, {p, 1, 0, -1, 1}};
    std::vector<char> seen(static_cast<std::size_t>(p * p * p), 0);
    std::deque<LieElt> queue{x};
    seen[static_cast<std::size_t>(x.index(p))] = 1;
    OrbitInfo info;
    while (!queue.empty()) {
        const LieElt y = queue.front();
        queue.pop_front();
        info.orbit.push_back(y);
        for (const auto& g : gens) {
            const LieElt z = conjugate_lie(p, g, y);
            auto& flag = seen[static_cast<std::size_t>(z.index(p))];
            if (!flag) {
                flag = 1;
                queue.push_back(z);
            }
        }
    }
    std::sort(info.orbit.begin(), info.orbit.end(),
              [p](const LieElt& l, const LieElt& rr) { return l.index(p) < rr.index(p); });
    const i64 order = sl2_order(p, r);
    const i64 n = static_cast<i64>(info.orbit.size());
    if (order % n != 0)
        throw ConsistencyError("orbit size does not divide the group order");
    info.centralizer_order = order / n;
    return info;
}

SubgroupSet::SubgroupSet(i64 modulus, std::vector<ResidueMatrix> elements)
    : modulus_(modulus), elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (const auto& g : elements_)
        if (g.modulus() != modulus_)
            throw InvalidInput("subgroup element with the wrong modulus");
}

SubgroupSet SubgroupSet::generate(i64 modulus, std::span<const ResidueMatrix> generators)
{
    std::vector<ResidueMatrix> found{ResidueMatrix::identity(modulus)};
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& g : generators) {
            ResidueMatrix next = found[i] * g;
            if (std::find(found.begin(), found.end(), next) == found.end())
                found.push_back(next);
        }
    }
    return SubgroupSet(modulus, std::move(found));
}

bool SubgroupSet::contains(const ResidueMatrix& g) const
{
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool SubgroupSet::is_closed() const
{
    if (!contains(ResidueMatrix::identity(modulus_)))
        return false;
    for (const auto& x : elements_) {
        if (!contains(x.inverse()))
            return false;
        for (const auto& y : elements_)
            if (!contains(x * y))
                return false;
    }
    return true;
}

InertiaGroups inertia_subgroups(i64 p, int r)
{
    require_odd_prime(p);
    if (r < 2)
        throw InvalidInput("inertia subgroups are used only for r >= 2");
    const i64 m = ipow(p, static_cast<unsigned>(r));
    const ResidueMatrix minus_one(m, -1, 0, 0, -1);
    const std::vector<ResidueMatrix> gi = {{m, 0, 1, -1, 0}};
    const std::vector<ResidueMatrix> grho = {{m, 0, 1, -1, -1}, minus_one};
    const std::vector<ResidueMatrix> ginf = {{m, 1, 1, 0, 1}, minus_one};
    return {SubgroupSet::generate(m, gi), SubgroupSet::generate(m, grho),
            SubgroupSet::generate(m, ginf)};
}

SubgroupSet kernel_subgroup(i64 p, int r)
{
    std::vector<ResidueMatrix> elems;
    elems.reserve(static_cast<std::size_t>(p * p * p));
    for (i64 i = 0; i < p * p * p; ++i)
        elems.push_back(lie_embed(p, LieElt::from_index(p, i), r));
    return SubgroupSet(ipow(p, static_cast<unsigned>(r)), std::move(elems));
}

SubgroupSet borel_mod_p(const Sl2Group& group)
{
    std::vector<ResidueMatrix> elems;
    for (const auto& g : group.elements())
        if (g.c() % group.prime() == 0)
            elems.push_back(g);
    return SubgroupSet(group.modulus(), std::move(elems));
}

std::vector<LieElt> kernel_intersection(i64 p, const ResidueMatrix& s, const SubgroupSet& k)
{
    std::vector<LieElt> out;
    const ResidueMatrix s_inv = s.inverse();
    for (const auto& g : k.elements()) {
        const ResidueMatrix h = s * g * s_inv;
        if (in_kernel(p, h))
            out.push_back(lie_project(p, h));
    }
    std::sort(out.begin(), out.end(),
              [p](const LieElt& l, const LieElt& r) { return l.index(p) < r.index(p); });
    return out;
}

std::vector<ResidueMatrix> double_cosets(const SubgroupSet& h, const SubgroupSet& k,
                                         const Sl2Group& group)
{
    if (h.modulus() != group.modulus() || k.modulus() != group.modulus())
        throw InvalidInput("double cosets of subgroups over a different modulus");
    std::vector<char> seen(group.size(), 0);
    std::vector<ResidueMatrix> reps;
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (seen[i])
            continue;
        const ResidueMatrix& g = group[i];
        reps.push_back(g);
        for (const auto& x : h.elements()) {
            const ResidueMatrix xg = x * g;
            for (const auto& y : k.elements()) {
                auto idx = group.index_of(xg * y);
                if (!idx)
                    throw InvalidInput("subgroup element outside SL_2");
                seen[*idx] = 1;
            }
        }
    }
    return reps;
}

} // namespace liehecke
