#include "liehecke/invchar.hpp"

#include <algorithm>

#include "liehecke/errors.hpp"

namespace liehecke {

CharTable::CharTable(i64 p, std::vector<CycloNum> values, std::string label)
    : p_(p), values_(std::move(values)), label_(std::move(label))
{
    require_odd_prime(p);
    if (values_.size() != static_cast<std::size_t>(p * p * p))
        throw InvalidInput("character table needs p^3 values");
    for (const auto& v : values_)
        if (v.prime() != p)
            throw InvalidInput("character value over the wrong cyclotomic field");
}

CharTable CharTable::constant(i64 p, const Rational& value, std::string label)
{
    return CharTable(p, std::vector<CycloNum>(static_cast<std::size_t>(p * p * p), CycloNum(p, value)),
                     std::move(label));
}

const CycloNum& CharTable::at(const LieElt& x) const
{
    return values_[static_cast<std::size_t>(x.index(p_))];
}

CharTable CharTable::conj() const
{
    std::vector<CycloNum> out;
    out.reserve(values_.size());
    for (const auto& v : values_)
        out.push_back(v.conj());
    return CharTable(p_, std::move(out), "conj(" + label_ + ")");
}

void CharTable::require_same_prime(const CharTable& o) const
{
    if (p_ != o.p_)
        throw InvalidInput("character tables over different primes");
}

CharTable& CharTable::operator+=(const CharTable& o)
{
    require_same_prime(o);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += o.values_[i];
    return *this;
}

CharTable& CharTable::operator-=(const CharTable& o)
{
    require_same_prime(o);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] -= o.values_[i];
    return *this;
}

CharTable& CharTable::operator*=(const Rational& q)
{
    for (auto& v : values_)
        v *= q;
    return *this;
}

bool operator==(const CharTable& a, const CharTable& b)
{
    return a.p_ == b.p_ && a.values_ == b.values_;
}

CharTable psi_trace_char(i64 p, const LieElt& y)
{
    const i64 n = p * p * p;
    std::vector<CycloNum> values;
    values.reserve(static_cast<std::size_t>(n));
    for (i64 i = 0; i < n; ++i)
        values.push_back(cyclo_power(p, trace_pairing(p, y, LieElt::from_index(p, i))));
    return CharTable(p, std::move(values), "psi");
}

CharTable psi_sum(i64 p, std::span<const LieElt> ys, i64 den, std::string label)
{
    const i64 n = p * p * p;
    const auto up = static_cast<std::size_t>(p);
    std::vector<LieElt> xs;
    xs.reserve(static_cast<std::size_t>(n));
    for (i64 i = 0; i < n; ++i)
        xs.push_back(LieElt::from_index(p, i));

    std::vector<i64> counts(static_cast<std::size_t>(n) * up, 0);
    for (const auto& y : ys)
        for (std::size_t i = 0; i < xs.size(); ++i)
            ++counts[i * up + static_cast<std::size_t>(trace_pairing(p, y, xs[i]))];

    std::vector<CycloNum> values;
    values.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        values.push_back(CycloNum::from_exponent_counts(
            p, std::span<const i64>(counts).subspan(i * up, up), den));
    return CharTable(p, std::move(values), std::move(label));
}

CharTable trivial_char(i64 p)
{
    return CharTable::constant(p, Rational(1), "1");
}

CharTable regular_char(i64 p)
{
    CharTable reg = CharTable::constant(p, Rational(0), "Reg");
    std::vector<CycloNum> values(reg.values().begin(), reg.values().end());
    values[0] = CycloNum(p, Rational(p * p * p));
    return CharTable(p, std::move(values), "Reg");
}

CharTable chi_invariant(i64 p, Sign sign)
{
    return chi_invariant(p, sign, fixed_nonresidue(p));
}

CharTable chi_invariant(i64 p, Sign sign, i64 nonresidue)
{
    const LieElt rep = sign == Sign::plus ? nilpotent_u(p) : nilpotent_v(p, nonresidue);
    const OrbitInfo info = orbit_and_centralizer(p, 1, rep);
    return psi_sum(p, info.orbit, 1, sign == Sign::plus ? "chi+" : "chi-");
}

CharTable n_normalized(i64 p, Sign sign)
{
    return n_normalized(p, sign, fixed_nonresidue(p));
}

CharTable n_normalized(i64 p, Sign sign, i64 nonresidue)
{
    const LieElt rep = sign == Sign::plus ? nilpotent_u(p) : nilpotent_v(p, nonresidue);
    std::vector<LieElt> ys;
    for (i64 t = 1; t < p; ++t) {
        const ResidueMatrix s(p, t, 0, 0, mod_inverse(t, p));
        ys.push_back(conjugate_lie(p, s, rep));
    }
    return psi_sum(p, ys, 2, sign == Sign::plus ? "N+" : "N-");
}

CycloNum inner_product(const CharTable& alpha, const CharTable& beta)
{
    if (alpha.prime() != beta.prime())
        throw InvalidInput("inner product of tables over different primes");
    const i64 p = alpha.prime();
    CycloNum total(p);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i].is_zero() || beta[i].is_zero())
            continue;
        total += alpha[i] * beta[i].conj();
    }
    total *= make_rational(1, p * p * p);
    return total;
}

bool is_conjugation_invariant(const CharTable& table, int r)
{
    const i64 p = table.prime();
    const i64 m = ipow(p, static_cast<unsigned>(r));
    const ResidueMatrix gens[] = {{m, 1, 1, 0, 1}, {m, 1, 0, 1, 1}};
    for (std::size_t i = 0; i < table.size(); ++i) {
        const LieElt x = LieElt::from_index(p, static_cast<i64>(i));
        for (const auto& g : gens)
            if (!(table.at(conjugate_lie(p, g, x)) == table[i]))
                return false;
    }
    return true;
}

Verdict check_gauss_collapse(i64 p)
{
    return check_gauss_collapse(p, fixed_nonresidue(p));
}

Verdict check_gauss_collapse(i64 p, i64 nonresidue)
{
    const CharTable diff = n_normalized(p, Sign::plus, nonresidue) -
                           n_normalized(p, Sign::minus, nonresidue);
    const CycloNum root = sqrt_star(p);
    for (std::size_t i = 0; i < diff.size(); ++i) {
        const LieElt x = LieElt::from_index(p, static_cast<i64>(i));
        const CycloNum rhs = Rational(legendre(x.b, p)) * root;
        if (!(diff[i] == rhs))
            return {false, "(N+ - N-)(" + std::to_string(x.a) + "," + std::to_string(x.b) + "," +
                               std::to_string(x.c) + ") = " + diff[i].to_string() +
                               " but legendre(b)*sqrt_star = " + rhs.to_string()};
    }
    return {true, std::to_string(diff.size()) + " elements checked"};
}

CharTable reg_borel_char(i64 p, const ResidueMatrix& s)
{
    const ResidueMatrix t = s.reduce(p);
    std::vector<CycloNum> values(static_cast<std::size_t>(p * p * p), CycloNum(p));
    for (i64 m = 0; m < p; ++m) {
        const LieElt x = conjugate_lie(p, t, LieElt::make(p, 0, m, 0));
        values[static_cast<std::size_t>(x.index(p))] = CycloNum(p, Rational(p * p));
    }
    return CharTable(p, std::move(values), "Reg~b^" + t.to_string());
}

std::string to_string(InertiaPoint j)
{
    switch (j) {
    case InertiaPoint::i:
        return "i";
    case InertiaPoint::rho:
        return "e^(2 pi i/3)";
    case InertiaPoint::infinity:
        return "infinity";
    }
    return "?";
}

MackeyResult mackey_check(i64 p, int r, InertiaPoint j, std::size_t guard)
{
    const Sl2Group group(p, r, guard);
    const InertiaGroups inertia = inertia_subgroups(p, r);
    const SubgroupSet& k = j == InertiaPoint::i     ? inertia.elliptic_i
                           : j == InertiaPoint::rho ? inertia.elliptic_rho
                                                    : inertia.cusp;
    const SubgroupSet h = kernel_subgroup(p, r);
    const i64 n = p * p * p;

    // Ind_K^G 1 (g) = (1/|K|) #{x in G : x g x^-1 in K}
    std::vector<CycloNum> direct;
    direct.reserve(static_cast<std::size_t>(n));
    for (i64 i = 0; i < n; ++i) {
        const ResidueMatrix g = lie_embed(p, LieElt::from_index(p, i), r);
        i64 hits = 0;
        for (const auto& x : group.elements())
            if (k.contains(conjugate(x, g)))
                ++hits;
        direct.emplace_back(p, make_rational(hits, static_cast<i64>(k.size())));
    }

    // Mackey: sum over H\G/K of Ind_{H cap sKs^-1}^H 1, H abelian.
    const std::vector<ResidueMatrix> reps = double_cosets(h, k, group);
    std::vector<CycloNum> mackey(static_cast<std::size_t>(n), CycloNum(p));
    for (const auto& s : reps) {
        const std::vector<LieElt> meet = kernel_intersection(p, s, k);
        const CycloNum weight(p, make_rational(n, static_cast<i64>(meet.size())));
        for (const auto& x : meet)
            mackey[static_cast<std::size_t>(x.index(p))] += weight;
    }

    CharTable expected = CharTable::constant(p, Rational(0), "expected");
    if (j == InertiaPoint::infinity) {
        for (const auto& s : reps)
            expected += reg_borel_char(p, s);
    } else {
        expected = Rational(static_cast<i64>(reps.size())) * regular_char(p);
    }

    MackeyResult result{
        {},
        reps.size(),
        CharTable(p, std::move(direct), "Res Ind (direct)"),
        CharTable(p, std::move(mackey), "Res Ind (Mackey)"),
        std::move(expected),
    };
    const bool agree = result.direct == result.mackey;
    const bool closed = result.mackey == result.expected;
    result.verdict.pass = agree && closed;
    result.verdict.detail = std::to_string(reps.size()) + " double cosets; direct " +
                            (agree ? "==" : "!=") + " Mackey; Mackey " + (closed ? "==" : "!=") +
                            (j == InertiaPoint::infinity ? " sum of Borel-regular characters"
                                                         : " count * Reg");
    return result;
}

} // namespace liehecke
