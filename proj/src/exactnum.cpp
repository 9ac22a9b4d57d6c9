#include "liehecke/exactnum.hpp"

#include <sstream>
#include <string>

#include "liehecke/errors.hpp"

namespace liehecke {

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

/// Folds a length-p buffer indexed by exponents mod p into the power basis.
std::vector<Rational> fold(std::vector<Rational>& buf)
{
    const std::size_t n = buf.size() - 1;
    const Rational top = buf[n];
    buf.pop_back();
    if (top != 0)
        for (std::size_t k = 0; k < n; ++k)
            buf[k] -= top;
    return std::move(buf);
}

} // namespace

CycloNum::CycloNum(i64 p) : p_(p)
{
    require_odd_prime(p);
    coeffs_.resize(static_cast<std::size_t>(p - 1));
}

CycloNum::CycloNum(i64 p, const Rational& value) : CycloNum(p)
{
    coeffs_[0] = value;
}

CycloNum::CycloNum(i64 p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs))
{
    require_odd_prime(p);
    if (coeffs_.size() != static_cast<std::size_t>(p - 1))
        throw InvalidInput("power-basis vector must have p-1 = " + std::to_string(p - 1) +
                           " coefficients, got " + std::to_string(coeffs_.size()));
}

CycloNum CycloNum::from_exponent_counts(i64 p, std::span<const i64> counts, i64 den)
{
    if (counts.size() != static_cast<std::size_t>(p))
        throw InvalidInput("exponent histogram must have p entries");
    if (den == 0)
        throw DivisionByZero("zero denominator in exponent histogram");
    std::vector<Rational> c(static_cast<std::size_t>(p - 1));
    const i64 top = counts[static_cast<std::size_t>(p - 1)];
    for (std::size_t k = 0; k + 1 < counts.size(); ++k)
        c[k] = make_rational(counts[k] - top, den);
    return CycloNum(p, std::move(c));
}

bool CycloNum::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CycloNum::is_rational() const
{
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            return false;
    return true;
}

Rational CycloNum::to_rational() const
{
    if (!is_rational())
        throw ConsistencyError("cyclotomic number " + to_string() + " is not rational");
    return coeffs_[0];
}

CycloNum CycloNum::galois(i64 k) const
{
    if (mod(k, p_) == 0)
        throw InvalidInput("Galois exponent must be prime to p");
    std::vector<Rational> buf(static_cast<std::size_t>(p_));
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            buf[static_cast<std::size_t>(mod(static_cast<i64>(j) * k, p_))] = coeffs_[j];
    return CycloNum(p_, fold(buf));
}

CycloNum CycloNum::conj() const
{
    return galois(p_ - 1);
}

void CycloNum::require_same_prime(const CycloNum& o) const
{
    if (p_ != o.p_)
        throw InvalidInput("mismatched primes " + std::to_string(p_) + " and " +
                           std::to_string(o.p_));
}

CycloNum& CycloNum::operator+=(const CycloNum& o)
{
    require_same_prime(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o)
{
    require_same_prime(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o)
{
    require_same_prime(o);
    const std::size_t n = coeffs_.size();
    const std::size_t p = n + 1;
    std::vector<Rational> buf(p);
    Rational tmp;
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (o.coeffs_[j] == 0)
                continue;
            std::size_t k = i + j;
            if (k >= p)
                k -= p;
            mpq_mul(tmp.get_mpq_t(), coeffs_[i].get_mpq_t(), o.coeffs_[j].get_mpq_t());
            buf[k] += tmp;
        }
    }
    coeffs_ = fold(buf);
    return *this;
}

CycloNum& CycloNum::operator*=(const Rational& q)
{
    for (auto& c : coeffs_)
        c *= q;
    return *this;
}

CycloNum CycloNum::operator-() const
{
    CycloNum r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

bool operator==(const CycloNum& a, const CycloNum& b)
{
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

std::string CycloNum::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        out << coeffs_[k].get_str();
        if (k == 1)
            out << "*z";
        else if (k > 1)
            out << "*z^" << k;
    }
    if (first)
        out << "0";
    return out.str();
}

CycloNum cyclo_power(i64 p, i64 k)
{
    require_odd_prime(p);
    std::vector<Rational> buf(static_cast<std::size_t>(p));
    buf[static_cast<std::size_t>(mod(k, p))] = 1;
    return CycloNum(p, fold(buf));
}

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    }
    throw InvalidInput("unknown arithmetic operation");
}

namespace {

/// Coefficients of zeta * z given those of z.
void shift_by_zeta(std::vector<Rational>& c)
{
    const Rational top = c.back();
    for (std::size_t k = c.size() - 1; k > 0; --k)
        c[k] = c[k - 1] - top;
    c[0] = -top;
}

} // namespace

CycloNum cyclo_inv(const CycloNum& a)
{
    if (a.is_zero())
        throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(a.prime()) + ")");
    const std::size_t n = a.coeffs().size();

    // Augmented matrix [M | e_0], column j of M holding the coefficients of a * zeta^j.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    std::vector<Rational> col(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = col[i];
        shift_by_zeta(col);
    }
    m[0][n] = 1;

    Rational factor, tmp;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw ConsistencyError("singular multiplication matrix for nonzero element");
        std::swap(m[piv], m[c]);
        const Rational inv_pivot = 1 / m[c][c];
        for (std::size_t j = c; j <= n; ++j)
            m[c][j] *= inv_pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            factor = m[i][c];
            for (std::size_t j = c; j <= n; ++j) {
                if (m[c][j] == 0)
                    continue;
                mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), m[c][j].get_mpq_t());
                m[i][j] -= tmp;
            }
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = std::move(m[i][n]);
    return CycloNum(a.prime(), std::move(x));
}

CycloNum inv_one_minus_zeta(i64 p, i64 b)
{
    require_odd_prime(p);
    if (mod(b, p) == 0)
        throw DivisionByZero("1 - zeta^b vanishes for b divisible by p");
    std::vector<Rational> buf(static_cast<std::size_t>(p));
    for (i64 k = 1; k < p; ++k)
        buf[static_cast<std::size_t>(mod(k * b, p))] += make_rational(-k, p);
    return CycloNum(p, fold(buf));
}

CycloNum gauss_sum(i64 p, i64 x)
{
    require_odd_prime(p);
    std::vector<i64> counts(static_cast<std::size_t>(p));
    for (i64 h = 0; h < p; ++h)
        ++counts[static_cast<std::size_t>(mod(x * (h * h % p), p))];
    return CycloNum::from_exponent_counts(p, counts);
}

CycloNum sqrt_star(i64 p)
{
    return gauss_sum(p, 1);
}

std::pair<Rational, Rational> decompose_quadratic(const CycloNum& z)
{
    const i64 p = z.prime();
    const CycloNum root = sqrt_star(p);
    std::size_t k = 1;
    while (k < root.coeffs().size() && root.coeff(k) == 0)
        ++k;
    if (k == root.coeffs().size())
        throw ConsistencyError("sqrt_star has no irrational coefficient");
    Rational b = z.coeff(k) / root.coeff(k);
    Rational a = z.coeff(0) - b * root.coeff(0);
    if (!(CycloNum(p, a) + b * root == z))
        throw NotInSubfield(z.to_string() + " does not lie in Q(sqrt_star(" +
                            std::to_string(p) + "))");
    return {a, b};
}

CycloNum inv_sum(i64 p, Twist twist)
{
    return inv_sum(p, twist, fixed_nonresidue(p));
}

CycloNum inv_sum(i64 p, Twist twist, i64 nonresidue)
{
    require_odd_prime(p);
    if (twist == Twist::nonresidue)
        require_nonresidue(nonresidue, p);
    // Every summand is a Galois conjugate of 1/(1 - zeta).
    const CycloNum base = cyclo_inv(CycloNum(p, Rational(1)) - cyclo_power(p, 1));
    CycloNum total(p);
    for (i64 a = 1; a < p; ++a) {
        i64 e = a;
        if (twist == Twist::residue)
            e = a * a % p;
        else if (twist == Twist::nonresidue)
            e = nonresidue % p * (a * a % p) % p;
        total += base.galois(e);
    }
    return total;
}

} // namespace liehecke
