#pragma once

// Test-only reference computations, kept independent of the library paths
// they are used to check.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "liehecke/exactnum.hpp"

namespace oracle {

using liehecke::i64;

/// Complex embedding zeta_p -> exp(2 pi i / p).
inline std::complex<double> embed(const liehecke::CycloNum& z)
{
    const double p = static_cast<double>(z.prime());
    std::complex<double> total = 0;
    for (std::size_t k = 0; k < z.coeffs().size(); ++k)
        total += z.coeff(k).get_d() * std::polar(1.0, 2 * std::numbers::pi * k / p);
    return total;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-7)
{
    return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

/// Random element with small rational coefficients; nonzero unless unlucky.
inline liehecke::CycloNum random_cyclo(i64 p, std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<liehecke::Rational> c(static_cast<std::size_t>(p - 1));
    for (auto& x : c)
        x = liehecke::make_rational(num(rng), den(rng));
    return liehecke::CycloNum(p, std::move(c));
}

/// Every unimodular quadruple mod m, by exhaustive search over m^4 entries.
inline std::vector<std::array<i64, 4>> brute_force_sl2(i64 m)
{
    std::vector<std::array<i64, 4>> out;
    for (i64 a = 0; a < m; ++a)
        for (i64 b = 0; b < m; ++b)
            for (i64 c = 0; c < m; ++c)
                for (i64 d = 0; d < m; ++d)
                    if (((a * d - b * c) % m + m) % m == 1 % m)
                        out.push_back({a, b, c, d});
    return out;
}

/// Quadratic residues by squaring.
inline std::vector<bool> squares_mod(i64 p)
{
    std::vector<bool> sq(static_cast<std::size_t>(p), false);
    for (i64 h = 1; h < p; ++h)
        sq[static_cast<std::size_t>(h * h % p)] = true;
    return sq;
}

} // namespace oracle
