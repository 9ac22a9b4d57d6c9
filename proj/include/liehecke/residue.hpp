#pragma once

#include <cstdint>

namespace liehecke {

using i64 = std::int64_t;

/// Least nonnegative residue of x modulo m (m > 0).
constexpr i64 mod(i64 x, i64 m)
{
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

i64 ipow(i64 base, unsigned exp);

bool is_prime(i64 n);
bool is_odd_prime(i64 n);

/// Throws InvalidInput unless p is an odd prime.
void require_odd_prime(i64 p);

/// Inverse of x modulo m; throws InvalidInput when gcd(x, m) != 1.
i64 mod_inverse(i64 x, i64 m);

/// Legendre symbol (x/p) in {-1, 0, +1}.
int legendre(i64 x, i64 p);

/// Smallest positive quadratic nonresidue modulo p.
i64 fixed_nonresidue(i64 p);

/// Throws InvalidInput unless n is a quadratic nonresidue mod p.
void require_nonresidue(i64 n, i64 p);

} // namespace liehecke
