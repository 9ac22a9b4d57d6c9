#include "liehecke/residue.hpp"

#include <numeric>
#include <string>

#include "liehecke/errors.hpp"

namespace liehecke {

i64 ipow(i64 base, unsigned exp)
{
    i64 result = 1;
    while (exp-- > 0)
        result *= base;
    return result;
}

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

bool is_odd_prime(i64 n)
{
    return n != 2 && is_prime(n);
}

void require_odd_prime(i64 p)
{
    if (!is_odd_prime(p))
        throw InvalidInput(std::to_string(p) + " is not an odd prime");
}

i64 mod_inverse(i64 x, i64 m)
{
    // extended Euclid on (x mod m, m)
    i64 old_r = mod(x, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw InvalidInput(std::to_string(x) + " is not invertible modulo " + std::to_string(m));
    return mod(old_s, m);
}

int legendre(i64 x, i64 p)
{
    x = mod(x, p);
    if (x == 0)
        return 0;
    // Euler's criterion
    i64 result = 1, base = x;
    i64 e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

i64 fixed_nonresidue(i64 p)
{
    require_odd_prime(p);
    for (i64 n = 2; n < p; ++n)
        if (legendre(n, p) == -1)
            return n;
    throw ConsistencyError("no quadratic nonresidue found modulo " + std::to_string(p));
}

void require_nonresidue(i64 n, i64 p)
{
    if (legendre(n, p) != -1)
        throw InvalidInput(std::to_string(n) + " is not a quadratic nonresidue modulo " +
                           std::to_string(p));
}

} // namespace liehecke
