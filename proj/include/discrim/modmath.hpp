#pragma once
#include <cstdint>
#include <utility>
#include <vector>

namespace discrim::modmath {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// signed value reduced into [0, m)
u64 canonical(i64 a, u64 m);

inline u64 add_mod(u64 a, u64 b, u64 m) {
    // a, b in [0, m); m - b never underflows
    return a >= m - b && b ? a - (m - b) : a + b;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) {
    return a >= b ? a - b : a + (m - b);
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

// multiply-shift reducer for x in [0, 2^63), fixed modulus
struct Barrett {
    u64 m = 1;
    u64 inv = 0;  // floor(2^64 / m)
    Barrett() = default;
    explicit Barrett(u64 modulus);
    u64 reduce(u64 x) const {
        u64 q = static_cast<u64>((static_cast<u128>(x) * inv) >> 64);
        u64 r = x - q * m;
        if (r >= m) r -= m;
        return r;
    }
};

// base^exponent mod m; m >= 1 (m == 1 yields 0)
u64 mod_pow(i64 base, u64 exponent, u64 m);

// Jacobi symbol (a/n) for odd n >= 1
int jacobi(i64 a, u64 n);

struct Factorization {
    std::vector<std::pair<u64, unsigned>> factors;  // primes ascending, exponents >= 1
};

// complete factorization; n in [1, 1e12]
Factorization factorize(u64 n);

// Carmichael lambda(m); m in [1, 1e12]
u64 carmichael(u64 m);

// order of a mod p equals p-1; p prime, gcd(a,p)=1
bool is_primitive_root(i64 a, u64 p);

// multiplicative order of a mod p; p prime, gcd(a,p)=1
u64 order_mod(i64 a, u64 p);

// a^e mod m given e mod lambda(m), valid whenever e >= 64 (generalized Euler:
// a^e = a^(e mod lambda + lambda) once e >= log2(m), and m < 2^64)
u64 mod_pow_large(i64 a, u64 e_mod_lambda, u64 lambda, u64 m);

}  // namespace discrim::modmath
