#include "discrim/modmath.hpp"

#include <numeric>
#include <stdexcept>

#include "discrim/errors.hpp"
#include "discrim/primes.hpp"

namespace discrim::modmath {

u64 canonical(i64 a, u64 m) {
    if (m == 0) throw std::invalid_argument("canonical: m = 0");
    i64 r = a % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

Barrett::Barrett(u64 modulus) : m(modulus) {
    if (m == 0) throw std::invalid_argument("Barrett: m = 0");
    // floor(2^64 / m) saturates at 2^64 - 1 for m = 1; reduce still lands in [0, m)
    inv = m == 1 ? ~u64{0} : static_cast<u64>((static_cast<u128>(1) << 64) / m);
}

u64 mod_pow(i64 base, u64 exponent, u64 m) {
    if (m == 0) throw std::invalid_argument("mod_pow: m = 0");
    if (m == 1) return 0;
    u64 b = canonical(base, m);
    u64 r = 1;
    while (exponent) {
        if (exponent & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        exponent >>= 1;
    }
    return r;
}

int jacobi(i64 a, u64 n) {
    if (n % 2 == 0) throw std::invalid_argument("jacobi: even n");
    u64 x = canonical(a, n);
    int sign = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            u64 r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) sign = -sign;
        x %= n;
    }
    return n == 1 ? sign : 0;
}

namespace {

constexpr u64 kFactorBudget = 1'000'000'000'000ULL;

// primes to 1e6; any cofactor left after these is prime for inputs <= 1e12
const std::vector<u64>& small_primes() {
    static const std::vector<u64> table = [] {
        auto sv = primes::sieve_interval(2, 1'000'000);
        std::vector<u64> out;
        out.reserve(78498);
        for (u64 x = 2; x <= 1'000'000; ++x)
            if (sv.is_prime(x)) out.push_back(x);
        return out;
    }();
    return table;
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0 || n > kFactorBudget) throw std::invalid_argument("factorize: n out of budget");
    Factorization f;
    for (u64 p : small_primes()) {
        if (p * p > n) break;
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

u64 carmichael(u64 m) {
    if (m == 0 || m > kFactorBudget) throw std::invalid_argument("carmichael: m out of budget");
    u64 lam = 1;
    for (auto [p, e] : factorize(m).factors) {
        u64 comp;
        if (p == 2) {
            comp = e == 1 ? 1 : (e == 2 ? 2 : u64{1} << (e - 2));
        } else {
            comp = p - 1;
            for (unsigned i = 1; i < e; ++i) comp *= p;
        }
        lam = std::lcm(lam, comp);
    }
    return lam;
}

u64 order_mod(i64 a, u64 p) {
    if (!primes::is_prime(p)) throw std::invalid_argument("order_mod: p not prime");
    u64 ar = canonical(a, p);
    if (ar == 0) throw std::invalid_argument("order_mod: a divisible by p");
    u64 ord = p - 1;
    for (auto [q, e] : factorize(p - 1).factors) {
        (void)e;
        while (ord % q == 0 && mod_pow(static_cast<i64>(ar), ord / q, p) == 1) ord /= q;
    }
    return ord;
}

bool is_primitive_root(i64 a, u64 p) {
    if (!primes::is_prime(p)) throw std::invalid_argument("is_primitive_root: p not prime");
    u64 ar = canonical(a, p);
    if (ar == 0) throw std::invalid_argument("is_primitive_root: a divisible by p");
    if (p == 2) return true;  // trivial group
    for (auto [q, e] : factorize(p - 1).factors) {
        (void)e;
        if (mod_pow(static_cast<i64>(ar), (p - 1) / q, p) == 1) return false;
    }
    return true;
}

u64 mod_pow_large(i64 a, u64 e_mod_lambda, u64 lambda, u64 m) {
    // a^(e mod lambda + lambda) is exact once the true e >= log2(m)
    return mod_pow(a, e_mod_lambda + lambda, m);
}

}  // namespace discrim::modmath
