#include "discrim/primes.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "discrim/errors.hpp"
#include "discrim/modmath.hpp"

namespace discrim::primes {

using modmath::mul_mod;
using modmath::u128;

u64 sieve_segment_length() {
    static const u64 len = [] {
        if (const char* env = std::getenv("DISCRIM_SIEVE_SEGMENT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v >= 1024) return static_cast<u64>(v);
        }
        return u64{1} << 22;
    }();
    return len;
}

namespace {

// base primes to sqrt(hi), grown on demand, guarded snapshot
std::vector<u64> simple_sieve(u64 limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

void mark_segment(u64 lo, u64 hi, const std::vector<u64>& base, std::vector<bool>& comp) {
    comp.assign(hi - lo + 1, false);
    for (u64 p : base) {
        if (p * p > hi) break;
        u64 start = std::max(p * p, (lo + p - 1) / p * p);
        for (u64 j = start; j <= hi; j += p) comp[j - lo] = true;
    }
    if (lo == 1) comp[0] = true;
}

}  // namespace

PrimeSieve sieve_interval(u64 lo, u64 hi) {
    if (lo < 2 || lo > hi) throw std::invalid_argument("sieve_interval: need 2 <= lo <= hi");
    u64 cap = std::max<u64>(sieve_segment_length() * 64, u64{1} << 28);
    if (hi - lo + 1 > cap) throw std::invalid_argument("sieve_interval: width over memory cap");
    PrimeSieve sv;
    sv.lo = lo;
    sv.hi = hi;
    u64 r = 2;
    while (r <= 3037000499ULL && r * r <= hi) ++r;
    --r;  // floor(sqrt(hi)), overflow-safe
    auto base = simple_sieve(std::max<u64>(r, 2));
    mark_segment(lo, hi, base, sv.composite);
    return sv;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d >>= 1; ++s; }
    // witness set exact below 2^64
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        if (a % n == 0) continue;  // base divisible by n says nothing
        u64 x = modmath::mod_pow(static_cast<modmath::i64>(a % n), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> first_primes(u64 k) {
    std::vector<u64> out;
    if (k == 0) return out;
    out.reserve(k);
    u64 seg = sieve_segment_length();
    u64 lo = 2;
    std::vector<u64> base;
    std::vector<bool> comp;
    while (out.size() < k) {
        u64 hi = lo + seg - 1;
        u64 r = 2;
        while (r * r <= hi) ++r;
        --r;
        if (base.empty() || base.back() < r) base = simple_sieve(std::max<u64>(r, 2));
        mark_segment(lo, hi, base, comp);
        for (u64 x = lo; x <= hi && out.size() < k; ++x)
            if (!comp[x - lo]) out.push_back(x);
        lo = hi + 1;
    }
    return out;
}

u64 nth_prime(u64 k) {
    if (k == 0) throw std::invalid_argument("nth_prime: k >= 1");
    return first_primes(k).back();
}

u64 next_prime_after(u64 x) {
    u64 n = x + 1;
    if (n <= 2) return 2;
    if (n % 2 == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

std::optional<u64> least_prime_in_class(u64 floor, CongruenceClass cls,
                                        std::optional<u64> ceiling, u64 iteration_cap) {
    if (cls.d == 0 || cls.r >= cls.d) throw std::invalid_argument("least_prime_in_class: bad class");
    // first progression member >= max(floor, 2)
    u64 start = std::max<u64>(floor, 2);
    u64 p = start + (cls.r + cls.d - start % cls.d) % cls.d;
    u64 tried = 0;
    for (; !ceiling || p <= *ceiling; p += cls.d) {
        if (++tried > iteration_cap)
            throw cap_exhausted("least_prime_in_class: iteration cap exhausted");
        if (is_prime(p)) return p;
        if (p > (u64{1} << 63)) throw cap_exhausted("least_prime_in_class: range overflow");
    }
    return std::nullopt;
}

std::vector<u64> scan_exception_set(CongruenceClass cls, Window window, u64 n_max,
                                    bool complement) {
    if (cls.d == 0 || cls.r >= cls.d) throw std::invalid_argument("scan_exception_set: bad class");
    auto win = [&](u64 n) -> std::pair<u64, u64> {
        if (window == Window::kTwoNTo24) return {2 * n - 1, 12 * n / 5};
        return {3 * n, 3433 * n / 1000};
    };
    u64 top = win(n_max).second;
    // one shared sieve; windows are short and overlap heavily
    auto sv = sieve_interval(2, std::max<u64>(top, 2));
    std::vector<u64> in_class;
    for (u64 x = 2; x <= top; ++x) {
        if (!sv.is_prime(x)) continue;
        bool member = (x % cls.d == cls.r);
        if (member != complement) in_class.push_back(x);
    }
    std::vector<u64> exceptions;
    for (u64 n = 1; n <= n_max; ++n) {
        auto [a, b] = win(n);
        auto it = std::lower_bound(in_class.begin(), in_class.end(), a);
        if (it == in_class.end() || *it > b) exceptions.push_back(n);
    }
    return exceptions;
}

}  // namespace discrim::primes
