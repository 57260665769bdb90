#pragma once
#include <cstdint>
#include <optional>
#include <vector>

namespace discrim::primes {

using u64 = std::uint64_t;

struct PrimeSieve {
    u64 lo = 2, hi = 2;
    std::vector<bool> composite;  // index i covers lo+i
    bool is_prime(u64 x) const { return x >= lo && x <= hi && !composite[x - lo]; }
};

// exact primality over [lo, hi]; 2 <= lo <= hi; width bounded by the segment cap
PrimeSieve sieve_interval(u64 lo, u64 hi);

// entries per allocation; DISCRIM_SIEVE_SEGMENT overrides the 2^22 default
u64 sieve_segment_length();

// deterministic for all 64-bit inputs
bool is_prime(u64 n);

// p_k, k >= 1
u64 nth_prime(u64 k);

// p_1..p_k
std::vector<u64> first_primes(u64 k);

// least prime strictly greater than x
u64 next_prime_after(u64 x);

struct CongruenceClass {
    u64 d = 1;  // modulus >= 1
    u64 r = 0;  // residue < d
};

inline constexpr u64 kDefaultIterationCap = 1'000'000'000;

// least prime p >= floor with p ≡ r (mod d); absent if none <= ceiling.
// Unbounded searches stop with cap_exhausted after iteration_cap candidates.
std::optional<u64> least_prime_in_class(u64 floor, CongruenceClass cls,
                                        std::optional<u64> ceiling = std::nullopt,
                                        u64 iteration_cap = kDefaultIterationCap);

enum class Window {
    kTwoNTo24,    // [2n-1, floor(2.4 n)]
    kThreeNTo3433 // [3n, floor(3.433 n)]
};

// all n <= n_max whose window holds no prime in cls (complemented class when
// complement is set), ascending
std::vector<u64> scan_exception_set(CongruenceClass cls, Window window, u64 n_max,
                                    bool complement = false);

}  // namespace discrim::primes
