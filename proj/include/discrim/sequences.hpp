#pragma once
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "discrim/modmath.hpp"

namespace discrim::seq {

using modmath::i64;
using modmath::u64;

struct QuadraticPoly { i64 a, b, c; };              // f(k) = a k^2 + b k + c
struct HalfTriangular {};                           // f(k) = k(k-1)/2
struct CubicPlus {};                                // f(k) = k(k^2+1)
struct OddPower { unsigned d; };                    // f(k) = (2k-1)^d
struct PowerProduct { u64 q; };                     // f(k) = k^q (k-1)^q, q odd prime
struct CentralBinomial {};                          // f(k) = C(2k, k)
struct Multinomial { unsigned r; };                 // f(k) = (rk)!/(k!)^r, r >= 2

enum class FactorialVariant { kPlain, kShifted, kDouble, kSquareGap };
struct FactorialShift { FactorialVariant v; };      // k!, (k+1)!, (2k)!, (k^2-k)!

enum class AltForm { kTwoS2, kTwoS2MinusS };
struct AlternatingPrimeSumSq { AltForm form; };     // 2 s_k^2 or 2 s_k^2 - s_k

struct PrimeSumSq {};                               // f(k) = 2 S_k^2
struct FactorialOfPrimeSum {};                      // f(k) = S_k!
struct Primorial {};                                // f(k) = p_1 ... p_k
struct GeometricPower { i64 a; };                   // f(k) = a^k, |a| > 1
struct PowerAtPrimeSums { i64 a; };                 // f(k) = a^{S_k}

enum class TowerVariant { kPowFactorial, kPowPow2 };
struct TowerPower { TowerVariant v; };              // 2^{k!} or 2^{2^k}

struct LucasV { i64 A; };                           // v_k(A, 1), |A| > 2
struct LucasU { i64 A; };                           // u_k(A, 1)
struct EulerAtEven { bool doubled = false; };       // f(k) = E_{2k} or 2 E_{2k}

using SequenceSpec =
    std::variant<QuadraticPoly, HalfTriangular, CubicPlus, OddPower, PowerProduct,
                 CentralBinomial, Multinomial, FactorialShift, AlternatingPrimeSumSq,
                 PrimeSumSq, FactorialOfPrimeSum, Primorial, GeometricPower,
                 PowerAtPrimeSums, TowerPower, LucasV, LucasU, EulerAtEven>;

// f(1..n) mod m, each entry in [0, m); m >= 2
std::vector<u64> values_mod(const SequenceSpec& spec, u64 n, u64 m);

// streams f(k) mod m into sink(k, residue) for k = 1..n; stops early when the
// sink returns false. Returns false iff stopped early.
bool stream_mod(const SequenceSpec& spec, u64 n, u64 m,
                const std::function<bool(u64, u64)>& sink);

struct AlternatingSumTable {
    std::vector<u64> s;  // s[0] = 0, s[k] = p_k - s[k-1]
    std::unordered_map<u64, std::vector<u64>> index_of;
};

AlternatingSumTable alternating_sums(u64 n);

// shared grow-only tables; snapshots are safe across threads
std::shared_ptr<const std::vector<u64>> prime_table(u64 count);
std::shared_ptr<const std::vector<u64>> prime_sum_table(u64 count);      // S_1..S_count
std::shared_ptr<const std::vector<u64>> alt_sum_table(u64 count);        // s_0..s_count

// E_2, E_4, ..., E_{2n} mod m, canonicalized into [0, m); n <= 5000
std::vector<u64> euler_numbers_mod(u64 n, u64 m);

// u_1..u_n and v_1..v_n of x_{k+1} = A x_k - B x_{k-1} mod m
std::pair<std::vector<u64>, std::vector<u64>> lucas_pair_mod(i64 A, i64 B, u64 n, u64 m);

// exact f(k) for oracle cross-checks; throws when the value would be huge
// (factorial-type arguments capped at 1e5, tower exponents at 20 bits)
mpz_class exact_value(const SequenceSpec& spec, u64 k);

// stable family name for diagnostics
std::string family_name(const SequenceSpec& spec);

}  // namespace discrim::seq
