#pragma once
#include <cstdint>

namespace discrim::closed {

using u64 = std::uint64_t;

// least prime greater than 2n-2; n >= 1
u64 S_closed(u64 n);

// min{m >= 2n-1 : m prime or a positive power of 2}; n >= 1
u64 T_closed(u64 n);

// least d^h >= n, integer arithmetic only
u64 pow_ceiling(u64 d, u64 n);

// least prime p > 3n with p ≡ 1 (mod 3); n >= 4
u64 thm12iii_closed(u64 n);

// least prime p > 3n with p ≡ 2 (mod 3); n >= 5
u64 rem12_plus_closed(u64 n);

// least prime p >= 2n+d; d >= 1, n >= d+2
u64 rem11b_closed(u64 d, u64 n);

// least prime p >= 2n-1 with p ≡ -1 (mod d); d in {4,6,12}, n >= 3
u64 lambda_closed(u64 d, u64 n);

// least prime p >= 2n-1 with p ≢ 1 (mod q); q odd prime
u64 Dq_closed(u64 q, u64 n);

}  // namespace discrim::closed
