#include "discrim/closedform.hpp"

#include <stdexcept>

#include "discrim/primes.hpp"

namespace discrim::closed {

u64 S_closed(u64 n) {
    if (n < 1) throw std::domain_error("S_closed: n >= 1");
    return primes::next_prime_after(2 * n - 2);
}

u64 T_closed(u64 n) {
    if (n < 1) throw std::domain_error("T_closed: n >= 1");
    for (u64 m = 2 * n - 1;; ++m) {
        if ((m & (m - 1)) == 0 && m >= 2) return m;  // power of two
        if (primes::is_prime(m)) return m;
    }
}

u64 pow_ceiling(u64 d, u64 n) {
    if (d < 2) throw std::domain_error("pow_ceiling: d >= 2");
    u64 p = 1;
    while (p < n) p *= d;
    return p;
}

u64 thm12iii_closed(u64 n) {
    if (n < 4) throw std::domain_error("thm12iii_closed: n >= 4");
    return *primes::least_prime_in_class(3 * n + 1, {3, 1});
}

u64 rem12_plus_closed(u64 n) {
    if (n < 5) throw std::domain_error("rem12_plus_closed: n >= 5");
    return *primes::least_prime_in_class(3 * n + 1, {3, 2});
}

u64 rem11b_closed(u64 d, u64 n) {
    if (d < 1) throw std::domain_error("rem11b_closed: d >= 1");
    if (n < d + 2) throw std::domain_error("rem11b_closed: n >= d+2");
    u64 x = 2 * n + d;
    return primes::is_prime(x) ? x : primes::next_prime_after(x);
}

u64 lambda_closed(u64 d, u64 n) {
    if (d != 4 && d != 6 && d != 12) throw std::domain_error("lambda_closed: d in {4,6,12}");
    if (n < 3) throw std::domain_error("lambda_closed: n >= 3");
    return *primes::least_prime_in_class(2 * n - 1, {d, d - 1});
}

u64 Dq_closed(u64 q, u64 n) {
    if (q < 3 || q % 2 == 0 || !primes::is_prime(q))
        throw std::domain_error("Dq_closed: q must be an odd prime");
    if (n < 1) throw std::domain_error("Dq_closed: n >= 1");
    u64 p = 2 * n - 1 <= 2 ? 2 : primes::next_prime_after(2 * n - 2);
    while (p % q == 1) p = primes::next_prime_after(p);
    return p;
}

}  // namespace discrim::closed
