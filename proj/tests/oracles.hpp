#pragma once
// independent brute-force references; exact integers via GMP, no engine reuse
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "discrim/discriminator.hpp"
#include "discrim/sequences.hpp"

namespace oracle {

using discrim::engine::Predicate;
using discrim::seq::SequenceSpec;
using u64 = discrim::modmath::u64;

inline std::vector<mpz_class> exact_values(const SequenceSpec& spec, u64 n) {
    std::vector<mpz_class> v;
    v.reserve(n);
    for (u64 k = 1; k <= n; ++k) v.push_back(discrim::seq::exact_value(spec, k));
    return v;
}

inline bool holds(const std::vector<mpz_class>& vals, u64 m, Predicate pred) {
    u64 n = vals.size();
    if (m == 1) {
        if (pred == Predicate::kNoPairSumDivisible) return n <= 1;
        return n <= 1;  // one residue class
    }
    std::vector<mpz_class> r(n);
    for (u64 i = 0; i < n; ++i) {
        mpz_mod_ui(r[i].get_mpz_t(), vals[i].get_mpz_t(), m);
    }
    switch (pred) {
        case Predicate::kPairwiseDistinct:
        case Predicate::kNoPairDiffDivisible:
            for (u64 i = 0; i < n; ++i)
                for (u64 j = i + 1; j < n; ++j)
                    if (r[i] == r[j]) return false;
            return true;
        case Predicate::kNoPairSumDivisible:
            for (u64 i = 0; i < n; ++i)
                for (u64 j = i + 1; j < n; ++j)
                    if ((r[i] + r[j]) % m == 0) return false;
            return true;
        case Predicate::kLastDistinctFromAll:
            for (u64 i = 0; i + 1 < n; ++i)
                if (r[i] == r[n - 1]) return false;
            return true;
    }
    return false;
}

inline u64 least_m(const SequenceSpec& spec, u64 n, Predicate pred = Predicate::kPairwiseDistinct,
                   u64 floor = 2, u64 cap = 2'000'000) {
    auto vals = exact_values(spec, n);
    for (u64 m = floor; m <= cap; ++m)
        if (holds(vals, m, pred)) return m;
    throw std::runtime_error("oracle cap exhausted");
}

}  // namespace oracle
