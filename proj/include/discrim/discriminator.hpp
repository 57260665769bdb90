#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "discrim/sequences.hpp"

namespace discrim::engine {

using modmath::u64;

enum class Predicate {
    kPairwiseDistinct,
    kNoPairSumDivisible,
    kNoPairDiffDivisible,  // same check as kPairwiseDistinct
    kLastDistinctFromAll,
};

struct DistinctnessQuery {
    seq::SequenceSpec spec;
    u64 n = 1;
    Predicate pred = Predicate::kPairwiseDistinct;
    u64 floor = 2;
    u64 cap = 0;  // 0 picks default_cap
};

// paper-guided search ceiling for a family at index n
u64 default_cap(const seq::SequenceSpec& spec, u64 n);

// all values already reduced into [0, m)
bool check_predicate(std::span<const u64> values, u64 m, Predicate pred);

// least m in [floor, cap] satisfying pred over f(1..n); throws cap_exhausted
u64 least_m(const DistinctnessQuery& query);

// per-n least_m over [n_from, n_to]. Nondecreasing-hint reuse applies only to
// the pairwise predicates (distinctness at n+1 implies it at n).
std::vector<std::pair<u64, u64>> least_m_series(const seq::SequenceSpec& spec,
                                                Predicate pred, u64 n_from, u64 n_to,
                                                u64 floor = 2, u64 cap_override = 0);

}  // namespace discrim::engine
