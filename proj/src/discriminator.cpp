#include "discrim/discriminator.hpp"

#include <stdexcept>

#include "discrim/errors.hpp"

namespace discrim::engine {

using modmath::sub_mod;

namespace {

// stamped occupancy scratch; generation bump replaces clearing
struct Scratch {
    static constexpr u64 kBudget = u64{1} << 26;  // entries, 512 MiB ceiling

    std::vector<u64> stamp;
    u64 gen = 0;

    void begin(u64 m) {
        if (m > kBudget) throw cap_exhausted("occupancy scratch over memory budget");
        if (stamp.size() < m) stamp.resize(m, 0);
        ++gen;
    }
    bool seen(u64 v) const { return stamp[v] == gen; }
    void mark(u64 v) { stamp[v] = gen; }
};

thread_local Scratch tl_scratch;

bool quadratic_like(const seq::SequenceSpec& spec) {
    return std::holds_alternative<seq::QuadraticPoly>(spec) ||
           std::holds_alternative<seq::HalfTriangular>(spec) ||
           std::holds_alternative<seq::CubicPlus>(spec) ||
           std::holds_alternative<seq::OddPower>(spec) ||
           std::holds_alternative<seq::PowerProduct>(spec);
}

// single candidate test, streaming with first-collision abort
bool candidate_ok(const seq::SequenceSpec& spec, u64 n, u64 m, Predicate pred, Scratch& sc) {
    if (m == 1) return n <= 1;  // everything is 0 mod 1
    sc.begin(m);
    switch (pred) {
        case Predicate::kPairwiseDistinct:
        case Predicate::kNoPairDiffDivisible:
            return seq::stream_mod(spec, n, m, [&](u64, u64 v) {
                if (sc.seen(v)) return false;
                sc.mark(v);
                return true;
            });
        case Predicate::kNoPairSumDivisible:
            return seq::stream_mod(spec, n, m, [&](u64, u64 v) {
                if (sc.seen(v == 0 ? 0 : m - v)) return false;  // v + earlier ≡ 0
                sc.mark(v);
                return true;
            });
        case Predicate::kLastDistinctFromAll: {
            u64 last = 0;
            seq::stream_mod(spec, n, m, [&](u64 k, u64 v) {
                if (k < n) sc.mark(v);
                else last = v;
                return true;
            });
            return n <= 1 || !sc.seen(last);
        }
    }
    throw std::logic_error("predicate");
}

}  // namespace

u64 default_cap(const seq::SequenceSpec& spec, u64 n) {
    if (quadratic_like(spec)) return std::max<u64>(5 * n / 2 + 64, 10'000);
    return std::max<u64>(n * n + 1, 10'000);
}

bool check_predicate(std::span<const u64> values, u64 m, Predicate pred) {
    if (m < 2) throw std::invalid_argument("check_predicate: m >= 2");
    Scratch& sc = tl_scratch;
    sc.begin(m);
    switch (pred) {
        case Predicate::kPairwiseDistinct:
        case Predicate::kNoPairDiffDivisible:
            for (u64 v : values) {
                if (v >= m) throw std::invalid_argument("check_predicate: value out of range");
                if (sc.seen(v)) return false;
                sc.mark(v);
            }
            return true;
        case Predicate::kNoPairSumDivisible:
            for (u64 v : values) {
                if (v >= m) throw std::invalid_argument("check_predicate: value out of range");
                if (sc.seen(v == 0 ? 0 : m - v)) return false;
                sc.mark(v);
            }
            return true;
        case Predicate::kLastDistinctFromAll: {
            if (values.empty()) return true;
            for (size_t i = 0; i + 1 < values.size(); ++i) {
                if (values[i] >= m) throw std::invalid_argument("check_predicate: value out of range");
                sc.mark(values[i]);
            }
            u64 last = values.back();
            if (last >= m) throw std::invalid_argument("check_predicate: value out of range");
            return !sc.seen(last);
        }
    }
    throw std::logic_error("predicate");
}

u64 least_m(const DistinctnessQuery& query) {
    if (query.floor < 1) throw std::invalid_argument("least_m: floor >= 1");
    u64 cap = query.cap ? query.cap : default_cap(query.spec, query.n);
    if (cap < query.floor) throw std::invalid_argument("least_m: cap < floor");
    Scratch& sc = tl_scratch;
    u64 start = query.floor;
    bool pairwise = query.pred == Predicate::kPairwiseDistinct ||
                    query.pred == Predicate::kNoPairDiffDivisible;
    // n pairwise-distinct residues need at least n classes
    if (pairwise && query.n > 1) start = std::max(start, query.n);
    for (u64 m = start; m <= cap; ++m) {
        if (candidate_ok(query.spec, query.n, m, query.pred, sc)) return m;
    }
    throw cap_exhausted("least_m: no modulus <= " + std::to_string(cap) + " for " +
                        seq::family_name(query.spec) + " at n=" + std::to_string(query.n));
}

std::vector<std::pair<u64, u64>> least_m_series(const seq::SequenceSpec& spec, Predicate pred,
                                                u64 n_from, u64 n_to, u64 floor,
                                                u64 cap_override) {
    if (n_from > n_to) throw std::invalid_argument("least_m_series: empty range");
    // success at n+1 implies success at n for the pairwise predicates, so the
    // previous answer is a valid start; the last-vs-all predicate restarts
    bool monotone = pred != Predicate::kLastDistinctFromAll;
    std::vector<std::pair<u64, u64>> out;
    out.reserve(n_to - n_from + 1);
    u64 hint = floor;
    for (u64 n = n_from; n <= n_to; ++n) {
        DistinctnessQuery q{spec, n, pred, monotone ? hint : floor,
                            cap_override ? cap_override : default_cap(spec, n)};
        u64 m = least_m(q);
        out.emplace_back(n, m);
        hint = m;
    }
    return out;
}

}  // namespace discrim::engine
