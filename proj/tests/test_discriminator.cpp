#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "discrim/discriminator.hpp"
#include "discrim/errors.hpp"
#include "discrim/sequences.hpp"
#include "oracles.hpp"

using namespace discrim;
using engine::Predicate;
using modmath::u64;

namespace {

u64 least(const seq::SequenceSpec& spec, u64 n, Predicate pred = Predicate::kPairwiseDistinct,
          u64 floor = 2) {
    return engine::least_m({spec, n, pred, floor, 0});
}

void check_prefix(const seq::SequenceSpec& spec, std::vector<u64> want, u64 floor = 2,
                  Predicate pred = Predicate::kPairwiseDistinct) {
    CAPTURE(seq::family_name(spec));
    for (u64 n = 1; n <= want.size(); ++n) {
        CAPTURE(n);
        CHECK(least(spec, n, pred, floor) == want[n - 1]);
    }
}

}  // namespace

TEST_CASE("engine equals the GMP oracle on every family and predicate") {
    struct Case {
        seq::SequenceSpec spec;
        u64 max_n;
    };
    const Case cases[] = {
        {seq::QuadraticPoly{2, -2, 0}, 30},
        {seq::QuadraticPoly{1, -1, 0}, 30},
        {seq::HalfTriangular{}, 30},
        {seq::CubicPlus{}, 25},
        {seq::OddPower{6}, 20},
        {seq::PowerProduct{3}, 15},
        {seq::CentralBinomial{}, 20},
        {seq::Multinomial{4}, 12},
        {seq::FactorialShift{seq::FactorialVariant::kPlain}, 20},
        {seq::FactorialShift{seq::FactorialVariant::kSquareGap}, 10},
        {seq::AlternatingPrimeSumSq{seq::AltForm::kTwoS2}, 25},
        {seq::AlternatingPrimeSumSq{seq::AltForm::kTwoS2MinusS}, 25},
        {seq::PrimeSumSq{}, 15},
        {seq::Primorial{}, 15},
        {seq::GeometricPower{-2}, 15},
        {seq::GeometricPower{9}, 12},
        {seq::PowerAtPrimeSums{-3}, 8},
        {seq::TowerPower{seq::TowerVariant::kPowFactorial}, 9},
        {seq::TowerPower{seq::TowerVariant::kPowPow2}, 14},
        {seq::LucasV{-4}, 15},
        {seq::LucasU{3}, 15},
        {seq::EulerAtEven{false}, 15},
        {seq::EulerAtEven{true}, 15},
    };
    for (const auto& c : cases) {
        CAPTURE(seq::family_name(c.spec));
        for (u64 n = 1; n <= c.max_n; ++n) {
            CAPTURE(n);
            for (auto pred : {Predicate::kPairwiseDistinct, Predicate::kLastDistinctFromAll}) {
                CHECK(least(c.spec, n, pred) == oracle::least_m(c.spec, n, pred));
            }
        }
    }
    // pair-sum / pair-diff predicates against the oracle on the paper's families
    for (u64 n = 1; n <= 10; ++n) {
        CHECK(least(seq::Primorial{}, n, Predicate::kNoPairSumDivisible) ==
              oracle::least_m(seq::Primorial{}, n, Predicate::kNoPairSumDivisible));
        CHECK(least(seq::Primorial{}, n, Predicate::kNoPairDiffDivisible) ==
              oracle::least_m(seq::Primorial{}, n, Predicate::kNoPairDiffDivisible));
        CHECK(least(seq::FactorialOfPrimeSum{}, n, Predicate::kNoPairSumDivisible) ==
              oracle::least_m(seq::FactorialOfPrimeSum{}, n, Predicate::kNoPairSumDivisible));
        CHECK(least(seq::FactorialOfPrimeSum{}, n, Predicate::kNoPairDiffDivisible) ==
              oracle::least_m(seq::FactorialOfPrimeSum{}, n, Predicate::kNoPairDiffDivisible));
    }
}

TEST_CASE("floor-1 searches admit the trivial modulus only at n = 1") {
    CHECK(least(seq::HalfTriangular{}, 1, Predicate::kPairwiseDistinct, 1) == 1);
    CHECK(least(seq::HalfTriangular{}, 2, Predicate::kPairwiseDistinct, 1) == 2);
    CHECK(least(seq::AlternatingPrimeSumSq{seq::AltForm::kTwoS2}, 1,
                Predicate::kPairwiseDistinct, 1) == 1);
    CHECK(least(seq::QuadraticPoly{2, -2, 0}, 1) == 2);  // floor 2 keeps m > 1
}

TEST_CASE("known value prefixes") {
    check_prefix(seq::QuadraticPoly{2, -2, 0}, {2, 3, 5, 7, 11, 11});
    check_prefix(seq::QuadraticPoly{1, -1, 0}, {2, 3, 5, 7, 11, 11, 13, 16, 17, 19, 23, 23});
    check_prefix(seq::HalfTriangular{}, {1, 2, 4, 4, 8, 8, 8, 8, 16, 16}, 1);
    check_prefix(seq::AlternatingPrimeSumSq{seq::AltForm::kTwoS2MinusS},
                 {1, 2, 4, 4, 8, 8, 16, 16, 16, 16}, 1);
    check_prefix(seq::FactorialShift{seq::FactorialVariant::kPlain},
                 {2, 2, 3, 7, 10, 13, 13, 13, 31, 37, 37, 37});
    check_prefix(seq::CentralBinomial{}, {2, 3, 5, 11, 11, 11, 23, 23, 23, 31, 43, 43});
    check_prefix(seq::Multinomial{3}, {2, 5, 8, 11, 13, 17, 19, 29});
    check_prefix(seq::Multinomial{4}, {2, 5, 11, 31, 31, 31, 31, 31});
    check_prefix(seq::Multinomial{5}, {2, 7, 11, 17, 23, 29, 37, 37});
    check_prefix(seq::FactorialShift{seq::FactorialVariant::kShifted},
                 {2, 3, 5, 5, 13, 13, 13, 31, 37, 37});
    check_prefix(seq::FactorialShift{seq::FactorialVariant::kDouble},
                 {2, 3, 5, 7, 13, 13, 13, 17, 17, 37});
    check_prefix(seq::FactorialShift{seq::FactorialVariant::kPlain},
                 {2, 2, 3, 4, 5, 9, 7, 13, 17, 17, 11, 13}, 2, Predicate::kLastDistinctFromAll);
    check_prefix(seq::TowerPower{seq::TowerVariant::kPowFactorial},
                 {2, 3, 7, 11, 11, 29, 29, 53, 107, 107});
    check_prefix(seq::TowerPower{seq::TowerVariant::kPowPow2},
                 {2, 5, 11, 11, 19, 19, 23, 23, 23, 23, 47, 53, 53, 59});
    check_prefix(seq::FactorialShift{seq::FactorialVariant::kSquareGap}, {2, 2, 3, 7, 13, 23, 31, 47});
    check_prefix(seq::FactorialOfPrimeSum{}, {2, 3, 7, 11, 19, 31, 43, 67},
                 2, Predicate::kNoPairSumDivisible);
    check_prefix(seq::FactorialOfPrimeSum{}, {2, 3, 7, 13, 19, 29, 43, 61},
                 2, Predicate::kNoPairDiffDivisible);
    check_prefix(seq::GeometricPower{-2}, {2, 4, 5, 5, 7});
    check_prefix(seq::PowerAtPrimeSums{-3},
                 {2, 5, 11, 11, 11, 11, 23, 23, 23, 47, 47, 47, 59, 59, 59});
}

TEST_CASE("pairwise answers never fall below n (pigeonhole)") {
    for (u64 n = 2; n <= 120; n += 7) {
        CHECK(least(seq::QuadraticPoly{2, -2, 0}, n) >= n);
        CHECK(least(seq::AlternatingPrimeSumSq{seq::AltForm::kTwoS2}, n,
                    Predicate::kPairwiseDistinct, 1) >= n);
    }
}

TEST_CASE("least_m_series agrees with independent per-n calls") {
    auto series = engine::least_m_series(seq::QuadraticPoly{2, -2, 0},
                                         Predicate::kPairwiseDistinct, 1, 120);
    REQUIRE(series.size() == 120);
    for (auto [n, v] : series) CHECK(v == least(seq::QuadraticPoly{2, -2, 0}, n));
    // non-monotone predicate gets no reuse and still matches
    auto ser2 = engine::least_m_series(seq::FactorialShift{seq::FactorialVariant::kPlain},
                                       Predicate::kLastDistinctFromAll, 1, 40);
    for (auto [n, v] : ser2)
        CHECK(v == least(seq::FactorialShift{seq::FactorialVariant::kPlain}, n,
                         Predicate::kLastDistinctFromAll));
    // honors a from > 1 start
    auto ser3 = engine::least_m_series(seq::HalfTriangular{}, Predicate::kPairwiseDistinct, 5, 9, 1);
    REQUIRE(ser3.size() == 5);
    CHECK(ser3.front().first == 5);
    CHECK(ser3.front().second == 8);
    CHECK(ser3.back().second == 16);
}

TEST_CASE("check_predicate on handcrafted residue vectors") {
    std::vector<u64> vals{0, 2, 4};
    CHECK(engine::check_predicate(vals, 5, Predicate::kPairwiseDistinct));
    std::vector<u64> dup{0, 2, 0};
    CHECK(!engine::check_predicate(dup, 5, Predicate::kPairwiseDistinct));
    CHECK(!engine::check_predicate(dup, 5, Predicate::kLastDistinctFromAll));
    std::vector<u64> dup2{0, 0, 2};
    CHECK(engine::check_predicate(dup2, 5, Predicate::kLastDistinctFromAll));
    std::vector<u64> sums{1, 4};  // 1 + 4 = 5
    CHECK(!engine::check_predicate(sums, 5, Predicate::kNoPairSumDivisible));
    CHECK(engine::check_predicate(sums, 5, Predicate::kNoPairDiffDivisible));
    std::vector<u64> self{0, 1, 2};  // 0 + 0 would hit only with i = j; pairs are i < j
    CHECK(engine::check_predicate(self, 4, Predicate::kNoPairSumDivisible));
    std::vector<u64> zeros{0, 0};
    CHECK(!engine::check_predicate(zeros, 4, Predicate::kNoPairSumDivisible));
}

TEST_CASE("minimality: every modulus below the answer fails the predicate") {
    const seq::SequenceSpec specs[] = {
        seq::QuadraticPoly{2, -2, 0},
        seq::HalfTriangular{},
        seq::CentralBinomial{},
        seq::FactorialShift{seq::FactorialVariant::kPlain},
        seq::AlternatingPrimeSumSq{seq::AltForm::kTwoS2},
    };
    for (const auto& spec : specs) {
        CAPTURE(seq::family_name(spec));
        for (u64 n : {1ULL, 2ULL, 5ULL, 17ULL, 40ULL, 90ULL}) {
            u64 ans = least(spec, n);
            for (u64 m = 2; m < ans; ++m) {
                auto vals = seq::values_mod(spec, n, m);
                CHECK(!engine::check_predicate(vals, m, Predicate::kPairwiseDistinct));
            }
        }
    }
}

TEST_CASE("cap handling") {
    CHECK_THROWS_AS(engine::least_m({seq::QuadraticPoly{2, -2, 0}, 50,
                                     Predicate::kPairwiseDistinct, 2, 20}),
                    cap_exhausted);
    CHECK(engine::default_cap(seq::QuadraticPoly{2, -2, 0}, 100) >= 250);
    CHECK(engine::default_cap(seq::CentralBinomial{}, 200) >= 200 * 200);
}
