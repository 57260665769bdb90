#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <stdexcept>
#include <vector>

#include "discrim/closedform.hpp"
#include "discrim/discriminator.hpp"
#include "discrim/sequences.hpp"

using namespace discrim;
using modmath::u64;

TEST_CASE("fixed values") {
    const u64 s_want[] = {2, 3, 5, 7, 11, 11};
    for (u64 n = 1; n <= 6; ++n) CHECK(closed::S_closed(n) == s_want[n - 1]);
    CHECK(closed::S_closed(100) == 199);

    const u64 t_want[] = {2, 3, 5, 7, 11, 11, 13, 16, 17, 19, 23, 23};
    for (u64 n = 1; n <= 12; ++n) CHECK(closed::T_closed(n) == t_want[n - 1]);
    CHECK(closed::T_closed(64) == 127);
    CHECK(closed::T_closed(1024) == 2048);  // 2047 = 23*89, even; next is the power of two

    CHECK(closed::pow_ceiling(2, 1) == 1);
    CHECK(closed::pow_ceiling(2, 5) == 8);
    CHECK(closed::pow_ceiling(3, 1) == 1);
    CHECK(closed::pow_ceiling(3, 10) == 27);
    CHECK(closed::pow_ceiling(3, 27) == 27);
    CHECK(closed::pow_ceiling(3, 28) == 81);

    CHECK(closed::thm12iii_closed(4) == 13);
    CHECK(closed::thm12iii_closed(5) == 19);
    CHECK(closed::rem12_plus_closed(5) == 17);
    CHECK(closed::rem11b_closed(1, 3) == 7);
    CHECK(closed::rem11b_closed(1, 4) == 11);
    CHECK(closed::rem11b_closed(2, 4) == 11);
    CHECK(closed::rem11b_closed(3, 5) == 13);
    CHECK(closed::rem11b_closed(4, 6) == 17);

    CHECK(closed::lambda_closed(4, 3) == 7);
    CHECK(closed::lambda_closed(6, 3) == 5);
    CHECK(closed::lambda_closed(12, 3) == 11);
    CHECK(closed::lambda_closed(12, 150) == 311);

    CHECK(closed::Dq_closed(3, 1) == 2);
    CHECK(closed::Dq_closed(3, 2) == 3);
    CHECK(closed::Dq_closed(3, 8) == 17);
    CHECK(closed::Dq_closed(5, 9) == 17);
    CHECK(closed::Dq_closed(7, 4) == 7);
}

TEST_CASE("domain checks throw") {
    CHECK_THROWS_AS(closed::S_closed(0), std::domain_error);
    CHECK_THROWS_AS(closed::T_closed(0), std::domain_error);
    CHECK_THROWS_AS(closed::pow_ceiling(1, 5), std::domain_error);
    CHECK_THROWS_AS(closed::thm12iii_closed(3), std::domain_error);
    CHECK_THROWS_AS(closed::rem12_plus_closed(4), std::domain_error);
    CHECK_THROWS_AS(closed::rem11b_closed(0, 5), std::domain_error);
    CHECK_THROWS_AS(closed::rem11b_closed(3, 4), std::domain_error);
    CHECK_THROWS_AS(closed::lambda_closed(5, 10), std::domain_error);
    CHECK_THROWS_AS(closed::lambda_closed(12, 2), std::domain_error);
    CHECK_THROWS_AS(closed::Dq_closed(9, 5), std::domain_error);
    CHECK_THROWS_AS(closed::Dq_closed(2, 5), std::domain_error);
}

namespace {

u64 search(const seq::SequenceSpec& spec, u64 n, u64 floor) {
    return engine::least_m({spec, n, engine::Predicate::kPairwiseDistinct, floor, 0});
}

}  // namespace

TEST_CASE("closed forms match the search engine") {
    struct Case {
        seq::SequenceSpec spec;
        std::function<u64(u64)> closed;
        u64 floor;
        u64 lo;
    };
    const Case cases[] = {
        {seq::QuadraticPoly{2, -2, 0}, closed::S_closed, 2, 1},
        {seq::QuadraticPoly{1, -1, 0}, closed::T_closed, 2, 1},
        {seq::HalfTriangular{}, [](u64 n) { return closed::pow_ceiling(2, n); }, 1, 1},
        {seq::QuadraticPoly{2, -1, 0}, [](u64 n) { return closed::pow_ceiling(2, n); }, 1, 1},
        {seq::QuadraticPoly{3, -1, 0}, [](u64 n) { return closed::pow_ceiling(3, n); }, 1, 1},
        {seq::QuadraticPoly{54, -18, 0}, closed::thm12iii_closed, 1, 4},
        {seq::CubicPlus{}, [](u64 n) { return closed::pow_ceiling(3, n); }, 1, 1},
        {seq::QuadraticPoly{54, 18, 0}, closed::rem12_plus_closed, 1, 5},
        {seq::QuadraticPoly{2, 2, 0}, [](u64 n) { return closed::rem11b_closed(1, n); }, 1, 3},
        {seq::QuadraticPoly{2, 6, 0}, [](u64 n) { return closed::rem11b_closed(3, n); }, 1, 5},
        {seq::OddPower{4}, [](u64 n) { return closed::lambda_closed(4, n); }, 2, 3},
        {seq::OddPower{6}, [](u64 n) { return closed::lambda_closed(6, n); }, 2, 3},
        {seq::OddPower{12}, [](u64 n) { return closed::lambda_closed(12, n); }, 2, 3},
    };
    for (const auto& c : cases) {
        CAPTURE(seq::family_name(c.spec));
        for (u64 n = c.lo; n <= 60; ++n) {
            CAPTURE(n);
            CHECK(search(c.spec, n, c.floor) == c.closed(n));
        }
    }
    // k^q (k-1)^q: equality holds outside the small-n corner n <= 17, 5q < 12n
    for (u64 q : {3ULL, 5ULL, 7ULL, 11ULL}) {
        CAPTURE(q);
        for (u64 n = 1; n <= 60; ++n) {
            if (n <= 17 && 5 * q < 12 * n) continue;
            CAPTURE(n);
            CHECK(search(seq::PowerProduct{q}, n, 2) == closed::Dq_closed(q, n));
        }
    }
}
