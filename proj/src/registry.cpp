#include "discrim/registry.hpp"

#include <cstdlib>
#include <stdexcept>

#include "discrim/discriminator.hpp"
#include "discrim/primes.hpp"
#include "discrim/sequences.hpp"

namespace discrim::reg {
namespace {

using engine::Predicate;

void no_params(const std::vector<i64>&) {}

FunctionEntry plain(std::string name, std::string summary, seq::SequenceSpec spec,
                    Predicate pred = Predicate::kPairwiseDistinct, u64 floor = 2) {
    FunctionEntry e;
    e.name = std::move(name);
    e.summary = std::move(summary);
    e.check_params = no_params;
    e.eval = [spec = std::move(spec), pred, floor](const std::vector<i64>&, u64 n, u64 cap) {
        return engine::least_m({spec, n, pred, floor, cap});
    };
    return e;
}

FunctionEntry with_param(std::string name, std::string help, std::string summary,
                         std::function<seq::SequenceSpec(i64)> make,
                         std::function<void(i64)> check, u64 floor = 2) {
    FunctionEntry e;
    e.name = std::move(name);
    e.param_count = 1;
    e.params_help = std::move(help);
    e.summary = std::move(summary);
    e.check_params = [check = std::move(check)](const std::vector<i64>& ps) { check(ps.at(0)); };
    e.eval = [make = std::move(make), floor](const std::vector<i64>& ps, u64 n, u64 cap) {
        return engine::least_m({make(ps.at(0)), n, Predicate::kPairwiseDistinct, floor, cap});
    };
    return e;
}

std::vector<FunctionEntry> build() {
    std::vector<FunctionEntry> r;

    r.push_back(plain("S", "least modulus making 2k(k-1), k=1..n, pairwise distinct",
                      seq::QuadraticPoly{2, -2, 0}));
    r.push_back(plain("T", "least modulus making k(k-1), k=1..n, pairwise distinct",
                      seq::QuadraticPoly{1, -1, 0}));
    r.push_back(plain("half", "least modulus making k(k-1)/2, k=1..n, pairwise distinct",
                      seq::HalfTriangular{}, Predicate::kPairwiseDistinct, 1));
    r.push_back(plain("cubic", "least modulus making k(k^2+1), k=1..n, pairwise distinct",
                      seq::CubicPlus{}, Predicate::kPairwiseDistinct, 1));
    r.push_back(with_param(
        "kd", "d", "least modulus making k(dk-1), k=1..n, pairwise distinct (d >= 2)",
        [](i64 d) { return seq::QuadraticPoly{d, -1, 0}; },
        [](i64 d) {
            if (d < 2) throw std::invalid_argument("kd: d >= 2");
        },
        1));
    r.push_back(plain("c18m", "least modulus making 18k(3k-1), k=1..n, pairwise distinct",
                      seq::QuadraticPoly{54, -18, 0}, Predicate::kPairwiseDistinct, 1));
    r.push_back(plain("c18p", "least modulus making 18k(3k+1), k=1..n, pairwise distinct",
                      seq::QuadraticPoly{54, 18, 0}, Predicate::kPairwiseDistinct, 1));
    r.push_back(with_param(
        "shift2", "d", "least modulus making 2k(k+d), k=1..n, pairwise distinct (d >= 1)",
        [](i64 d) { return seq::QuadraticPoly{2, 2 * d, 0}; },
        [](i64 d) {
            if (d < 1) throw std::invalid_argument("shift2: d >= 1");
        },
        1));
    r.push_back(with_param(
        "lambda", "d", "least modulus making (2k-1)^d, k=1..n, pairwise distinct (d >= 1)",
        [](i64 d) { return seq::OddPower{static_cast<unsigned>(d)}; },
        [](i64 d) {
            if (d < 1 || d > 64) throw std::invalid_argument("lambda: 1 <= d <= 64");
        }));
    r.push_back(with_param(
        "D", "q", "least modulus making k^q(k-1)^q, k=1..n, pairwise distinct (q an odd prime)",
        [](i64 q) { return seq::PowerProduct{static_cast<u64>(q)}; },
        [](i64 q) {
            if (q < 3 || q % 2 == 0 || !primes::is_prime(static_cast<u64>(q)))
                throw std::invalid_argument("D: q must be an odd prime");
        }));
    r.push_back(plain("s", "least modulus making C(2k,k), k=1..n, pairwise distinct",
                      seq::CentralBinomial{}));
    r.push_back(plain("t", "least modulus making k!, k=1..n, pairwise distinct",
                      seq::FactorialShift{seq::FactorialVariant::kPlain}));
    r.push_back(with_param(
        "sr", "r", "least modulus making (rk)!/(k!)^r, k=1..n, pairwise distinct (r >= 2)",
        [](i64 rr) { return seq::Multinomial{static_cast<unsigned>(rr)}; },
        [](i64 rr) {
            if (rr < 2 || rr > 16) throw std::invalid_argument("sr: 2 <= r <= 16");
        }));
    r.push_back(plain("tplus", "least modulus making (k+1)!, k=1..n, pairwise distinct",
                      seq::FactorialShift{seq::FactorialVariant::kShifted}));
    r.push_back(plain("t2k", "least modulus making (2k)!, k=1..n, pairwise distinct",
                      seq::FactorialShift{seq::FactorialVariant::kDouble}));
    r.push_back(plain("usq", "least modulus making (k^2-k)!, k=1..n, pairwise distinct",
                      seq::FactorialShift{seq::FactorialVariant::kSquareGap}));
    r.push_back(plain("ulast", "least modulus keeping n! apart from every earlier k!",
                      seq::FactorialShift{seq::FactorialVariant::kPlain},
                      Predicate::kLastDistinctFromAll));
    {
        FunctionEntry e;
        e.name = "s_seq";
        e.summary = "alternating prime sum s_n = p_n - p_(n-1) + ... +- p_1";
        e.check_params = no_params;
        e.eval = [](const std::vector<i64>&, u64 n, u64) { return (*seq::alt_sum_table(n))[n]; };
        r.push_back(std::move(e));
    }
    r.push_back(plain("aps", "least modulus making 2s_k^2, k=1..n, pairwise distinct",
                      seq::AlternatingPrimeSumSq{seq::AltForm::kTwoS2},
                      Predicate::kPairwiseDistinct, 1));
    r.push_back(plain("b", "least modulus making 2s_k^2-s_k, k=1..n, pairwise distinct",
                      seq::AlternatingPrimeSumSq{seq::AltForm::kTwoS2MinusS},
                      Predicate::kPairwiseDistinct, 1));
    r.push_back(plain("S2", "least modulus making 2S_k^2, k=1..n, pairwise distinct",
                      seq::PrimeSumSq{}));
    {
        // every m <= S_(n-1) divides both S_(n-1)! and S_n!, so start past it
        auto sum_floor = [](u64 n) {
            return n >= 2 ? (*seq::prime_sum_table(n - 1))[n - 2] + 1 : u64{2};
        };
        FunctionEntry e;
        e.name = "Splus";
        e.summary = "least modulus dividing no S_i!+S_j!, i<j<=n";
        e.check_params = no_params;
        e.eval = [sum_floor](const std::vector<i64>&, u64 n, u64 cap) {
            return engine::least_m({seq::FactorialOfPrimeSum{}, n,
                                    Predicate::kNoPairSumDivisible, sum_floor(n), cap});
        };
        r.push_back(std::move(e));
        e = FunctionEntry{};
        e.name = "Sminus";
        e.summary = "least modulus dividing no S_i!-S_j!, i<j<=n";
        e.check_params = no_params;
        e.eval = [sum_floor](const std::vector<i64>&, u64 n, u64 cap) {
            return engine::least_m({seq::FactorialOfPrimeSum{}, n,
                                    Predicate::kNoPairDiffDivisible, sum_floor(n), cap});
        };
        r.push_back(std::move(e));
    }
    r.push_back(plain("w1", "least modulus dividing no P_i-P_j, i<j<=n (P_k primorial)",
                      seq::Primorial{}, Predicate::kNoPairDiffDivisible));
    r.push_back(plain("w2", "least modulus dividing no P_i+P_j, i<j<=n",
                      seq::Primorial{}, Predicate::kNoPairSumDivisible));
    r.push_back(with_param(
        "fa", "a", "least modulus making a^k, k=1..n, pairwise distinct (|a| > 1)",
        [](i64 a) { return seq::GeometricPower{a}; },
        [](i64 a) {
            if (a > -2 && a < 2) throw std::invalid_argument("fa: |a| > 1");
        }));
    r.push_back(with_param(
        "ga", "a", "least modulus making a^(S_k), k=1..n, pairwise distinct (|a| > 1)",
        [](i64 a) { return seq::PowerAtPrimeSums{a}; },
        [](i64 a) {
            if (a > -2 && a < 2) throw std::invalid_argument("ga: |a| > 1");
        }));
    r.push_back(with_param(
        "tA", "A", "least modulus making v_k(A,1), k=1..n, pairwise distinct (|A| > 2)",
        [](i64 A) { return seq::LucasV{A}; },
        [](i64 A) {
            if (A > -3 && A < 3) throw std::invalid_argument("tA: |A| > 2");
        }));
    r.push_back(plain("e", "least modulus making E_2, E_4, ..., E_2n pairwise distinct",
                      seq::EulerAtEven{false}));
    r.push_back(plain("e_star", "least modulus keeping 2E_2n apart from every earlier 2E_2k",
                      seq::EulerAtEven{true}, Predicate::kLastDistinctFromAll));
    r.push_back(plain("tower_fact", "least modulus making 2^(k!), k=1..n, pairwise distinct",
                      seq::TowerPower{seq::TowerVariant::kPowFactorial}));
    r.push_back(plain("tower_pow", "least modulus making 2^(2^k), k=1..n, pairwise distinct",
                      seq::TowerPower{seq::TowerVariant::kPowPow2}));
    return r;
}

}  // namespace

const std::vector<FunctionEntry>& registry() {
    static const std::vector<FunctionEntry> r = build();
    return r;
}

const FunctionEntry* find(const std::string& name) {
    for (const auto& e : registry())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace discrim::reg
