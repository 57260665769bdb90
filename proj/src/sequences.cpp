#include "discrim/sequences.hpp"

#include <mutex>
#include <stdexcept>

#include "discrim/errors.hpp"
#include "discrim/primes.hpp"

namespace discrim::seq {

using modmath::add_mod;
using modmath::canonical;
using modmath::mod_pow;
using modmath::mod_pow_large;
using modmath::mul_mod;
using modmath::sub_mod;

namespace {

constexpr u64 kEulerBudget = 5000;

struct GrowTable {
    std::mutex mu;
    std::shared_ptr<const std::vector<u64>> snap;
};

std::shared_ptr<const std::vector<u64>> primes_snapshot(u64 count) {
    static GrowTable t;
    std::lock_guard lock(t.mu);
    if (!t.snap || t.snap->size() < count) {
        u64 want = std::max<u64>(count, t.snap ? t.snap->size() * 2 : 1024);
        t.snap = std::make_shared<const std::vector<u64>>(primes::first_primes(want));
    }
    return t.snap;
}

std::shared_ptr<const std::vector<u64>> prime_sums_snapshot(u64 count) {
    static GrowTable t;
    std::lock_guard lock(t.mu);
    if (!t.snap || t.snap->size() < count) {
        u64 want = std::max<u64>(count, t.snap ? t.snap->size() * 2 : 1024);
        auto ps = primes_snapshot(want);
        std::vector<u64> sums(want);
        u64 acc = 0;
        for (u64 i = 0; i < want; ++i) sums[i] = acc += (*ps)[i];
        t.snap = std::make_shared<const std::vector<u64>>(std::move(sums));
    }
    return t.snap;
}

std::shared_ptr<const std::vector<u64>> alt_sums_snapshot(u64 count) {
    static GrowTable t;
    std::lock_guard lock(t.mu);
    // entry k holds s_k, entry 0 holds s_0 = 0
    if (!t.snap || t.snap->size() < count + 1) {
        u64 want = std::max<u64>(count + 1, t.snap ? t.snap->size() * 2 : 1024);
        auto ps = primes_snapshot(want);
        std::vector<u64> s(want);
        s[0] = 0;
        for (u64 k = 1; k < want; ++k) s[k] = (*ps)[k - 1] - s[k - 1];  // s_k <= p_k keeps this nonnegative
        t.snap = std::make_shared<const std::vector<u64>>(std::move(s));
    }
    return t.snap;
}

using Sink = std::function<bool(u64, u64)>;

bool stream_quadratic(i64 a, i64 b, i64 c, u64 n, u64 m, const Sink& sink) {
    u64 ar = canonical(a, m), br = canonical(b, m), cr = canonical(c, m);
    for (u64 k = 1; k <= n; ++k) {
        u64 kr = k % m;
        u64 v = add_mod(mul_mod(ar, mul_mod(kr, kr, m), m), mul_mod(br, kr, m), m);
        v = add_mod(v, cr, m);
        if (!sink(k, v)) return false;
    }
    return true;
}

bool stream_factorial_targets(const std::vector<u64>& targets, u64 m, const Sink& sink) {
    // targets ascending; emits t! mod m at each target, zero once the running
    // product vanishes
    u64 running = 1 % m;
    u64 t = 0;
    for (u64 k = 0; k < targets.size(); ++k) {
        u64 goal = targets[k];
        if (running != 0) {
            while (t < goal) {
                ++t;
                running = mul_mod(running, t % m, m);
                if (running == 0) break;
            }
        }
        t = std::max(t, goal);  // skipped factors are irrelevant once zero
        if (!sink(k + 1, running)) return false;
    }
    return true;
}

bool stream_binomial_rows(u64 rows_needed, u64 m,
                          const std::function<bool(u64 row, const std::vector<u64>&)>& on_row) {
    std::vector<u64> row{1 % m};
    if (!on_row(0, row)) return false;
    for (u64 r = 1; r <= rows_needed; ++r) {
        row.push_back(1 % m);
        for (u64 c = r - 1; c >= 1; --c) row[c] = add_mod(row[c], row[c - 1], m);
        if (!on_row(r, row)) return false;
    }
    return true;
}

bool stream_euler(u64 n, u64 m, bool doubled, const Sink& sink) {
    if (n > kEulerBudget) throw std::invalid_argument("euler: quadratic budget exceeded");
    std::vector<u64> ev{1 % m};  // E_0, E_2, ... mod m
    ev.reserve(n + 1);
    return stream_binomial_rows(2 * n, m, [&](u64 r, const std::vector<u64>& row) {
        if (r == 0 || r % 2) return true;
        u64 j = r / 2;
        u64 sum = 0;
        for (u64 i = 1; i <= j; ++i) sum = add_mod(sum, mul_mod(row[2 * i], ev[j - i], m), m);
        ev.push_back(sub_mod(0, sum, m));
        return sink(j, doubled ? add_mod(ev[j], ev[j], m) : ev[j]);
    });
}

struct StreamVisitor {
    u64 n, m;
    const Sink& sink;

    bool operator()(const QuadraticPoly& f) const { return stream_quadratic(f.a, f.b, f.c, n, m, sink); }

    bool operator()(const HalfTriangular&) const {
        for (u64 k = 1; k <= n; ++k) {
            u64 h = k % 2 ? mul_mod(k % m, ((k - 1) / 2) % m, m) : mul_mod((k / 2) % m, (k - 1) % m, m);
            if (!sink(k, h)) return false;
        }
        return true;
    }

    bool operator()(const CubicPlus&) const {
        for (u64 k = 1; k <= n; ++k) {
            u64 kr = k % m;
            if (!sink(k, mul_mod(kr, add_mod(mul_mod(kr, kr, m), 1 % m, m), m))) return false;
        }
        return true;
    }

    bool operator()(const OddPower& f) const {
        if (f.d == 0) throw std::invalid_argument("OddPower: d >= 1");
        for (u64 k = 1; k <= n; ++k)
            if (!sink(k, mod_pow(static_cast<i64>((2 * k - 1) % m), f.d, m))) return false;
        return true;
    }

    bool operator()(const PowerProduct& f) const {
        if (f.q < 3 || f.q % 2 == 0 || !primes::is_prime(f.q))
            throw std::invalid_argument("PowerProduct: q must be an odd prime");
        for (u64 k = 1; k <= n; ++k) {
            u64 v = mul_mod(mod_pow(static_cast<i64>(k % m), f.q, m),
                            mod_pow(static_cast<i64>((k - 1) % m), f.q, m), m);
            if (!sink(k, v)) return false;
        }
        return true;
    }

    bool operator()(const CentralBinomial&) const {
        return stream_binomial_rows(2 * n, m, [&](u64 r, const std::vector<u64>& row) {
            if (r == 0 || r % 2) return true;
            return sink(r / 2, row[r / 2]);
        });
    }

    bool operator()(const Multinomial& f) const {
        if (f.r < 2) throw std::invalid_argument("Multinomial: r >= 2");
        // f(k) = prod_{j=2..r} C(jk, k); samples collected as rows pass
        std::vector<std::vector<u64>> samp(f.r + 1, std::vector<u64>(n + 1, 0));
        u64 next_emit = 1;
        return stream_binomial_rows(f.r * n, m, [&](u64 r, const std::vector<u64>& row) {
            if (r == 0) return true;
            for (unsigned j = 2; j <= f.r; ++j)
                if (r % j == 0 && r / j <= n) samp[j][r / j] = row[r / j];
            while (next_emit <= n && f.r * next_emit <= r) {
                u64 v = 1 % m;
                for (unsigned j = 2; j <= f.r; ++j) v = mul_mod(v, samp[j][next_emit], m);
                if (!sink(next_emit, v)) return false;
                ++next_emit;
            }
            return true;
        });
    }

    bool operator()(const FactorialShift& f) const {
        std::vector<u64> targets(n);
        for (u64 k = 1; k <= n; ++k) {
            switch (f.v) {
                case FactorialVariant::kPlain: targets[k - 1] = k; break;
                case FactorialVariant::kShifted: targets[k - 1] = k + 1; break;
                case FactorialVariant::kDouble: targets[k - 1] = 2 * k; break;
                case FactorialVariant::kSquareGap: targets[k - 1] = k * k - k; break;
            }
        }
        return stream_factorial_targets(targets, m, sink);
    }

    bool operator()(const AlternatingPrimeSumSq& f) const {
        auto s = alt_sums_snapshot(n);
        u64 two = 2 % m;
        for (u64 k = 1; k <= n; ++k) {
            u64 sr = (*s)[k] % m;
            u64 v = mul_mod(two, mul_mod(sr, sr, m), m);
            if (f.form == AltForm::kTwoS2MinusS) v = sub_mod(v, sr, m);
            if (!sink(k, v)) return false;
        }
        return true;
    }

    bool operator()(const PrimeSumSq&) const {
        auto sums = prime_sums_snapshot(n);
        u64 two = 2 % m;
        for (u64 k = 1; k <= n; ++k) {
            u64 sr = (*sums)[k - 1] % m;
            if (!sink(k, mul_mod(two, mul_mod(sr, sr, m), m))) return false;
        }
        return true;
    }

    bool operator()(const FactorialOfPrimeSum&) const {
        auto sums = prime_sums_snapshot(n);
        std::vector<u64> targets(sums->begin(), sums->begin() + n);
        return stream_factorial_targets(targets, m, sink);
    }

    bool operator()(const Primorial&) const {
        auto ps = primes_snapshot(n);
        u64 running = 1 % m;
        for (u64 k = 1; k <= n; ++k) {
            running = mul_mod(running, (*ps)[k - 1] % m, m);
            if (!sink(k, running)) return false;
        }
        return true;
    }

    bool operator()(const GeometricPower& f) const {
        if (f.a > -2 && f.a < 2) throw std::invalid_argument("GeometricPower: |a| > 1");
        u64 x = canonical(f.a, m);
        u64 running = 1 % m;
        for (u64 k = 1; k <= n; ++k) {
            running = mul_mod(running, x, m);
            if (!sink(k, running)) return false;
        }
        return true;
    }

    bool operator()(const PowerAtPrimeSums& f) const {
        auto ps = primes_snapshot(n);
        u64 running = 1 % m;
        for (u64 k = 1; k <= n; ++k) {
            running = mul_mod(running, mod_pow(f.a, (*ps)[k - 1], m), m);
            if (!sink(k, running)) return false;
        }
        return true;
    }

    bool operator()(const TowerPower& f) const {
        u64 lambda = modmath::carmichael(m);
        if (f.v == TowerVariant::kPowFactorial) {
            // exponent k!: exact through 4! = 24 < 64, reduced afterwards
            u64 e_mod = 1 % lambda;
            for (u64 k = 1; k <= n; ++k) {
                e_mod = mul_mod(e_mod, k % lambda, lambda);
                u64 v;
                if (k <= 4) {
                    u64 e = 1;
                    for (u64 i = 2; i <= k; ++i) e *= i;
                    v = mod_pow(2, e, m);
                } else {
                    v = mod_pow_large(2, e_mod, lambda, m);
                }
                if (!sink(k, v)) return false;
            }
            return true;
        }
        // exponent 2^k: exact through 2^5 = 32 < 64, reduced afterwards
        u64 e_mod = 2 % lambda;
        for (u64 k = 1; k <= n; ++k) {
            u64 v = k <= 5 ? mod_pow(2, u64{1} << k, m) : mod_pow_large(2, e_mod, lambda, m);
            if (!sink(k, v)) return false;
            e_mod = mul_mod(e_mod, 2 % lambda, lambda);
        }
        return true;
    }

    bool operator()(const LucasV& f) const {
        if (f.A >= -2 && f.A <= 2) throw std::invalid_argument("LucasV: |A| > 2");
        u64 ar = canonical(f.A, m);
        u64 prev = 2 % m, cur = ar;
        for (u64 k = 1; k <= n; ++k) {
            if (!sink(k, cur)) return false;
            u64 next = sub_mod(mul_mod(ar, cur, m), prev, m);
            prev = cur;
            cur = next;
        }
        return true;
    }

    bool operator()(const LucasU& f) const {
        if (f.A >= -2 && f.A <= 2) throw std::invalid_argument("LucasU: |A| > 2");
        u64 ar = canonical(f.A, m);
        u64 prev = 0, cur = 1 % m;
        for (u64 k = 1; k <= n; ++k) {
            if (!sink(k, cur)) return false;
            u64 next = sub_mod(mul_mod(ar, cur, m), prev, m);
            prev = cur;
            cur = next;
        }
        return true;
    }

    bool operator()(const EulerAtEven& f) const { return stream_euler(n, m, f.doubled, sink); }
};

}  // namespace

bool stream_mod(const SequenceSpec& spec, u64 n, u64 m, const Sink& sink) {
    if (m < 2) throw std::invalid_argument("stream_mod: m >= 2");
    if (n == 0) return true;
    return std::visit(StreamVisitor{n, m, sink}, spec);
}

std::vector<u64> values_mod(const SequenceSpec& spec, u64 n, u64 m) {
    std::vector<u64> out;
    out.reserve(n);
    stream_mod(spec, n, m, [&](u64, u64 v) {
        out.push_back(v);
        return true;
    });
    return out;
}

AlternatingSumTable alternating_sums(u64 n) {
    if (n == 0) throw std::invalid_argument("alternating_sums: n >= 1");
    auto snap = alt_sums_snapshot(n);
    AlternatingSumTable t;
    t.s.assign(snap->begin(), snap->begin() + n + 1);
    for (u64 k = 0; k <= n; ++k) t.index_of[t.s[k]].push_back(k);
    return t;
}

std::shared_ptr<const std::vector<u64>> prime_table(u64 count) { return primes_snapshot(count); }
std::shared_ptr<const std::vector<u64>> prime_sum_table(u64 count) { return prime_sums_snapshot(count); }
std::shared_ptr<const std::vector<u64>> alt_sum_table(u64 count) { return alt_sums_snapshot(count); }

std::vector<u64> euler_numbers_mod(u64 n, u64 m) {
    if (m < 2) throw std::invalid_argument("euler_numbers_mod: m >= 2");
    std::vector<u64> out;
    out.reserve(n);
    stream_euler(n, m, false, [&](u64, u64 v) {
        out.push_back(v);
        return true;
    });
    return out;
}

std::pair<std::vector<u64>, std::vector<u64>> lucas_pair_mod(i64 A, i64 B, u64 n, u64 m) {
    if (m < 2) throw std::invalid_argument("lucas_pair_mod: m >= 2");
    u64 ar = canonical(A, m), br = canonical(B, m);
    std::vector<u64> u, v;
    u.reserve(n);
    v.reserve(n);
    u64 up = 0, uc = 1 % m, vp = 2 % m, vc = ar;
    for (u64 k = 1; k <= n; ++k) {
        u.push_back(uc);
        v.push_back(vc);
        u64 un = sub_mod(mul_mod(ar, uc, m), mul_mod(br, up, m), m);
        u64 vn = sub_mod(mul_mod(ar, vc, m), mul_mod(br, vp, m), m);
        up = uc; uc = un;
        vp = vc; vc = vn;
    }
    return {std::move(u), std::move(v)};
}

namespace {

mpz_class mpz_factorial(u64 t) {
    if (t > 100000) throw std::invalid_argument("exact_value: factorial budget exceeded");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), t);
    return r;
}

struct ExactVisitor {
    u64 k;

    mpz_class operator()(const QuadraticPoly& f) const {
        mpz_class kk(static_cast<unsigned long>(k));
        return mpz_class(f.a) * kk * kk + mpz_class(f.b) * kk + mpz_class(f.c);
    }
    mpz_class operator()(const HalfTriangular&) const {
        return mpz_class(static_cast<unsigned long>(k)) * static_cast<unsigned long>(k - 1) / 2;
    }
    mpz_class operator()(const CubicPlus&) const {
        mpz_class kk(static_cast<unsigned long>(k));
        return kk * (kk * kk + 1);
    }
    mpz_class operator()(const OddPower& f) const {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2 * k - 1, f.d);
        return r;
    }
    mpz_class operator()(const PowerProduct& f) const {
        mpz_class a, b;
        mpz_ui_pow_ui(a.get_mpz_t(), k, static_cast<unsigned long>(f.q));
        mpz_ui_pow_ui(b.get_mpz_t(), k - 1, static_cast<unsigned long>(f.q));
        return a * b;
    }
    mpz_class operator()(const CentralBinomial&) const {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), 2 * k, k);
        return r;
    }
    mpz_class operator()(const Multinomial& f) const {
        mpz_class r = mpz_factorial(f.r * k);
        mpz_class d = mpz_factorial(k);
        mpz_class dp;
        mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), f.r);
        return r / dp;
    }
    mpz_class operator()(const FactorialShift& f) const {
        switch (f.v) {
            case FactorialVariant::kPlain: return mpz_factorial(k);
            case FactorialVariant::kShifted: return mpz_factorial(k + 1);
            case FactorialVariant::kDouble: return mpz_factorial(2 * k);
            case FactorialVariant::kSquareGap: return mpz_factorial(k * k - k);
        }
        throw std::logic_error("FactorialShift variant");
    }
    mpz_class operator()(const AlternatingPrimeSumSq& f) const {
        u64 s = (*alt_sums_snapshot(k))[k];
        mpz_class sv(static_cast<unsigned long>(s));
        mpz_class base = 2 * sv * sv;
        return f.form == AltForm::kTwoS2 ? base : mpz_class(base - sv);
    }
    mpz_class operator()(const PrimeSumSq&) const {
        u64 s = (*prime_sums_snapshot(k))[k - 1];
        mpz_class sv(static_cast<unsigned long>(s));
        return 2 * sv * sv;
    }
    mpz_class operator()(const FactorialOfPrimeSum&) const {
        return mpz_factorial((*prime_sums_snapshot(k))[k - 1]);
    }
    mpz_class operator()(const Primorial&) const {
        auto ps = primes_snapshot(k);
        mpz_class r = 1;
        for (u64 i = 0; i < k; ++i) r *= static_cast<unsigned long>((*ps)[i]);
        return r;
    }
    mpz_class operator()(const GeometricPower& f) const {
        mpz_class r;
        mpz_class base(f.a);
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
        return r;
    }
    mpz_class operator()(const PowerAtPrimeSums& f) const {
        u64 e = (*prime_sums_snapshot(k))[k - 1];
        if (e > (u64{1} << 20)) throw std::invalid_argument("exact_value: exponent budget exceeded");
        mpz_class r;
        mpz_class base(f.a);
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
        return r;
    }
    mpz_class operator()(const TowerPower& f) const {
        u64 e;
        if (f.v == TowerVariant::kPowFactorial) {
            e = 1;
            for (u64 i = 2; i <= k; ++i) {
                e *= i;
                if (e > (u64{1} << 20)) throw std::invalid_argument("exact_value: exponent budget exceeded");
            }
        } else {
            if (k > 20) throw std::invalid_argument("exact_value: exponent budget exceeded");
            e = u64{1} << k;
        }
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
        return r;
    }
    mpz_class operator()(const LucasV& f) const {
        mpz_class prev = 2, cur = f.A;
        for (u64 i = 1; i < k; ++i) {
            mpz_class next = mpz_class(f.A) * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    mpz_class operator()(const LucasU& f) const {
        mpz_class prev = 0, cur = 1;
        for (u64 i = 1; i < k; ++i) {
            mpz_class next = mpz_class(f.A) * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    mpz_class operator()(const EulerAtEven& f) const {
        if (k > 200) throw std::invalid_argument("exact_value: euler budget exceeded");
        // E_{2j} = -sum_{i=1..j} C(2j,2i) E_{2j-2i}
        std::vector<mpz_class> ev{1};
        for (u64 j = 1; j <= k; ++j) {
            mpz_class sum = 0;
            for (u64 i = 1; i <= j; ++i) {
                mpz_class c;
                mpz_bin_uiui(c.get_mpz_t(), 2 * j, 2 * i);
                sum += c * ev[j - i];
            }
            ev.push_back(-sum);
        }
        return f.doubled ? mpz_class(2 * ev[k]) : ev[k];
    }
};

struct NameVisitor {
    std::string operator()(const QuadraticPoly& f) const {
        return "quadratic(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," +
               std::to_string(f.c) + ")";
    }
    std::string operator()(const HalfTriangular&) const { return "half-triangular"; }
    std::string operator()(const CubicPlus&) const { return "cubic-plus"; }
    std::string operator()(const OddPower& f) const { return "odd-power(" + std::to_string(f.d) + ")"; }
    std::string operator()(const PowerProduct& f) const { return "power-product(" + std::to_string(f.q) + ")"; }
    std::string operator()(const CentralBinomial&) const { return "central-binomial"; }
    std::string operator()(const Multinomial& f) const { return "multinomial(" + std::to_string(f.r) + ")"; }
    std::string operator()(const FactorialShift& f) const {
        switch (f.v) {
            case FactorialVariant::kPlain: return "factorial";
            case FactorialVariant::kShifted: return "factorial-shift";
            case FactorialVariant::kDouble: return "factorial-double";
            case FactorialVariant::kSquareGap: return "factorial-squaregap";
        }
        return "factorial?";
    }
    std::string operator()(const AlternatingPrimeSumSq& f) const {
        return f.form == AltForm::kTwoS2 ? "alt-sum-2s2" : "alt-sum-2s2-s";
    }
    std::string operator()(const PrimeSumSq&) const { return "prime-sum-sq"; }
    std::string operator()(const FactorialOfPrimeSum&) const { return "prime-sum-factorial"; }
    std::string operator()(const Primorial&) const { return "primorial"; }
    std::string operator()(const GeometricPower& f) const { return "geometric(" + std::to_string(f.a) + ")"; }
    std::string operator()(const PowerAtPrimeSums& f) const { return "power-at-prime-sums(" + std::to_string(f.a) + ")"; }
    std::string operator()(const TowerPower& f) const {
        return f.v == TowerVariant::kPowFactorial ? "tower-2^k!" : "tower-2^2^k";
    }
    std::string operator()(const LucasV& f) const { return "lucas-v(" + std::to_string(f.A) + ")"; }
    std::string operator()(const LucasU& f) const { return "lucas-u(" + std::to_string(f.A) + ")"; }
    std::string operator()(const EulerAtEven& f) const { return f.doubled ? "euler-even-x2" : "euler-even"; }
};

}  // namespace

mpz_class exact_value(const SequenceSpec& spec, u64 k) {
    if (k == 0) throw std::invalid_argument("exact_value: k >= 1");
    return std::visit(ExactVisitor{k}, spec);
}

std::string family_name(const SequenceSpec& spec) { return std::visit(NameVisitor{}, spec); }

}  // namespace discrim::seq
