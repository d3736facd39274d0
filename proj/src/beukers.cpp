#include "apery/beukers.hpp"

#include "apery/combinatorics.hpp"
#include "apery/legendre.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace apery {

namespace {

template <class Key, class Value>
class Memo {
public:
    template <class Make>
    const Value& get(const Key& key, Make&& make) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = values_.find(key); it != values_.end()) return it->second;
        }
        Value v = make();
        std::unique_lock lock(mutex_);
        // a concurrent writer may have won; either value is identical
        return values_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::map<Key, Value> values_;
    std::shared_mutex mutex_;
};

KernelMoment compute_moment(unsigned long r, unsigned long s) {
    KernelMoment m{r, s, Rat(0), 0};
    if (r == s) {
        m.rat = -2 * harmonic(r, 3);
        m.zeta3_coef = 2;
    } else {
        const long diff = static_cast<long>(r) - static_cast<long>(s);
        m.rat = (harmonic(r, 2) - harmonic(s, 2)) / Rat(diff);
    }
    return m;
}

LinearForm compute_linear_form(unsigned long n) {
    const LegendrePoly p = legendre(n);
    Rat alpha(0);
    Int beta(0);
    for (unsigned long r = 0; r <= n; ++r) {
        const Int& cr = p.coeffs[r];
        alpha += Rat(cr * cr) * moment(r, r).rat;
        beta += 2 * cr * cr;
        Rat off(0);
        for (unsigned long s = r + 1; s <= n; ++s) off += Rat(p.coeffs[s]) * moment(r, s).rat;
        alpha += 2 * Rat(cr) * off;
    }
    return scale_linear_form(n, alpha, beta);
}

}  // namespace

KernelMoment moment(unsigned long r, unsigned long s) {
    static Memo<std::pair<unsigned long, unsigned long>, KernelMoment> memo;
    if (r > s) {
        KernelMoment m = moment(s, r);
        std::swap(m.r, m.s);
        return m;
    }
    return memo.get({r, s}, [&] { return compute_moment(r, s); });
}

Enclosure moment_series_oracle(unsigned long r, unsigned long s, unsigned long terms) {
    if (terms == 0 || terms >= (1UL << 30) || std::max(r, s) >= (1UL << 30)) {
        throw std::invalid_argument("moment_series_oracle: terms must be in [1, 2^30)");
    }
    // Fixed point with 90 fractional bits; per-term floor/ceil keeps the sum rigorous.
    using u128 = unsigned __int128;
    constexpr unsigned kFrac = 90;
    const u128 one = u128(1) << kFrac;
    u128 lo = 0;
    u128 hi = 0;
    for (unsigned long k = 0; k < terms; ++k) {
        // 1/(a^2 b) + 1/(a b^2) = (a + b) / (a^2 b^2)
        const u128 a = k + r + 1;
        const u128 b = k + s + 1;
        const u128 num = (a + b) * one;
        const u128 den = a * a * b * b;
        const u128 q = num / den;
        lo += q;
        hi += q + (num % den != 0 ? 1 : 0);
    }
    auto to_int = [](u128 v) {
        Int hi_part(static_cast<unsigned long>(v >> 64));
        Int lo_part(static_cast<unsigned long>(v & ~0UL));
        return Int((hi_part << 64) + lo_part);
    };
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, kFrac);
    Rat sum_lo(to_int(lo), scale);
    Rat sum_hi(to_int(hi), scale);
    sum_lo.canonicalize();
    sum_hi.canonicalize();

    // Each tail summand lies between 2/(k+M+1)^3 and 2/(k+1)^3 (M = max(r,s)).
    // Integral comparison gives 1/(N+M+1)^2 < tail < 1/(N+1/2)^2.
    const Int lower_den = Int(terms + std::max(r, s) + 1);
    const Rat tail_lo(1, Int(lower_den * lower_den));
    const Int twice = Int(2 * terms + 1);
    const Rat tail_hi(4, Int(twice * twice));
    return {sum_lo + tail_lo, sum_hi + tail_hi};
}

LinearForm scale_linear_form(unsigned long n, const Rat& alpha, const Int& beta) {
    LinearForm form;
    form.n = n;
    form.alpha = alpha;
    form.beta = beta;
    form.dn3 = n == 0 ? Int(1) : d(n).cube;
    const Rat scaled = alpha * Rat(form.dn3);
    if (scaled.get_den() != 1) {
        throw IntegralityViolation("d_" + std::to_string(n) + "^3 * alpha is not an integer: " + to_string(scaled));
    }
    form.A = scaled.get_num();
    form.B = form.dn3 * beta;
    return form;
}

const LinearForm& linear_form(unsigned long n) {
    static Memo<unsigned long, LinearForm> memo;
    return memo.get(n, [&] { return compute_linear_form(n); });
}

Int apery_oracle(unsigned long n) {
    Int prev(1);
    if (n == 0) return prev;
    Int cur(5);
    for (unsigned long k = 2; k <= n; ++k) {
        const Int kk(k);
        const Int km1(k - 1);
        Int next = (34 * kk * kk * kk - 51 * kk * kk + 27 * kk - 5) * cur - km1 * km1 * km1 * prev;
        const Int k3 = kk * kk * kk;
        mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), k3.get_mpz_t());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace apery
