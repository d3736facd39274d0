#include "apery/zeta3.hpp"

#include "apery/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace apery {

namespace {

constexpr unsigned long kElementaryMaxDigits = 15;

Int two_pow(unsigned long bits) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
    return r;
}

// sum_{k=from..to} 1/k^3 as a fixed-point enclosure with `bits` fractional bits.
Enclosure inverse_cube_sum(unsigned long from, unsigned long to, unsigned long bits) {
    const Int one = two_pow(bits);
    Int lo(0);
    Int hi(0);
    Int q;
    Int cube;
    for (unsigned long k = from; k <= to; ++k) {
        cube = Int(k) * k * k;
        mpz_fdiv_q(q.get_mpz_t(), one.get_mpz_t(), cube.get_mpz_t());
        lo += q;
        hi += q;
        if (!mpz_divisible_p(one.get_mpz_t(), cube.get_mpz_t())) hi += 1;
    }
    return {make_rat(lo, one), make_rat(hi, one)};
}

Rat elementary_width(unsigned long K) {
    const Int k(K);
    return Rat(Int(2 * k + 1), Int(2 * k * k * (k + 1) * (k + 1)));
}

Enclosure direct_elementary(unsigned long digits, unsigned long bits) {
    const Rat target = ten_to_minus(digits) / 2;
    auto K = static_cast<unsigned long>(std::ceil(std::cbrt(2.0 * std::pow(10.0, static_cast<double>(digits)))));
    K = std::max(K, 1UL);
    while (K > 1 && elementary_width(K - 1) <= target) --K;
    while (elementary_width(K) > target) ++K;
    const Enclosure partial = inverse_cube_sum(1, K, bits);
    return enc_add(partial, zeta3_tail_bracket(K));
}

// Tail sum_{k>=K} k^-3 by Euler-Maclaurin. For x^-3 every even derivative is
// positive, so the remainder after any term lies between 0 and the next term.
Enclosure euler_maclaurin_tail(unsigned long K, unsigned long digits) {
    const Rat target = ten_to_minus(digits) / 4;
    const Int k(K);
    Rat sum = Rat(1, Int(2 * k * k)) + Rat(1, Int(2 * k * k * k));
    unsigned long cap = digits / 3 + 20;
    std::vector<Rat> bern = bernoulli_even(cap);
    Int k_pow = k * k * k * k;  // K^(2j+2) for j = 1
    const Int k2 = k * k;
    const double max_j = 3.14159 * static_cast<double>(K);
    for (unsigned long j = 1;; ++j) {
        if (static_cast<double>(j) >= max_j) {
            throw std::logic_error("Euler-Maclaurin terms stopped decreasing before reaching the target width");
        }
        if (j > bern.size()) {
            cap *= 2;
            bern = bernoulli_even(cap);
        }
        Rat term = bern[j - 1] * make_rat(Int(2 * j + 1), Int(2 * k_pow));
        if (abs(term) <= target) {
            const Rat next = sum + term;
            return {std::min(sum, next), std::max(sum, next)};
        }
        sum += term;
        k_pow *= k2;
    }
}

Enclosure direct_euler_maclaurin(unsigned long digits, unsigned long bits) {
    const unsigned long K = 4 * digits;
    const Enclosure partial = inverse_cube_sum(1, K - 1, bits);
    return enc_add(partial, euler_maclaurin_tail(K, digits));
}

// Binary splitting for sum_{k=a}^{b-1} prod_{i=a}^{k-1} p(i)/q(i), with
// p(i) = -i^3 and q(i) = 2 (2i+1) (i+1)^2, the term ratio of the series.
struct Split {
    Int P, Q, T;
};

Split split(unsigned long a, unsigned long b) {
    if (b - a == 1) {
        const Int i(a);
        Split s;
        s.P = -(i * i * i);
        s.Q = 2 * (2 * i + 1) * (i + 1) * (i + 1);
        s.T = s.Q;
        return s;
    }
    const unsigned long m = a + (b - a) / 2;
    Split left = split(a, m);
    Split right = split(m, b);
    Split s;
    s.T = left.T * right.Q + left.P * right.T;
    s.Q = left.Q * right.Q;
    s.P = left.P * right.P;
    return s;
}

}  // namespace

Enclosure zeta3_tail_bracket(unsigned long K) {
    if (K == 0) throw std::invalid_argument("zeta3_tail_bracket: K must be >= 1");
    const Int k(K);
    return {Rat(1, Int(2 * (k + 1) * (k + 1))), Rat(1, Int(2 * k * k))};
}

std::vector<Rat> bernoulli_even(unsigned long p) {
    std::vector<Int> t(p + 1);
    if (p == 0) return {};
    t[1] = 1;
    for (unsigned long k = 2; k <= p; ++k) t[k] = (k - 1) * t[k - 1];
    for (unsigned long k = 2; k <= p; ++k) {
        for (unsigned long j = k; j <= p; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
    std::vector<Rat> out;
    out.reserve(p);
    for (unsigned long k = 1; k <= p; ++k) {
        const Int four_k = two_pow(2 * k);
        Rat b = make_rat(Int(2 * k * t[k]), Int(four_k * (four_k - 1)));
        if (k % 2 == 0) b = -b;
        out.push_back(std::move(b));
    }
    return out;
}

Enclosure zeta3_direct(unsigned long digits) {
    if (digits == 0) throw std::invalid_argument("zeta3_direct: digits must be >= 1");
    const unsigned long bits = precision_bits(digits);
    const Enclosure raw =
        digits <= kElementaryMaxDigits ? direct_elementary(digits, bits) : direct_euler_maclaurin(digits, bits);
    return round_outward(raw, bits);
}

Enclosure zeta3_accelerated_partial(unsigned long terms) {
    if (terms == 0) throw std::invalid_argument("zeta3_accelerated_partial: terms must be >= 1");
    const Split s = split(1, terms + 1);
    // first term 1/2, overall factor 5/2
    const Rat partial = Rat(5, 4) * make_rat(s.T, s.Q);
    const Rat next = Rat(5, 4) * make_rat(s.P, s.Q);
    const Rat other = partial + next;
    return {std::min(partial, other), std::max(partial, other)};
}

Enclosure zeta3_accelerated(unsigned long digits) {
    if (digits == 0) throw std::invalid_argument("zeta3_accelerated: digits must be >= 1");
    const unsigned long bits = precision_bits(digits);
    const Rat target = ten_to_minus(digits);
    // |a_k| <= 2 / (k^2 4^k), so about digits * log_4(10) terms suffice
    auto terms = static_cast<unsigned long>(std::ceil(static_cast<double>(digits) * 1.6609640474436813)) + 1;
    for (;;) {
        Enclosure e = round_outward(zeta3_accelerated_partial(terms), bits);
        if (e.width() <= target) return e;
        terms += terms / 8 + 1;
    }
}

Enclosure zeta3_cross(const Enclosure& direct, const Enclosure& accelerated) {
    auto both = intersect(direct, accelerated);
    if (!both) {
        throw DisjointEnclosures("zeta(3) enclosures disagree: direct " + to_string(direct) + " vs accelerated " +
                                 to_string(accelerated));
    }
    return *both;
}

Enclosure zeta3(unsigned long digits) {
    static std::map<unsigned long, Enclosure> cache;
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(digits); it != cache.end()) return it->second;
    }
    Enclosure e = zeta3_cross(zeta3_direct(digits), zeta3_accelerated(digits));
    std::unique_lock lock(mutex);
    return cache.try_emplace(digits, std::move(e)).first->second;
}

Enclosure evaluate(const Zeta3Request& request) {
    switch (request.method) {
        case Zeta3Method::Direct: return zeta3_direct(request.digits);
        case Zeta3Method::Accelerated: return zeta3_accelerated(request.digits);
        case Zeta3Method::Cross: return zeta3(request.digits);
    }
    throw std::invalid_argument("unknown zeta3 method");
}

Zeta3Method parse_zeta3_method(std::string_view name) {
    if (name == "direct") return Zeta3Method::Direct;
    if (name == "accelerated") return Zeta3Method::Accelerated;
    if (name == "cross") return Zeta3Method::Cross;
    throw std::invalid_argument("unknown zeta3 method '" + std::string(name) + "'");
}

}  // namespace apery
