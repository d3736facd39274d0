#include "apery/exactnum.hpp"

#include <algorithm>
#include <array>

namespace apery {

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rat& v) { return v.get_str(10); }

Rat parse_rat(std::string_view text) {
    std::string s(text);
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    if (s.front() == '+') s.erase(0, 1);
    Rat r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    r.canonicalize();
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int floor(const Rat& v) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

Int ceil(const Rat& v) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat pow(const Rat& base, unsigned long exp) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return r;  // coprime powers of a canonical fraction stay canonical
}

std::string_view to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::Positive: return "positive";
        case Trichotomy::Negative: return "negative";
        case Trichotomy::ContainsZero: return "contains_zero";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

Verdict both(Verdict a, Verdict b) {
    if (a == Verdict::Fails || b == Verdict::Fails) return Verdict::Fails;
    if (a == Verdict::Holds && b == Verdict::Holds) return Verdict::Holds;
    return Verdict::Unknown;
}

Enclosure::Enclosure(const Rat& lo, const Rat& hi) : lo_(lo), hi_(hi) {
    if (hi_ < lo_) {
        throw std::invalid_argument("enclosure with lo > hi: [" + to_string(lo) + ", " + to_string(hi) + "]");
    }
}

std::string to_string(const Enclosure& e) { return "[" + to_string(e.lo()) + ", " + to_string(e.hi()) + "]"; }

Enclosure enc_add(const Enclosure& a, const Enclosure& b) { return {a.lo() + b.lo(), a.hi() + b.hi()}; }

Enclosure enc_sub(const Enclosure& a, const Enclosure& b) { return {a.lo() - b.hi(), a.hi() - b.lo()}; }

Enclosure enc_neg(const Enclosure& a) { return {-a.hi(), -a.lo()}; }

Enclosure enc_mul(const Enclosure& a, const Enclosure& b) {
    if (a.is_point() && b.is_point()) return Enclosure(a.lo() * b.lo());
    std::array<Rat, 4> p{a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {*mn, *mx};
}

Enclosure enc_scale(const Enclosure& a, const Rat& k) {
    if (k >= 0) return {a.lo() * k, a.hi() * k};
    return {a.hi() * k, a.lo() * k};
}

Enclosure enc_div(const Enclosure& a, const Enclosure& b) {
    if (trichotomy(b) == Trichotomy::ContainsZero) {
        throw std::domain_error("division by an enclosure containing zero: " + to_string(b));
    }
    return enc_mul(a, Enclosure(1 / b.hi(), 1 / b.lo()));
}

Enclosure enc_pow(const Enclosure& a, unsigned long k) {
    if (k == 0) return Enclosure(Rat(1));
    if (k % 2 == 1 || a.lo() >= 0) return {pow(a.lo(), k), pow(a.hi(), k)};
    if (a.hi() <= 0) return {pow(a.hi(), k), pow(a.lo(), k)};
    // even power over an interval straddling zero
    const Rat m = std::max(Rat(-a.lo()), a.hi());
    return {Rat(0), pow(m, k)};
}

Enclosure enc_abs(const Enclosure& a) {
    if (a.lo() >= 0) return a;
    if (a.hi() <= 0) return enc_neg(a);
    return {Rat(0), std::max(Rat(-a.lo()), a.hi())};
}

Trichotomy trichotomy(const Enclosure& a) {
    if (a.lo() > 0) return Trichotomy::Positive;
    if (a.hi() < 0) return Trichotomy::Negative;
    return Trichotomy::ContainsZero;
}

std::optional<Enclosure> intersect(const Enclosure& a, const Enclosure& b) {
    const Rat& lo = std::max(a.lo(), b.lo());
    const Rat& hi = std::min(a.hi(), b.hi());
    if (hi < lo) return std::nullopt;
    return Enclosure(lo, hi);
}

Verdict strictly_less(const Enclosure& a, const Enclosure& b) {
    if (a.hi() < b.lo()) return Verdict::Holds;
    if (a.lo() >= b.hi()) return Verdict::Fails;
    return Verdict::Unknown;
}

namespace {

bool fits(const Rat& v, unsigned long bits) {
    // denominator must be a power of two no larger than 2^bits
    const mpz_srcptr den = v.get_den_mpz_t();
    const auto tz = mpz_scan1(den, 0);
    return mpz_sizeinbase(den, 2) == tz + 1 && tz <= bits;
}

Rat dyadic(const Int& numerator, unsigned long bits) {
    Rat r;
    r.get_num() = numerator;
    mpz_ui_pow_ui(r.get_den_mpz_t(), 2, bits);
    r.canonicalize();
    return r;
}

}  // namespace

Enclosure round_outward(const Enclosure& a, unsigned long bits) {
    const bool lo_ok = fits(a.lo(), bits);
    const bool hi_ok = fits(a.hi(), bits);
    if (lo_ok && hi_ok) return a;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rat lo = lo_ok ? a.lo() : dyadic(floor(a.lo() * scale), bits);
    Rat hi = hi_ok ? a.hi() : dyadic(ceil(a.hi() * scale), bits);
    return {lo, hi};
}

Rat ten_to_minus(unsigned long digits) {
    Rat r;
    r.get_num() = 1;
    mpz_ui_pow_ui(r.get_den_mpz_t(), 10, digits);
    return r;
}

Enclosure sqrt2_enclosure(unsigned long digits) {
    if (digits == 0) throw std::invalid_argument("sqrt2_enclosure: digits must be >= 1");
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Int radicand = 2 * scale * scale;
    Int s;
    mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
    // s^2 < 2*10^(2d) < (s+1)^2 since 2 is not a square
    Rat lo(s, scale);
    Rat hi(Int(s + 1), scale);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

}  // namespace apery
