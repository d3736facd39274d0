#ifndef APERY_EXACTNUM_HPP
#define APERY_EXACTNUM_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

/// Exact rationals and closed rational intervals.
///
/// Every real quantity the library reasons about (zeta(3), sqrt(2), the two
/// sides of each inequality) is carried as an Enclosure whose endpoints are
/// exact rationals. A strict inequality is only ever reported as true when the
/// enclosures certify it.
namespace apery {

using Int = mpz_class;
using Rat = mpq_class;

/// Base-10 "p/q", or "p" when q == 1.
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

/// Parses "p" or "p/q" and canonicalizes. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// num/den in canonical form. Throws std::domain_error when den == 0.
Rat make_rat(const Int& num, const Int& den);

Int floor(const Rat& v);
Int ceil(const Rat& v);
Int pow(const Int& base, unsigned long exp);
Rat pow(const Rat& base, unsigned long exp);

/// Sign of an enclosure relative to zero.
enum class Trichotomy { Positive, Negative, ContainsZero };

/// Certified truth value of a displayed (in)equality.
enum class Verdict { Holds, Fails, Unknown };

std::string_view to_string(Trichotomy t);
std::string_view to_string(Verdict v);

/// Holds if both hold, Fails if either fails, Unknown otherwise.
Verdict both(Verdict a, Verdict b);

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
class Enclosure {
public:
    Enclosure() : lo_(0), hi_(0) {}
    explicit Enclosure(const Rat& point) : lo_(point), hi_(point) {}
    Enclosure(const Rat& lo, const Rat& hi);

    static Enclosure point(const Rat& v) { return Enclosure(v); }

    const Rat& lo() const noexcept { return lo_; }
    const Rat& hi() const noexcept { return hi_; }

    Rat width() const { return hi_ - lo_; }
    Rat midpoint() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Enclosure& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

    friend bool operator==(const Enclosure& a, const Enclosure& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

private:
    Rat lo_;
    Rat hi_;
};

/// "[lo, hi]" with each endpoint in Rat notation.
std::string to_string(const Enclosure& e);

Enclosure enc_add(const Enclosure& a, const Enclosure& b);
Enclosure enc_sub(const Enclosure& a, const Enclosure& b);
Enclosure enc_neg(const Enclosure& a);
Enclosure enc_mul(const Enclosure& a, const Enclosure& b);
Enclosure enc_scale(const Enclosure& a, const Rat& k);

/// Division by an enclosure that excludes zero. Throws std::domain_error otherwise.
Enclosure enc_div(const Enclosure& a, const Enclosure& b);

/// Tight image of x -> x^k. Zero-straddling inputs with even k map to [0, max^k].
Enclosure enc_pow(const Enclosure& a, unsigned long k);

/// Tight image of x -> |x|.
Enclosure enc_abs(const Enclosure& a);

Trichotomy trichotomy(const Enclosure& a);

/// Empty optional when the intervals are disjoint.
std::optional<Enclosure> intersect(const Enclosure& a, const Enclosure& b);

/// Certified a < b (strict). Holds if a.hi < b.lo, Fails if a.lo >= b.hi.
Verdict strictly_less(const Enclosure& a, const Enclosure& b);

/// Outward rounding to dyadic endpoints with denominator 2^bits. Endpoints
/// whose denominator already fits in `bits` bits are kept exact.
Enclosure round_outward(const Enclosure& a, unsigned long bits);

/// Default precision budget in bits for a computation at `digits` decimal digits.
constexpr unsigned long precision_bits(unsigned long digits) { return 16 * digits; }

/// [lo, hi] with lo^2 <= 2 <= hi^2 and hi - lo <= 10^-digits.
Enclosure sqrt2_enclosure(unsigned long digits);

/// 10^-digits as an exact rational.
Rat ten_to_minus(unsigned long digits);

}  // namespace apery

#endif  // APERY_EXACTNUM_HPP
