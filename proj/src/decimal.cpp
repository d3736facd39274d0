#include "apery/decimal.hpp"

#include <cstdlib>

namespace apery {

namespace {

Rat pow10(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rat(Int(1), p) : Rat(p);
}

// nearest integer, ties away from zero; v >= 0
Int round_half_up(const Rat& v) { return floor(v + Rat(1, 2)); }

// floor(log10(a)) for a > 0
long decimal_exponent(const Rat& a) {
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    while (a >= pow10(e + 1)) ++e;
    while (a < pow10(e)) --e;
    return e;
}

std::string exponent_suffix(long e) {
    std::string digits = std::to_string(e < 0 ? -e : e);
    if (digits.size() < 2) digits.insert(0, "0");
    return std::string("e") + (e < 0 ? "-" : "+") + digits;
}

// |v| in scientific notation, rounded up when `upward` (used for error bars).
std::string sci_digits(const Rat& v, unsigned long significant, bool upward) {
    if (v == 0) return "0";
    const Rat a = abs(v);
    long e = decimal_exponent(a);
    const Rat scaled = a * pow10(static_cast<long>(significant) - 1 - e);
    Int n = upward ? ceil(scaled) : round_half_up(scaled);
    if (n == pow10(static_cast<long>(significant)).get_num()) {
        ++e;
        n /= 10;
    }
    std::string s = n.get_str(10);
    std::string out = (v < 0 ? "-" : "") + s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    return out + exponent_suffix(e);
}

}  // namespace

Rat sci_ulp(const Rat& value, unsigned long significant) {
    if (value == 0) return pow10(-static_cast<long>(significant));
    return pow10(decimal_exponent(abs(value)) - static_cast<long>(significant) + 1);
}

std::string format_sci(const Enclosure& e, unsigned long significant) {
    if (significant == 0) significant = 1;
    const Rat mid = e.midpoint();
    std::string out = sci_digits(mid, significant, false);
    const Rat ulp = sci_ulp(mid, significant);
    if (e.width() >= ulp) out += "±" + sci_digits(e.width() / 2 + ulp / 2, 2, true);
    return out;
}

std::string format_fixed(const Enclosure& e, unsigned long decimals) {
    const Rat mid = e.midpoint();
    const Rat ulp = pow10(-static_cast<long>(decimals));
    const Int n = round_half_up(abs(mid) / ulp);
    std::string s = n.get_str(10);
    if (s.size() <= decimals) s.insert(0, decimals + 1 - s.size(), '0');
    std::string out = (mid < 0 && n != 0) ? "-" : "";
    out += s.substr(0, s.size() - decimals);
    if (decimals > 0) out += "." + s.substr(s.size() - decimals);
    if (e.width() >= ulp) out += "±" + sci_digits(e.width() / 2 + ulp / 2, 2, true);
    return out;
}

Rat parse_decimal(const std::string& text) {
    std::string s = text.substr(0, text.find("±"));
    long exponent = 0;
    if (auto pos = s.find_first_of("eE"); pos != std::string::npos) {
        exponent = std::stol(s.substr(pos + 1));
        s.erase(pos);
    }
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        exponent -= static_cast<long>(s.size() - dot - 1);
        s.erase(dot, 1);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("not a decimal: '" + text + "'");
    }
    Rat r = Rat(Int(s, 10)) * pow10(exponent);
    return negative ? Rat(-r) : r;
}

}  // namespace apery
