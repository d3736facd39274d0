#include "apery/bounds.hpp"

#include "apery/beukers.hpp"
#include "apery/combinatorics.hpp"
#include "apery/zeta3.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <thread>

namespace apery {

namespace {

void require_positive_n(unsigned long n) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
}

// |A_n + B_n zeta(3)| before dividing by anything
Enclosure abs_scaled_form(unsigned long n, unsigned long digits) {
    const LinearForm& form = linear_form(n);
    const Enclosure z = zeta3(digits);
    const Enclosure value = enc_add(Enclosure(Rat(form.A)), enc_scale(z, Rat(form.B)));
    return enc_abs(value);
}

bool narrow_enough(const Enclosure& e, const Rat& absolute, const Rat& relative) {
    if (e.width() > absolute) return false;
    const Rat magnitude = std::min(abs(e.lo()), abs(e.hi()));
    return e.width() <= magnitude * relative;
}

template <class Check>
CheckResult refine(unsigned long n, unsigned long digits, Check check) {
    require_positive_n(n);
    if (digits == 0) throw std::invalid_argument("digits must be >= 1");
    const Rat absolute = ten_to_minus(digits);
    const Rat relative = ten_to_minus(15);
    unsigned long working = digits;
    for (int attempt = 0;; ++attempt) {
        CheckResult r = check(n, working);
        const bool settled = r.status != Verdict::Unknown && narrow_enough(r.lhs, absolute, relative) &&
                             narrow_enough(r.rhs, absolute, relative);
        if (settled || attempt == kMaxRefinements) return r;
        working *= 2;
    }
}

unsigned long decimal_size(const Int& v) { return mpz_sizeinbase(v.get_mpz_t(), 10); }

DecayRow decay_row(unsigned long n, unsigned long digits) {
    const Rat relative = ten_to_minus(digits);
    // cancellation in A + B zeta(3) costs about twice the size of B in digits
    unsigned long working = digits + 2 * decimal_size(linear_form(n).B) + 4;
    for (int attempt = 0;; ++attempt) {
        DecayRow row;
        row.n = n;
        row.dn = d(n).value;
        row.abs_i = abs_linear_form(n, working);
        row.rhs = decay_bound(n, working);
        row.ratio = round_outward(enc_div(row.abs_i, row.rhs), precision_bits(working));
        row.t_n = enc_scale(row.rhs, Rat(d(n).cube));
        row.digits_used = working;
        const bool ok = std::ranges::all_of(std::array{&row.abs_i, &row.rhs, &row.ratio, &row.t_n}, [&](const Enclosure* e) {
            return narrow_enough(*e, Rat(1), relative);
        });
        if (ok || attempt == kMaxRefinements) return row;
        working *= 2;
    }
}

}  // namespace

Enclosure fourth_power_factor(unsigned long digits) {
    const Enclosure s = sqrt2_enclosure(digits);
    const Enclosure linear = enc_sub(Enclosure(Rat(17)), enc_scale(s, Rat(12)));
    // (s - 1)^4 stays positive at any precision; 17 - 12s may straddle zero
    const Enclosure power = enc_pow(enc_sub(s, Enclosure(Rat(1))), 4);
    return *intersect(linear, power);
}

Enclosure decay_bound(unsigned long n, unsigned long digits) {
    require_positive_n(n);
    const unsigned long bits = precision_bits(digits);
    const Enclosure factor = round_outward(enc_pow(fourth_power_factor(digits), n), bits);
    return round_outward(enc_scale(enc_mul(factor, zeta3(digits)), Rat(2)), bits);
}

Enclosure abs_linear_form(unsigned long n, unsigned long digits) {
    const Int& dn3 = linear_form(n).dn3;
    return round_outward(enc_scale(abs_scaled_form(n, digits), Rat(Int(1), dn3)), precision_bits(digits));
}

Enclosure bound_ratio(unsigned long n, unsigned long digits) {
    require_positive_n(n);
    const unsigned long bits = precision_bits(digits);
    // unrounded: flooring a tiny power to 0 would leave nothing to divide by
    const Enclosure factor = enc_pow(fourth_power_factor(digits), n);
    const Enclosure denominator = enc_scale(factor, Rat(2 * linear_form(n).dn3));
    return round_outward(enc_div(abs_scaled_form(n, digits), denominator), bits);
}

Verdict positive(const Enclosure& x) {
    if (x.lo() > 0) return Verdict::Holds;
    if (x.hi() <= 0) return Verdict::Fails;
    return Verdict::Unknown;
}

CheckResult check_linear_form_bound(unsigned long n, unsigned long digits) {
    require_positive_n(n);
    CheckResult r;
    r.n = n;
    r.lhs = abs_linear_form(n, digits);
    r.rhs = decay_bound(n, digits);
    r.status = both(positive(r.lhs), strictly_less(r.lhs, r.rhs));
    r.digits_used = digits;
    return r;
}

CheckResult check_bound_ratio(unsigned long n, unsigned long digits) {
    require_positive_n(n);
    CheckResult r;
    r.n = n;
    r.lhs = bound_ratio(n, digits);
    r.rhs = zeta3(digits);
    r.status = both(positive(r.lhs), strictly_less(r.lhs, r.rhs));
    r.digits_used = digits;
    return r;
}

CheckResult verify_linear_form_bound(unsigned long n, unsigned long digits) {
    return refine(n, digits, check_linear_form_bound);
}

CheckResult verify_bound_ratio(unsigned long n, unsigned long digits) { return refine(n, digits, check_bound_ratio); }

std::vector<DecayRow> decay_table(unsigned long n_max, unsigned long digits) {
    if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
    if (digits == 0) throw std::invalid_argument("digits must be >= 1");
    std::vector<DecayRow> rows(n_max);
    const unsigned long workers = std::max(1U, std::thread::hardware_concurrency());
    // rows land at index n-1 regardless of completion order
    for (unsigned long start = 1; start <= n_max; start += workers) {
        std::vector<std::future<void>> batch;
        for (unsigned long n = start; n < start + workers && n <= n_max; ++n) {
            batch.push_back(std::async(std::launch::async, [&rows, n, digits] { rows[n - 1] = decay_row(n, digits); }));
        }
        for (auto& f : batch) f.get();
    }
    return rows;
}

}  // namespace apery
