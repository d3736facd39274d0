#ifndef APERY_BOUNDS_HPP
#define APERY_BOUNDS_HPP

#include "apery/exactnum.hpp"

#include <vector>

namespace apery {

/// Outcome of certifying 0 < lhs < rhs.
///
/// Holds requires lhs.lo > 0 and lhs.hi < rhs.lo. Fails requires a certified
/// violation of either side. Anything else is Unknown, which only happens when
/// the enclosures overlap.
struct CheckResult {
    unsigned long n = 0;
    Enclosure lhs;
    Enclosure rhs;
    Verdict status = Verdict::Unknown;
    unsigned long digits_used = 0;
};

/// Number of times verification doubles its working precision before giving up.
inline constexpr int kMaxRefinements = 4;

/// 17 - 12 sqrt(2) = (sqrt(2) - 1)^4: both expressions evaluated on one sqrt(2)
/// enclosure and intersected. Strictly positive for every digits >= 1.
Enclosure fourth_power_factor(unsigned long digits);

/// 2 (sqrt(2) - 1)^(4n) zeta(3). Requires n >= 1.
Enclosure decay_bound(unsigned long n, unsigned long digits);

/// |I_n| = |A_n + B_n zeta(3)| / d_n^3.
Enclosure abs_linear_form(unsigned long n, unsigned long digits);

/// R_n = |A_n + B_n zeta(3)| / (2 (sqrt(2) - 1)^(4n) d_n^3). Requires n >= 1.
Enclosure bound_ratio(unsigned long n, unsigned long digits);

/// Certified 0 < x: Holds if x.lo > 0, Fails if x.hi <= 0.
Verdict positive(const Enclosure& x);

/// 0 < |I_n| < 2 (sqrt(2)-1)^(4n) zeta(3) at a fixed working precision.
CheckResult check_linear_form_bound(unsigned long n, unsigned long digits);

/// 0 < R_n < zeta(3) at a fixed working precision.
CheckResult check_bound_ratio(unsigned long n, unsigned long digits);

/// Runs the check starting at `digits`, doubling up to kMaxRefinements times
/// until the status is determinate and both sides are narrower than
/// 10^-digits (absolute) and 10^-15 relative to their magnitude.
CheckResult verify_linear_form_bound(unsigned long n, unsigned long digits);
CheckResult verify_bound_ratio(unsigned long n, unsigned long digits);

struct DecayRow {
    unsigned long n = 0;
    Int dn;
    Enclosure abs_i;   // |I_n|
    Enclosure rhs;     // 2 (sqrt(2)-1)^(4n) zeta(3)
    Enclosure ratio;   // |I_n| / rhs
    Enclosure t_n;     // d_n^3 * rhs
    unsigned long digits_used = 0;
};

/// One row per n in 1..n_max, ascending. Each row is refined until every column
/// has relative width below 10^-digits (or the refinement cap is hit). Rows are
/// computed concurrently.
std::vector<DecayRow> decay_table(unsigned long n_max, unsigned long digits);

}  // namespace apery

#endif  // APERY_BOUNDS_HPP
