#ifndef APERY_ZETA3_HPP
#define APERY_ZETA3_HPP

#include "apery/exactnum.hpp"

#include <stdexcept>
#include <string_view>
#include <vector>

namespace apery {

enum class Zeta3Method { Direct, Accelerated, Cross };

struct Zeta3Request {
    unsigned long digits = 20;
    Zeta3Method method = Zeta3Method::Cross;
};

/// The two series evaluations produced non-overlapping enclosures.
class DisjointEnclosures : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dirichlet series sum 1/k^3. Up to 15 digits the partial sum to K is
/// bracketed by 1/(2(K+1)^2) < tail < 1/(2K^2); beyond that the tail is
/// enclosed by Euler-Maclaurin with the alternating-remainder bound.
/// Width <= 10^-digits.
Enclosure zeta3_direct(unsigned long digits);

/// (5/2) sum_{k>=1} (-1)^(k-1) / (k^3 C(2k,k)) by binary splitting, enclosed
/// between consecutive partial sums. Width <= 10^-digits.
Enclosure zeta3_accelerated(unsigned long digits);

/// Enclosure of the accelerated series from its first `terms` terms.
Enclosure zeta3_accelerated_partial(unsigned long terms);

/// Intersection of the two methods; throws DisjointEnclosures.
Enclosure zeta3_cross(const Enclosure& direct, const Enclosure& accelerated);

/// Cross-checked value, memoized per digits.
Enclosure zeta3(unsigned long digits);

Enclosure evaluate(const Zeta3Request& request);

/// Elementary bracket (1/(2(K+1)^2), 1/(2K^2)) of sum_{k>K} 1/k^3. K >= 1.
Enclosure zeta3_tail_bracket(unsigned long K);

/// B_2, B_4, ..., B_{2p} from integer tangent numbers.
std::vector<Rat> bernoulli_even(unsigned long p);

Zeta3Method parse_zeta3_method(std::string_view name);

}  // namespace apery

#endif  // APERY_ZETA3_HPP
