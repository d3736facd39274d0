#ifndef APERY_BEUKERS_HPP
#define APERY_BEUKERS_HPP

#include "apery/exactnum.hpp"

#include <stdexcept>

namespace apery {

/// Exact value of the kernel moment
///   int_0^1 int_0^1 x^r y^s (-log xy) / (1 - xy) dx dy = rat + zeta3_coef * zeta(3).
struct KernelMoment {
    unsigned long r = 0;
    unsigned long s = 0;
    Rat rat;
    unsigned long zeta3_coef = 0;  // 2 on the diagonal, 0 elsewhere
};

/// Linear form I_n = alpha + beta * zeta(3) of the weighted double integral
/// with weight P_n(x) P_n(y), scaled by d_n^3 to integers A and B.
struct LinearForm {
    unsigned long n = 0;
    Rat alpha;
    Int beta;
    Int A;
    Int B;
    Int dn3;
};

/// d_n^3 * alpha_n came out non-integral.
class IntegralityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed form through harmonic numbers; memoized by (r, s).
KernelMoment moment(unsigned long r, unsigned long s);

/// Rigorous enclosure of the moment's real value from the geometric-series
/// expansion of 1/(1 - xy): the first `terms` summands plus a two-sided
/// bound on the tail. Independent of moment(). Requires 1 <= terms < 2^30.
Enclosure moment_series_oracle(unsigned long r, unsigned long s, unsigned long terms);

/// Assembles I_n from the Legendre coefficients and kernel moments; memoized.
/// Throws IntegralityViolation if d_n^3 * alpha_n is not an integer.
const LinearForm& linear_form(unsigned long n);

/// Scales (alpha, beta) by d_n^3 into A and B. Throws IntegralityViolation if
/// d_n^3 * alpha is not an integer.
LinearForm scale_linear_form(unsigned long n, const Rat& alpha, const Int& beta);

/// b_n of the three-term recurrence
///   n^3 b_n = (34n^3 - 51n^2 + 27n - 5) b_{n-1} - (n-1)^3 b_{n-2},  b_0 = 1, b_1 = 5.
Int apery_oracle(unsigned long n);

}  // namespace apery

#endif  // APERY_BEUKERS_HPP
