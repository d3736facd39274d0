#ifndef APERY_LEGENDRE_HPP
#define APERY_LEGENDRE_HPP

#include "apery/exactnum.hpp"

#include <vector>

namespace apery {

/// Shifted Legendre polynomial P_n(x) = (1/n!) (d/dx)^n [x^n (1-x)^n] on [0, 1],
/// normalized so that P_n(0) = 1. coeffs[k] multiplies x^k.
struct LegendrePoly {
    unsigned long n = 0;
    std::vector<Int> coeffs;
};

/// Closed form c_k = (-1)^k C(n,k) C(n+k,k).
LegendrePoly legendre(unsigned long n);

/// Horner evaluation at an exact rational.
Rat eval(const LegendrePoly& p, const Rat& x);

}  // namespace apery

#endif  // APERY_LEGENDRE_HPP
