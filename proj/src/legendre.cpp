#include "apery/legendre.hpp"

#include "apery/combinatorics.hpp"

namespace apery {

LegendrePoly legendre(unsigned long n) {
    LegendrePoly p;
    p.n = n;
    p.coeffs.reserve(n + 1);
    for (unsigned long k = 0; k <= n; ++k) {
        Int c = binom(n, k) * binom(n + k, k);
        if (k % 2 == 1) c = -c;
        p.coeffs.push_back(std::move(c));
    }
    return p;
}

Rat eval(const LegendrePoly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = acc * x + Rat(*it);
    }
    return acc;
}

}  // namespace apery
