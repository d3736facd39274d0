#include "apery/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace apery {

Int binom(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

// Prefix sums H_0..H_r, extended on demand. std::deque keeps references stable.
class HarmonicTable {
public:
    explicit HarmonicTable(unsigned order) : order_(order) { values_.emplace_back(0); }

    Rat get(unsigned long r) {
        {
            std::shared_lock lock(mutex_);
            if (r < values_.size()) return values_[r];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= r) {
            const unsigned long m = values_.size();
            Rat term(1, pow(Int(m), order_));
            values_.push_back(values_.back() + term);
        }
        return values_[r];
    }

private:
    unsigned order_;
    std::deque<Rat> values_;
    std::shared_mutex mutex_;
};

class DnTable {
public:
    DnTable() { values_.push_back(Dn{1, Int(1), Int(1)}); }

    const Dn& get(unsigned long n) {
        {
            std::shared_lock lock(mutex_);
            if (n <= values_.size()) return values_[n - 1];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() < n) {
            const unsigned long k = values_.size() + 1;
            Int v;
            mpz_lcm_ui(v.get_mpz_t(), values_.back().value.get_mpz_t(), k);
            Int c = v * v * v;
            values_.push_back(Dn{k, std::move(v), std::move(c)});
        }
        return values_[n - 1];
    }

private:
    std::deque<Dn> values_;
    std::shared_mutex mutex_;
};

}  // namespace

Rat harmonic(unsigned long r, unsigned order) {
    static HarmonicTable h2(2);
    static HarmonicTable h3(3);
    switch (order) {
        case 2: return h2.get(r);
        case 3: return h3.get(r);
        default: throw std::invalid_argument("harmonic: order must be 2 or 3");
    }
}

const Dn& d(unsigned long n) {
    if (n == 0) throw std::invalid_argument("d: n must be >= 1");
    static DnTable table;
    return table.get(n);
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<unsigned long> primes;
    for (unsigned long p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (unsigned long q = p * p; q <= n; q += p) composite[q] = true;
    }
    return primes;
}

Int lcm_prime_power(unsigned long n) {
    Int result(1);
    for (unsigned long p : primes_up_to(n)) {
        unsigned long pk = p;
        while (pk <= n / p) pk *= p;
        result *= pk;
    }
    return result;
}

}  // namespace apery
