#include "apery/chain.hpp"

#include "apery/bounds.hpp"
#include "apery/zeta3.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace apery {

CoeffVector::CoeffVector(std::vector<std::int64_t> c) : c_(std::move(c)) {
    if (c_.size() < 2) throw InvalidCoeffVector("coefficient vector needs degree m >= 1 (at least two entries)");
    if (c_.back() == 0) throw InvalidCoeffVector("leading coefficient c_m must be nonzero");
}

CoeffVector CoeffVector::parse(const std::string& text) {
    std::vector<std::int64_t> c;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::int64_t v = 0;
        const char* first = item.data();
        const char* last = item.data() + item.size();
        if (first != last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last) {
            throw InvalidCoeffVector("invalid coefficient '" + item + "'");
        }
        c.push_back(v);
    }
    if (!text.empty() && text.back() == ',') throw InvalidCoeffVector("trailing comma in coefficient list");
    return CoeffVector(std::move(c));
}

bool CoeffVector::all_positive() const {
    return std::ranges::all_of(c_, [](std::int64_t v) { return v > 0; });
}

std::string StepReport::id() const {
    switch (kind) {
        case StepKind::RatioBound: return "RatioBound";
        case StepKind::PowerK: return "PowerK(" + std::to_string(k) + ")";
        case StepKind::WeightedSum: return "WeightedSum";
        case StepKind::Substitution: return "Substitution";
        case StepKind::FinalContradiction: return "FinalContradiction";
    }
    return "?";
}

std::string StepReport::justification_text() const {
    switch (justification) {
        case JustificationKind::Justified: return "justified";
        case JustificationKind::NotApplicable: return "not_applicable";
        case JustificationKind::RequiresCondition: {
            const char* met = condition_met == Verdict::Holds ? "met"
                              : condition_met == Verdict::Fails ? "unmet"
                                                                : "undecided";
            return "requires_condition(" + condition + "): " + met;
        }
    }
    return "?";
}

namespace {

Enclosure coefficient(std::int64_t c) { return Enclosure(Rat(Int(std::to_string(c), 10))); }

// Holds if x.hi < 0, Fails if x.lo >= 0.
Verdict negative(const Enclosure& x) { return strictly_less(x, Enclosure(Rat(0))); }

// Holds only for the exact point 0, Fails when 0 is excluded.
Verdict is_zero(const Enclosure& x) {
    if (x == Enclosure(Rat(0))) return Verdict::Holds;
    return trichotomy(x) == Trichotomy::ContainsZero ? Verdict::Unknown : Verdict::Fails;
}

StepReport power_step(const Enclosure& R, const Enclosure& z, unsigned long k, unsigned long bits) {
    StepReport step;
    step.kind = k == 1 ? StepKind::RatioBound : StepKind::PowerK;
    step.k = k;
    step.statement = k == 1 ? "0 < R < zeta(3)" : "0 < R^" + std::to_string(k) + " < zeta(3)^" + std::to_string(k);
    step.value = round_outward(enc_pow(R, k), bits);
    step.bound = round_outward(enc_pow(z, k), bits);
    step.numeric = both(positive(step.value), strictly_less(step.value, step.bound));
    // raising a strict inequality between positive quantities to a positive power
    step.justification = JustificationKind::Justified;
    return step;
}

Enclosure weighted(const CoeffVector& c, const Enclosure& x, unsigned long bits) {
    // sum_{k=1..m+1} c_{k-1} x^k = x * (c_0 + x * (c_1 + ...))
    Enclosure acc(Rat(0));
    for (auto it = c.c().rbegin(); it != c.c().rend(); ++it) {
        acc = round_outward(enc_add(enc_mul(acc, x), coefficient(*it)), bits);
    }
    return round_outward(enc_mul(acc, x), bits);
}

}  // namespace

Enclosure residual(const CoeffVector& c, unsigned long digits) {
    const unsigned long bits = precision_bits(digits);
    const Enclosure z = zeta3(digits);
    Enclosure acc(Rat(0));
    for (auto it = c.c().rbegin(); it != c.c().rend(); ++it) {
        acc = round_outward(enc_add(enc_mul(acc, z), coefficient(*it)), bits);
    }
    return acc;
}

StepReport power_bound(unsigned long n, unsigned long k, unsigned long digits) {
    if (n == 0) throw std::invalid_argument("power_bound: n must be >= 1");
    if (k == 0) throw std::invalid_argument("power_bound: k must be >= 1");
    return power_step(bound_ratio(n, digits), zeta3(digits), k, precision_bits(digits));
}

Enclosure weighted_sum(unsigned long n, const CoeffVector& c, unsigned long digits) {
    return weighted(c, bound_ratio(n, digits), precision_bits(digits));
}

ChainReport audit_at(unsigned long n, const CoeffVector& c, unsigned long digits) {
    if (n == 0) throw std::invalid_argument("audit: n must be >= 1");
    const unsigned long bits = precision_bits(digits);
    const Enclosure z = zeta3(digits);

    ChainReport report;
    report.n = n;
    report.coeffs = c;
    report.digits_used = digits;
    report.c0_positive = c.c().front() > 0;
    report.R = bound_ratio(n, digits);
    report.S = weighted(c, report.R, bits);
    report.residual = residual(c, digits);

    for (unsigned long k = 1; k <= c.m() + 1; ++k) report.steps.push_back(power_step(report.R, z, k, bits));

    StepReport sum;
    sum.kind = StepKind::WeightedSum;
    sum.statement = "0 < S < sum_k c_{k-1} zeta(3)^k";
    sum.value = report.S;
    sum.bound = weighted(c, z, bits);
    sum.numeric = both(positive(sum.value), strictly_less(sum.value, sum.bound));
    if (c.all_positive()) {
        sum.justification = JustificationKind::Justified;
    } else {
        // a strict inequality multiplied by c <= 0 is not preserved
        sum.justification = JustificationKind::RequiresCondition;
        sum.condition = "all multipliers c_i strictly positive";
        sum.condition_met = Verdict::Fails;
    }
    report.steps.push_back(sum);

    StepReport sub;
    sub.kind = StepKind::Substitution;
    sub.statement = "zeta(3) * (c_0 + c_1 zeta(3) + ... + c_m zeta(3)^m) = 0";
    sub.value = round_outward(enc_mul(z, report.residual), bits);
    sub.bound = Enclosure(Rat(0));
    sub.numeric = is_zero(report.residual);
    sub.justification = JustificationKind::RequiresCondition;
    sub.condition = "the polynomial relation holds exactly, i.e. residual = 0";
    sub.condition_met = sub.numeric;
    report.steps.push_back(sub);

    StepReport last;
    last.kind = StepKind::FinalContradiction;
    last.statement = "0 < S < 0";
    last.value = report.S;
    last.bound = Enclosure(Rat(0));
    last.numeric = both(positive(report.S), negative(report.S));
    Verdict premises = Verdict::Holds;
    bool all_justified = true;
    for (const StepReport& s : report.steps) {
        if (s.justification != JustificationKind::RequiresCondition) continue;
        all_justified = false;
        premises = both(premises, s.condition_met);
    }
    if (!all_justified) {
        last.justification = JustificationKind::RequiresCondition;
        last.condition = "every preceding step justified";
        last.condition_met = premises;
    }
    report.steps.push_back(last);
    return report;
}

ChainReport audit(unsigned long n, const CoeffVector& c, unsigned long digits) {
    if (digits == 0) throw std::invalid_argument("audit: digits must be >= 1");
    unsigned long working = digits;
    for (int attempt = 0;; ++attempt) {
        ChainReport r = audit_at(n, c, working);
        const bool settled =
            std::ranges::none_of(r.steps, [](const StepReport& s) { return s.numeric == Verdict::Unknown; });
        if (settled || attempt == kMaxRefinements) return r;
        working *= 2;
    }
}

std::string report_json(const ChainReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["coeffs"] = report.coeffs.c();
    j["R"] = to_string(report.R);
    j["S"] = to_string(report.S);
    j["residual"] = to_string(report.residual);
    j["c0_positive"] = report.c0_positive;
    j["digits"] = report.digits_used;
    auto steps = nlohmann::ordered_json::array();
    for (const StepReport& s : report.steps) {
        nlohmann::ordered_json step;
        step["id"] = s.id();
        step["numeric"] = std::string(to_string(s.numeric));
        step["justification"] = s.justification_text();
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j.dump(2);
}

}  // namespace apery
