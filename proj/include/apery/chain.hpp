#ifndef APERY_CHAIN_HPP
#define APERY_CHAIN_HPP

#include "apery/exactnum.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

/// Step-by-step replay of the argument that runs from the bound ratio R_n,
/// through its powers and a c-weighted sum, to the claimed "0 < S < 0".
///
/// Each step is judged twice: whether its displayed inequality is numerically
/// true for this n (certified by enclosures), and whether the inference that
/// produced it is valid for the given coefficients. The two are independent;
/// a step can be numerically true and still unjustified.
namespace apery {

class InvalidCoeffVector : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer coefficients c_0..c_m of a candidate relation
/// c_0 + c_1 z + ... + c_m z^m = 0, with m >= 1 and c_m != 0.
/// The sign of c_0 is not constrained.
class CoeffVector {
public:
    explicit CoeffVector(std::vector<std::int64_t> c);

    /// Comma-separated list, c_0 first. Throws InvalidCoeffVector.
    static CoeffVector parse(const std::string& text);

    const std::vector<std::int64_t>& c() const noexcept { return c_; }
    unsigned long m() const noexcept { return c_.size() - 1; }
    bool all_positive() const;

private:
    std::vector<std::int64_t> c_;
};

enum class StepKind { RatioBound, PowerK, WeightedSum, Substitution, FinalContradiction };

enum class JustificationKind { Justified, RequiresCondition, NotApplicable };

struct StepReport {
    StepKind kind = StepKind::RatioBound;
    unsigned long k = 1;  // exponent, PowerK only
    std::string statement;
    Enclosure value;  // middle term of the displayed inequality
    Enclosure bound;  // right-hand side
    Verdict numeric = Verdict::Unknown;
    JustificationKind justification = JustificationKind::Justified;
    std::string condition;                   // RequiresCondition only
    Verdict condition_met = Verdict::Holds;  // RequiresCondition only

    std::string id() const;
    /// "justified", "not_applicable" or "requires_condition(<text>): met|unmet|undecided".
    std::string justification_text() const;
};

struct ChainReport {
    unsigned long n = 0;
    CoeffVector coeffs{{0, 1}};
    Enclosure R;
    Enclosure S;
    Enclosure residual;
    bool c0_positive = false;
    unsigned long digits_used = 0;
    std::vector<StepReport> steps;
};

/// c_0 + c_1 zeta(3) + ... + c_m zeta(3)^m by Horner.
Enclosure residual(const CoeffVector& c, unsigned long digits);

/// 0 < R_n^k < zeta(3)^k. Throws std::invalid_argument for n == 0 or k == 0.
StepReport power_bound(unsigned long n, unsigned long k, unsigned long digits);

/// S = sum_{k=1..m+1} c_{k-1} R_n^k.
Enclosure weighted_sum(unsigned long n, const CoeffVector& c, unsigned long digits);

/// Full chain at a fixed working precision.
ChainReport audit_at(unsigned long n, const CoeffVector& c, unsigned long digits);

/// Full chain, doubling the precision up to kMaxRefinements times while any
/// step is numerically Unknown.
ChainReport audit(unsigned long n, const CoeffVector& c, unsigned long digits);

/// Report as JSON: n, coeffs, R, S, residual, c0_positive, digits, steps[{id, numeric, justification}].
std::string report_json(const ChainReport& report);

}  // namespace apery

#endif  // APERY_CHAIN_HPP
