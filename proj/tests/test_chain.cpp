#include "apery/chain.hpp"

#include "apery/beukers.hpp"
#include "apery/bounds.hpp"
#include "apery/decimal.hpp"
#include "apery/zeta3.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace apery;

namespace {

Rat dec(const char* s) { return parse_decimal(s); }

const StepReport& step(const ChainReport& r, StepKind kind) {
    for (const StepReport& s : r.steps)
        if (s.kind == kind) return s;
    throw std::logic_error("missing step");
}

CoeffVector random_vector(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> degree(1, 4);
    std::uniform_int_distribution<std::int64_t> coef(-10, 10);
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    while (c.back() == 0) c.back() = coef(rng);
    return CoeffVector(c);
}

}  // namespace

TEST_CASE("coefficient vector validation") {
    CHECK_THROWS_AS(CoeffVector({0, 0}), InvalidCoeffVector);
    CHECK_THROWS_AS(CoeffVector({3}), InvalidCoeffVector);
    CHECK_THROWS_AS(CoeffVector::parse("1,x"), InvalidCoeffVector);
    CHECK_THROWS_AS(CoeffVector::parse("1,2,"), InvalidCoeffVector);
    CHECK_THROWS_AS(CoeffVector::parse(""), InvalidCoeffVector);
    const CoeffVector c = CoeffVector::parse("-6,+5");
    CHECK(c.c() == std::vector<std::int64_t>{-6, 5});
    CHECK(c.m() == 1);
    CHECK_FALSE(c.all_positive());
    CHECK(CoeffVector::parse("1,1").all_positive());
}

TEST_CASE("residual examples") {
    CHECK(intersect(residual(CoeffVector({0, 1}), 20), Enclosure(dec("1.20205690315959428"), dec("1.20205690315959429"))).has_value());
    const Enclosure r11 = residual(CoeffVector({1, 1}), 20);
    CHECK(r11.lo() > dec("2.2020569"));
    CHECK(r11.hi() < dec("2.2020570"));
    const Enclosure r65 = residual(CoeffVector({-6, 5}), 20);
    CHECK(r65.lo() > dec("0.0102845"));
    CHECK(r65.hi() < dec("0.0102846"));
}

TEST_CASE("5 zeta(3) - 6 equals half of I_1") {
    const Enclosure r = residual(CoeffVector({-6, 5}), 40);
    const Enclosure half = enc_scale(abs_linear_form(1, 40), Rat(1, 2));
    REQUIRE(intersect(r, half).has_value());
    CHECK(r.width() <= ten_to_minus(38));
    CHECK(half.width() <= ten_to_minus(38));
}

TEST_CASE("power bound examples") {
    const StepReport p1 = power_bound(1, 1, 20);
    CHECK(p1.kind == StepKind::RatioBound);
    CHECK(p1.numeric == Verdict::Holds);
    CHECK(p1.value.lo() > dec("0.349370"));
    CHECK(p1.value.hi() < dec("0.349371"));

    const StepReport p2 = power_bound(1, 2, 20);
    CHECK(p2.id() == "PowerK(2)");
    CHECK(p2.numeric == Verdict::Holds);
    CHECK(p2.justification == JustificationKind::Justified);
    CHECK(p2.value.lo() > dec("0.122059"));
    CHECK(p2.value.hi() < dec("0.122060"));
    CHECK(p2.bound.lo() > dec("1.444940"));
    CHECK(p2.bound.hi() < dec("1.444941"));

    CHECK_THROWS_AS(power_bound(1, 0, 20), std::invalid_argument);
}

TEST_CASE("weighted sum examples") {
    const Enclosure s11 = weighted_sum(1, CoeffVector({1, 1}), 20);
    CHECK(s11.lo() > dec("0.471430"));
    CHECK(s11.hi() < dec("0.471431"));
    const Enclosure s65 = weighted_sum(1, CoeffVector({-6, 5}), 20);
    CHECK(s65.lo() > dec("-1.485925"));
    CHECK(s65.hi() < dec("-1.485924"));
    // single positive top coefficient: S = c_m R^(m+1)
    const Enclosure s003 = weighted_sum(3, CoeffVector({0, 0, 3}), 30);
    CHECK(trichotomy(s003) == Trichotomy::Positive);
    const Enclosure expected = enc_scale(enc_pow(bound_ratio(3, 30), 3), Rat(3));
    CHECK(intersect(s003, expected).has_value());
}

TEST_CASE("audit of c = (1, 1) at n = 1") {
    const ChainReport r = audit(1, CoeffVector({1, 1}), 30);
    REQUIRE(r.steps.size() == 5);
    CHECK(r.steps[0].id() == "RatioBound");
    CHECK(r.steps[1].id() == "PowerK(2)");
    CHECK(r.steps[2].id() == "WeightedSum");
    CHECK(r.steps[3].id() == "Substitution");
    CHECK(r.steps[4].id() == "FinalContradiction");
    CHECK(r.c0_positive);

    CHECK(r.steps[0].numeric == Verdict::Holds);
    CHECK(r.steps[1].numeric == Verdict::Holds);
    const StepReport& sum = step(r, StepKind::WeightedSum);
    CHECK(sum.numeric == Verdict::Holds);
    CHECK(sum.justification == JustificationKind::Justified);

    const StepReport& sub = step(r, StepKind::Substitution);
    CHECK(sub.justification == JustificationKind::RequiresCondition);
    CHECK(sub.condition_met == Verdict::Fails);
    CHECK(r.residual.lo() > dec("2.202"));

    const StepReport& last = step(r, StepKind::FinalContradiction);
    CHECK(last.numeric == Verdict::Fails);
    CHECK(last.statement == "0 < S < 0");
    CHECK(r.S == sum.value);
    CHECK(r.R == r.steps[0].value);
}

TEST_CASE("audit of c = (-6, 5) at n = 1") {
    const ChainReport r = audit(1, CoeffVector({-6, 5}), 30);
    CHECK_FALSE(r.c0_positive);
    const StepReport& sum = step(r, StepKind::WeightedSum);
    CHECK(sum.numeric == Verdict::Fails);
    CHECK(sum.justification == JustificationKind::RequiresCondition);
    CHECK(sum.condition_met == Verdict::Fails);
    CHECK(sum.justification_text() == "requires_condition(all multipliers c_i strictly positive): unmet");
    CHECK(step(r, StepKind::FinalContradiction).numeric == Verdict::Fails);
}

TEST_CASE("invalid vectors are rejected before auditing") {
    CHECK_THROWS_AS(audit(1, CoeffVector({0, 0}), 30), InvalidCoeffVector);
}

TEST_CASE("property: the final step is never certified and positive vectors pass the weighted sum") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<unsigned long> index(1, 20);
    for (int i = 0; i < 200; ++i) {
        const CoeffVector c = random_vector(rng);
        const unsigned long n = index(rng);
        const ChainReport r = audit(n, c, 30);
        REQUIRE(step(r, StepKind::FinalContradiction).numeric != Verdict::Holds);
        if (trichotomy(r.S) != Trichotomy::ContainsZero) {
            REQUIRE(step(r, StepKind::FinalContradiction).numeric == Verdict::Fails);
        }
        if (c.all_positive()) {
            REQUIRE(step(r, StepKind::WeightedSum).numeric == Verdict::Holds);
        }
        const bool has_negative = std::ranges::any_of(c.c(), [](std::int64_t v) { return v < 0; });
        if (has_negative) {
            const bool flagged = std::ranges::any_of(r.steps, [](const StepReport& s) {
                return (s.justification == JustificationKind::RequiresCondition && s.condition_met == Verdict::Fails) ||
                       s.numeric == Verdict::Fails;
            });
            REQUIRE(flagged);
        }
    }
}

TEST_CASE("property: all-positive vectors keep the weighted sum for every n <= 20") {
    for (unsigned long n = 1; n <= 20; ++n) {
        for (const auto& c : {CoeffVector({1, 1}), CoeffVector({3, 1, 4, 1, 5}), CoeffVector({10, 10, 10})}) {
            const ChainReport r = audit(n, c, 30);
            const StepReport& sum = step(r, StepKind::WeightedSum);
            CHECK(positive(sum.value) == Verdict::Holds);
            CHECK(strictly_less(sum.value, sum.bound) == Verdict::Holds);
        }
    }
}

TEST_CASE("property: doubling digits never flips a determinate status") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<unsigned long> index(1, 12);
    for (int i = 0; i < 40; ++i) {
        const CoeffVector c = random_vector(rng);
        const unsigned long n = index(rng);
        ChainReport prev = audit_at(n, c, 4);
        for (unsigned long d = 8; d <= 128; d *= 2) {
            const ChainReport next = audit_at(n, c, d);
            REQUIRE(next.steps.size() == prev.steps.size());
            for (std::size_t k = 0; k < next.steps.size(); ++k) {
                if (prev.steps[k].numeric != Verdict::Unknown) {
                    REQUIRE(next.steps[k].numeric == prev.steps[k].numeric);
                }
            }
            prev = next;
        }
    }
}

TEST_CASE("json report schema") {
    const ChainReport r = audit(1, CoeffVector({1, 1}), 30);
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["n"] == 1);
    CHECK(j["coeffs"] == nlohmann::json::array({1, 1}));
    CHECK(j["R"].get<std::string>() == to_string(r.R));
    CHECK(j["S"].get<std::string>().front() == '[');
    CHECK(j["residual"].get<std::string>().back() == ']');
    REQUIRE(j["steps"].size() == 5);
    CHECK(j["steps"][4]["id"] == "FinalContradiction");
    CHECK(j["steps"][4]["numeric"] == "fails");
    CHECK(j["steps"][0]["justification"] == "justified");
}
