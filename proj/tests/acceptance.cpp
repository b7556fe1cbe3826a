// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact rational equality; the only numeric limits are the wall-clock
// budgets below.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgcauchy/cauchy.hpp"
#include "hgcauchy/cli.hpp"
#include "hgcauchy/errata.hpp"
#include "hgcauchy/hessenberg.hpp"
#include "hgcauchy/higher_order.hpp"
#include "hgcauchy/relations.hpp"
#include "hgcauchy/series.hpp"
#include "hgcauchy/series_rules.hpp"
#include "unit/oracles.hpp"

namespace {

using hgc::ExactRational;
using Q = ExactRational;
using Values = std::vector<ExactRational>;

constexpr double kMethodAgreementBudget = 10.0;  // seconds
constexpr double kHigherAgreementBudget = 30.0;
constexpr double kVerifyAllBudget = 120.0;
constexpr std::size_t kExpectedErrata = 4;
constexpr unsigned kRandomInstances = 200;
constexpr unsigned kTrudiInstances = 100;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string at(unsigned N, unsigned r, unsigned n) {
    return "N=" + std::to_string(N) + " r=" + std::to_string(r) + " n=" + std::to_string(n);
}

bool first_mismatch(const Values& a, const Values& b, unsigned& index) {
    if (a.size() != b.size()) {
        index = static_cast<unsigned>(std::min(a.size(), b.size()));
        return true;
    }
    for (unsigned i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) {
            index = i;
            return true;
        }
    return false;
}

bool is_single_erratum(const hgc::VerificationReport& report) {
    return report.records().size() == 1 && report.records()[0].status == hgc::Status::erratum_noted;
}

Outcome method_agreement() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    for (unsigned N = 1; N <= 6; ++N) {
        Values expected = hgc::oracle::normalized_hgc(N, 20);
        for (unsigned n = 0; n <= 20; ++n)
            expected[n] *= hgc::oracle::fact(n);
        const std::vector<std::pair<const char*, Values>> tables{
            {"series", hgc::c_via_series(N, 20).values},
            {"recurrence", hgc::c_via_recurrence(N, 20).values},
            {"determinant", hgc::c_via_determinant(N, 20).values},
            {"compositions", hgc::c_via_compositions(N, 20).values},
            {"trudi", hgc::c_via_trudi(N, 20).values},
        };
        for (const auto& [name, values] : tables) {
            unsigned n = 0;
            out.require(!first_mismatch(expected, values, n), std::string(name) + " differs at " + at(N, 1, n));
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    out.require(elapsed.count() < kMethodAgreementBudget, "runtime " + std::to_string(elapsed.count()) + " s");
    if (out.ok)
        out.detail = "N 1..6, n 0..20, " + std::to_string(elapsed.count()) + " s";
    return out;
}

Outcome higher_agreement() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    for (unsigned N = 1; N <= 4; ++N) {
        for (unsigned r = 1; r <= 4; ++r) {
            const Values reference = hgc::chor_via_recurrence(N, r, 15).values;
            const std::vector<std::pair<const char*, Values>> tables{
                {"determinant", hgc::chor_via_determinant(N, r, 15).values},
                {"explicit", hgc::chor_via_explicit(N, r, 15).values},
                {"trudi", hgc::chor_via_trudi(N, r, 15).values},
                {"convolution", hgc::chor_via_convolution(N, r, 15).values},
                {"series", hgc::chor_via_series(N, r, 15).values},
            };
            for (const auto& [name, values] : tables) {
                unsigned n = 0;
                out.require(!first_mismatch(reference, values, n),
                            std::string(name) + " differs at " + at(N, r, n));
            }
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    out.require(elapsed.count() < kHigherAgreementBudget, "runtime " + std::to_string(elapsed.count()) + " s");
    if (out.ok)
        out.detail = "N 1..4, r 1..4, n 0..15, " + std::to_string(elapsed.count()) + " s";
    return out;
}

Outcome inversions() {
    Outcome out;
    for (unsigned N = 1; N <= 6; ++N) {
        out.require(hgc::ratio_inversion(N, 15).ok(), "ratio inversion at N=" + std::to_string(N));
        for (unsigned r = 1; r <= 3; ++r) {
            // Bands c^(r)_k / k! must give back D_r(n) as determinants.
            const auto b = hgc::chor_via_recurrence(N, r, 15).normalized();
            const auto D = hgc::weight_D(N, r, 15).values;
            const auto minors = hgc::hessenberg_minors({1, Values(b.begin() + 1, b.end())});
            unsigned n = 0;
            out.require(!first_mismatch(D, minors, n), "determinant of normalized bands at " + at(N, r, n));
            if (r == 1)
                for (unsigned k = 0; k <= 15; ++k)
                    out.require(minors[k] == Q(N, N + k), "N/(N+n) at " + at(N, 1, k));
            out.require(hgc::D_inversion(N, r, 15).ok(), "weight inversion at " + at(N, r, 15));
            const hgc::SequenceRule rule = [&D](unsigned k) { return D[k]; };
            out.require(hgc::signed_inverse_check("signed", rule, 15).ok(), "signed inverse at " + at(N, r, 15));
        }
    }
    out.require(is_single_erratum(hgc::inverse_sign_erratum()), "literal inverse form not flagged");
    if (out.ok)
        out.detail = "N 1..6, r 1..3, n 1..15; literal inverse signs flagged erratum-noted";
    return out;
}

Outcome cross_order() {
    Outcome out;
    for (unsigned N = 2; N <= 6; ++N)
        out.require(hgc::cross_order_step(N, 15).ok(), "N -> N-1 step at N=" + std::to_string(N));
    for (unsigned N = 2; N <= 5; ++N) {
        out.require(hgc::chain_sum(N, 12).ok(), "chain expansion at N=" + std::to_string(N));
        const auto examples = hgc::chain_examples(N);
        out.require(examples.ok() && examples.records().size() == 2 &&
                        examples.records()[0].identity == "chain-example-i" &&
                        examples.records()[1].identity == "chain-example-ii",
                    "worked examples at N=" + std::to_string(N));
    }
    if (out.ok)
        out.detail = "step N 2..6 n 0..15; chains N 2..5 n 0..12; examples (i), (ii)";
    return out;
}

Outcome classical() {
    Outcome out;
    Values log_ratio;  // log(1+x)/x
    for (unsigned k = 0; k <= 5; ++k)
        log_ratio.push_back(hgc::sign_power(k) * Q(1, k + 1));
    const Values b_expected{1, Q(1, 2), Q(-1, 12), Q(1, 24), Q(-19, 720), Q(3, 160)};
    out.require(hgc::oracle::reciprocal_coefficients(log_ratio) == b_expected, "series oracle for b_n");
    out.require(hgc::c_via_recurrence(1, 5).normalized() == b_expected, "b_n values");

    Values exp_ratio;  // (e^x - 1)/x
    for (unsigned k = 0; k <= 12; ++k)
        exp_ratio.push_back(hgc::oracle::fact(k + 1).reciprocal());
    Values bernoulli = hgc::oracle::reciprocal_coefficients(exp_ratio);
    for (unsigned n = 0; n <= 12; ++n)
        bernoulli[n] *= hgc::oracle::fact(n);
    out.require(hgc::classical_bernoulli_det(12) == bernoulli, "Bernoulli numbers B_0..B_12");

    Values cosh_even;  // cosh in y = x^2
    for (unsigned k = 0; k <= 6; ++k)
        cosh_even.push_back(hgc::oracle::fact(2 * k).reciprocal());
    Values euler = hgc::oracle::reciprocal_coefficients(cosh_even);
    for (unsigned k = 0; k <= 6; ++k)
        euler[k] *= hgc::oracle::fact(2 * k);
    const auto E = hgc::classical_euler_det(6);
    out.require(E == euler, "Euler numbers E_0..E_12");
    out.require(E.size() == 7 && E[1] == -1 && E[2] == 5, "E_2 = -1, E_4 = 5");
    if (out.ok)
        out.detail = "b_0..b_5, B_0..B_12, E_0..E_12";
    return out;
}

Outcome ht_rules() {
    Outcome out;
    const auto check = [&out](const hgc::VerificationReport& report, const char* name) {
        std::string why = name;
        if (const auto* fail = report.first_failure())
            why += " fails at n=" + std::to_string(fail->point.n.value_or(0)) + " (" + fail->note + ")";
        out.require(report.ok(), why);
    };
    check(hgc::check_product_rule(kRandomInstances, 10), "product rule");
    check(hgc::check_quotient_rule_strict(kRandomInstances, 10), "quotient rule, strict form");
    check(hgc::check_quotient_rule_binomial(kRandomInstances, 10), "quotient rule, binomial form");
    if (out.ok)
        out.detail = std::to_string(kRandomInstances) + " seeded instances per rule, order <= 10";
    return out;
}

Outcome cameron() {
    Outcome out;
    out.require(hgc::check_cameron_roundtrip(kRandomInstances, 20).ok(), "round trip");
    for (unsigned N = 1; N <= 6; ++N) {
        Values x;
        for (unsigned n = 1; n <= 20; ++n)
            x.push_back(hgc::sign_power(n - 1) * Q(N, N + n));
        const auto b = hgc::oracle::normalized_hgc(N, 20);
        out.require(hgc::cameron_transform(x) == Values(b.begin() + 1, b.end()),
                    "hypergeometric correspondence at N=" + std::to_string(N));
        out.require(hgc::cameron_inverse(Values(b.begin() + 1, b.end())) == x,
                    "inverse correspondence at N=" + std::to_string(N));
    }
    out.require(is_single_erratum(hgc::cameron_direction_erratum()), "stated direction not flagged");
    if (out.ok)
        out.detail = "round trip to order 20; x_n = (-1)^(n-1) N/(N+n) -> c_{N,n}/n! for N 1..6; "
                     "stated direction flagged erratum-noted";
    return out;
}

Outcome trudi() {
    Outcome out;
    const auto report = hgc::check_trudi_equivalence(kTrudiInstances, 9);
    out.require(report.ok(), "trudi sum differs from the determinant");
    if (out.ok)
        out.detail = std::to_string(kTrudiInstances) + " seeded specs, dimension <= 9";
    return out;
}

Outcome verify_all() {
    Outcome out;
    std::ostringstream stdout_buf, stderr_buf;
    const auto start = std::chrono::steady_clock::now();
    const int code =
        hgc::cli::run({"hgcauchy", "verify", "--suite", "all", "--format", "json"}, stdout_buf, stderr_buf);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    out.require(code == 0, "exit code " + std::to_string(code));

    const auto j = nlohmann::json::parse(stdout_buf.str(), nullptr, false);
    out.require(!j.is_discarded(), "output is not JSON");
    if (!out.ok)
        return out;
    std::size_t errata = 0, fails = 0, passes = 0;
    for (const auto& rec : j["records"]) {
        const auto status = rec["status"].get<std::string>();
        errata += status == "erratum-noted";
        fails += status == "fail";
        passes += status == "pass";
    }
    out.require(fails == 0, std::to_string(fails) + " fail records");
    out.require(errata == kExpectedErrata, std::to_string(errata) + " erratum-noted records");
    out.require(j["summary"]["erratum-noted"] == errata && j["summary"]["fail"] == fails, "summary mismatch");
    out.require(elapsed.count() < kVerifyAllBudget, "runtime " + std::to_string(elapsed.count()) + " s");
    if (out.ok)
        out.detail = std::to_string(passes) + " pass, 0 fail, " + std::to_string(errata) + " erratum-noted, " +
                     std::to_string(elapsed.count()) + " s";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"method agreement", method_agreement},
        {"higher-order agreement", higher_agreement},
        {"inversion round trips", inversions},
        {"cross-order identities", cross_order},
        {"classical specializations", classical},
        {"Hasse-Teichmueller rules", ht_rules},
        {"Cameron operator", cameron},
        {"Trudi equivalence", trudi},
        {"verify --suite all", verify_all},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome result = criteria[i].second();
        std::cout << (result.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first
                  << "  [" << result.detail << "]" << std::endl;
        failed += result.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
