#include "hgcauchy/report.hpp"

#include <algorithm>

namespace hgc {

std::string_view to_string(Status status) {
    switch (status) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::erratum_noted:
        return "erratum-noted";
    }
    return "unknown";
}

void VerificationReport::pass(std::string identity, ParameterPoint point, std::string note) {
    records_.push_back({std::move(identity), point, Status::pass, std::nullopt, std::move(note)});
}

void VerificationReport::fail(std::string identity, ParameterPoint point, ExactRational expected,
                              ExactRational actual, std::string note) {
    records_.push_back({std::move(identity), point, Status::fail,
                        ValuePair{std::move(expected), std::move(actual)}, std::move(note)});
}

void VerificationReport::erratum(std::string identity, ParameterPoint point, ExactRational literal,
                                 ExactRational actual, std::string note) {
    records_.push_back({std::move(identity), point, Status::erratum_noted,
                        ValuePair{std::move(literal), std::move(actual)}, std::move(note)});
}

void VerificationReport::append(const VerificationReport& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t VerificationReport::count(Status status) const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(), [status](const auto& r) { return r.status == status; }));
}

const VerificationRecord* VerificationReport::first_failure() const {
    auto it = std::find_if(records_.begin(), records_.end(), [](const auto& r) { return r.status == Status::fail; });
    return it == records_.end() ? nullptr : &*it;
}

void compare_sequences(VerificationReport& report, std::string_view identity, ParameterPoint point,
                       const std::vector<ExactRational>& expected, const std::vector<ExactRational>& actual,
                       unsigned first_index, std::string note) {
    const std::size_t len = std::min(expected.size(), actual.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (expected[i] != actual[i]) {
            point.n = first_index + static_cast<unsigned>(i);
            report.fail(std::string(identity), point, expected[i], actual[i]);
            return;
        }
    }
    if (expected.size() != actual.size()) {
        point.n = first_index + static_cast<unsigned>(len);
        report.fail(std::string(identity), point, ExactRational(static_cast<std::int64_t>(expected.size())),
                    ExactRational(static_cast<std::int64_t>(actual.size())), "length mismatch");
        return;
    }
    point.n = len == 0 ? first_index : first_index + static_cast<unsigned>(len - 1);
    report.pass(std::string(identity), point, std::move(note));
}

}  // namespace hgc
