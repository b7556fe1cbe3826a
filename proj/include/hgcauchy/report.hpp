#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgcauchy/rational.hpp"

namespace hgc {

enum class Status { pass, fail, erratum_noted };

std::string_view to_string(Status status);

/// Parameter point (N, r, n); unset fields do not apply to the identity.
struct ParameterPoint {
    std::optional<unsigned> N;
    std::optional<unsigned> r;
    std::optional<unsigned> n;
};

struct ValuePair {
    ExactRational expected;
    ExactRational actual;
};

/// One identity checked at one parameter point. A failing record always
/// carries both values; an erratum-noted record carries the literal claim
/// as `expected` and the computed value as `actual`.
struct VerificationRecord {
    std::string identity;
    ParameterPoint point;
    Status status = Status::pass;
    std::optional<ValuePair> detail;
    std::string note;
};

class VerificationReport {
public:
    void pass(std::string identity, ParameterPoint point, std::string note = {});
    void fail(std::string identity, ParameterPoint point, ExactRational expected, ExactRational actual,
              std::string note = {});
    void erratum(std::string identity, ParameterPoint point, ExactRational literal, ExactRational actual,
                 std::string note);
    void append(const VerificationReport& other);

    const std::vector<VerificationRecord>& records() const { return records_; }
    std::size_t count(Status status) const;
    bool ok() const { return count(Status::fail) == 0; }
    /// First failing record, if any.
    const VerificationRecord* first_failure() const;

private:
    std::vector<VerificationRecord> records_;
};

/// Compares two equal-length value lists entry by entry and records a single
/// pass (at n = last index, carrying `note`) or the first mismatch.
void compare_sequences(VerificationReport& report, std::string_view identity, ParameterPoint point,
                       const std::vector<ExactRational>& expected, const std::vector<ExactRational>& actual,
                       unsigned first_index = 0, std::string note = {});

}  // namespace hgc
