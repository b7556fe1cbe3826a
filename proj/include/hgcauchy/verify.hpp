#pragma once

#include <optional>
#include <string_view>

#include "hgcauchy/errors.hpp"
#include "hgcauchy/report.hpp"

namespace hgc {

enum class Suite { all, core, higher, relations, inversion, series_rules };

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view text);

struct VerifyGrid {
    unsigned N_max = 4;
    unsigned r_max = 3;
    unsigned n_max = 12;
    Caps caps{};
    /// Instance count for every randomized check.
    unsigned random_instances = 200;
};

/// Runs every identity of the suite over the grid; records come out in a
/// fixed order.
VerificationReport run_suite(Suite suite, const VerifyGrid& grid);

VerificationReport core_suite(const VerifyGrid& grid);
VerificationReport higher_suite(const VerifyGrid& grid);
VerificationReport relations_suite(const VerifyGrid& grid);
VerificationReport inversion_suite(const VerifyGrid& grid);
VerificationReport series_rules_suite(const VerifyGrid& grid);

}  // namespace hgc
