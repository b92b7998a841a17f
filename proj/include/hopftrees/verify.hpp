#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hopftrees/check.hpp"

namespace hopftrees {

struct SuiteItem {
    std::string name;
    CheckResult result;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteItem> items;  // sorted by name
    bool ok() const;
    const SuiteItem* find(std::string_view item) const;
};

const std::vector<std::string>& suite_names();

/// Human-readable default degree caps, e.g. "weak 6, trees/subsets 7".
std::string default_caps(std::string_view suite);

/// Runs a suite exhaustively. With max_n set, every degree cap in the suite is replaced by it.
/// Tasks are spread over `workers` threads; the report does not depend on the worker count.
SuiteReport run_suite(std::string_view suite, std::optional<int> max_n = std::nullopt, int workers = 1);

/// "suite NAME", one "  item: ok (N checked)" line per item, then "result: ok" or "result: FAIL".
void write_report(std::ostream& out, const SuiteReport& report);

}  // namespace hopftrees
