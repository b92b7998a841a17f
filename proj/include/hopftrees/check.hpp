#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace hopftrees {

/// Outcome of an exhaustive check: pass/fail, the number of cases examined and the first counterexample.
struct CheckResult {
    bool ok = true;
    std::optional<std::pair<std::string, std::string>> counterexample;
    std::size_t checked = 0;

    void fail(std::string a, std::string b) {
        if (!ok) return;
        ok = false;
        counterexample.emplace(std::move(a), std::move(b));
    }
    void merge(const CheckResult& other) {
        checked += other.checked;
        if (!other.ok && ok) {
            ok = false;
            counterexample = other.counterexample;
        }
    }
    std::string describe() const {
        if (ok) return "ok (" + std::to_string(checked) + " checked)";
        std::string s = "FAIL after " + std::to_string(checked) + " checks";
        if (counterexample) s += ": counterexample (" + counterexample->first + ", " + counterexample->second + ")";
        return s;
    }
};

}  // namespace hopftrees
