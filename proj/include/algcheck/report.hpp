#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "algcheck/common.hpp"

namespace algcheck {

inline constexpr const char* tool_version = "1.0.0";

enum class Status { pass, fail, refuted_as_printed };

[[nodiscard]] inline const char* to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::refuted_as_printed: return "refuted-as-printed";
    }
    return "fail";
}

struct CheckEntry {
    std::string name;
    /// The identity or property being checked, written as a formula.
    std::string formula;
    Status status = Status::pass;
    std::optional<std::string> counterexample;
    nlohmann::ordered_json details;
    double duration_ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::uint64_t> seeds;
    std::vector<CheckEntry> checks;

    /// Records a plain check: failure means a genuine regression.
    CheckEntry& add(std::string name, std::string formula, const CheckReport& rep, double ms = 0) {
        CheckEntry e{std::move(name), std::move(formula), rep.passed ? Status::pass : Status::fail,
                     rep.counterexample};
        e.details["cases"] = rep.cases;
        e.duration_ms = ms;
        checks.push_back(std::move(e));
        return checks.back();
    }

    CheckEntry& add(std::string name, std::string formula, bool ok, std::optional<std::string> witness,
                    double ms = 0) {
        if (!ok && !witness) witness = "check failed";
        checks.push_back(CheckEntry{std::move(name), std::move(formula), ok ? Status::pass : Status::fail,
                                    ok ? std::nullopt : std::move(witness)});
        checks.back().duration_ms = ms;
        return checks.back();
    }

    /// Records a statement known to be false as literally stated; refuting it is the expected outcome.
    CheckEntry& add_as_printed(std::string name, std::string formula, const CheckReport& rep, double ms = 0) {
        auto& e = add(std::move(name), std::move(formula), rep, ms);
        if (!rep.passed) e.status = Status::refuted_as_printed;
        return e;
    }

    [[nodiscard]] bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.status != Status::fail; });
    }

    void sort_checks() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckEntry& a, const CheckEntry& b) { return a.name < b.name; });
    }
};

/// Measures one block in milliseconds.
class Stopwatch {
  public:
    Stopwatch() : start_{std::chrono::steady_clock::now()} {}
    [[nodiscard]] double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

[[nodiscard]] inline bool all_ok(const std::vector<SuiteReport>& suites) {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.ok(); });
}

/// Canonical JSON document. Durations are wall-clock and only included on
/// request, so the default output is byte-stable for fixed inputs and seeds.
[[nodiscard]] inline nlohmann::ordered_json to_json(std::vector<SuiteReport> suites, bool with_timings) {
    std::sort(suites.begin(), suites.end(), [](const SuiteReport& a, const SuiteReport& b) { return a.suite < b.suite; });
    nlohmann::ordered_json doc;
    doc["tool"] = "algcheck";
    doc["version"] = tool_version;
    doc["passed"] = all_ok(suites);
    doc["suites"] = nlohmann::ordered_json::array();
    for (auto& s : suites) {
        s.sort_checks();
        nlohmann::ordered_json js;
        js["suite"] = s.suite;
        js["seeds"] = s.seeds;
        js["passed"] = s.ok();
        js["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : s.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["formula"] = c.formula;
            jc["status"] = to_string(c.status);
            jc["counterexample"] = c.counterexample ? nlohmann::ordered_json(*c.counterexample) : nullptr;
            if (!c.details.is_null()) jc["details"] = c.details;
            if (with_timings) jc["duration_ms"] = c.duration_ms;
            js["checks"].push_back(std::move(jc));
        }
        doc["suites"].push_back(std::move(js));
    }
    return doc;
}

inline void write_text(std::ostream& out, std::vector<SuiteReport> suites) {
    std::sort(suites.begin(), suites.end(), [](const SuiteReport& a, const SuiteReport& b) { return a.suite < b.suite; });
    std::size_t failed = 0, refuted = 0, total = 0;
    for (auto& s : suites) {
        s.sort_checks();
        out << "== " << s.suite;
        if (!s.seeds.empty()) {
            out << " (seeds:";
            for (auto sd : s.seeds) out << ' ' << sd;
            out << ')';
        }
        out << '\n';
        for (const auto& c : s.checks) {
            ++total;
            const char* tag = "PASS";
            if (c.status == Status::fail) {
                tag = "FAIL";
                ++failed;
            } else if (c.status == Status::refuted_as_printed) {
                tag = "REFUTED-AS-PRINTED";
                ++refuted;
            }
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(1) << c.duration_ms;
            out << "  [" << tag << "] " << c.name << "  (" << ms.str() << " ms)\n";
            if (c.counterexample) out << "      witness: " << *c.counterexample << '\n';
        }
    }
    out << "-- " << total << " checks, " << failed << " failed, " << refuted << " refuted-as-printed (expected)\n";
}

} // namespace algcheck
