#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "horadam/rational.hpp"

namespace horadam {

/// Variable bindings of one case, in grid order.
using Bindings = std::vector<std::pair<std::string, std::int64_t>>;

/// Outcome of evaluating one identity instance.
struct CaseResult {
    enum class Status { holds, fails, skipped };

    Status status = Status::holds;
    Rational lhs;
    Rational rhs;
    std::string skip_reason;

    /// holds/fails from an exact comparison.
    static CaseResult compare(Rational lhs, Rational rhs);
    static CaseResult skip(std::string reason);
};

struct Counterexample {
    Bindings bindings;
    Rational lhs;
    Rational rhs;
};

struct CaseRecord {
    Bindings bindings;
    CaseResult result;
};

/// Result of checking one identity over one binding or a whole grid.
///
/// Invariant: cases_total == cases_checked + cases_skipped_precondition;
/// the identity holds on the grid iff counterexamples is empty.
struct VerificationReport {
    std::string identity;
    std::string grid;
    std::uint64_t cases_total = 0;
    std::uint64_t cases_checked = 0;
    std::uint64_t cases_skipped_precondition = 0;
    std::vector<Counterexample> counterexamples;
    std::map<std::string, std::uint64_t> skip_reasons;
    /// Per-case log, filled only when a sweep is asked to record cases.
    std::vector<CaseRecord> cases;

    bool holds() const { return counterexamples.empty(); }
    double skipped_fraction() const;

    void add(const Bindings& bindings, const CaseResult& result, bool record);
    /// Folds another report's counts, counterexamples, reasons and records in.
    void merge(const VerificationReport& other);
};

/// Stable JSON schema:
///   {"identity", "grid", "cases_total", "cases_checked",
///    "cases_skipped_precondition",
///    "counterexamples": [{"bindings": {var: int}, "lhs", "rhs"}]}
std::string to_json(const VerificationReport& report);

/// "# key=value" summary comments followed by one row per counterexample.
std::string to_csv(const VerificationReport& report);

std::string to_text(const VerificationReport& report);

}  // namespace horadam
