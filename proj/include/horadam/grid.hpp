#pragma once

/**
 * @file grid.hpp
 * @brief Integer parameter grids and the sweep driver.
 *
 * Grid text: comma-separated "var=lo..hi" (inclusive) or "var=value",
 * optionally followed by ';'-separated linear constraints such as
 * "m<=n" or "2*a-b>0". Constraints filter cases; they never bind.
 *
 *     n=-2..2,m=-2..2,a=0..1;m<=n
 *
 * Cases are enumerated lexicographically with the first variable outermost.
 */

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/report.hpp"

namespace horadam {

struct VarRange {
    std::string name;
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::uint64_t size() const { return lo > hi ? 0 : static_cast<std::uint64_t>(hi - lo) + 1; }
};

/// sum(coefficient * var) + constant  <op>  0
struct LinearConstraint {
    enum class Relation { less, less_equal, greater, greater_equal, equal, not_equal };

    std::vector<std::pair<std::string, std::int64_t>> coefficients;
    std::int64_t constant = 0;
    Relation relation = Relation::equal;
    std::string text;
};

class GridSpec {
public:
    GridSpec() = default;
    explicit GridSpec(std::vector<VarRange> vars, std::vector<LinearConstraint> constraints = {});

    /// Throws ParseError on malformed text, duplicate variables or a
    /// constraint naming a variable the grid does not range over.
    static GridSpec parse(std::string_view text);

    const std::vector<VarRange>& vars() const { return vars_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    bool has(std::string_view name) const;
    const VarRange* find(std::string_view name) const;

    /// Cartesian size before constraints.
    std::uint64_t raw_size() const;

    /// Largest |value| any variable can take; 0 for an empty grid.
    std::int64_t max_abs() const;

    /// Values aligned with vars().
    bool admits(std::span<const std::int64_t> values) const;

    /// Calls visit(values) for every admitted case in lexicographic order.
    void for_each(const std::function<void(std::span<const std::int64_t>)>& visit) const;

    /// Canonical text; parse(to_string()) reproduces the grid.
    std::string to_string() const;

private:
    std::vector<VarRange> vars_;
    std::vector<LinearConstraint> constraints_;
};

/// An identity that can be evaluated at one binding of named integer
/// variables. `evaluate` receives values in `vars` order.
struct IdentityChecker {
    std::string name;
    std::vector<std::string> vars;
    std::function<CaseResult(std::span<const std::int64_t>)> evaluate;
};

struct SweepOptions {
    bool record_cases = false;
};

/// Runs the checker on every case of the grid. The grid must range over
/// exactly the checker's variables (any order); otherwise UsageError.
VerificationReport run_grid(const IdentityChecker& checker, const GridSpec& grid, SweepOptions options = {});

}  // namespace horadam
