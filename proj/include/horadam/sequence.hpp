#pragma once

/**
 * @file sequence.hpp
 * @brief Second-order linear recurrences G_n = p G_{n-1} + q G_{n-2}.
 *
 * A Sequence is defined for every integer index: forward by the recurrence,
 * backward by G_{n-2} = (G_n - p G_{n-1}) / q, which is why q must be
 * nonzero. Evaluation at a single index goes through powers of the
 * companion matrix
 *
 *     M = [ p  q ]      [ G_{n+1} ]         [ G_1 ]
 *         [ 1  0 ],     [ G_n     ] = M^n * [ G_0 ],
 *
 * so term() costs O(log |n|) big-number multiplications at any sign of n.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/mat2.hpp"
#include "horadam/rational.hpp"

namespace horadam {

struct RecurrenceParams {
    Rational p;
    Rational q;

    /// Throws ParameterError when p or q is zero.
    RecurrenceParams(Rational p_, Rational q_);

    Mat2 companion() const { return {p, q, Rational(1), Rational(0)}; }

    friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

class Sequence {
public:
    /// Throws ParameterError when g0 and g1 are both zero.
    Sequence(RecurrenceParams params, Rational g0, Rational g1, std::optional<std::string> name = std::nullopt);

    const RecurrenceParams& params() const { return params_; }
    const Rational& p() const { return params_.p; }
    const Rational& q() const { return params_.q; }
    const Rational& g0() const { return g0_; }
    const Rational& g1() const { return g1_; }
    const std::optional<std::string>& name() const { return name_; }

    /// Display label: the name when present, otherwise "(p,q,g0,g1)".
    std::string label() const;

    /// Same recurrence and initial terms; the name is ignored.
    bool same_values(const Sequence& other) const;

private:
    RecurrenceParams params_;
    Rational g0_;
    Rational g1_;
    std::optional<std::string> name_;
};

Sequence make_sequence(const Rational& p, const Rational& q, const Rational& g0, const Rational& g1);

/// G_n via companion-matrix powers.
Rational term(const Sequence& s, std::int64_t n);

/// [G_lo, ..., G_hi]. Throws RangeError when lo > hi.
std::vector<Rational> term_range(const Sequence& s, std::int64_t lo, std::int64_t hi);

/// G_n by |n| plain recurrence steps from (G_0, G_1). Reference oracle.
Rational term_iterative_oracle(const Sequence& s, std::int64_t n);

// Named sequences.
Sequence fibonacci();
Sequence lucas();
Sequence pell();
Sequence pell_lucas();
Sequence jacobsthal();
Sequence jacobsthal_lucas();

/// "fibonacci", "lucas", "pell", "pell-lucas", "jacobsthal", "jacobsthal-lucas".
std::span<const std::string_view> named_sequence_ids();
std::optional<Sequence> named_sequence(std::string_view id);

/// Read-only lookup of G_n with a precomputed window [lo, hi]; indices
/// outside the window fall back to term(). Immutable after construction,
/// so one table can be shared across threads.
class TermTable {
public:
    explicit TermTable(Sequence s);
    TermTable(Sequence s, std::int64_t lo, std::int64_t hi);

    const Sequence& sequence() const { return seq_; }
    Rational operator()(std::int64_t n) const;

private:
    Sequence seq_;
    std::int64_t lo_ = 0;
    std::vector<Rational> window_;
};

}  // namespace horadam
