#include "horadam/sequence.hpp"

#include <algorithm>
#include <array>

#include "horadam/error.hpp"

namespace horadam {

RecurrenceParams::RecurrenceParams(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p.is_zero()) throw ParameterError("recurrence parameter p must be nonzero");
    if (q.is_zero()) throw ParameterError("recurrence parameter q must be nonzero");
}

Sequence::Sequence(RecurrenceParams params, Rational g0, Rational g1, std::optional<std::string> name)
    : params_(std::move(params)), g0_(std::move(g0)), g1_(std::move(g1)), name_(std::move(name)) {
    if (g0_.is_zero() && g1_.is_zero()) throw ParameterError("initial terms must not both be zero");
}

std::string Sequence::label() const {
    if (name_) return *name_;
    return "(" + p().to_string() + "," + q().to_string() + "," + g0_.to_string() + "," + g1_.to_string() + ")";
}

bool Sequence::same_values(const Sequence& other) const {
    return params_ == other.params_ && g0_ == other.g0_ && g1_ == other.g1_;
}

Sequence make_sequence(const Rational& p, const Rational& q, const Rational& g0, const Rational& g1) {
    return Sequence(RecurrenceParams(p, q), g0, g1);
}

Rational term(const Sequence& s, std::int64_t n) {
    if (n == 0) return s.g0();
    if (n == 1) return s.g1();
    const Mat2 power = mat_pow(s.params().companion(), n);
    return power.a21 * s.g1() + power.a22 * s.g0();
}

std::vector<Rational> term_range(const Sequence& s, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw RangeError("term_range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
    const auto size = static_cast<std::size_t>(hi - lo) + 1;
    std::vector<Rational> out(size);

    // Seed at the index closest to 0 and walk outwards in both directions.
    const std::int64_t anchor = std::clamp<std::int64_t>(0, lo, hi);
    const auto at = [&](std::int64_t n) -> Rational& { return out[static_cast<std::size_t>(n - lo)]; };
    at(anchor) = term(s, anchor);
    if (anchor < hi) at(anchor + 1) = term(s, anchor + 1);
    else if (anchor > lo) at(anchor - 1) = term(s, anchor - 1);

    const Rational& p = s.p();
    const Rational& q = s.q();
    const std::int64_t forward_from = (anchor < hi) ? anchor + 2 : hi + 1;
    for (std::int64_t n = forward_from; n <= hi; ++n) at(n) = p * at(n - 1) + q * at(n - 2);
    const std::int64_t backward_from = (anchor < hi) ? anchor - 1 : anchor - 2;
    for (std::int64_t n = backward_from; n >= lo; --n) at(n) = (at(n + 2) - p * at(n + 1)) / q;
    return out;
}

namespace {

// W_k = a W_{k-1} + b W_{k-2} stepped k times from (w0, w1), kept as integers:
// with D = den(a) den(b) and S = lcm(den(w0), den(w1)), U_k = W_k S D^k satisfies
// U_k = (a D) U_{k-1} + (b D^2) U_{k-2}. One reduction at the end.
Rational iterate_scaled(const Rational& a, const Rational& b, const Rational& w0, const Rational& w1,
                        std::int64_t k) {
    const BigInt d = a.denominator() * b.denominator();
    BigInt s;
    mpz_lcm(s.get_mpz_t(), w0.denominator().get_mpz_t(), w1.denominator().get_mpz_t());
    const BigInt ca = a.numerator() * (d / a.denominator());
    const BigInt cb = b.numerator() * (d / b.denominator()) * d;
    BigInt prev = w0.numerator() * (s / w0.denominator());
    BigInt next = w1.numerator() * (s / w1.denominator()) * d;
    if (k == 0) return Rational(prev, s);
    BigInt g;
    for (std::int64_t i = 1; i < k; ++i) {
        g = ca * next + cb * prev;
        prev.swap(next);
        next.swap(g);
    }
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(next, s * scale);
}

}  // namespace

Rational term_iterative_oracle(const Sequence& s, std::int64_t n) {
    if (n >= 0) return iterate_scaled(s.p(), s.q(), s.g0(), s.g1(), n);
    // Walking down: G_j = (-p/q) G_{j+1} + (1/q) G_{j+2}, started from (G_1, G_0).
    return iterate_scaled(-s.p() / s.q(), Rational(1) / s.q(), s.g1(), s.g0(), 1 - n);
}

namespace {

Sequence named(std::int64_t p, std::int64_t q, std::int64_t g0, std::int64_t g1, const char* name) {
    return Sequence(RecurrenceParams(p, q), g0, g1, std::string(name));
}

constexpr std::array<std::string_view, 6> kNamedIds = {"fibonacci",  "lucas",      "pell",
                                                       "pell-lucas", "jacobsthal", "jacobsthal-lucas"};

}  // namespace

Sequence fibonacci() { return named(1, 1, 0, 1, "fibonacci"); }
Sequence lucas() { return named(1, 1, 2, 1, "lucas"); }
Sequence pell() { return named(2, 1, 0, 1, "pell"); }
Sequence pell_lucas() { return named(2, 1, 2, 2, "pell-lucas"); }
Sequence jacobsthal() { return named(1, 2, 0, 1, "jacobsthal"); }
Sequence jacobsthal_lucas() { return named(1, 2, 2, 1, "jacobsthal-lucas"); }

std::span<const std::string_view> named_sequence_ids() { return kNamedIds; }

std::optional<Sequence> named_sequence(std::string_view id) {
    if (id == "fibonacci") return fibonacci();
    if (id == "lucas") return lucas();
    if (id == "pell") return pell();
    if (id == "pell-lucas") return pell_lucas();
    if (id == "jacobsthal") return jacobsthal();
    if (id == "jacobsthal-lucas") return jacobsthal_lucas();
    return std::nullopt;
}

TermTable::TermTable(Sequence s) : seq_(std::move(s)) {}

TermTable::TermTable(Sequence s, std::int64_t lo, std::int64_t hi)
    : seq_(std::move(s)), lo_(lo), window_(term_range(seq_, lo, hi)) {}

Rational TermTable::operator()(std::int64_t n) const {
    const std::uint64_t offset = static_cast<std::uint64_t>(n) - static_cast<std::uint64_t>(lo_);
    if (n >= lo_ && offset < window_.size()) return window_[offset];
    return term(seq_, n);
}

}  // namespace horadam
