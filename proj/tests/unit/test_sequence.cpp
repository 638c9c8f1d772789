#include <doctest.h>

#include <random>

#include "horadam/error.hpp"
#include "horadam/sequence.hpp"
#include "reference_table.hpp"

using namespace horadam;

namespace {

Sequence random_sequence(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    auto nonzero = [&] {
        for (;;) {
            const int n = num(rng);
            if (n != 0) return rat(n, den(rng));
        }
    };
    return make_sequence(nonzero(), nonzero(), rat(num(rng), den(rng)), nonzero());
}

}  // namespace

TEST_CASE("reference table values") {
    for (const auto& row : testing::kReferenceTable) {
        const Sequence s = *named_sequence(row.sequence);
        const auto range = term_range(s, testing::kTableLo, testing::kTableHi);
        for (std::int64_t n = testing::kTableLo; n <= testing::kTableHi; ++n) {
            const auto expected = Rational::parse(row.values[static_cast<std::size_t>(n - testing::kTableLo)]);
            CHECK_MESSAGE(term(s, n) == expected, row.sequence, " n=", n);
            CHECK(range[static_cast<std::size_t>(n - testing::kTableLo)] == expected);
        }
    }
}

TEST_CASE("named sequences") {
    CHECK(named_sequence_ids().size() == 6);
    CHECK_FALSE(named_sequence("tribonacci").has_value());
    CHECK(term(fibonacci(), 8) == Rational(21));
    CHECK(term(jacobsthal(), -5) == rat(11, 32));
    CHECK(term(fibonacci(), 0) == Rational(0));
    CHECK(term(fibonacci(), 100).to_string() == "354224848179261915075");
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_sequence(0, 1, 0, 1), ParameterError);
    CHECK_THROWS_AS(make_sequence(1, 0, 0, 1), ParameterError);
    CHECK_THROWS_AS(make_sequence(1, 1, 0, 0), ParameterError);
    CHECK_THROWS_AS(term_range(fibonacci(), 3, 2), RangeError);
}

TEST_CASE("recurrence holds in both directions") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Sequence s = random_sequence(rng);
        const auto v = term_range(s, -30, 30);
        for (std::size_t i = 2; i < v.size(); ++i) CHECK(v[i] == s.p() * v[i - 1] + s.q() * v[i - 2]);
        CHECK(v[30] == s.g0());
        CHECK(v[31] == s.g1());
    }
}

TEST_CASE("matrix evaluation agrees with the iterative oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Sequence s = random_sequence(rng);
        for (std::int64_t n = -60; n <= 60; ++n) CHECK(term(s, n) == term_iterative_oracle(s, n));
    }
}

TEST_CASE("term_range agrees with term on windows straddling zero") {
    const Sequence s = make_sequence(rat(3, 2), rat(-1, 3), 4, -1);
    for (auto [lo, hi] : {std::pair{-10, -3}, std::pair{-3, 7}, std::pair{5, 12}, std::pair{0, 0}}) {
        const auto v = term_range(s, lo, hi);
        REQUIRE(v.size() == static_cast<std::size_t>(hi - lo + 1));
        for (std::int64_t n = lo; n <= hi; ++n) CHECK(v[static_cast<std::size_t>(n - lo)] == term(s, n));
    }
}

TEST_CASE("negative index closed forms") {
    const Rational half = rat(1, 2);
    for (std::int64_t n = 0; n <= 40; ++n) {
        CHECK(term(fibonacci(), -n) == sign_power(n - 1) * term(fibonacci(), n));
        CHECK(term(lucas(), -n) == sign_power(n) * term(lucas(), n));
        CHECK(term(pell(), -n) == sign_power(n - 1) * term(pell(), n));
        CHECK(term(pell_lucas(), -n) == sign_power(n) * term(pell_lucas(), n));
        CHECK(term(jacobsthal(), -n) == sign_power(n - 1) * pow(half, n) * term(jacobsthal(), n));
        CHECK(term(jacobsthal_lucas(), -n) == sign_power(n) * pow(half, n) * term(jacobsthal_lucas(), n));
    }
}

TEST_CASE("term table falls back outside its window") {
    const TermTable t(lucas(), -3, 3);
    for (std::int64_t n = -10; n <= 10; ++n) CHECK(t(n) == term(lucas(), n));
}
