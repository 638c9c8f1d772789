#include "horadam/grid.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "horadam/error.hpp"

namespace horadam {

namespace {

constexpr std::uint64_t kMaxGridCases = std::uint64_t{1} << 36;

/// Cursor over the grid text with 1-based column tracking for errors.
class GridLexer {
public:
    explicit GridLexer(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view token) {
        if (!accept(token)) fail("expected '" + std::string(token) + "'");
    }
    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_) fail("expected a variable name");
        return std::string(text_.substr(start, pos_ - start));
    }
    std::int64_t integer() {
        skip_space();
        const std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        return unsigned_integer(start, negative);
    }
    std::int64_t unsigned_integer(std::size_t start, bool negative) {
        skip_space();
        const std::size_t digits = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) - d) / 10) {
                pos_ = start;
                fail("integer out of range");
            }
            value = value * 10 + d;
            ++pos_;
        }
        if (digits == pos_) fail("expected an integer");
        const auto v = static_cast<std::int64_t>(value);
        return negative ? -v : v;
    }
    bool at_digit() {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError("grid: " + what, 1, pos_ + 1); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

void add_coefficient(LinearConstraint& c, const std::string& var, std::int64_t coef) {
    for (auto& [name, value] : c.coefficients) {
        if (name == var) {
            value += coef;
            return;
        }
    }
    c.coefficients.emplace_back(var, coef);
}

/// side := ["+"|"-"] item (("+"|"-") item)*;  item := int ["*" var] | var
void parse_linear_side(GridLexer& lex, LinearConstraint& c, std::int64_t side_sign) {
    bool first = true;
    while (true) {
        std::int64_t sign = 1;
        if (lex.accept("+")) {
        } else if (lex.accept("-")) {
            sign = -1;
        } else if (!first) {
            return;
        }
        first = false;
        if (lex.at_digit()) {
            const std::int64_t value = lex.unsigned_integer(0, false);
            if (lex.accept("*")) add_coefficient(c, lex.identifier(), side_sign * sign * value);
            else c.constant += side_sign * sign * value;
        } else {
            add_coefficient(c, lex.identifier(), side_sign * sign);
        }
    }
}

LinearConstraint parse_constraint(GridLexer& lex, std::string text) {
    using R = LinearConstraint::Relation;
    LinearConstraint c;
    c.text = std::move(text);
    parse_linear_side(lex, c, 1);
    if (lex.accept("<=")) c.relation = R::less_equal;
    else if (lex.accept(">=")) c.relation = R::greater_equal;
    else if (lex.accept("==")) c.relation = R::equal;
    else if (lex.accept("!=")) c.relation = R::not_equal;
    else if (lex.accept("<")) c.relation = R::less;
    else if (lex.accept(">")) c.relation = R::greater;
    else if (lex.accept("=")) c.relation = R::equal;
    else lex.fail("expected a comparison operator");
    parse_linear_side(lex, c, -1);
    if (!lex.done()) lex.fail("unexpected trailing text in constraint");
    return c;
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

}  // namespace

GridSpec::GridSpec(std::vector<VarRange> vars, std::vector<LinearConstraint> constraints)
    : vars_(std::move(vars)), constraints_(std::move(constraints)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (vars_[i].name == vars_[j].name) throw UsageError("grid: duplicate variable '" + vars_[i].name + "'");
    for (const auto& c : constraints_)
        for (const auto& [name, coef] : c.coefficients)
            if (!has(name)) throw UsageError("grid: constraint '" + c.text + "' uses unknown variable '" + name + "'");
    if (raw_size() > kMaxGridCases) throw UsageError("grid: too many cases");
}

GridSpec GridSpec::parse(std::string_view text) {
    const std::size_t semi = text.find(';');
    const std::string_view ranges = text.substr(0, semi);

    std::vector<VarRange> vars;
    GridLexer lex(ranges);
    if (!lex.done()) {
        do {
            VarRange r;
            r.name = lex.identifier();
            for (const auto& v : vars)
                if (v.name == r.name) lex.fail("duplicate variable '" + r.name + "'");
            lex.expect("=");
            r.lo = lex.integer();
            r.hi = lex.accept("..") ? lex.integer() : r.lo;
            vars.push_back(std::move(r));
        } while (lex.accept(","));
        if (!lex.done()) lex.fail("expected ',' or ';'");
    }

    std::vector<LinearConstraint> constraints;
    std::size_t offset = (semi == std::string_view::npos) ? text.size() : semi + 1;
    while (offset < text.size()) {
        std::size_t end = text.find(';', offset);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view piece = text.substr(offset, end - offset);
        GridLexer clex(piece);
        try {
            if (!clex.done()) constraints.push_back(parse_constraint(clex, strip_spaces(piece)));
        } catch (const ParseError& e) {
            throw ParseError("grid: malformed constraint '" + std::string(piece) + "'", 1, offset + e.column());
        }
        offset = end + 1;
    }

    try {
        return GridSpec(std::move(vars), std::move(constraints));
    } catch (const UsageError& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

bool GridSpec::has(std::string_view name) const { return find(name) != nullptr; }

const VarRange* GridSpec::find(std::string_view name) const {
    for (const auto& v : vars_)
        if (v.name == name) return &v;
    return nullptr;
}

std::uint64_t GridSpec::raw_size() const {
    std::uint64_t n = 1;
    for (const auto& v : vars_) {
        const std::uint64_t s = v.size();
        if (s == 0) return 0;
        if (n > kMaxGridCases / s + 1) return kMaxGridCases + 1;
        n *= s;
    }
    return n;
}

std::int64_t GridSpec::max_abs() const {
    std::int64_t m = 0;
    for (const auto& v : vars_) {
        if (v.size() == 0) continue;
        m = std::max({m, v.lo < 0 ? -v.lo : v.lo, v.hi < 0 ? -v.hi : v.hi});
    }
    return m;
}

bool GridSpec::admits(std::span<const std::int64_t> values) const {
    using R = LinearConstraint::Relation;
    for (const auto& c : constraints_) {
        std::int64_t total = c.constant;
        for (const auto& [name, coef] : c.coefficients) {
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i].name == name) total += coef * values[i];
        }
        bool ok = false;
        switch (c.relation) {
            case R::less: ok = total < 0; break;
            case R::less_equal: ok = total <= 0; break;
            case R::greater: ok = total > 0; break;
            case R::greater_equal: ok = total >= 0; break;
            case R::equal: ok = total == 0; break;
            case R::not_equal: ok = total != 0; break;
        }
        if (!ok) return false;
    }
    return true;
}

void GridSpec::for_each(const std::function<void(std::span<const std::int64_t>)>& visit) const {
    if (raw_size() == 0) return;
    std::vector<std::int64_t> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) values.push_back(v.lo);
    while (true) {
        if (admits(values)) visit(values);
        // Odometer: last variable fastest.
        std::size_t i = vars_.size();
        while (i > 0) {
            --i;
            if (values[i] < vars_[i].hi) {
                ++values[i];
                break;
            }
            values[i] = vars_[i].lo;
            if (i == 0) return;
        }
        if (vars_.empty()) return;
    }
}

std::string GridSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ",";
        out += vars_[i].name + "=" + std::to_string(vars_[i].lo);
        if (vars_[i].hi != vars_[i].lo) out += ".." + std::to_string(vars_[i].hi);
    }
    for (const auto& c : constraints_) out += ";" + c.text;
    return out;
}

VerificationReport run_grid(const IdentityChecker& checker, const GridSpec& grid, SweepOptions options) {
    // position of each checker variable within the grid's values
    std::vector<std::size_t> order;
    for (const auto& name : checker.vars) {
        const auto it = std::find_if(grid.vars().begin(), grid.vars().end(), [&](const VarRange& v) { return v.name == name; });
        if (it == grid.vars().end())
            throw UsageError("grid does not cover variable '" + name + "' required by " + checker.name);
        order.push_back(static_cast<std::size_t>(it - grid.vars().begin()));
    }
    for (const auto& v : grid.vars()) {
        if (std::find(checker.vars.begin(), checker.vars.end(), v.name) == checker.vars.end())
            throw UsageError("grid variable '" + v.name + "' is not used by " + checker.name);
    }

    VerificationReport report;
    report.identity = checker.name;
    report.grid = grid.to_string();
    std::vector<std::int64_t> args(order.size());
    Bindings bindings;
    for (const auto& v : grid.vars()) bindings.emplace_back(v.name, 0);

    grid.for_each([&](std::span<const std::int64_t> values) {
        for (std::size_t i = 0; i < order.size(); ++i) args[i] = values[order[i]];
        const CaseResult result = checker.evaluate(args);
        for (std::size_t i = 0; i < values.size(); ++i) bindings[i].second = values[i];
        report.add(bindings, result, options.record_cases);
    });
    return report;
}

}  // namespace horadam
