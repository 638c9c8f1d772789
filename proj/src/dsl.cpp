#include "horadam/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

#include "horadam/error.hpp"
#include "horadam/kernel.hpp"

namespace horadam::dsl {

namespace {

// Evaluation limits keep hostile input from exhausting time or memory.
constexpr std::int64_t kMaxTermIndex = 1'000'000;
constexpr std::int64_t kMaxExponent = 100'000;
constexpr std::int64_t kMaxSumLength = 1'000'000;
constexpr std::int64_t kMaxBinomTop = 100'000;

// ---------------------------------------------------------------- lexing

enum class Tok { integer, ident, symbol, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        std::size_t j = i;
        if (std::isdigit(c)) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Tok::integer;
        } else if (std::isalpha(c) || c == '_') {
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.kind = Tok::ident;
        } else if (std::string_view("+-*^()[],=").find(static_cast<char>(c)) != std::string_view::npos) {
            j = i + 1;
            t.kind = Tok::symbol;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
        }
        t.text = std::string(src.substr(i, j - i));
        out.push_back(std::move(t));
        advance(j - i);
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------- parsing

using MutNode = std::shared_ptr<Node>;

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    IdentityAst identity() {
        IdentityAst ast;
        ast.lhs = expr();
        expect("=");
        ast.rhs = expr();
        finish();
        ast.free_vars = free_vars_;
        return ast;
    }

    NodePtr expression() {
        NodePtr e = expr();
        finish();
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int index_depth_ = 0;
    std::vector<std::string> bound_;
    std::vector<std::string> free_vars_;
    std::vector<std::pair<std::string, const Token*>> sum_vars_;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    bool is(std::string_view sym) const { return peek().kind == Tok::symbol && peek().text == sym; }

    [[noreturn]] void fail(const Token& at, const std::string& what) const {
        throw ParseError(what, at.line, at.column);
    }

    std::string describe(const Token& t) const { return t.kind == Tok::end ? "end of input" : "'" + t.text + "'"; }

    void expect(std::string_view sym) {
        if (!is(sym)) fail(peek(), "expected '" + std::string(sym) + "' but found " + describe(peek()));
        next();
    }

    void finish() {
        if (peek().kind != Tok::end) fail(peek(), "unexpected " + describe(peek()));
        for (const auto& [name, tok] : sum_vars_)
            if (std::find(free_vars_.begin(), free_vars_.end(), name) != free_vars_.end())
                fail(*tok, "summation variable '" + name + "' is also used as a free variable");
    }

    static MutNode make(NodeKind kind, const Token& at) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->line = at.line;
        n->column = at.column;
        return n;
    }

    NodePtr expr() {
        NodePtr left = term();
        while (is("+") || is("-")) {
            const Token& op = next();
            auto n = make(op.text == "+" ? NodeKind::add : NodeKind::subtract, op);
            n->children = {left, term()};
            left = n;
        }
        return left;
    }

    NodePtr term() {
        NodePtr left = unary();
        while (is("*")) {
            const Token& op = next();
            auto n = make(NodeKind::multiply, op);
            n->children = {left, unary()};
            left = n;
        }
        return left;
    }

    NodePtr unary() {
        if (is("-")) {
            const Token& op = next();
            auto n = make(NodeKind::negate, op);
            n->children = {unary()};
            return n;
        }
        return factor();
    }

    NodePtr exponent() {
        expect("(");
        ++index_depth_;
        NodePtr e = expr();
        --index_depth_;
        expect(")");
        return e;
    }

    NodePtr factor() {
        const Token& start = peek();
        bool minus_one = false;
        NodePtr b = base(minus_one);
        if (!is("^")) return b;
        next();
        if (minus_one) {
            auto n = make(NodeKind::sign_power, start);
            n->children = {exponent()};
            return n;
        }
        auto n = make(NodeKind::power, start);
        n->children = {b, exponent()};
        return n;
    }

    NodePtr index_expr() {
        ++index_depth_;
        NodePtr e = expr();
        --index_depth_;
        return e;
    }

    NodePtr base(bool& minus_one) {
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            next();
            auto n = make(NodeKind::integer, t);
            n->value = BigInt(t.text);
            return n;
        }
        if (is("(")) {
            next();
            NodePtr inner = expr();
            expect(")");
            minus_one = inner->kind == NodeKind::negate && inner->children[0]->kind == NodeKind::integer &&
                        inner->children[0]->value == 1;
            return inner;
        }
        if (t.kind != Tok::ident) fail(t, "expected a value but found " + describe(t));
        next();

        if (t.text == "binom" && is("(")) {
            next();
            auto n = make(NodeKind::binomial, t);
            NodePtr top = index_expr();
            expect(",");
            NodePtr bottom = index_expr();
            expect(")");
            n->children = {top, bottom};
            return n;
        }
        if (t.text == "sum" && is("(")) {
            next();
            const Token& var = peek();
            if (var.kind != Tok::ident) fail(var, "expected a summation variable but found " + describe(var));
            next();
            if (std::find(bound_.begin(), bound_.end(), var.text) != bound_.end())
                fail(var, "summation variable '" + var.text + "' shadows an enclosing summation variable");
            expect(",");
            NodePtr lo = index_expr();
            expect(",");
            NodePtr hi = index_expr();
            expect(",");
            bound_.push_back(var.text);
            sum_vars_.emplace_back(var.text, &var);
            NodePtr body = expr();
            bound_.pop_back();
            expect(")");
            auto n = make(NodeKind::sum, t);
            n->name = var.text;
            n->children = {lo, hi, body};
            return n;
        }
        if (is("[")) {
            if (index_depth_ > 0) fail(t, "sequence term '" + t.text + "[...]' inside an index expression");
            next();
            auto n = make(NodeKind::term, t);
            n->name = t.text;
            n->children = {index_expr()};
            expect("]");
            return n;
        }
        auto n = make(NodeKind::variable, t);
        n->name = t.text;
        if (std::find(bound_.begin(), bound_.end(), t.text) == bound_.end() &&
            std::find(free_vars_.begin(), free_vars_.end(), t.text) == free_vars_.end())
            free_vars_.push_back(t.text);
        return n;
    }
};

// ---------------------------------------------------------------- printing

int level(const Node& n) {
    switch (n.kind) {
        case NodeKind::add:
        case NodeKind::subtract: return 1;
        case NodeKind::multiply: return 2;
        case NodeKind::negate: return 3;
        case NodeKind::power:
        case NodeKind::sign_power: return 4;
        default: return 5;
    }
}

std::string print(const Node& n, bool spaced);

std::string wrap(const Node& n, int min_level, bool spaced) {
    std::string s = print(n, spaced);
    return level(n) < min_level ? "(" + s + ")" : s;
}

std::string print(const Node& n, bool spaced) {
    const auto& c = n.children;
    switch (n.kind) {
        case NodeKind::integer: return n.value.get_str();
        case NodeKind::variable: return n.name;
        case NodeKind::term: return n.name + "[" + print(*c[0], false) + "]";
        case NodeKind::negate: return "-" + wrap(*c[0], 3, spaced);
        case NodeKind::add:
        case NodeKind::subtract: {
            const char* op = n.kind == NodeKind::add ? "+" : "-";
            const std::string sep = spaced ? std::string(" ") + op + " " : std::string(op);
            return wrap(*c[0], 1, spaced) + sep + wrap(*c[1], 2, spaced);
        }
        case NodeKind::multiply: return wrap(*c[0], 2, spaced) + "*" + wrap(*c[1], 4, spaced);
        case NodeKind::power: return wrap(*c[0], 5, spaced) + "^(" + print(*c[1], false) + ")";
        case NodeKind::sign_power: return "(-1)^(" + print(*c[0], false) + ")";
        case NodeKind::binomial: return "binom(" + print(*c[0], false) + ", " + print(*c[1], false) + ")";
        case NodeKind::sum:
            return "sum(" + n.name + ", " + print(*c[0], false) + ", " + print(*c[1], false) + ", " +
                   print(*c[2], spaced) + ")";
    }
    return {};
}

// ---------------------------------------------------------------- evaluation

[[noreturn]] void overflow() { throw EvalError("integer overflow in an index expression"); }

std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(x, y, &r)) overflow();
    return r;
}

std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(x, y, &r)) overflow();
    return r;
}

std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(x, y, &r)) overflow();
    return r;
}

/// Flattened, resolved expression. Variables live in numbered slots.
class Program {
public:
    Program(const Registry& registry, std::int64_t window) : registry_(registry), window_(window) {}

    int compile(const Node& n, std::vector<std::pair<std::string, int>>& scope, bool index_context) {
        Op op;
        op.kind = n.kind;
        switch (n.kind) {
            case NodeKind::integer:
                op.literal = Rational(n.value);
                op.int_ok = n.value.fits_slong_p();
                if (op.int_ok) op.int_literal = n.value.get_si();
                break;
            case NodeKind::variable: {
                const auto it = std::find_if(scope.rbegin(), scope.rend(), [&](const auto& s) { return s.first == n.name; });
                if (it == scope.rend()) throw EvalError("unbound variable '" + n.name + "'");
                op.slot = it->second;
                break;
            }
            case NodeKind::term: {
                if (index_context) throw EvalError("sequence term '" + n.name + "[...]' inside an index expression");
                op.table = table(n.name);
                op.args[0] = compile(*n.children[0], scope, true);
                break;
            }
            case NodeKind::sum: {
                op.args[0] = compile(*n.children[0], scope, true);
                op.args[1] = compile(*n.children[1], scope, true);
                op.slot = slots_++;
                scope.emplace_back(n.name, op.slot);
                op.args[2] = compile(*n.children[2], scope, index_context);
                scope.pop_back();
                break;
            }
            case NodeKind::power:
                op.args[0] = compile(*n.children[0], scope, index_context);
                op.args[1] = compile(*n.children[1], scope, true);
                break;
            case NodeKind::sign_power:
            case NodeKind::binomial:
                for (std::size_t i = 0; i < n.children.size(); ++i) op.args[i] = compile(*n.children[i], scope, true);
                break;
            default:
                for (std::size_t i = 0; i < n.children.size(); ++i)
                    op.args[i] = compile(*n.children[i], scope, index_context);
        }
        ops_.push_back(std::move(op));
        return static_cast<int>(ops_.size()) - 1;
    }

    void reserve_slots(int n) { slots_ = std::max(slots_, n); }
    int slots() const { return slots_; }

    Rational value(int i, std::vector<std::int64_t>& env) const {
        const Op& op = ops_[static_cast<std::size_t>(i)];
        switch (op.kind) {
            case NodeKind::integer: return op.literal;
            case NodeKind::variable: return Rational(env[static_cast<std::size_t>(op.slot)]);
            case NodeKind::term: {
                const std::int64_t k = index(op.args[0], env);
                if (k > kMaxTermIndex || k < -kMaxTermIndex)
                    throw EvalError("term index " + std::to_string(k) + " exceeds the supported range");
                return (*op.table)(k);
            }
            case NodeKind::negate: return -value(op.args[0], env);
            case NodeKind::add: return value(op.args[0], env) + value(op.args[1], env);
            case NodeKind::subtract: return value(op.args[0], env) - value(op.args[1], env);
            case NodeKind::multiply: return value(op.args[0], env) * value(op.args[1], env);
            case NodeKind::power: {
                const std::int64_t e = exponent(op.args[1], env);
                const Rational b = value(op.args[0], env);
                if (b.is_zero() && e < 0) throw EvalError("zero raised to a negative power");
                return pow(b, e);
            }
            case NodeKind::sign_power: return sign_power(index(op.args[0], env));
            case NodeKind::binomial: return binomial(op, env);
            case NodeKind::sum: {
                Rational total;
                sum_over(op, env, [&] { total += value(op.args[2], env); });
                return total;
            }
        }
        return {};
    }

    std::int64_t index(int i, std::vector<std::int64_t>& env) const {
        const Op& op = ops_[static_cast<std::size_t>(i)];
        switch (op.kind) {
            case NodeKind::integer:
                if (!op.int_ok) throw EvalError("integer literal out of range in an index expression");
                return op.int_literal;
            case NodeKind::variable: return env[static_cast<std::size_t>(op.slot)];
            case NodeKind::negate: return sub(0, index(op.args[0], env));
            case NodeKind::add: {
                const std::int64_t x = index(op.args[0], env);
                return add(x, index(op.args[1], env));
            }
            case NodeKind::subtract: {
                const std::int64_t x = index(op.args[0], env);
                return sub(x, index(op.args[1], env));
            }
            case NodeKind::multiply: {
                const std::int64_t x = index(op.args[0], env);
                return mul(x, index(op.args[1], env));
            }
            case NodeKind::sign_power: return index(op.args[0], env) % 2 == 0 ? 1 : -1;
            case NodeKind::power: {
                const std::int64_t b = index(op.args[0], env);
                const std::int64_t e = exponent(op.args[1], env);
                if (e < 0) {
                    if (b == 1) return 1;
                    if (b == -1) return e % 2 == 0 ? 1 : -1;
                    throw EvalError(b == 0 ? "zero raised to a negative power" : "non-integer index expression");
                }
                if (b == 0 || b == 1) return e == 0 ? 1 : b;
                if (b == -1) return e % 2 == 0 ? 1 : -1;
                std::int64_t r = 1;
                for (std::int64_t k = 0; k < e; ++k) r = mul(r, b);
                return r;
            }
            case NodeKind::binomial: {
                const Rational v = binomial(op, env);
                if (!v.numerator().fits_slong_p()) throw EvalError("integer overflow in an index expression");
                return v.numerator().get_si();
            }
            case NodeKind::sum: {
                std::int64_t total = 0;
                sum_over(op, env, [&] { total = add(total, index(op.args[2], env)); });
                return total;
            }
            case NodeKind::term: break;
        }
        throw EvalError("sequence term inside an index expression");
    }

private:
    struct Op {
        NodeKind kind = NodeKind::integer;
        int args[3] = {-1, -1, -1};
        int slot = -1;
        Rational literal;
        std::int64_t int_literal = 0;
        bool int_ok = false;
        const TermTable* table = nullptr;
    };

    const Registry& registry_;
    std::int64_t window_;
    std::vector<Op> ops_;
    std::map<std::string, std::unique_ptr<TermTable>, std::less<>> tables_;
    int slots_ = 0;

    const TermTable* table(const std::string& name) {
        if (auto it = tables_.find(name); it != tables_.end()) return it->second.get();
        const Sequence* s = registry_.find(name);
        if (!s) throw EvalError("unknown sequence '" + name + "'");
        auto t = std::make_unique<TermTable>(*s, -window_, window_);
        const TermTable* raw = t.get();
        tables_.emplace(name, std::move(t));
        return raw;
    }

    std::int64_t exponent(int i, std::vector<std::int64_t>& env) const {
        const std::int64_t e = index(i, env);
        if (e > kMaxExponent || e < -kMaxExponent)
            throw EvalError("exponent " + std::to_string(e) + " exceeds the supported range");
        return e;
    }

    Rational binomial(const Op& op, std::vector<std::int64_t>& env) const {
        const std::int64_t k = index(op.args[0], env);
        const std::int64_t j = index(op.args[1], env);
        if (k < 0) throw EvalError("binom with negative upper argument " + std::to_string(k));
        if (k > kMaxBinomTop) throw EvalError("binom upper argument " + std::to_string(k) + " exceeds the supported range");
        return horadam::binom(k, j);
    }

    template <class Body>
    void sum_over(const Op& op, std::vector<std::int64_t>& env, Body&& body) const {
        const std::int64_t lo = index(op.args[0], env);
        const std::int64_t hi = index(op.args[1], env);
        if (lo > hi) return;
        std::int64_t length = 0;
        if (__builtin_sub_overflow(hi, lo, &length) || length >= kMaxSumLength)
            throw EvalError("summation range " + std::to_string(lo) + ".." + std::to_string(hi) + " is too long");
        for (std::int64_t j = lo;; ++j) {
            env[static_cast<std::size_t>(op.slot)] = j;
            body();
            if (j == hi) break;
        }
    }
};

std::string describe_bindings(const std::vector<std::string>& names, std::span<const std::int64_t> values) {
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i] + "=" + std::to_string(values[i]);
    return s;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

IdentityAst parse_identity(std::string_view text) { return Parser(text).identity(); }

NodePtr parse_expression(std::string_view text) { return Parser(text).expression(); }

std::string pretty_print(const Node& node) { return print(node, true); }

std::string pretty_print(const IdentityAst& ast) { return pretty_print(*ast.lhs) + " = " + pretty_print(*ast.rhs); }

bool structurally_equal(const Node& x, const Node& y) {
    if (x.kind != y.kind || x.value != y.value || x.name != y.name || x.children.size() != y.children.size())
        return false;
    for (std::size_t i = 0; i < x.children.size(); ++i)
        if (!structurally_equal(*x.children[i], *y.children[i])) return false;
    return true;
}

bool structurally_equal(const IdentityAst& x, const IdentityAst& y) {
    return structurally_equal(*x.lhs, *y.lhs) && structurally_equal(*x.rhs, *y.rhs) && x.free_vars == y.free_vars;
}

Registry Registry::standard() {
    Registry r;
    const std::pair<const char*, Sequence> named[] = {
        {"F", fibonacci()},          {"L", lucas()},
        {"P", pell()},               {"Q", pell_lucas()},
        {"J", jacobsthal()},         {"j", jacobsthal_lucas()},
        {"fibonacci", fibonacci()},  {"lucas", lucas()},
        {"pell", pell()},            {"pell_lucas", pell_lucas()},
        {"jacobsthal", jacobsthal()}, {"jacobsthal_lucas", jacobsthal_lucas()},
    };
    for (const auto& [name, seq] : named) r.define(name, seq);
    return r;
}

void Registry::define(const std::string& name, Sequence sequence) {
    if (!is_identifier(name) || name == "sum" || name == "binom")
        throw UsageError("invalid sequence name '" + name + "'");
    sequences_.insert_or_assign(name, std::move(sequence));
}

const Sequence* Registry::find(std::string_view name) const {
    const auto it = sequences_.find(name);
    return it == sequences_.end() ? nullptr : &it->second;
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, seq] : sequences_) out.push_back(name);
    return out;
}

Rational eval_expr(const Node& node, const VarBindings& bindings, const Registry& registry) {
    Program program(registry, 64);
    std::vector<std::pair<std::string, int>> scope;
    std::vector<std::int64_t> env;
    for (const auto& [name, value] : bindings) {
        scope.emplace_back(name, static_cast<int>(env.size()));
        env.push_back(value);
    }
    program.reserve_slots(static_cast<int>(env.size()));
    try {
        const int root = program.compile(node, scope, false);
        env.resize(static_cast<std::size_t>(program.slots()));
        return program.value(root, env);
    } catch (const EvalError&) {
        throw;
    } catch (const Error& e) {
        throw EvalError(e.what());
    }
}

VerificationReport verify_over_grid(const IdentityAst& ast, const GridSpec& grid, const Registry& registry,
                                    SweepOptions options) {
    std::vector<std::string> names;
    for (const auto& v : grid.vars()) names.push_back(v.name);

    if (grid.raw_size() == 0) {
        VerificationReport empty;
        empty.identity = pretty_print(ast);
        empty.grid = grid.to_string();
        return empty;
    }
    for (const auto& v : ast.free_vars)
        if (std::find(names.begin(), names.end(), v) == names.end())
            throw UsageError("grid does not cover free variable '" + v + "'");
    for (const auto& n : names)
        if (std::find(ast.free_vars.begin(), ast.free_vars.end(), n) == ast.free_vars.end())
            throw UsageError("grid variable '" + n + "' does not occur in the identity");

    const std::int64_t w = sweep_window(grid.max_abs(), grid.max_abs());
    auto program = std::make_shared<Program>(registry, w);
    std::vector<std::pair<std::string, int>> scope;
    for (std::size_t i = 0; i < names.size(); ++i) scope.emplace_back(names[i], static_cast<int>(i));
    program->reserve_slots(static_cast<int>(names.size()));
    const int lhs = program->compile(*ast.lhs, scope, false);
    const int rhs = program->compile(*ast.rhs, scope, false);

    IdentityChecker checker;
    checker.name = pretty_print(ast);
    checker.vars = names;
    checker.evaluate = [program, lhs, rhs, names](std::span<const std::int64_t> values) {
        std::vector<std::int64_t> env(static_cast<std::size_t>(program->slots()));
        std::copy(values.begin(), values.end(), env.begin());
        try {
            Rational l = program->value(lhs, env);
            Rational r = program->value(rhs, env);
            return CaseResult::compare(std::move(l), std::move(r));
        } catch (const Error& e) {
            throw EvalError(std::string(e.what()) + " (at " + describe_bindings(names, values) + ")");
        }
    };
    return run_grid(checker, grid, options);
}

}  // namespace horadam::dsl
