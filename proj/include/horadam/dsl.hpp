#pragma once

/**
 * @file dsl.hpp
 * @brief A small text language for sequence identities.
 *
 *     identity := expr "=" expr
 *     expr     := term (("+" | "-") term)*
 *     term     := unary ("*" unary)*
 *     unary    := "-" unary | factor
 *     factor   := base ("^" "(" expr ")")?
 *     base     := integer | var | Name "[" expr "]" | "(" expr ")"
 *               | "binom" "(" expr "," expr ")"
 *               | "sum" "(" var "," expr "," expr "," expr ")"
 *
 * "(-1)^(e)" is parsed as a sign power. Index expressions (inside brackets,
 * exponents, binom and sum bounds) must be integer valued and may not contain
 * sequence terms. There is no division operator.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/grid.hpp"
#include "horadam/report.hpp"
#include "horadam/sequence.hpp"

namespace horadam::dsl {

enum class NodeKind { integer, variable, term, negate, add, subtract, multiply, power, sign_power, binomial, sum };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::integer;
    BigInt value;      // integer literal
    std::string name;  // variable, sequence name, or sum variable
    std::vector<NodePtr> children;
    std::size_t line = 1;
    std::size_t column = 1;
};

struct IdentityAst {
    NodePtr lhs;
    NodePtr rhs;
    /// Free variables in order of first appearance.
    std::vector<std::string> free_vars;
};

IdentityAst parse_identity(std::string_view text);
NodePtr parse_expression(std::string_view text);

/// Canonical text; parsing it back yields a structurally equal tree.
std::string pretty_print(const Node& node);
std::string pretty_print(const IdentityAst& ast);

/// Compares kinds, literals, names and children; ignores source positions.
bool structurally_equal(const Node& x, const Node& y);
bool structurally_equal(const IdentityAst& x, const IdentityAst& y);

/// Sequence names usable in terms.
class Registry {
public:
    /// F, L, P, Q, J, j and fibonacci, lucas, pell, pell_lucas, jacobsthal, jacobsthal_lucas.
    static Registry standard();

    /// Adds or replaces a name. Throws UsageError on a name that is not an identifier.
    void define(const std::string& name, Sequence sequence);
    const Sequence* find(std::string_view name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, Sequence, std::less<>> sequences_;
};

using VarBindings = std::map<std::string, std::int64_t, std::less<>>;

/// Throws EvalError on an unbound variable, an unknown sequence, a sequence
/// term inside an index expression or a non-integer index value.
Rational eval_expr(const Node& node, const VarBindings& bindings, const Registry& registry);

/// The grid must name exactly the identity's free variables; a grid that
/// enumerates no cases yields an empty report that holds.
VerificationReport verify_over_grid(const IdentityAst& ast, const GridSpec& grid, const Registry& registry,
                                    SweepOptions options = {});

}  // namespace horadam::dsl
