#pragma once

// Expression language for symmetric functions with q,t scalars.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := integer | 'q' | 't' | '(' expr ')'
//            | ('m'|'e'|'h'|'p'|'s') '[' (integer | list) ']'
//            | 'G' '(' integer ',' integer ')'
//            | ('nabla' | 'omega') '(' expr ')'
//            | ('C' | 'Cvee' | 'Cstar') '[' (integer | list) ']' '(' [expr] ')'
//   list    := '[' integer (',' integer)* ']' | '[' ']'
//
// A bracketed list after a basis letter is a partition, e.g. m[[2,2,1]];
// after C it is an operator word applied right to left. An empty operator
// argument means the constant 1.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtsym/symfun.hpp"

namespace qtsym {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::invalid_argument(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, q, t, basis, petrie, add, sub, mul, div, neg, pow, nabla, omega, c, cvee, cstar };
    Kind kind = Kind::number;
    std::size_t position = 0;
    Integer number;            // number
    Basis basis = Basis::m;    // basis
    Partition partition;       // basis
    std::vector<int> ints;     // petrie (k, n); operator labels
    int exponent = 0;          // pow
    std::vector<ExprPtr> args;
};

ExprPtr parse_expr(const std::string& src);

/// Throws DegreeOverflow when a grade would exceed trunc and
/// std::invalid_argument for non-scalar division or negative powers.
SymFun evaluate(const Expr& e, int trunc = kDefaultTrunc);
SymFun evaluate(const std::string& src, int trunc = kDefaultTrunc);

/// A scalar expression in q and t, e.g. a rendered coefficient.
QTRat parse_scalar(const std::string& src);

}  // namespace qtsym
