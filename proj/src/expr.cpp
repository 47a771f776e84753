#include "qtsym/expr.hpp"

#include <cctype>

#include "qtsym/hallops.hpp"
#include "qtsym/macdonald.hpp"

namespace qtsym {

namespace {

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_space();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    std::string digits() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return src_.substr(start, pos_ - start);
    }

    long small_int(bool allow_sign) {
        bool neg = allow_sign && accept('-');
        std::string d = digits();
        if (d.size() > 9) fail("integer too large");
        long v = std::stol(d);
        return neg ? -v : v;
    }

    std::vector<int> int_list() {
        expect('[');
        std::vector<int> out;
        if (accept(']')) return out;
        do {
            out.push_back(static_cast<int>(small_int(true)));
        } while (accept(','));
        expect(']');
        return out;
    }

    static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b, std::size_t at) {
        Expr e;
        e.kind = k;
        e.position = at;
        e.args = {std::move(a), std::move(b)};
        return node(std::move(e));
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            std::size_t at = pos_;
            if (accept('+'))
                lhs = binary(Expr::Kind::add, lhs, term(), at);
            else if (accept('-'))
                lhs = binary(Expr::Kind::sub, lhs, term(), at);
            else
                return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (true) {
            std::size_t at = pos_;
            if (accept('*'))
                lhs = binary(Expr::Kind::mul, lhs, unary(), at);
            else if (accept('/'))
                lhs = binary(Expr::Kind::div, lhs, unary(), at);
            else
                return lhs;
        }
    }

    ExprPtr unary() {
        std::size_t at = pos_;
        if (accept('-')) {
            Expr e;
            e.kind = Expr::Kind::neg;
            e.position = at;
            e.args = {unary()};
            return node(std::move(e));
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        std::size_t at = pos_;
        if (!accept('^')) return base;
        Expr e;
        e.kind = Expr::Kind::pow;
        e.position = at;
        e.exponent = static_cast<int>(small_int(true));
        e.args = {base};
        return node(std::move(e));
    }

    ExprPtr operator_arg() {
        expect('(');
        if (accept(')')) {
            Expr one;
            one.kind = Expr::Kind::number;
            one.number = 1;
            one.position = pos_;
            return node(std::move(one));
        }
        ExprPtr e = expr();
        expect(')');
        return e;
    }

    ExprPtr primary() {
        skip_space();
        const std::size_t at = pos_;
        if (pos_ >= src_.size()) fail("unexpected end of input");
        if (accept('(')) {
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        Expr e;
        e.position = at;
        if (std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            e.kind = Expr::Kind::number;
            e.number = Integer(digits());
            return node(std::move(e));
        }
        std::string id = identifier();
        if (id.empty()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        if (id == "q" || id == "t") {
            e.kind = id == "q" ? Expr::Kind::q : Expr::Kind::t;
            return node(std::move(e));
        }
        if (id == "m" || id == "e" || id == "h" || id == "p" || id == "s") {
            e.kind = Expr::Kind::basis;
            e.basis = parse_basis(id);
            expect('[');
            if (peek('[')) {
                std::size_t list_at = pos_;
                std::vector<int> parts = int_list();
                try {
                    e.partition = Partition(parts);
                } catch (const std::invalid_argument& ex) {
                    throw ParseError(ex.what(), list_at);
                }
            } else {
                long n = small_int(false);
                if (n > 0) e.partition = Partition{static_cast<int>(n)};
            }
            expect(']');
            return node(std::move(e));
        }
        if (id == "G") {
            e.kind = Expr::Kind::petrie;
            expect('(');
            e.ints.push_back(static_cast<int>(small_int(false)));
            expect(',');
            e.ints.push_back(static_cast<int>(small_int(false)));
            expect(')');
            if (e.ints[0] < 1) throw ParseError("G(k,n) needs k >= 1", at);
            return node(std::move(e));
        }
        if (id == "nabla" || id == "omega") {
            e.kind = id == "nabla" ? Expr::Kind::nabla : Expr::Kind::omega;
            expect('(');
            e.args = {expr()};
            expect(')');
            return node(std::move(e));
        }
        if (id == "C" || id == "Cvee" || id == "Cstar") {
            e.kind = id == "C" ? Expr::Kind::c : id == "Cvee" ? Expr::Kind::cvee : Expr::Kind::cstar;
            expect('[');
            if (peek('['))
                e.ints = int_list();
            else
                e.ints = {static_cast<int>(small_int(true))};
            expect(']');
            e.args = {operator_arg()};
            return node(std::move(e));
        }
        pos_ = at;
        fail("unknown name '" + id + "'");
    }
};

std::optional<QTRat> constant_of(const SymFun& f) {
    if (f.is_zero()) return QTRat();
    if (f.max_degree() != 0) return std::nullopt;
    return f.coeff(Partition());
}

QTRat require_constant(const SymFun& f, const Expr& e, const std::string& what) {
    auto c = constant_of(f);
    if (!c) throw std::invalid_argument(what + " must be a scalar (position " + std::to_string(e.position) + ")");
    return *c;
}

}  // namespace

ExprPtr parse_expr(const std::string& src) { return Parser(src).parse(); }

SymFun evaluate(const Expr& e, int trunc) {
    using K = Expr::Kind;
    auto arg = [&](std::size_t i) { return evaluate(*e.args[i], trunc); };
    switch (e.kind) {
        case K::number:
            return SymFun::constant(QTRat(Rational(e.number)), trunc);
        case K::q:
            return SymFun::constant(QTRat(QTPoly::q()), trunc);
        case K::t:
            return SymFun::constant(QTRat(QTPoly::t()), trunc);
        case K::basis:
            return basis_element(e.basis, e.partition, trunc);
        case K::petrie:
            return petrie(e.ints[0], e.ints[1], trunc);
        case K::add:
            return arg(0) + arg(1);
        case K::sub:
            return arg(0) - arg(1);
        case K::mul:
            return arg(0) * arg(1);
        case K::div: {
            QTRat d = require_constant(arg(1), e, "divisor");
            if (d.is_zero()) throw std::invalid_argument("division by zero (position " + std::to_string(e.position) + ")");
            return arg(0).scaled(d.inverse());
        }
        case K::neg:
            return -arg(0);
        case K::pow: {
            SymFun base = arg(0);
            if (e.exponent >= 0) return base.pow(e.exponent);
            QTRat c = require_constant(base, e, "base of a negative power");
            if (c.is_zero()) throw std::invalid_argument("zero to a negative power");
            return SymFun::constant(c.pow(e.exponent), trunc);
        }
        case K::nabla:
            return nabla(arg(0));
        case K::omega:
            return omega(arg(0));
        case K::c: {
            SymFun f = arg(0);
            for (auto it = e.ints.rbegin(); it != e.ints.rend(); ++it) f = c_apply(*it, f);
            return f;
        }
        case K::cvee:
        case K::cstar: {
            SymFun f = arg(0);
            for (auto it = e.ints.rbegin(); it != e.ints.rend(); ++it)
                f = e.kind == K::cvee ? c_vee(*it, f) : c_star(*it, f);
            return f;
        }
    }
    throw std::logic_error("unhandled expression kind");
}

SymFun evaluate(const std::string& src, int trunc) { return evaluate(*parse_expr(src), trunc); }

QTRat parse_scalar(const std::string& src) {
    ExprPtr e = parse_expr(src);
    SymFun f;
    try {
        f = evaluate(*e, 0);
    } catch (const DegreeOverflow&) {
        throw std::invalid_argument("'" + src + "' is not a scalar in q and t");
    }
    return require_constant(f, *e, "coefficient");
}

}  // namespace qtsym
