#include "cdanalysis/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "cdanalysis/special.hpp"
#include "cdanalysis/transcend.hpp"

namespace cd {

struct Expression::Node {
    enum class Op {
        constant,
        variable,
        add,
        sub,
        mul,
        div,
        pow,
        neg,
        call,
    };

    Op op = Op::constant;
    CdNumber value;
    std::string name; // variable or function name
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    bool surely_real = false; // known real at parse time (literals, t)
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

NodePtr make_const(const CdNumber& v, bool real) {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::constant;
    n->value = v;
    n->surely_real = real;
    return n;
}

NodePtr make_binary(Node::Op op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    n->surely_real = n->lhs->surely_real && n->rhs->surely_real;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    NodePtr run() {
        NodePtr e = expression();
        skip_space();
        if (pos_ != s_.size())
            raise(ErrorKind::ParseError, "trailing input at position " + std::to_string(pos_));
        return e;
    }

private:
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NodePtr expression() {
        NodePtr acc = term();
        for (;;) {
            if (accept('+')) {
                acc = make_binary(Node::Op::add, acc, term());
            } else if (accept('-')) {
                acc = make_binary(Node::Op::sub, acc, term());
            } else {
                return acc;
            }
        }
    }

    NodePtr term() {
        NodePtr acc = unary();
        int nonreal = acc->surely_real ? 0 : 1;
        for (;;) {
            Node::Op op;
            if (accept('*')) {
                op = Node::Op::mul;
            } else if (accept('/')) {
                op = Node::Op::div;
            } else {
                return acc;
            }
            NodePtr next = unary();
            if (!next->surely_real) ++nonreal;
            // Left-to-right association is well defined, but a chain of three
            // or more possibly-nonreal factors is refused: the algebra does
            // not reassociate, so the author must parenthesize.
            if (nonreal > 2)
                raise(ErrorKind::ParseError,
                      "ambiguous noncommutative product; add explicit parentheses");
            acc = make_binary(op, acc, next);
        }
    }

    NodePtr unary() {
        if (accept('-')) {
            auto n = std::make_shared<Node>();
            n->op = Node::Op::neg;
            n->lhs = unary();
            n->surely_real = n->lhs->surely_real;
            return n;
        }
        (void)accept('+');
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (accept('^')) {
            NodePtr exp = unary(); // right associative
            return make_binary(Node::Op::pow, base, exp);
        }
        return base;
    }

    NodePtr atom() {
        skip_space();
        if (pos_ >= s_.size()) raise(ErrorKind::ParseError, "unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expression();
            if (!accept(')')) raise(ErrorKind::ParseError, "missing closing parenthesis");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        raise(ErrorKind::ParseError, std::string("unexpected character '") + c + "'");
    }

    NodePtr number() {
        std::size_t end = pos_;
        while (end < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.' ||
                s_[end] == 'e' || s_[end] == 'E' ||
                ((s_[end] == '+' || s_[end] == '-') && end > pos_ &&
                 (s_[end - 1] == 'e' || s_[end - 1] == 'E')))) {
            ++end;
        }
        const std::string tok = s_.substr(pos_, end - pos_);
        try {
            const double v = std::stod(tok);
            pos_ = end;
            return make_const(CdNumber::real(v), true);
        } catch (const std::exception&) {
            raise(ErrorKind::ParseError, "bad numeric literal '" + tok + "'");
        }
    }

    NodePtr identifier() {
        std::size_t end = pos_;
        while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) ||
               s_[end] == '_')) {
            ++end;
        }
        const std::string name = s_.substr(pos_, end - pos_);
        pos_ = end;
        if (name == "pi") return make_const(CdNumber::real(std::numbers::pi), true);
        if (name == "e") return make_const(CdNumber::real(std::numbers::e), true);
        if (name.size() == 2 && name[0] == 'i' && name[1] >= '1' && name[1] <= '7')
            return make_const(CdNumber::generator(name[1] - '0'), false);
        if (peek() == '(') {
            static const char* known[] = {"exp", "sin",  "cos",  "ln",   "sqrt", "abs",
                                          "re",  "im",   "conj", "inv",  "gamma", "zeta",
                                          "step"};
            bool found = false;
            for (const char* k : known) found = found || name == k;
            if (!found) raise(ErrorKind::ParseError, "unknown function '" + name + "'");
            ++pos_; // consume '('
            NodePtr arg = expression();
            if (!accept(')')) raise(ErrorKind::ParseError, "missing ')' after call argument");
            auto n = std::make_shared<Node>();
            n->op = Node::Op::call;
            n->name = name;
            n->lhs = std::move(arg);
            n->surely_real = name == "abs" || name == "step" || name == "re";
            return n;
        }
        auto n = std::make_shared<Node>();
        n->op = Node::Op::variable;
        n->name = name;
        n->surely_real = (name == "t"); // the transform variable is real
        return n;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

CdNumber eval_call(const std::string& name, const CdNumber& a) {
    if (name == "exp") return exp_cd(a);
    if (name == "sin") return sin_cd(a);
    if (name == "cos") return cos_cd(a);
    if (name == "ln") return ln_cd(a, 0);
    if (name == "sqrt") return sqrt_cd(a);
    if (name == "abs") return CdNumber::real(norm(a));
    if (name == "re") return CdNumber::real(re(a));
    if (name == "im") return im(a);
    if (name == "conj") return conj(a);
    if (name == "inv") return inverse(a);
    if (name == "gamma") return gamma_fn(a);
    if (name == "zeta") return zeta_auto(a);
    if (name == "step") {
        const double x = re(a);
        return CdNumber::real(x > 0.0 ? 1.0 : (x == 0.0 ? 0.5 : 0.0));
    }
    raise(ErrorKind::ParseError, "unknown function '" + name + "'");
}

CdNumber eval_node(const Node& n, const std::map<std::string, CdNumber>& bindings) {
    switch (n.op) {
        case Node::Op::constant: return n.value;
        case Node::Op::variable: {
            const auto it = bindings.find(n.name);
            if (it == bindings.end())
                raise(ErrorKind::ParseError, "unbound identifier '" + n.name + "'");
            return it->second;
        }
        case Node::Op::add: return eval_node(*n.lhs, bindings) + eval_node(*n.rhs, bindings);
        case Node::Op::sub: return eval_node(*n.lhs, bindings) - eval_node(*n.rhs, bindings);
        case Node::Op::mul: return eval_node(*n.lhs, bindings) * eval_node(*n.rhs, bindings);
        case Node::Op::div: {
            const CdNumber denom = eval_node(*n.rhs, bindings);
            return eval_node(*n.lhs, bindings) * inverse(denom);
        }
        case Node::Op::pow: {
            const CdNumber base = eval_node(*n.lhs, bindings);
            const CdNumber expo = eval_node(*n.rhs, bindings);
            const double as_int = re(expo);
            if (norm(im(expo)) < 1e-15 && std::floor(as_int) == as_int &&
                std::fabs(as_int) <= 64.0) {
                // Integer powers by repeated multiplication keep exactness.
                CdNumber acc = CdNumber::one();
                const long k = std::lround(std::fabs(as_int));
                for (long i = 0; i < k; ++i) acc = acc * base;
                return as_int < 0.0 ? inverse(acc) : acc;
            }
            return power(base, expo);
        }
        case Node::Op::neg: return -eval_node(*n.lhs, bindings);
        case Node::Op::call: return eval_call(n.name, eval_node(*n.lhs, bindings));
    }
    raise(ErrorKind::EvaluationFailure, "corrupt expression tree");
}

} // namespace

Expression Expression::parse(const std::string& text) {
    Expression e;
    e.text_ = text;
    e.root_ = Parser(text).run();
    return e;
}

CdNumber Expression::eval(const CdNumber& var) const {
    std::map<std::string, CdNumber> bindings{{"t", var}, {"z", var}, {"p", var}, {"x", var}};
    return eval_node(*root_, bindings);
}

CdNumber Expression::eval(const std::map<std::string, CdNumber>& bindings) const {
    return eval_node(*root_, bindings);
}

} // namespace cd
