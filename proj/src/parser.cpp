#include "pfaff/parser.hpp"

#include <cctype>
#include <sstream>

namespace pfaff {

namespace {

std::string format_message(const std::string& message, SourcePos pos) {
    std::ostringstream s;
    s << message << " (line " << pos.line << ", column " << pos.column << ")";
    return s.str();
}

enum class Tok {
    Number,
    Imag,
    Variable,
    Differential,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Wedge,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
};

struct Token {
    Tok kind;
    SourcePos pos;
    std::string text;   // digits for Number
    uint32_t index = 0;  // Variable / Differential
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            SourcePos pos{line_, col_};
            if (at_end()) {
                out.push_back({Tok::End, pos, "", 0});
                return out;
            }
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back({Tok::Number, pos, read_digits(), 0});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back(read_word(pos));
                continue;
            }
            advance();
            switch (c) {
                case '+': out.push_back({Tok::Plus, pos, "", 0}); break;
                case '-': out.push_back({Tok::Minus, pos, "", 0}); break;
                case '*': out.push_back({Tok::Star, pos, "", 0}); break;
                case '^': out.push_back({Tok::Caret, pos, "", 0}); break;
                case '(': out.push_back({Tok::LParen, pos, "", 0}); break;
                case ')': out.push_back({Tok::RParen, pos, "", 0}); break;
                case '[': out.push_back({Tok::LBracket, pos, "", 0}); break;
                case ']': out.push_back({Tok::RBracket, pos, "", 0}); break;
                case ',': out.push_back({Tok::Comma, pos, "", 0}); break;
                case '/':
                    if (!at_end() && peek() == '\\') {
                        advance();
                        out.push_back({Tok::Wedge, pos, "", 0});
                    } else {
                        out.push_back({Tok::Slash, pos, "", 0});
                    }
                    break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", pos);
            }
        }
    }

private:
    bool at_end() const { return i_ >= src_.size(); }
    char peek() const { return src_[i_]; }
    void advance() {
        if (src_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    std::string read_digits() {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            s.push_back(peek());
            advance();
        }
        return s;
    }
    Token read_word(SourcePos pos) {
        std::string letters;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
            letters.push_back(peek());
            advance();
        }
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(peek());
            advance();
        }
        if (letters == "i" && digits.empty()) return {Tok::Imag, pos, "", 0};
        if ((letters == "z" || letters == "dz") && !digits.empty()) {
            unsigned long idx = std::stoul(digits);
            if (idx == 0 || idx > 4096) throw ParseError("variable index out of range", pos);
            return {letters == "z" ? Tok::Variable : Tok::Differential, pos, "",
                    static_cast<uint32_t>(idx)};
        }
        throw ParseError("unknown name '" + letters + digits + "'", pos);
    }

    std::string_view src_;
    size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

using NodePtr = std::unique_ptr<AstNode>;

NodePtr make_node(AstNode::Kind kind, SourcePos pos) {
    auto n = std::make_unique<AstNode>();
    n->kind = kind;
    n->pos = pos;
    return n;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    NodePtr parse_expression_all() {
        NodePtr e = expr();
        expect(Tok::End, "unexpected trailing input");
        return e;
    }

    std::vector<NodePtr> parse_vector_all() {
        expect(Tok::LBracket, "expected '['");
        std::vector<NodePtr> comps;
        comps.push_back(expr());
        while (accept(Tok::Comma)) comps.push_back(expr());
        expect(Tok::RBracket, "expected ']' or ','");
        expect(Tok::End, "unexpected trailing input");
        return comps;
    }

    std::vector<NodePtr> parse_point_all() {
        std::vector<NodePtr> coords;
        coords.push_back(expr());
        while (accept(Tok::Comma)) coords.push_back(expr());
        expect(Tok::End, "unexpected trailing input");
        return coords;
    }

    bool starts_with_bracket() const { return toks_[0].kind == Tok::LBracket; }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token advance() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Tok k, const std::string& msg) {
        if (!accept(k)) throw ParseError(msg, peek().pos);
    }

    NodePtr expr() {
        SourcePos pos = peek().pos;
        NodePtr acc;
        if (accept(Tok::Minus)) {
            auto neg = make_node(AstNode::Kind::Negate, pos);
            neg->lhs = term();
            acc = std::move(neg);
        } else {
            acc = term();
        }
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Token op = advance();
            NodePtr rhs = term();
            if (op.kind == Tok::Minus) {
                auto neg = make_node(AstNode::Kind::Negate, op.pos);
                neg->lhs = std::move(rhs);
                rhs = std::move(neg);
            }
            auto sum = make_node(AstNode::Kind::Sum, op.pos);
            sum->lhs = std::move(acc);
            sum->rhs = std::move(rhs);
            acc = std::move(sum);
        }
        return acc;
    }

    NodePtr term() {
        NodePtr acc = factor();
        while (peek().kind == Tok::Star) {
            Token op = advance();
            auto prod = make_node(AstNode::Kind::Product, op.pos);
            prod->lhs = std::move(acc);
            prod->rhs = factor();
            acc = std::move(prod);
        }
        return acc;
    }

    NodePtr factor() {
        NodePtr base = atom();
        if (peek().kind == Tok::Caret) {
            Token op = advance();
            if (peek().kind != Tok::Number) throw ParseError("expected an integer exponent", peek().pos);
            Token e = advance();
            unsigned long v = std::stoul(e.text);
            if (v > 64) throw ParseError("exponent too large", e.pos);
            auto p = make_node(AstNode::Kind::Power, op.pos);
            p->lhs = std::move(base);
            p->exponent = static_cast<uint32_t>(v);
            base = std::move(p);
        }
        return base;
    }

    NodePtr atom() {
        NodePtr acc = primary();
        while (peek().kind == Tok::Wedge) {
            Token op = advance();
            auto w = make_node(AstNode::Kind::Wedge, op.pos);
            w->lhs = std::move(acc);
            w->rhs = primary();
            acc = std::move(w);
        }
        return acc;
    }

    NodePtr primary() {
        Token t = advance();
        switch (t.kind) {
            case Tok::Number: {
                mpz_class num(t.text);
                mpz_class den(1);
                if (peek().kind == Tok::Slash) {
                    advance();
                    if (peek().kind != Tok::Number)
                        throw ParseError("expected a denominator after '/'", peek().pos);
                    Token d = advance();
                    den = mpz_class(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.pos);
                }
                Rational q(num, den);
                q.canonicalize();
                bool imaginary = accept(Tok::Imag);
                auto node = make_node(imaginary ? AstNode::Kind::ImaginaryLit : AstNode::Kind::RationalLit, t.pos);
                node->value = q;
                return node;
            }
            case Tok::Imag: {
                auto node = make_node(AstNode::Kind::ImaginaryLit, t.pos);
                node->value = Rational(1);
                return node;
            }
            case Tok::Variable: {
                auto node = make_node(AstNode::Kind::Variable, t.pos);
                node->index = t.index;
                return node;
            }
            case Tok::Differential: {
                auto node = make_node(AstNode::Kind::Differential, t.pos);
                node->index = t.index;
                return node;
            }
            case Tok::LParen: {
                NodePtr inner = expr();
                expect(Tok::RParen, "expected ')'");
                return inner;
            }
            default:
                throw ParseError("expected a number, variable, differential, 'i' or '('", t.pos);
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

// Every intermediate value is a KForm; degree 0 wraps a polynomial.
KForm elaborate(const AstNode& node, uint32_t n) {
    switch (node.kind) {
        case AstNode::Kind::RationalLit:
            return KForm::from_polynomial(Polynomial::constant(n, GaussianRational(node.value)));
        case AstNode::Kind::ImaginaryLit:
            return KForm::from_polynomial(
                Polynomial::constant(n, GaussianRational(Rational(0), node.value)));
        case AstNode::Kind::Variable:
            if (node.index > n)
                throw ParseError("variable index exceeds the ambient dimension", node.pos);
            return KForm::from_polynomial(Polynomial::variable(n, node.index));
        case AstNode::Kind::Differential:
            if (node.index > n)
                throw ParseError("differential index exceeds the ambient dimension", node.pos);
            return KForm::dz(n, node.index);
        case AstNode::Kind::Negate:
            return -elaborate(*node.lhs, n);
        case AstNode::Kind::Sum: {
            KForm a = elaborate(*node.lhs, n);
            KForm b = elaborate(*node.rhs, n);
            if (a.degree() != b.degree()) {
                std::ostringstream msg;
                msg << "degree mismatch in '+': " << a.degree() << "-form vs " << b.degree() << "-form";
                throw ParseError(msg.str(), node.pos);
            }
            return a + b;
        }
        case AstNode::Kind::Product: {
            KForm a = elaborate(*node.lhs, n);
            KForm b = elaborate(*node.rhs, n);
            if (a.degree() != 0 && b.degree() != 0)
                throw ParseError("'*' between two forms of positive degree; use '/\\'", node.pos);
            if (a.degree() == 0) return a.scalar() * b;
            return b.scalar() * a;
        }
        case AstNode::Kind::Power: {
            KForm base = elaborate(*node.lhs, n);
            if (base.degree() == 0)
                return KForm::from_polynomial(base.scalar().pow(node.exponent));
            // Iterated wedge power for forms of positive degree.
            KForm acc = KForm::from_polynomial(Polynomial::constant(n, GaussianRational(1)));
            for (uint32_t i = 0; i < node.exponent; ++i) acc = wedge(acc, base);
            return acc;
        }
        case AstNode::Kind::Wedge:
            return wedge(elaborate(*node.lhs, n), elaborate(*node.rhs, n));
    }
    throw ParseError("malformed expression tree", node.pos);
}

Polynomial require_constant(const KForm& value, SourcePos pos, const char* what) {
    if (value.degree() != 0) throw ParseError(std::string(what) + " must be a constant", pos);
    Polynomial p = value.scalar();
    if (!p.is_constant()) throw ParseError(std::string(what) + " must not contain variables", pos);
    return p;
}

}  // namespace

ParseError::ParseError(const std::string& message, SourcePos pos)
    : std::runtime_error(format_message(message, pos)), pos_(pos) {}

std::unique_ptr<AstNode> parse_to_ast(std::string_view source) {
    Parser parser(Lexer(source).run());
    return parser.parse_expression_all();
}

ParsedValue parse(std::string_view source, uint32_t n) {
    if (source.empty()) throw ParseError("empty input", SourcePos{});
    Parser parser(Lexer(source).run());
    if (parser.starts_with_bracket()) {
        std::vector<std::unique_ptr<AstNode>> nodes = parser.parse_vector_all();
        if (nodes.size() != n) {
            std::ostringstream msg;
            msg << "vector field has " << nodes.size() << " components, ambient dimension is " << n;
            throw ParseError(msg.str(), nodes.empty() ? SourcePos{} : nodes.back()->pos);
        }
        std::vector<Polynomial> comps;
        comps.reserve(nodes.size());
        for (const auto& node : nodes) {
            KForm v = elaborate(*node, n);
            if (v.degree() != 0)
                throw ParseError("vector field components must be polynomials", node->pos);
            comps.push_back(v.scalar());
        }
        return VectorField(n, std::move(comps));
    }
    std::unique_ptr<AstNode> root = parser.parse_expression_all();
    KForm value = elaborate(*root, n);
    if (value.degree() == 0) return value.scalar();
    return value;
}

Polynomial parse_polynomial(std::string_view source, uint32_t n) {
    ParsedValue v = parse(source, n);
    if (auto* p = std::get_if<Polynomial>(&v)) return *p;
    throw ParseError("expected a polynomial (a 0-form)", SourcePos{});
}

KForm parse_one_form(std::string_view source, uint32_t n) {
    ParsedValue v = parse(source, n);
    if (auto* w = std::get_if<KForm>(&v)) {
        if (w->degree() == 1) return *w;
        std::ostringstream msg;
        msg << "expected a one-form, got a " << w->degree() << "-form";
        throw ParseError(msg.str(), SourcePos{});
    }
    throw ParseError("expected a one-form, got a polynomial", SourcePos{});
}

VectorField parse_vector_field(std::string_view source, uint32_t n) {
    ParsedValue v = parse(source, n);
    if (auto* x = std::get_if<VectorField>(&v)) return *x;
    throw ParseError("expected a vector field '[p1, ..., pn]'", SourcePos{});
}

std::vector<GaussianRational> parse_exact_point(std::string_view source, uint32_t n) {
    Parser parser(Lexer(source).run());
    std::vector<std::unique_ptr<AstNode>> nodes = parser.parse_point_all();
    if (nodes.size() != n) {
        std::ostringstream msg;
        msg << "point has " << nodes.size() << " coordinates, ambient dimension is " << n;
        throw ParseError(msg.str(), SourcePos{});
    }
    std::vector<GaussianRational> coords;
    coords.reserve(n);
    for (const auto& node : nodes)
        coords.push_back(require_constant(elaborate(*node, n), node->pos, "point coordinate").constant_part());
    return coords;
}

GaussianRational parse_gaussian_rational(std::string_view source) {
    Parser parser(Lexer(source).run());
    std::unique_ptr<AstNode> root = parser.parse_expression_all();
    return require_constant(elaborate(*root, 0), root->pos, "constant").constant_part();
}

}  // namespace pfaff
