#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pfaff/forms.hpp"
#include "pfaff/polynomial.hpp"

namespace pfaff {

struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourcePos pos);
    SourcePos position() const { return pos_; }

private:
    SourcePos pos_;
};

/// Surface syntax node for the expression DSL. Sums and differences
/// both elaborate through Sum (differences via Negate); exponents are
/// literal non-negative integers fixed at parse time.
struct AstNode {
    enum class Kind {
        RationalLit,   // value
        ImaginaryLit,  // value * i
        Variable,      // z_{index}
        Differential,  // dz_{index}
        Negate,
        Sum,
        Product,
        Power,
        Wedge,
    };

    Kind kind;
    SourcePos pos;
    Rational value;       // RationalLit / ImaginaryLit
    uint32_t index = 0;   // Variable / Differential
    uint32_t exponent = 0;  // Power
    std::unique_ptr<AstNode> lhs;
    std::unique_ptr<AstNode> rhs;
};

using ParsedValue = std::variant<Polynomial, KForm, VectorField>;

/// Parses a polynomial or form expression, or a bracketed vector field
/// "[p1, ..., pn]", over variables z1..zn / dz1..dzn. Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := primary ('/\' primary)*            (left-assoc)
///   primary:= rational ['i'] | 'i' | 'z'nat | 'dz'nat | '(' expr ')'
/// Mixed-degree sums are rejected; '*' between two forms of positive
/// degree is rejected (use '/\'); '^' on a form of positive degree is
/// the iterated wedge power.
ParsedValue parse(std::string_view source, uint32_t n);

std::unique_ptr<AstNode> parse_to_ast(std::string_view source);

/// Convenience wrappers that additionally check the elaborated kind.
Polynomial parse_polynomial(std::string_view source, uint32_t n);
KForm parse_one_form(std::string_view source, uint32_t n);
VectorField parse_vector_field(std::string_view source, uint32_t n);

/// Comma-separated list of n constant coordinates, e.g. "0, 1/2, 3i".
std::vector<GaussianRational> parse_exact_point(std::string_view source, uint32_t n);

/// A single constant, e.g. "-2/3" or "1/2+3i" (parenthesized as needed).
GaussianRational parse_gaussian_rational(std::string_view source);

}  // namespace pfaff
