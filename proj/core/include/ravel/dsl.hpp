#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ravel/insertion.hpp"
#include "ravel/tangle.hpp"

namespace ravel {

// Grammar (whitespace is ignored between tokens):
//   input     = montesinos | algebraic
//   montesinos= "M" "[" summand { "," summand } "]" { insertion }
//   summand   = "inf" | "[" int { "," int } "]"
//   insertion = "v(" int "," int "," int ")"
//   algebraic = "A" "[" expr "]"
//   expr      = term { "+" term }        (sum, left to right)
//   term      = factor { "*" factor }    (product binds tighter)
//   factor    = summand | "(" expr ")"
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

struct ParsedInput {
    MontesinosPresentation presentation;  // empty when the input is algebraic
    VertexInsertion insertion;
    std::optional<AlgebraicExpr> expr;

    bool is_algebraic() const { return expr.has_value(); }
};

ParsedInput parse_input(std::string_view text);

std::string print_box_vector(const BoxVector& t);
std::string print_presentation(const MontesinosPresentation& m, const VertexInsertion& v = {});
std::string print_expr(const AlgebraicExpr& e);
std::string print_input(const ParsedInput& in);

}  // namespace ravel
