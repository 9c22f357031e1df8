// parser.hpp
// Polynomial expression parser: variables x1..xN (x, y, z as aliases for
// the first three), integer/rational literals, + - * ^ and parentheses.
// Exponents must be non-negative integer literals. Expressions expand to a
// canonical MultiPoly; printing and re-parsing is a fixed point.

#pragma once

#include "smallzeros/multipoly.hpp"

#include <stdexcept>
#include <string>

namespace smallzeros {

struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line(line),
          column(column) {}
    int line, column;
};

// nvars: highest variable index used (minimum 1); pass min_vars to widen
MultiPoly parse_poly(const std::string& text, unsigned min_vars = 1);

// "1,0;0,1" -> rows ';'-separated, entries ','-separated
QMatrix parse_matrix(const std::string& text);

std::string print_poly(const MultiPoly& f);

}  // namespace smallzeros
