#pragma once

#include "qvt/ratfunc.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qvt {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// expr := term (("+"|"-") term)* ; term := factor (("*"|"/") factor)* ;
// factor := atom ("^" sint)? ; atom := uint | v | t | "(" expr ")"
RatFunc parse_coeff(std::string_view text);

}  // namespace qvt
