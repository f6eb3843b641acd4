#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nambu/poly.hpp"

namespace nambu {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

/// Parses a polynomial expression over `coords`.
///
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" UINT)?
///   base   := RATIONAL | IDENT | "(" expr ")"
///
/// Identifiers resolve through Coords::index_of, so aliases are accepted.
/// There is no implicit multiplication: "2x" is rejected.
Polynomial parse_polynomial(std::string_view text, const CoordsPtr& coords);

} // namespace nambu
