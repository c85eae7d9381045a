#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mcg {

/// Generators-and-relators data. Words are sequences of signed 1-based
/// generator indices: +i is generator i-1, -i its inverse. Relator powers are
/// expanded at parse time.
struct Presentation {
  int generator_count = 0;
  std::vector<std::vector<int>> relators;

  /// Throws std::invalid_argument on empty relators or out-of-range indices.
  void validate() const;
};

/// Parses "<x,y | x^4, y^3, (x*y)^8, x^2*(x*y)^4>". Powers may be negative;
/// `*` concatenates; parentheses group. Throws ParseError.
Presentation parse_presentation(std::string_view text);

/// Renders with run-length compressed powers, e.g. "<x,y | x^2, y^12>".
std::string format_presentation(const Presentation& p);

}  // namespace mcg
