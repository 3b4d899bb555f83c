#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoalg/errors.hpp"
#include "monoalg/semigroup.hpp"

namespace monoalg {

struct InputDocument {
  std::optional<std::string> name;
  std::vector<Point> generators;
};

/// Parse error carrying where it happened: "line L, field F" for text rows,
/// "line L, column C" for JSON syntax, or a JSON path such as
/// "generators[1][0]".
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::string location, const std::string& message)
      : Error(kind, location + ": " + message), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Accepts {"name": ..., "generators": [[...], ...]}, a bare JSON array of
/// rows, or whitespace-separated integer rows (one generator per line, '#'
/// starts a comment). Throws ParseError with kind Syntax, RaggedRows or
/// NonInteger.
InputDocument parse_input(std::string_view text);

}  // namespace monoalg
