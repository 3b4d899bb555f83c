#include "monoalg/input.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>

#include <json.hpp>

namespace monoalg {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::vector<Point> rows_from_json(const json& rows, const std::string& path) {
  if (!rows.is_array()) throw ParseError(ErrorKind::Syntax, path, "expected an array of rows");
  std::vector<Point> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    const json& row = rows[r];
    if (!row.is_array()) throw ParseError(ErrorKind::Syntax, rpath, "expected an array of integers");
    Point p;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const json& v = row[c];
      const std::string cpath = rpath + "[" + std::to_string(c) + "]";
      if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX))
          throw ParseError(ErrorKind::NonInteger, cpath, "integer out of range");
        p.push_back(static_cast<std::int64_t>(u));
      } else if (v.is_number_integer()) {
        p.push_back(v.get<std::int64_t>());
      } else {
        throw ParseError(ErrorKind::NonInteger, cpath, "expected an integer, got " + v.dump());
      }
    }
    if (!out.empty() && p.size() != out.front().size())
      throw ParseError(ErrorKind::RaggedRows, rpath,
                       "row has " + std::to_string(p.size()) + " entries, expected " +
                           std::to_string(out.front().size()));
    out.push_back(std::move(p));
  }
  return out;
}

InputDocument parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(ErrorKind::Syntax, line_column(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  InputDocument out;
  if (doc.is_array()) {
    out.generators = rows_from_json(doc, "$");
    return out;
  }
  if (!doc.is_object()) throw ParseError(ErrorKind::Syntax, "$", "expected an object or an array");
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "generators")
      throw ParseError(ErrorKind::Syntax, key, "unknown field");
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError(ErrorKind::Syntax, "name", "expected a string");
    out.name = it->get<std::string>();
  }
  auto gens = doc.find("generators");
  if (gens == doc.end()) throw ParseError(ErrorKind::Syntax, "generators", "missing field");
  out.generators = rows_from_json(*gens, "generators");
  return out;
}

InputDocument parse_rows(std::string_view text) {
  InputDocument out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::size_t first_row_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    Point p;
    std::size_t field = 0;
    while (fields >> tok) {
      ++field;
      std::int64_t v = 0;
      const char* first = tok.data();
      const char* last = tok.data() + tok.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last || first == last)
        throw ParseError(ErrorKind::NonInteger,
                         "line " + std::to_string(lineno) + ", field " + std::to_string(field),
                         "'" + tok + "' is not an integer");
      p.push_back(v);
    }
    if (p.empty()) continue;
    if (!out.generators.empty() && p.size() != out.generators.front().size())
      throw ParseError(ErrorKind::RaggedRows, "line " + std::to_string(lineno),
                       "row has " + std::to_string(p.size()) + " entries, line " +
                           std::to_string(first_row_line) + " has " +
                           std::to_string(out.generators.front().size()));
    if (out.generators.empty()) first_row_line = lineno;
    out.generators.push_back(std::move(p));
  }
  return out;
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  std::size_t i = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && (text[i] == '{' || text[i] == '[')) return parse_json(text);
  return parse_rows(text);
}

}  // namespace monoalg
