#include "karma/csv.hpp"

#include <istream>
#include <ostream>

#include "karma/error.hpp"

namespace karma::csv {

std::optional<std::vector<std::string>> Reader::next() {
  int c = in_.get();
  if (c == std::istream::traits_type::eof()) {
    if (in_.bad()) throw DataError("csv: unreadable stream");
    return std::nullopt;
  }

  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;

  while (true) {
    if (c == std::istream::traits_type::eof()) {
      if (in_.bad()) throw DataError("csv: unreadable stream");
      if (quoted) throw DataError("csv: unterminated quoted field");
      fields.push_back(std::move(field));
      return fields;
    }
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        const int peek = in_.peek();
        if (peek == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"' && field.empty()) {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      fields.push_back(std::move(field));
      return fields;
    } else {
      field.push_back(ch);
    }
    c = in_.get();
  }
}

std::string escape_field(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out.put(',');
    out << escape_field(fields[i]);
  }
  out.put('\n');
}

}  // namespace karma::csv
