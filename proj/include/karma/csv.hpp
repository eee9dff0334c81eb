// Minimal RFC-4180 CSV reader/writer. Quoted fields may contain commas,
// doubled quotes and line breaks; both LF and CRLF record separators are
// accepted on input, LF is written on output.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace karma::csv {

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Next record, or nullopt at end of input. Throws DataError on an
  // unterminated quoted field or a stream failure mid-read.
  std::optional<std::vector<std::string>> next();

 private:
  std::istream& in_;
};

// Quotes a field only when it contains a comma, quote or line break.
std::string escape_field(const std::string& field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace karma::csv
