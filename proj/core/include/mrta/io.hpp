#ifndef MRTA_IO_HPP
#define MRTA_IO_HPP

#include <stdexcept>
#include <string>

#include "mrta/core.hpp"

namespace mrta::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedInstance {
  Instance instance;
  Budget budget;
};

// Instance file format (documented in the README):
//   robots <n> [points]      followed by n "x y" lines when points
//   tasks <m> [points]       followed by m "<q> [x y]" lines
//   costs matrix|symmetric|location [<scale>]
//   budget total|per-task|per-robot <W>
// '#' starts a comment; blank lines are skipped. The uniform requirement tag
// is inferred from the values; symmetric/location tags follow the cost form.
ParsedInstance parse_instance(const std::string& text);

// Canonical form: fixed section order, no comments, single spaces.
// serialize(parse(x)) equals the canonical form of x.
std::string serialize_instance(const Instance& inst, const Budget& budget);

}  // namespace mrta::io

#endif  // MRTA_IO_HPP
