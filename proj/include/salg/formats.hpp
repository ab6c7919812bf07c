#pragma once

// Line-oriented text formats. `#` starts a comment running to end of line;
// blank lines are ignored; tokens are separated by whitespace; indices are
// 0-based; values use the rational grammar -?[0-9]+(/[1-9][0-9]*)?.
//
//   algebra <name>              map <n_target> <n_source>
//   dim <n>                     m <k> <i> <value>        (g^k_i)
//   [basis <label> ... ]        end
//   c <i> <j> <k> <value>
//   end                         tensor <n>
//                               t <p> <r> <value>        (g^pr)
//   poly <m> <n>                end
//   p <j> <i1> ... <im> <value>
//   end
//
// Serializers sort entries by index tuple and omit zeros, so equal values
// always produce identical bytes.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "salg/algebra.hpp"
#include "salg/linmap.hpp"
#include "salg/polymap.hpp"
#include "salg/rational.hpp"

namespace salg {

/// Syntax or range error at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

Algebra<Rational> parse_algebra(std::string_view text);
std::string serialize_algebra(const Algebra<Rational>& alg);

LinearMap<Rational> parse_map(std::string_view text);
std::string serialize_map(const LinearMap<Rational>& f);

Tensor2<Rational> parse_tensor(std::string_view text);
std::string serialize_tensor(const Tensor2<Rational>& t);

PolyMap<Rational> parse_polymap(std::string_view text);
std::string serialize_polymap(const PolyMap<Rational>& f);

/// Comma-separated coordinates, e.g. "1,-1/2,0". Errors report line 1.
Element<Rational> parse_element(std::string_view text);
std::string format_element(const Element<Rational>& a);

/// Rows of space-separated rationals, one line per row.
std::string format_matrix(const Matrix<Rational>& m);

}  // namespace salg
