#include "salg/formats.hpp"

#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace salg {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

// Limits on declared sizes so hostile input cannot request huge tables.
constexpr Index kMaxAlgebraDim = 64;
constexpr Index kMaxMapDim = 256;
constexpr Index kMaxPolyEntries = Index{1} << 22;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

/// Non-empty lines with comments stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      if (i >= raw.size()) break;
      const std::size_t tok_start = i;
      while (i < raw.size() && !is_space(raw[i])) ++i;
      line.tokens.push_back({raw.substr(tok_start, i - tok_start), tok_start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(tokenize(text)) {
    // end of input sits after the last character
    for (char c : text) {
      if (c == '\n') {
        ++end_line_;
        end_column_ = 1;
      } else {
        ++end_column_;
      }
    }
  }

  bool done() const { return pos_ >= lines_.size(); }

  const Line& next(const char* expected) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + expected, end_line_, end_column_);
    return lines_[pos_++];
  }

  const Line& peek() const { return lines_[pos_]; }

  void expect_end_of_input() const {
    if (!done()) throw ParseError("unexpected content after 'end'", peek().number, peek().tokens.front().column);
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t end_line_ = 1;
  std::size_t end_column_ = 1;
};

[[noreturn]] void fail(const std::string& message, const Line& line, const Token& tok) {
  throw ParseError(message, line.number, tok.column);
}

void expect_keyword(const Line& line, std::string_view keyword) {
  if (line.tokens.front().text != keyword)
    fail("expected '" + std::string(keyword) + "'", line, line.tokens.front());
}

void expect_token_count(const Line& line, std::size_t count) {
  if (line.tokens.size() < count) {
    const Token& last = line.tokens.back();
    throw ParseError("missing field after '" + std::string(last.text) + "'", line.number,
                     last.column + last.text.size());
  }
  if (line.tokens.size() > count) fail("unexpected extra field", line, line.tokens[count]);
}

Index parse_index(const Line& line, const Token& tok) {
  if (tok.text.empty()) fail("expected non-negative integer", line, tok);
  Index value = 0;
  for (std::size_t i = 0; i < tok.text.size(); ++i) {
    const char c = tok.text[i];
    if (c < '0' || c > '9') throw ParseError("expected non-negative integer", line.number, tok.column + i);
    if (value > (std::numeric_limits<Index>::max() - 9) / 10) fail("integer too large", line, tok);
    value = value * 10 + (c - '0');
  }
  return value;
}

Index parse_bounded_index(const Line& line, const Token& tok, Index bound) {
  const Index v = parse_index(line, tok);
  if (v >= bound) fail("index out of range", line, tok);
  return v;
}

Index parse_size(const Line& line, const Token& tok, Index max) {
  const Index v = parse_index(line, tok);
  if (v < 1) fail("size must be positive", line, tok);
  if (v > max) fail("size exceeds limit " + std::to_string(max), line, tok);
  return v;
}

Rational parse_value(const Line& line, const Token& tok) {
  try {
    return rational_parse(tok.text);
  } catch (const RationalParseError& e) {
    throw ParseError(std::string("malformed rational: ") + e.what(), line.number, tok.column + e.position());
  }
}

bool is_end(const Line& line) { return line.tokens.front().text == "end"; }

void expect_end_line(const Line& line) { expect_token_count(line, 1); }

bool valid_word(std::string_view word) {
  if (word.empty()) return false;
  for (char c : word)
    if (is_space(c) || c == '#' || c == '\n') return false;
  return true;
}

/// Entries of a sparse table: keyword, index fields with bounds, value.
template <typename Store>
void parse_entries(Cursor& cur, std::string_view keyword, const std::vector<Index>& bounds, Store&& store) {
  std::vector<bool> seen;
  Index total = 1;
  for (Index b : bounds) total *= b;
  seen.assign(static_cast<std::size_t>(total), false);
  for (;;) {
    const Line& line = cur.next("'end'");
    if (is_end(line)) {
      expect_end_line(line);
      return;
    }
    expect_keyword(line, keyword);
    expect_token_count(line, bounds.size() + 2);
    std::vector<Index> idx;
    Index flat = 0;
    for (std::size_t f = 0; f < bounds.size(); ++f) {
      idx.push_back(parse_bounded_index(line, line.tokens[f + 1], bounds[f]));
      flat = flat * bounds[f] + idx.back();
    }
    const Rational value = parse_value(line, line.tokens.back());
    if (seen[static_cast<std::size_t>(flat)]) fail("duplicate entry", line, line.tokens.front());
    seen[static_cast<std::size_t>(flat)] = true;
    store(idx, value);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Algebra<Rational> parse_algebra(std::string_view text) {
  Cursor cur(text);
  const Line& head = cur.next("'algebra'");
  expect_keyword(head, "algebra");
  expect_token_count(head, 2);
  const std::string name(head.tokens[1].text);

  const Line& dim_line = cur.next("'dim'");
  expect_keyword(dim_line, "dim");
  expect_token_count(dim_line, 2);
  const Index n = parse_size(dim_line, dim_line.tokens[1], kMaxAlgebraDim);

  std::vector<std::string> labels;
  if (!cur.done() && cur.peek().tokens.front().text == "basis") {
    const Line& basis = cur.next("'basis'");
    expect_token_count(basis, static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 1; i < basis.tokens.size(); ++i) labels.emplace_back(basis.tokens[i].text);
  }

  std::vector<StructureConstant<Rational>> constants;
  parse_entries(cur, "c", {n, n, n}, [&](const std::vector<Index>& idx, const Rational& v) {
    constants.push_back({idx[0], idx[1], idx[2], v});
  });
  cur.expect_end_of_input();
  return make_algebra<Rational>(name, n, constants, std::move(labels));
}

std::string serialize_algebra(const Algebra<Rational>& alg) {
  if (!valid_word(alg.name())) throw std::invalid_argument("algebra name is not a single token: '" + alg.name() + "'");
  std::ostringstream out;
  out << "algebra " << alg.name() << "\n";
  out << "dim " << alg.dim() << "\n";
  if (!alg.labels().empty()) {
    out << "basis";
    for (const auto& l : alg.labels()) {
      if (!valid_word(l)) throw std::invalid_argument("basis label is not a single token: '" + l + "'");
      out << ' ' << l;
    }
    out << "\n";
  }
  for (const auto& c : alg.entries())
    out << "c " << c.i << ' ' << c.j << ' ' << c.k << ' ' << rational_format(c.value) << "\n";
  out << "end\n";
  return out.str();
}

LinearMap<Rational> parse_map(std::string_view text) {
  Cursor cur(text);
  const Line& head = cur.next("'map'");
  expect_keyword(head, "map");
  expect_token_count(head, 3);
  const Index target = parse_size(head, head.tokens[1], kMaxMapDim);
  const Index source = parse_size(head, head.tokens[2], kMaxMapDim);
  LinearMap<Rational> f = LinearMap<Rational>::zero(target, source);
  parse_entries(cur, "m", {target, source},
                [&](const std::vector<Index>& idx, const Rational& v) { f.matrix(idx[0], idx[1]) = v; });
  cur.expect_end_of_input();
  return f;
}

std::string serialize_map(const LinearMap<Rational>& f) {
  std::ostringstream out;
  out << "map " << f.target_dim() << ' ' << f.source_dim() << "\n";
  for (Index k = 0; k < f.target_dim(); ++k)
    for (Index i = 0; i < f.source_dim(); ++i)
      if (!f.matrix(k, i).is_zero()) out << "m " << k << ' ' << i << ' ' << rational_format(f.matrix(k, i)) << "\n";
  out << "end\n";
  return out.str();
}

Tensor2<Rational> parse_tensor(std::string_view text) {
  Cursor cur(text);
  const Line& head = cur.next("'tensor'");
  expect_keyword(head, "tensor");
  expect_token_count(head, 2);
  const Index n = parse_size(head, head.tokens[1], kMaxMapDim);
  Tensor2<Rational> t = Tensor2<Rational>::zero(n);
  parse_entries(cur, "t", {n, n},
                [&](const std::vector<Index>& idx, const Rational& v) { t.components(idx[0], idx[1]) = v; });
  cur.expect_end_of_input();
  return t;
}

std::string serialize_tensor(const Tensor2<Rational>& t) {
  std::ostringstream out;
  out << "tensor " << t.dim() << "\n";
  for (Index p = 0; p < t.dim(); ++p)
    for (Index r = 0; r < t.dim(); ++r)
      if (!t.components(p, r).is_zero())
        out << "t " << p << ' ' << r << ' ' << rational_format(t.components(p, r)) << "\n";
  out << "end\n";
  return out.str();
}

PolyMap<Rational> parse_polymap(std::string_view text) {
  Cursor cur(text);
  const Line& head = cur.next("'poly'");
  expect_keyword(head, "poly");
  expect_token_count(head, 3);
  const Index arity = parse_size(head, head.tokens[1], 16);
  const Index n = parse_size(head, head.tokens[2], kMaxAlgebraDim);
  Index entries = n;
  for (Index s = 0; s < arity; ++s) {
    entries *= n;
    if (entries > kMaxPolyEntries) fail("poly map too large", head, head.tokens[1]);
  }
  PolyMap<Rational> f = PolyMap<Rational>::zero(arity, n);
  std::vector<Index> bounds(static_cast<std::size_t>(arity) + 1, n);
  parse_entries(cur, "p", bounds, [&](const std::vector<Index>& idx, const Rational& v) {
    const std::span<const Index> args(idx.data() + 1, idx.size() - 1);
    f.coords(idx[0], f.column(args)) = v;
  });
  cur.expect_end_of_input();
  return f;
}

std::string serialize_polymap(const PolyMap<Rational>& f) {
  std::ostringstream out;
  out << "poly " << f.arity << ' ' << f.dim << "\n";
  for (Index j = 0; j < f.dim; ++j)
    for (Index c = 0; c < f.coords.cols(); ++c) {
      const Rational& v = f.coords(j, c);
      if (v.is_zero()) continue;
      out << "p " << j;
      for (Index i : f.indices(c)) out << ' ' << i;
      out << ' ' << rational_format(v) << "\n";
    }
  out << "end\n";
  return out.str();
}

Element<Rational> parse_element(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    try {
      coords.push_back(rational_parse(text.substr(start, end - start)));
    } catch (const RationalParseError& e) {
      throw ParseError(std::string("malformed element coordinate: ") + e.what(), 1, start + e.position() + 1);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  Element<Rational> a(static_cast<Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) a(static_cast<Index>(i)) = coords[i];
  return a;
}

std::string format_element(const Element<Rational>& a) {
  std::string out;
  for (Index i = 0; i < a.size(); ++i) {
    if (i > 0) out += ',';
    out += rational_format(a(i));
  }
  return out;
}

std::string format_matrix(const Matrix<Rational>& m) {
  std::string out;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += rational_format(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace salg
