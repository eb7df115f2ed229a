#include "movcone/variety.hpp"

#include "movcone/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace movcone {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::Parse: return "parse-error";
    case Errc::MalformedSpec: return "malformed-spec";
    case Errc::AnticanonicalViolation: return "anticanonical-violation";
    case Errc::CodimTooLarge: return "codim-too-large";
    case Errc::AmbientTooSmall: return "ambient-too-small";
    case Errc::Subcritical: return "subcritical";
    case Errc::InvalidArgument: return "invalid-argument";
    case Errc::NotInJ: return "not-in-J";
    case Errc::NonReducedWord: return "non-reduced-word";
    case Errc::NotLorentzian: return "not-lorentzian";
    case Errc::NoAttractingDirection: return "no-attracting-direction";
    case Errc::NoGrowth: return "no-growth";
    case Errc::NonConvergent: return "non-convergent";
    case Errc::RankNotThree: return "rank-not-three";
    case Errc::DepthCap: return "depth-cap";
    case Errc::Io: return "io-error";
  }
  return "unknown";
}

namespace {

// A parsed config value: integer, string or (possibly nested) list.
struct Value {
  enum class Kind { Int, String, List } kind = Kind::Int;
  long long integer = 0;
  std::string text;
  std::vector<Value> items;
  int line = 0;
  int column = 0;
};

class ConfigReader {
public:
  explicit ConfigReader(std::string_view text) : text_(text) {}

  std::map<std::string, Value> read() {
    std::map<std::string, Value> entries;
    for (;;) {
      skip_blank_lines();
      if (at_end())
        break;
      int key_line = line_, key_col = col_;
      std::string key = read_key();
      skip_inline_space();
      expect('=');
      skip_inline_space();
      Value v = read_value();
      skip_inline_space();
      skip_comment();
      if (!at_end() && peek() != '\n')
        fail("unexpected trailing characters");
      if (entries.count(key))
        throw ParseError(key_line, key_col, "duplicate key '" + key + "'");
      v.line = v.line ? v.line : key_line;
      entries.emplace(std::move(key), std::move(v));
    }
    return entries;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_, msg);
  }

  void skip_inline_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
      advance();
  }
  void skip_comment() {
    if (!at_end() && peek() == '#')
      while (!at_end() && peek() != '\n')
        advance();
  }
  // Whitespace, newlines and comments; used between entries and inside lists.
  void skip_space() {
    for (;;) {
      skip_inline_space();
      skip_comment();
      if (!at_end() && peek() == '\n')
        advance();
      else
        return;
    }
  }
  void skip_blank_lines() { skip_space(); }

  void expect(char c) {
    if (at_end() || peek() != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string read_key() {
    std::string key;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      key.push_back(advance());
    if (key.empty())
      fail("expected a key");
    return key;
  }

  Value read_value() {
    if (at_end())
      fail("expected a value");
    Value v;
    v.line = line_;
    v.column = col_;
    char c = peek();
    if (c == '[') {
      v.kind = Value::Kind::List;
      advance();
      skip_space();
      if (!at_end() && peek() == ']') {
        advance();
        return v;
      }
      for (;;) {
        v.items.push_back(read_value());
        skip_space();
        if (at_end())
          fail("unterminated list");
        if (peek() == ',') {
          advance();
          skip_space();
          if (!at_end() && peek() == ']') {  // trailing comma
            advance();
            return v;
          }
          continue;
        }
        if (peek() == ']') {
          advance();
          return v;
        }
        fail("expected ',' or ']'");
      }
    }
    if (c == '"') {
      v.kind = Value::Kind::String;
      advance();
      while (!at_end() && peek() != '"') {
        if (peek() == '\n')
          fail("unterminated string");
        if (peek() == '\\') {
          advance();
          if (at_end())
            fail("unterminated string");
        }
        v.text.push_back(advance());
      }
      if (at_end())
        fail("unterminated string");
      advance();
      return v;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      if (c == '-' || c == '+')
        digits.push_back(advance());
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
        digits.push_back(advance());
      if (digits.empty() || digits == "-" || digits == "+")
        fail("expected digits");
      if (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '.'))
        fail("expected an integer");
      try {
        v.integer = std::stoll(digits);
      } catch (const std::out_of_range&) {
        throw ParseError(v.line, v.column, "integer out of range");
      }
      return v;
    }
    fail("expected a value");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

int to_positive_int(const Value& v, const char* what) {
  if (v.kind != Value::Kind::Int)
    throw ParseError(v.line, v.column, std::string(what) + " must be an integer");
  if (v.integer <= 0)
    throw ParseError(v.line, v.column, std::string(what) + " must be positive, got " +
                                           std::to_string(v.integer));
  if (v.integer > std::numeric_limits<int>::max())
    throw ParseError(v.line, v.column, std::string(what) + " is too large");
  return static_cast<int>(v.integer);
}

} // namespace

VarietySpec parse_spec(std::string_view text) {
  auto entries = ConfigReader(text).read();
  VarietySpec spec;
  for (const auto& [key, v] : entries)
    if (key != "factors" && key != "degrees" && key != "name")
      throw ParseError(v.line, v.column, "unknown key '" + key + "'");

  auto factors = entries.find("factors");
  if (factors == entries.end())
    throw ParseError(1, 1, "missing required key 'factors'");
  if (factors->second.kind != Value::Kind::List)
    throw ParseError(factors->second.line, factors->second.column, "factors must be a list");
  for (const Value& item : factors->second.items)
    spec.factors.push_back(to_positive_int(item, "factor dimension"));
  if (spec.factors.size() < 2)
    throw ParseError(factors->second.line, factors->second.column,
                     "need at least two factors (l >= 2)");

  auto degrees = entries.find("degrees");
  if (degrees == entries.end())
    throw ParseError(1, 1, "missing required key 'degrees'");
  const Value& rows = degrees->second;
  if (rows.kind != Value::Kind::List || rows.items.empty())
    throw ParseError(rows.line, rows.column, "degrees must be a non-empty list of rows");
  std::optional<std::size_t> width;
  for (const Value& row : rows.items) {
    if (row.kind != Value::Kind::List)
      throw ParseError(row.line, row.column, "each degree row must be a list");
    if (width && row.items.size() != *width)
      throw ParseError(row.line, row.column,
                       "ragged degree matrix: row has " + std::to_string(row.items.size()) +
                           " entries, expected " + std::to_string(*width));
    width = row.items.size();
    std::vector<int> parsed;
    for (const Value& item : row.items)
      parsed.push_back(to_positive_int(item, "degree"));
    spec.degrees.push_back(std::move(parsed));
  }
  if (*width != spec.factors.size())
    throw ParseError(rows.line, rows.column,
                     "degree rows have " + std::to_string(*width) + " columns but there are " +
                         std::to_string(spec.factors.size()) + " factors");

  auto name = entries.find("name");
  if (name != entries.end()) {
    if (name->second.kind != Value::Kind::String)
      throw ParseError(name->second.line, name->second.column, "name must be a string");
    spec.name = name->second.text;
  }
  return spec;
}

VarietySpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::Io, "cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path.string() + ": " + e.detail());
  }
}

std::vector<std::pair<std::filesystem::path, VarietySpec>>
load_spec_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cfg")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<std::pair<std::filesystem::path, VarietySpec>> out;
  for (auto& p : paths) {
    VarietySpec spec = load_spec(p);
    out.emplace_back(std::move(p), std::move(spec));
  }
  return out;
}

bool ValidatedVariety::in_J(int j) const {
  return std::binary_search(J_.begin(), J_.end(), j);
}

int ValidatedVariety::carrier2(int j) const {
  if (codim() != n_)
    throw Error(Errc::Subcritical, "carrier2 is defined only when codim X = n");
  if (j < 0 || j >= rank() || !in_J(j))
    throw Error(Errc::NotInJ, "carrier2: factor " + std::to_string(j + 1) + " is not in J");
  return carrier_[j];
}

ValidatedVariety validate(VarietySpec spec) {
  const int l = spec.rank();
  const int m = spec.codim();
  if (l < 2)
    throw Error(Errc::MalformedSpec, "need at least two factors (l >= 2)");
  if (m < 1)
    throw Error(Errc::MalformedSpec, "need at least one divisor");
  for (int n_k : spec.factors)
    if (n_k < 1)
      throw Error(Errc::MalformedSpec, "all factor dimensions must be >= 1");
  for (const auto& row : spec.degrees) {
    if (static_cast<int>(row.size()) != l)
      throw Error(Errc::MalformedSpec, "degree matrix must have one column per factor");
    for (int a : row)
      if (a < 1)
        throw Error(Errc::MalformedSpec, "all degrees must be >= 1 (ample divisors)");
  }

  for (int k = 0; k < l; ++k) {
    int sum = 0;
    for (const auto& row : spec.degrees)
      sum += row[k];
    if (sum != spec.factors[k] + 1)
      throw Error(Errc::AnticanonicalViolation,
                  "anticanonical condition sum_i a_ik = n_k + 1 fails in column " +
                      std::to_string(k + 1) + ": sum is " + std::to_string(sum) +
                      ", expected " + std::to_string(spec.factors[k] + 1));
  }

  const int n = *std::min_element(spec.factors.begin(), spec.factors.end());
  if (m > n)
    throw Error(Errc::CodimTooLarge, "codimension m = " + std::to_string(m) +
                                         " exceeds n = min n_i = " + std::to_string(n) +
                                         " (need m <= n)");
  const int total = std::accumulate(spec.factors.begin(), spec.factors.end(), 0);
  if (total < 4)
    throw Error(Errc::AmbientTooSmall,
                "ambient too small: need sum n_i >= 4, got " + std::to_string(total));
  if (l == 2 && spec.factors[0] == 2 && spec.factors[1] == 2)
    throw Error(Errc::AmbientTooSmall, "ambient too small: if l = 2 then (n_1, n_2) != (2, 2)");

  ValidatedVariety v;
  v.n_ = n;
  v.dim_ = total - m;
  v.carrier_.assign(l, -1);
  for (int k = 0; k < l; ++k)
    if (spec.factors[k] == n)
      v.J_.push_back(k);

  if (m == n) {
    for (int j : v.J_) {
      int twos = 0, ones = 0;
      for (int i = 0; i < m; ++i) {
        if (spec.degrees[i][j] == 2) {
          ++twos;
          v.carrier_[j] = i;
        } else if (spec.degrees[i][j] == 1) {
          ++ones;
        }
      }
      // Implied by the column sum n + 1 over n positive entries.
      if (twos != 1 || ones != m - 1)
        throw Error(Errc::AnticanonicalViolation,
                    "column " + std::to_string(j + 1) +
                        " must contain exactly one 2 and the rest 1");
    }
  }
  v.spec_ = std::move(spec);
  return v;
}

} // namespace movcone
