#include "mfp/parse.hpp"

#include <cctype>
#include <regex>

#include "mfp/error.hpp"

namespace mfp {

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const RingPtr& ring, int line)
      : text_(text), ring_(ring), line_(line) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail(ErrorKind::SyntaxError, "empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(ErrorKind::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& msg, std::size_t at) const {
    throw ParseError(kind, msg, line_, static_cast<int>(at) + 1);
  }
  [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const { fail(kind, msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    if (!starts_factor()) {
      if (pos_ >= text_.size()) fail(ErrorKind::SyntaxError, "expression ends early");
      fail(ErrorKind::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
    }
    Polynomial acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        if (!starts_factor()) fail(ErrorKind::SyntaxError, "expected a factor after '*'");
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else if (peek('/')) {
        fail(ErrorKind::SyntaxError, "'/' is only allowed inside rational literals");
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail(ErrorKind::SyntaxError, "expected an integer exponent", at);
      if (digits.size() > 6) fail(ErrorKind::SyntaxError, "exponent too large", at);
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip_ws();
    std::size_t at = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail(ErrorKind::SyntaxError, "missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      Integer den = 1;
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t dat = pos_;
        std::string d = read_digits();
        if (d.empty()) fail(ErrorKind::SyntaxError, "expected a denominator", dat);
        den = Integer(d);
        if (den == 0) fail(ErrorKind::SyntaxError, "zero denominator", dat);
      } else {
        pos_ = save;
      }
      return Polynomial::constant(ring_, make_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return identifier(std::string(text_.substr(start, pos_ - start)), at);
    }
    fail(ErrorKind::SyntaxError, std::string("unexpected '") + c + "'");
  }

  // A declared name, or a juxtaposition of declared names such as "xy".
  Polynomial identifier(const std::string& word, std::size_t at) {
    const auto& vars = ring_->variables();
    if (auto idx = vars.index_of(word)) return Polynomial::variable(ring_, *idx);
    Polynomial acc = Polynomial::constant(ring_, 1);
    std::size_t i = 0;
    while (i < word.size()) {
      std::size_t best = 0, best_idx = 0;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto& n = vars.name(v);
        if (n.size() > best && word.compare(i, n.size(), n) == 0) {
          best = n.size();
          best_idx = v;
        }
      }
      if (best == 0) fail(ErrorKind::UnknownVariable, "unknown variable '" + word + "'", at);
      acc = acc * Polynomial::variable(ring_, best_idx);
      i += best;
    }
    return acc;
  }

  std::string_view text_;
  RingPtr ring_;
  int line_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, int line) {
  return PolyParser(text, ring, line).parse();
}

IdealPresentation parse_ideal(std::string_view text) {
  static const std::regex header(R"(^\s*vars\s*:\s*(.*?)\s*$)");
  static const std::regex name(R"(^[A-Za-z][A-Za-z0-9_]*$)");
  RingPtr ring;
  std::vector<Polynomial> gens;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++lineno;
    start = end + 1;
    std::string_view line = strip_comment(raw);
    if (blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    if (!ring) {
      std::string s(line);
      std::smatch m;
      if (!std::regex_match(s, m, header))
        throw ParseError(ErrorKind::SyntaxError, "expected header 'vars: <name>(,<name>)*'", lineno, 1);
      std::vector<std::string> names;
      std::string list = m[1];
      std::size_t p = 0;
      while (p <= list.size()) {
        std::size_t q = list.find(',', p);
        if (q == std::string::npos) q = list.size();
        std::string n = list.substr(p, q - p);
        n.erase(0, n.find_first_not_of(" \t"));
        n.erase(n.find_last_not_of(" \t") + 1);
        if (!std::regex_match(n, name))
          throw ParseError(ErrorKind::SyntaxError, "invalid variable name '" + n + "'", lineno, 1);
        names.push_back(n);
        p = q + 1;
      }
      try {
        ring = Ring::make(std::move(names));
      } catch (const Error& e) {
        throw ParseError(ErrorKind::SyntaxError, e.what(), lineno, 1);
      }
    } else {
      Polynomial p = parse_polynomial(line, ring, lineno);
      if (p.is_zero()) throw ParseError(ErrorKind::ZeroPolynomialLine, "polynomial is zero", lineno, 1);
      gens.push_back(std::move(p));
    }
    if (end == text.size()) break;
  }
  if (!ring) throw ParseError(ErrorKind::SyntaxError, "missing 'vars:' header", lineno ? lineno : 1, 1);
  return IdealPresentation(ring, std::move(gens));
}

std::string format_ideal(const IdealPresentation& I) {
  std::string out = "vars: ";
  const auto& names = I.variables().names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  out += "\n";
  for (const auto& g : I.generators()) out += g.to_string() + "\n";
  return out;
}

RationalPoint parse_point(std::string_view text) {
  RationalPoint p;
  std::string s(text);
  std::size_t start = 0;
  while (true) {
    std::size_t q = s.find(',', start);
    std::string item = s.substr(start, q == std::string::npos ? std::string::npos : q - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw Error(ErrorKind::InvalidArgument, "empty coordinate in point '" + s + "'");
    if (item[0] == '+') item.erase(0, 1);
    static const std::regex rat(R"(^-?[0-9]+(/[0-9]+)?$)");
    if (!std::regex_match(item, rat))
      throw Error(ErrorKind::InvalidArgument, "coordinate '" + item + "' is not a rational number");
    p.push_back(parse_rational(item));
    if (q == std::string::npos) break;
    start = q + 1;
  }
  return p;
}

}  // namespace mfp
