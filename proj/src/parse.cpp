#include "locweil/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "locweil/errors.hpp"

namespace locweil {

std::vector<std::string> projective_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> affine_names(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back("u" + std::to_string(i));
  return out;
}

namespace {

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

// U+2212 MINUS SIGN is accepted as '-'.
std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::name, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x88\x92") {
      out.push_back({Tok::minus, "-", i});
      i += 3;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    }
    out.push_back({kind, std::string(1, s[i]), i});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : tokens_(tokenize(text)), variables_(variables) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::end) {
      if (starts_primary(peek().kind)) throw ParseError("implicit multiplication is not allowed", peek().pos);
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    return p;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& next() { return tokens_[index_++]; }

  static bool starts_primary(Tok k) { return k == Tok::number || k == Tok::name || k == Tok::lparen; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + (peek().kind == Tok::end ? " before end of input" : ""),
                       peek().pos);
    }
    ++index_;
  }

  std::size_t nvars() const { return variables_.size(); }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Polynomial rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (peek().kind == Tok::star) {
        ++index_;
        acc = acc * unary();
      } else if (starts_primary(peek().kind)) {
        throw ParseError("implicit multiplication is not allowed", peek().pos);
      } else if (peek().kind == Tok::slash) {
        throw ParseError("division is only allowed between integer literals", peek().pos);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (peek().kind == Tok::minus) {
      ++index_;
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      ++index_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek().kind != Tok::caret) return base;
    ++index_;
    const Token& exponent = peek();
    if (exponent.kind != Tok::number) throw ParseError("exponent must be a nonnegative integer", exponent.pos);
    ++index_;
    if (exponent.text.size() > 6) throw ParseError("exponent too large", exponent.pos);
    return base.pow(static_cast<unsigned>(std::stoul(exponent.text)));
  }

  Polynomial primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::number: {
        ++index_;
        Integer num(tok.text, 10);
        if (peek().kind == Tok::slash) {
          ++index_;
          const Token& den = peek();
          if (den.kind != Tok::number) throw ParseError("fraction denominator must be an integer literal", den.pos);
          ++index_;
          Integer d(den.text, 10);
          if (d == 0) throw ParseError("zero denominator", den.pos);
          return Polynomial::constant(nvars(), FieldElement(make_rational(num, d)));
        }
        return Polynomial::constant(nvars(), FieldElement(Rational(num)));
      }
      case Tok::name: {
        ++index_;
        if (tok.text == "sqrt") return sqrt_literal(tok);
        auto it = std::find(variables_.begin(), variables_.end(), tok.text);
        if (it == variables_.end()) throw ParseError("unknown variable '" + tok.text + "'", tok.pos);
        return Polynomial::variable(nvars(), static_cast<std::size_t>(it - variables_.begin()));
      }
      case Tok::lparen: {
        ++index_;
        Polynomial inner = expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::end: throw ParseError("unexpected end of input", tok.pos);
      default: throw ParseError("unexpected '" + tok.text + "'", tok.pos);
    }
  }

  Polynomial sqrt_literal(const Token& at) {
    expect(Tok::lparen, "'(' after sqrt");
    bool negative = false;
    if (peek().kind == Tok::minus) {
      negative = true;
      ++index_;
    }
    const Token& digits = peek();
    if (digits.kind != Tok::number || digits.text.size() > 17) {
      throw ParseError("sqrt takes a squarefree integer literal", digits.pos);
    }
    ++index_;
    expect(Tok::rparen, "')'");
    long d = std::stol(digits.text);
    if (negative) d = -d;
    try {
      return Polynomial::constant(nvars(), FieldElement::sqrt(d));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at.pos);
    }
  }

  std::vector<Token> tokens_;
  const std::vector<std::string>& variables_;
  std::size_t index_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  try {
    return Parser(text, variables).parse();
  } catch (const DomainError& e) {
    // Mixing sqrt literals of different fields.
    throw ParseError(e.what(), 0);
  }
}

Form parse_form(std::string_view text, std::size_t num_vars) {
  Polynomial p = parse_polynomial(text, projective_names(num_vars));
  if (!p.is_homogeneous()) throw ParseError("\"" + std::string(text) + "\" is not homogeneous");
  if (p.is_zero()) return Form(std::move(p), 0);
  const int d = p.degree();
  return Form(std::move(p), d);
}

FieldElement parse_coefficient(std::string_view text) {
  Polynomial p = parse_polynomial(text, {});
  return p.is_zero() ? FieldElement() : p.terms().begin()->second;
}

std::vector<std::string> infer_variables(std::span<const std::string> texts) {
  std::set<std::string> names;
  for (const auto& text : texts) {
    for (const auto& tok : tokenize(text)) {
      if (tok.kind == Tok::name && tok.text != "sqrt") names.insert(tok.text);
    }
  }
  auto indexed = [&names](char prefix) -> std::optional<std::size_t> {
    std::size_t max_index = 0;
    for (const auto& n : names) {
      if (n.size() < 2 || n[0] != prefix) return std::nullopt;
      if (!std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        return std::nullopt;
      }
      max_index = std::max<std::size_t>(max_index, std::stoul(n.substr(1)));
    }
    return max_index + 1;
  };
  if (!names.empty()) {
    if (auto n = indexed('x')) return projective_names(*n);
    if (auto n = indexed('u')) return affine_names(*n);
  }
  return {names.begin(), names.end()};
}

std::vector<std::string> split_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  // Strip one pair of enclosing parentheses or brackets if they match each other.
  if (text.size() >= 2 && ((text.front() == '(' && text.back() == ')') || (text.front() == '[' && text.back() == ']'))) {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(' || text[i] == '[') ++depth;
      if (text[i] == ')' || text[i] == ']') --depth;
      if (depth == 0 && i + 1 < text.size()) {
        encloses = false;
        break;
      }
    }
    if (encloses) text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<std::string> out;
  if (text.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(' || text[i] == '[') ++depth;
    if (text[i] == ')' || text[i] == ']') --depth;
    if (text[i] == ',' && depth == 0) {
      out.emplace_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.emplace_back(trim(text.substr(start)));
  return out;
}

}  // namespace locweil
