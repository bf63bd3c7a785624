#include <pgate/error.hpp>
#include <pgate/expression.hpp>

#include <cctype>
#include <optional>

namespace pgate {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(line > 0 ? message + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"
                     : (column > 0 ? message + " (column " +
                                         std::to_string(column) + ")"
                                   : message)),
      detail_(message),
      line_(line),
      column_(column) {}

ParseError ParseError::relocated(std::size_t line, std::size_t column_offset) const {
  return ParseError(detail_, line, column_ + column_offset);
}

namespace {

constexpr long kMaxExponent = 100000;

class Parser {
 public:
  Parser(FieldPtr field, std::string_view text, std::optional<std::string> field_var,
         std::optional<std::string> poly_var)
      : field_(std::move(field)),
        text_(text),
        field_var_(std::move(field_var)),
        poly_var_(std::move(poly_var)) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial v = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 0, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial v = term();
    while (true) {
      if (at('+')) {
        ++pos_;
        v += term();
      } else if (at('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Polynomial term() {
    Polynomial v = unary();
    while (true) {
      if (at('*')) {
        ++pos_;
        v *= unary();
      } else if (at('/')) {
        ++pos_;
        const std::size_t where = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = where;
          fail("division is only by nonzero constants");
        }
        v *= d.coeff(0).inverse();
      } else if (starts_primary()) {
        v *= unary();
      } else {
        return v;
      }
    }
  }

  Polynomial unary() {
    if (at('-')) {
      ++pos_;
      return -unary();
    }
    if (at('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!at('^')) return base;
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    const std::size_t where = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer exponent");
    }
    Integer e = digits();
    if (e > kMaxExponent) {
      pos_ = where;
      fail("exponent too large");
    }
    const long k = e.get_si();
    if (!negative) return base.pow(static_cast<int>(k));
    if (!base.is_constant() || base.is_zero()) {
      pos_ = where;
      fail("negative exponents apply only to nonzero constants");
    }
    return Polynomial::constant(base.coeff(0).inverse().pow(k));
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (c == '(') {
      ++pos_;
      Polynomial v = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(c)) {
      return Polynomial::constant(FieldElement(field_, Rational(digits())));
    }
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (field_var_ && name == *field_var_) {
        return Polynomial::constant(FieldElement::generator(field_));
      }
      if (poly_var_ && name == *poly_var_) return Polynomial::variable(field_);
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  FieldPtr field_;
  std::string_view text_;
  std::optional<std::string> field_var_;
  std::optional<std::string> poly_var_;
  std::size_t pos_ = 0;
};

std::optional<std::string> field_variable(const FieldPtr& field) {
  if (field->is_rationals()) return std::nullopt;
  return field->variable();
}

}  // namespace

FieldElement parse_field_element(const FieldPtr& field, std::string_view text) {
  Polynomial p = Parser(field, text, field_variable(field), std::nullopt).parse();
  return p.coeff(0);
}

Polynomial parse_polynomial(const FieldPtr& field, std::string_view text,
                            const std::string& var) {
  if (!field->is_rationals() && field->variable() == var) {
    throw ParseError("polynomial variable '" + var +
                     "' clashes with the field generator");
  }
  return Parser(field, text, field_variable(field), var).parse();
}

std::vector<Rational> parse_rational_polynomial(std::string_view text,
                                                const std::string& var) {
  Polynomial p = Parser(NumberField::rationals(), text, std::nullopt, var).parse();
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.rational_part());
  return out;
}

FieldPtr parse_field(const std::string& variable, std::string_view min_poly) {
  if (variable.empty()) throw ParseError("field variable must not be empty");
  for (std::size_t i = 0; i < variable.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(variable[i]);
    if (!(std::isalpha(c) || c == '_' || (i > 0 && std::isdigit(c)))) {
      throw ParseError("invalid field variable '" + variable + "'");
    }
  }
  std::vector<Rational> m = parse_rational_polynomial(min_poly, variable);
  try {
    return NumberField::create(variable, std::move(m));
  } catch (const ArithmeticError& e) {
    throw ValidationError(e.what());
  }
}

}  // namespace pgate
