#include <pgate/detail/dense.hpp>
#include <pgate/detail/zassenhaus.hpp>
#include <pgate/error.hpp>
#include <pgate/number_field.hpp>

#include <sstream>

namespace pgate {
namespace {

std::string render_rational_poly(const std::vector<Rational>& coeffs,
                                 const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

NumberField::NumberField(std::string variable, std::vector<Rational> min_poly)
    : variable_(std::move(variable)), min_poly_(std::move(min_poly)) {
  const int d = degree();
  // z^d = -(m_0 + m_1 z + ... + m_{d-1} z^{d-1})
  std::vector<Rational> current(d);
  for (int i = 0; i < d; ++i) current[i] = -min_poly_[i];
  for (int k = d; k <= 2 * d - 2; ++k) {
    power_table_.push_back(current);
    std::vector<Rational> next(d);
    for (int i = d - 1; i >= 1; --i) next[i] = current[i - 1];
    const Rational top = current[d - 1];
    for (int i = 0; i < d; ++i) next[i] -= top * min_poly_[i];
    current = std::move(next);
  }
}

FieldPtr NumberField::create(std::string variable, std::vector<Rational> min_poly) {
  detail::trim(min_poly);
  if (min_poly.size() < 2) {
    throw ArithmeticError("minimal polynomial must have degree at least 1");
  }
  if (min_poly.back() != 1) {
    throw ArithmeticError("minimal polynomial must be monic: " +
                          render_rational_poly(min_poly, variable));
  }
  if (min_poly.size() > 2) {
    auto factors = detail::factor_integer_polynomial(
        detail::primitive_integer(min_poly), 0x5eedULL);
    if (factors.size() != 1 || factors[0].second != 1) {
      throw ArithmeticError("minimal polynomial is reducible over Q: " +
                            render_rational_poly(min_poly, variable));
    }
  }
  return FieldPtr(new NumberField(std::move(variable), std::move(min_poly)));
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q =
      FieldPtr(new NumberField("z", std::vector<Rational>{Rational(0), Rational(1)}));
  return q;
}

bool NumberField::same_as(const NumberField& other) const {
  return this == &other ||
         (variable_ == other.variable_ && min_poly_ == other.min_poly_);
}

std::string NumberField::min_poly_string() const {
  return render_rational_poly(min_poly_, variable_);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

// --- FieldElement -------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field)
    : field_(std::move(field)), coords_(field_->degree()) {}

FieldElement::FieldElement(FieldPtr field, Rational value)
    : field_(std::move(field)), coords_(field_->degree()) {
  coords_[0] = std::move(value);
}

FieldElement::FieldElement(FieldPtr field, long value)
    : FieldElement(std::move(field), Rational(value)) {}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)) {
  const int d = field_->degree();
  if (static_cast<int>(coords.size()) <= d) {
    coords.resize(d);
    coords_ = std::move(coords);
    return;
  }
  // Reduce modulo the minimal polynomial by long division from the top.
  const auto& m = field_->min_poly();
  for (int k = static_cast<int>(coords.size()) - 1; k >= d; --k) {
    const Rational c = coords[k];
    if (c == 0) continue;
    for (int i = 0; i <= d; ++i) coords[k - d + i] -= c * m[i];
  }
  coords.resize(d);
  coords_ = std::move(coords);
}

FieldElement FieldElement::generator(FieldPtr field) {
  std::vector<Rational> c{Rational(0), Rational(1)};
  return FieldElement(std::move(field), std::move(c));
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const {
  if (coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!same_field(field_, o.field_)) {
    throw ArithmeticError("field mismatch: Q(" + field_->variable() + ")/(" +
                          field_->min_poly_string() + ") vs Q(" +
                          o.field_->variable() + ")/(" +
                          o.field_->min_poly_string() + ")");
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  const int d = a.field_->degree();
  if (d == 1) {
    FieldElement r(a.field_);
    r.coords_[0] = a.coords_[0] * b.coords_[0];
    return r;
  }
  std::vector<Rational> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.coords_[j] == 0) continue;
      prod[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  const auto& table = a.field_->power_table();
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = table[k - d];
    for (int i = 0; i < d; ++i) {
      if (row[i] != 0) prod[i] += prod[k] * row[i];
    }
  }
  prod.resize(d);
  FieldElement r(a.field_);
  r.coords_ = std::move(prod);
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.coords_ == b.coords_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in number field");
  if (is_rational()) return FieldElement(field_, 1 / coords_[0]);
  detail::QPoly a(coords_);
  detail::trim(a);
  auto [g, s] = detail::half_xgcd(a, field_->min_poly());
  if (detail::degree(g) != 0) {
    throw ArithmeticError("element is not invertible (minimal polynomial reducible?)");
  }
  return FieldElement(field_, std::move(s));
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result(field_, 1L);
  FieldElement base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string FieldElement::to_string() const {
  return render_rational_poly(coords_, field_->variable());
}

int compare(const FieldElement& a, const FieldElement& b) {
  const auto& x = a.coords();
  const auto& y = b.coords();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
}

std::vector<Rational> characteristic_polynomial(const FieldElement& a) {
  // Faddeev-LeVerrier on the d x d multiplication matrix.
  const int d = a.field()->degree();
  std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d));
  FieldElement basis(a.field(), 1L);
  const FieldElement z = FieldElement::generator(a.field());
  for (int j = 0; j < d; ++j) {
    FieldElement col = a * basis;
    for (int i = 0; i < d; ++i) A[i][j] = col.coords()[i];
    basis *= z;
  }
  std::vector<Rational> c(d + 1);
  c[d] = 1;
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d));
  for (int k = 1; k <= d; ++k) {
    // M <- A*M + c_{d-k+1} I
    std::vector<std::vector<Rational>> AM(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i) {
      for (int l = 0; l < d; ++l) {
        if (A[i][l] == 0) continue;
        for (int j = 0; j < d; ++j) AM[i][j] += A[i][l] * M[l][j];
      }
    }
    for (int i = 0; i < d; ++i) AM[i][i] += c[d - k + 1];
    M = std::move(AM);
    Rational tr = 0;
    for (int i = 0; i < d; ++i) {
      for (int l = 0; l < d; ++l) tr += A[i][l] * M[l][i];
    }
    c[d - k] = -tr / k;
  }
  return c;
}

bool is_algebraic_integer(const FieldElement& a) {
  for (const auto& c : characteristic_polynomial(a)) {
    if (!is_integral(c)) return false;
  }
  return true;
}

}  // namespace pgate
