#include <pgate/detail/bareiss.hpp>
#include <pgate/detail/dense.hpp>
#include <pgate/error.hpp>
#include <pgate/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace pgate {

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!same_field(c.field(), field_)) {
      throw ArithmeticError("polynomial coefficient from a different field");
    }
  }
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.field(), {c});
}

Polynomial Polynomial::monomial(const FieldElement& c, int degree) {
  std::vector<FieldElement> v(degree + 1, FieldElement(c.field()));
  v[degree] = c;
  return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::variable(FieldPtr field) {
  return monomial(FieldElement(field, 1L), 1);
}

Polynomial Polynomial::from_rationals(FieldPtr field,
                                      const std::vector<Rational>& coeffs) {
  std::vector<FieldElement> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(field, c);
  return Polynomial(field, std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check_same_field(const Polynomial& o) const {
  if (!same_field(field_, o.field_)) {
    throw ArithmeticError("polynomials over different fields");
  }
}

FieldElement Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return FieldElement(field_);
  return coeffs_[k];
}

FieldElement Polynomial::leading() const {
  if (coeffs_.empty()) return FieldElement(field_);
  return coeffs_.back();
}

int Polynomial::valuation() const {
  for (int k = 0; k <= degree(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return -1;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_field(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FieldElement(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_field(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FieldElement(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_field(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<FieldElement> r(a.coeffs_.size() + b.coeffs_.size() - 1,
                              FieldElement(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(a.field_, std::move(r));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial(field_);
  std::vector<FieldElement> r;
  r.reserve(coeffs_.size() - 1);
  for (int k = 1; k <= degree(); ++k) r.push_back(coeffs_[k] * Rational(k));
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::pow(int e) const {
  Polynomial result = constant(FieldElement(field_, 1L));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
  FieldElement acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::scale_variable(const FieldElement& c) const {
  std::vector<FieldElement> r(coeffs_);
  FieldElement power(field_, 1L);
  for (auto& x : r) {
    x *= power;
    power *= c;
  }
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::shift_variable(const FieldElement& c) const {
  const Polynomial lin(field_, {c, FieldElement(field_, 1L)});
  Polynomial acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin + constant(*it);
  }
  return acc;
}

Polynomial Polynomial::inflate(int k) const {
  if (is_zero()) return *this;
  std::vector<FieldElement> r(degree() * k + 1, FieldElement(field_));
  for (int i = 0; i <= degree(); ++i) r[i * k] = coeffs_[i];
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<FieldElement> r(k, FieldElement(field_));
  r.insert(r.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(field_, std::move(r));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  if (degree() == 0) return coeffs_[0].to_string();
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const FieldElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (c.is_rational()) {
      const Rational& v = c.rational_part();
      Rational mag = abs(v);
      if (first) {
        if (v < 0) out << "-";
      } else {
        out << (v < 0 ? " - " : " + ");
      }
      if (k == 0) {
        out << mag.get_str();
      } else if (mag == 1) {
        out << mono;
      } else {
        out << mag.get_str() << "*" << mono;
      }
    } else if (std::count_if(c.coords().begin(), c.coords().end(),
                             [](const Rational& x) { return x != 0; }) == 1) {
      // single power of the field generator: keep the sign outside
      const bool negative =
          *std::find_if(c.coords().begin(), c.coords().end(),
                        [](const Rational& x) { return x != 0; }) < 0;
      if (first) {
        if (negative) out << "-";
      } else {
        out << (negative ? " - " : " + ");
      }
      out << (negative ? -c : c).to_string();
      if (k > 0) out << "*" << mono;
    } else {
      if (!first) out << " + ";
      out << "(" << c.to_string() << ")";
      if (k > 0) out << "*" << mono;
    }
    first = false;
  }
  return out.str();
}

int compare(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    int c = compare(a.coeffs()[k], b.coeffs()[k]);
    if (c != 0) return c;
  }
  return 0;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (!same_field(a.field(), b.field())) {
    throw ArithmeticError("polynomials over different fields");
  }
  const FieldPtr& K = a.field();
  if (a.degree() < b.degree()) return {Polynomial(K), a};
  std::vector<FieldElement> r(a.coeffs());
  std::vector<FieldElement> q(a.degree() - b.degree() + 1, FieldElement(K));
  const FieldElement inv = b.leading().inverse();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    FieldElement c = r[k + db] * inv;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      if (!b.coeffs()[j].is_zero()) r[k + j] -= c * b.coeffs()[j];
    }
    q[k] = std::move(c);
  }
  r.resize(db, FieldElement(K));
  return {Polynomial(K, std::move(q)), Polynomial(K, std::move(r))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw ArithmeticError("polynomial division is not exact");
  return q;
}

Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) {
    throw ArithmeticError("gcd(0, 0) is undefined");
  }
  Polynomial a = a_in.monic(), b = b_in.monic();
  while (!b.is_zero()) {
    Polynomial r = divrem(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw ArithmeticError("squarefree decomposition of zero");
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial f = p.monic();
  if (f.degree() < 1) return out;
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = exact_quotient(f, a);
  Polynomial c = exact_quotient(fp, a);
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    Polynomial g = d.is_zero() ? b.monic() : gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

struct ZPolyOps {
  detail::ZPoly one() const { return {Integer(1)}; }
  detail::ZPoly zero() const { return {}; }
  bool is_zero(const detail::ZPoly& x) const { return x.empty(); }
  detail::ZPoly mul(const detail::ZPoly& x, const detail::ZPoly& y) const {
    return detail::zmul(x, y);
  }
  detail::ZPoly sub(const detail::ZPoly& x, const detail::ZPoly& y) const {
    return detail::zsub(x, y);
  }
  detail::ZPoly neg(detail::ZPoly x) const {
    for (auto& c : x) c = -c;
    return x;
  }
  detail::ZPoly exact_div(const detail::ZPoly& x, const detail::ZPoly& y) const {
    return detail::zdiv_exact(x, y);
  }
};

Integer denominator_lcm(const std::vector<Rational>& v, Integer acc = 1) {
  for (const auto& c : v) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
  return acc;
}

}  // namespace

Polynomial resultant(const std::vector<Rational>& m_in, const Polynomial& q) {
  const FieldPtr Q = NumberField::rationals();
  std::vector<Rational> m(m_in);
  detail::trim(m);
  if (m.size() < 2) throw ArithmeticError("resultant: m must have positive degree");
  if (q.is_zero()) return Polynomial(Q);
  const int d = static_cast<int>(m.size()) - 1;

  // q(z, t) = sum_i z^i Q_i(t)
  const int width = q.field()->degree();
  std::vector<detail::QPoly> Qz(width);
  for (int j = 0; j <= q.degree(); ++j) {
    const auto& coords = q.coeffs()[j].coords();
    for (int i = 0; i < width; ++i) {
      if (coords[i] == 0) continue;
      if (static_cast<int>(Qz[i].size()) <= j) Qz[i].resize(j + 1);
      Qz[i][j] = coords[i];
    }
  }
  while (!Qz.empty() && Qz.back().empty()) Qz.pop_back();
  const int e = static_cast<int>(Qz.size()) - 1;

  if (e == 0) {
    // Res(m, c) = c^deg(m) for monic m; in general lc(m)^0 * c^d.
    detail::QPoly r{Rational(1)};
    for (int i = 0; i < d; ++i) r = detail::mul(r, Qz[0]);
    return Polynomial::from_rationals(Q, r);
  }

  Integer Dm = denominator_lcm(m);
  Integer Dq = 1;
  for (const auto& col : Qz) Dq = denominator_lcm(col, Dq);

  const int n = d + e;
  std::vector<std::vector<detail::ZPoly>> S(n, std::vector<detail::ZPoly>(n));
  for (int row = 0; row < e; ++row) {
    for (int k = 0; k <= d; ++k) {
      Rational v = m[d - k] * Dm;
      if (v != 0) S[row][row + k] = {v.get_num()};
    }
  }
  for (int row = 0; row < d; ++row) {
    for (int k = 0; k <= e; ++k) {
      const detail::QPoly& coeff = Qz[e - k];
      detail::ZPoly z(coeff.size());
      for (std::size_t i = 0; i < coeff.size(); ++i) {
        Rational v = coeff[i] * Dq;
        z[i] = v.get_num();
      }
      detail::trim(z);
      S[e + row][row + k] = std::move(z);
    }
  }
  detail::ZPoly det = detail::bareiss_determinant(std::move(S), ZPolyOps{});

  Integer scale_den;
  Integer a, b;
  mpz_pow_ui(a.get_mpz_t(), Dm.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(b.get_mpz_t(), Dq.get_mpz_t(), static_cast<unsigned long>(d));
  scale_den = a * b;
  detail::QPoly r(det.size());
  for (std::size_t i = 0; i < det.size(); ++i) {
    r[i] = Rational(det[i], scale_den);
    r[i].canonicalize();
  }
  return Polynomial::from_rationals(Q, r);
}

Polynomial norm(const Polynomial& q) {
  return resultant(q.field()->min_poly(), q);
}

Polynomial substitute_neg_t_squared(const Polynomial& p) {
  return p.scale_variable(FieldElement(p.field(), -1L)).inflate(2);
}

Polynomial substitute_neg_t(const Polynomial& p) {
  return p.scale_variable(FieldElement(p.field(), -1L));
}

UnitNormalForm unit_normalize(const Polynomial& p) {
  if (p.is_zero()) throw ArithmeticError("unit normalization of the zero polynomial");
  UnitNormalForm out{p, p.valuation(), 1};
  if (out.shift > 0) {
    std::vector<FieldElement> c(p.coeffs().begin() + out.shift, p.coeffs().end());
    out.poly = Polynomial(p.field(), std::move(c));
  }
  for (const auto& x : out.poly.coeffs()[0].coords()) {
    if (x == 0) continue;
    if (x < 0) {
      out.sign = -1;
      out.poly = -out.poly;
    }
    break;
  }
  return out;
}

bool equal_up_to_unit(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return unit_normalize(a).poly == unit_normalize(b).poly;
}

}  // namespace pgate
