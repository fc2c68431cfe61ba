#include "weylhom/intpoly.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace weylhom {

namespace {

Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(Int c, int k) {
  if (k < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
  IntPoly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Int(0));
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

Int IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Int(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Int& IntPoly::leading() const { return coeffs_.back(); }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> out(coeffs_);
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("IntPoly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Int> out(static_cast<std::size_t>(k), Int(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out));
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& c : coeffs_) g = int_gcd(g, c);
  return g;
}

Int IntPoly::eval_at_one() const {
  Int s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("IntPoly::div_exact: division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree())
    throw std::invalid_argument("IntPoly::div_exact: not divisible (degree)");
  std::vector<Int> rem = a.coeffs_;
  std::vector<Int> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Int(0));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Int top = rem[static_cast<std::size_t>(k + b.degree())];
    if (top == 0) continue;
    if (top % b.leading() != 0)
      throw std::invalid_argument("IntPoly::div_exact: not divisible (leading)");
    Int f = top / b.leading();
    quo[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= b.degree(); ++i) {
      rem[static_cast<std::size_t>(k + i)] -= f * b.coeffs_[static_cast<std::size_t>(i)];
    }
  }
  for (const auto& c : rem) {
    if (c != 0) throw std::invalid_argument("IntPoly::div_exact: nonzero remainder");
  }
  return IntPoly(std::move(quo));
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero).
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  int steps = a.degree() - b.degree() + 1;
  for (int s = 0; s < steps && !r.is_zero() && r.degree() >= b.degree(); ++s) {
    int k = r.degree() - b.degree();
    // r <- lead(b) * r - lead(r) * q^k * b
    IntPoly scaled_r = IntPoly::constant(b.leading()) * r;
    IntPoly shift_b = IntPoly::monomial(r.leading(), k) * b;
    r = scaled_r - shift_b;
  }
  return r;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int c = p.content();
  IntPoly prim = IntPoly::div_exact(p, IntPoly::constant(c));
  if (prim.leading() < 0) prim = -prim;
  return prim;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  Int cont = int_gcd(a.content(), b.content());
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(pseudo_rem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return IntPoly::constant(cont) * x;
}

std::string IntPoly::to_string(const std::string& var) const {
  std::vector<Rational> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.emplace_back(c);
  return rational_poly_to_string(coeffs, var);
}

IntPoly cyclotomic_polynomial(int e) {
  if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: e must be >= 1");
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  for (int d = 1; d <= e; ++d) {
    if (e % d != 0 || memo.count(d)) continue;
    // x^d - 1 divided by the Phi_{d'} for proper divisors d' of d.
    std::vector<Int> xs(static_cast<std::size_t>(d) + 1, Int(0));
    xs[0] = -1;
    xs.back() = 1;
    IntPoly phi = IntPoly(std::move(xs));
    for (int dd = 1; dd < d; ++dd) {
      if (d % dd == 0) phi = IntPoly::div_exact(phi, memo.at(dd));
    }
    memo.emplace(d, std::move(phi));
  }
  return memo.at(e);
}

IntPoly gauss_polynomial(long long m, long long j) {
  if (j < 0 || m < 0 || j > m) return IntPoly();
  if (m > 4096) throw std::invalid_argument("gauss_polynomial: m too large");
  static std::mutex mu;
  // rows[m][j] for j <= m
  static std::vector<std::vector<IntPoly>> rows = {{IntPoly::constant(1)}};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long long>(rows.size()) <= m) {
    const auto& prev = rows.back();
    long long mm = static_cast<long long>(rows.size());
    std::vector<IntPoly> row(static_cast<std::size_t>(mm) + 1);
    row[0] = IntPoly::constant(1);
    row[static_cast<std::size_t>(mm)] = IntPoly::constant(1);
    for (long long jj = 1; jj < mm; ++jj) {
      row[static_cast<std::size_t>(jj)] =
          prev[static_cast<std::size_t>(jj - 1)] +
          prev[static_cast<std::size_t>(jj)].shifted(static_cast<int>(jj));
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
}

IntPoly quantum_int_polynomial(long long m) {
  if (m < 0) throw std::invalid_argument("quantum_int_polynomial: m must be >= 0");
  return IntPoly(std::vector<Int>(static_cast<std::size_t>(m), Int(1)));
}

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  IntPoly g = IntPoly::gcd(num_, den_);
  num_ = IntPoly::div_exact(num_, g);
  den_ = IntPoly::div_exact(den_, g);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::q_power(long long k) {
  if (k > (1 << 20) || k < -(1 << 20))
    throw std::invalid_argument("RatFunc::q_power: exponent out of range");
  if (k >= 0) return from_poly(IntPoly::monomial(Int(1), static_cast<int>(k)));
  return RatFunc(IntPoly::constant(1), IntPoly::monomial(Int(1), static_cast<int>(-k)));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

bool RatFunc::denominator_is_monomial(long long* k, Int* c) const {
  for (int i = 0; i < den_.degree(); ++i) {
    if (den_.coeff(i) != 0) return false;
  }
  if (k) *k = den_.degree();
  if (c) *c = den_.leading();
  return true;
}

std::string RatFunc::to_string() const {
  if (den_ == IntPoly::constant(1)) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
  return os.str();
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  Int digits() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("polynomial parse: expected digits in '" + s + "'");
    return Int(s.substr(start, i - start));
  }
};

}  // namespace

std::vector<Rational> parse_rational_poly(const std::string& text, const std::string& var) {
  if (var.size() != 1) throw std::invalid_argument("parse_rational_poly: variable must be a single character");
  const char v = var[0];
  Scanner sc{text};
  std::vector<Rational> coeffs;
  auto bump = [&coeffs](long long k, const Rational& c) {
    if (k < 0 || k > (1 << 20)) throw std::invalid_argument("polynomial parse: exponent out of range");
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(k)] += c;
  };
  if (sc.done()) throw std::invalid_argument("polynomial parse: empty input");
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.eat('+')) {
      sign = 1;
    } else if (sc.eat('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("polynomial parse: expected '+' or '-' in '" + text + "'");
    }
    while (sc.eat('-')) sign = -sign;  // tolerate "+-" chains after explicit sign
    first = false;
    Rational coef(1);
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      Int num = sc.digits();
      Int den(1);
      if (sc.eat('/')) den = sc.digits();
      if (den == 0) throw std::invalid_argument("polynomial parse: zero denominator");
      coef = Rational(num, den);
      saw_number = true;
    }
    long long exp = 0;
    bool saw_var = false;
    if (saw_number) sc.eat('*');
    if (sc.peek() == v) {
      sc.eat(v);
      saw_var = true;
      exp = 1;
      if (sc.eat('^')) exp = sc.digits().convert_to<long long>();
    }
    if (!saw_number && !saw_var)
      throw std::invalid_argument("polynomial parse: empty term in '" + text + "'");
    bump(exp, sign < 0 ? Rational(-coef) : coef);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::string rational_poly_to_string(const std::vector<Rational>& coeffs, const std::string& var) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg >= 0 && coeffs[static_cast<std::size_t>(deg)] == 0) --deg;
  if (deg < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = deg; k >= 0; --k) {
    const Rational& c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational a = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    const bool unit = (a == 1);
    if (k == 0) {
      os << a;
    } else {
      if (!unit) os << a << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace weylhom
