#include "weylhom/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace weylhom {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (k) {
    if (k & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    k >>= 1;
  }
  return r;
}

// Trimmed rational polynomials (lowest degree first) for field inversion.
using RPoly = std::vector<Rational>;

void rtrim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rsub(const RPoly& a, const RPoly& b) {
  RPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  rtrim(out);
  return out;
}

RPoly rmul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  rtrim(out);
  return out;
}

// a = q*b + r with deg r < deg b (b nonzero).
std::pair<RPoly, RPoly> rdivmod(RPoly a, const RPoly& b) {
  RPoly quo;
  if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t k = a.size() - b.size();
    quo[k] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
    rtrim(a);
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) rtrim(a);
  }
  rtrim(quo);
  return {std::move(quo), std::move(a)};
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p, std::uint64_t q) {
  FieldSpec s;
  s.kind = Kind::prime;
  s.p = p;
  s.q = q;
  return s;
}

FieldSpec FieldSpec::cyclotomic(int e) {
  FieldSpec s;
  s.kind = Kind::cyclotomic;
  s.e = e;
  return s;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  auto fail = [&text]() -> FieldSpec {
    throw std::invalid_argument(
        "field spec '" + text + "' not understood; expected 'p=<prime>,q=<int>' or 'cyclotomic,e=<int>'");
  };
  auto strip_key = [&fail](const std::string& part, const std::string& key) -> std::uint64_t {
    if (part.rfind(key, 0) != 0) fail();
    std::string digits = part.substr(key.size());
    if (digits.empty() || digits.size() > 18 ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      fail();
    }
    return std::stoull(digits);
  };
  if (t.rfind("cyclotomic,", 0) == 0) {
    std::uint64_t e = strip_key(t.substr(std::string("cyclotomic,").size()), "e=");
    if (e < 2) throw std::invalid_argument("field spec: e must be at least 2");
    if (e > 1000000) throw std::invalid_argument("field spec: e too large");
    return cyclotomic(static_cast<int>(e));
  }
  std::string body = t;
  if (body.rfind("prime,", 0) == 0) body = body.substr(6);
  std::size_t comma = body.find(',');
  if (comma == std::string::npos) fail();
  std::uint64_t p = strip_key(body.substr(0, comma), "p=");
  std::uint64_t q = strip_key(body.substr(comma + 1), "q=");
  if (!is_prime_u64(p)) throw std::invalid_argument("field spec: p must be prime");
  if (q == 0 || q >= p) throw std::invalid_argument("field spec: q must satisfy 0 < q < p");
  return prime(p, q);
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  if (kind == Kind::prime) {
    os << "p=" << p << ",q=" << q;
  } else {
    os << "cyclotomic,e=" << e;
  }
  return os.str();
}

Field::Field(const FieldSpec& spec) : spec_(spec) {
  if (spec_.kind == FieldSpec::Kind::prime) {
    if (!is_prime_u64(spec_.p)) throw std::invalid_argument("field: p must be prime");
    if (spec_.p >= (1ull << 62)) throw std::invalid_argument("field: p too large");
    if (spec_.q == 0 || spec_.q >= spec_.p)
      throw std::invalid_argument("field: q must satisfy 0 < q < p");
    p_ = spec_.p;
    qres_ = spec_.q;
    // Quantum characteristic: least f >= 2 with [f] = 1 + q + ... + q^{f-1} = 0.
    std::uint64_t s = 1 % p_;
    e_ = 0;
    for (std::uint64_t f = 2; f <= p_; ++f) {
      s = (mulmod(s, qres_, p_) + 1) % p_;
      if (s == 0) {
        e_ = static_cast<int>(f);
        break;
      }
    }
    if (e_ == 0) throw std::logic_error("field: quantum characteristic search failed");
  } else {
    if (spec_.e < 2) throw std::invalid_argument("field: e must be >= 2");
    if (spec_.e > 100000) throw std::invalid_argument("field: e too large");
    e_ = spec_.e;
    IntPoly phi = cyclotomic_polynomial(e_);
    deg_ = phi.degree();
    phi_.reserve(static_cast<std::size_t>(deg_) + 1);
    for (int i = 0; i <= deg_; ++i) phi_.emplace_back(phi.coeff(i));
  }
}

FieldPtr Field::make(const FieldSpec& spec) { return FieldPtr(new Field(spec)); }

Scalar Field::wrap(std::uint64_t r) const {
  Scalar s;
  s.field_ = shared_from_this();
  s.residue_ = r % p_;
  return s;
}

Scalar Field::wrap(std::vector<Rational> c) const {
  Scalar s;
  s.field_ = shared_from_this();
  c.resize(static_cast<std::size_t>(deg_), Rational(0));
  s.coords_ = std::move(c);
  return s;
}

void Field::check(const Scalar& a) const {
  if (!a.valid()) throw std::invalid_argument("scalar: detached value used in arithmetic");
  if (!(a.field_->spec_ == spec_)) throw std::invalid_argument("scalar: mixed fields in arithmetic");
}

void Field::reduce_coords(std::vector<Rational>& c) const {
  const std::size_t d = static_cast<std::size_t>(deg_);
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    Rational t = c[i];
    c[i] = 0;
    for (std::size_t j = 0; j < d; ++j) c[i - d + j] -= t * phi_[j];
  }
  c.resize(d, Rational(0));
}

Scalar Field::zero() const {
  if (is_prime_backend()) return wrap(0);
  return wrap(std::vector<Rational>());
}

Scalar Field::one() const { return from_integer(1); }

Scalar Field::from_integer(const Int& n) const {
  if (is_prime_backend()) {
    Int r = n % Int(p_);
    if (r < 0) r += Int(p_);
    return wrap(r.convert_to<std::uint64_t>());
  }
  std::vector<Rational> c(1, Rational(n));
  return wrap(std::move(c));
}

Scalar Field::from_rational(const Rational& r) const {
  if (!is_prime_backend()) return wrap(std::vector<Rational>(1, r));
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int dm = den % Int(p_);
  if (dm == 0)
    throw SpecializationError("rational " + r.str() + " has no image in F_" + std::to_string(p_));
  Scalar n = from_integer(num);
  Scalar d = from_integer(dm);
  return mul(n, inv(d));
}

Scalar Field::q_power(long long k) const {
  long long m = ((k % e_) + e_) % e_;
  if (is_prime_backend()) return wrap(powmod(qres_, static_cast<std::uint64_t>(m), p_));
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1, Rational(0));
  c.back() = 1;
  reduce_coords(c);
  return wrap(std::move(c));
}

Scalar Field::quantum_integer(long long m) const {
  if (m < 0) throw std::invalid_argument("quantum_integer: m must be >= 0");
  return eval(quantum_int_polynomial(m));
}

Scalar Field::gauss(long long m, long long j) const {
  if (j < 0 || m < 0 || j > m) return zero();
  const auto key = std::make_pair(m, j);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = gauss_memo_.find(key);
    if (it != gauss_memo_.end()) return it->second;
  }
  Scalar v = eval(gauss_polynomial(m, j));
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return gauss_memo_.emplace(key, std::move(v)).first->second;
}

Scalar Field::eval(const IntPoly& p) const {
  if (is_prime_backend()) {
    std::uint64_t acc = 0;
    for (int k = p.degree(); k >= 0; --k) {
      acc = mulmod(acc, qres_, p_);
      Int c = p.coeff(k) % Int(p_);
      if (c < 0) c += Int(p_);
      acc = (acc + c.convert_to<std::uint64_t>()) % p_;
    }
    return wrap(acc);
  }
  const std::size_t d = static_cast<std::size_t>(deg_);
  std::vector<Rational> acc(d, Rational(0));
  for (int k = p.degree(); k >= 0; --k) {
    // acc <- acc * q + c_k, with the single spill coefficient reduced by Phi_e.
    Rational top = acc.empty() ? Rational(0) : acc.back();
    for (std::size_t i = d; i-- > 1;) acc[i] = acc[i - 1];
    if (!acc.empty()) acc[0] = Rational(0);
    if (top != 0) {
      for (std::size_t j = 0; j < d; ++j) acc[j] -= top * phi_[j];
    }
    if (!acc.empty()) acc[0] += Rational(p.coeff(k));
  }
  return wrap(std::move(acc));
}

Scalar Field::eval(const RatFunc& f) const {
  Scalar n = eval(f.num());
  Scalar d = eval(f.den());
  if (d.is_zero())
    throw SpecializationError("denominator " + f.den().to_string() + " vanishes in " + to_string());
  return mul(n, inv(d));
}

Scalar Field::parse_scalar(const std::string& text) const {
  std::vector<Rational> coeffs = parse_rational_poly(text);
  Scalar acc = zero();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = mul(acc, q_power(1));
    if (coeffs[k] != 0) acc = add(acc, from_rational(coeffs[k]));
  }
  return acc;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (is_prime_backend()) return wrap((a.residue_ + b.residue_) % p_);
  std::vector<Rational> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return wrap(std::move(c));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (is_prime_backend()) return wrap(mulmod(a.residue_, b.residue_, p_));
  const std::size_t d = static_cast<std::size_t>(deg_);
  std::vector<Rational> c(2 * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coords_[j] == 0) continue;
      c[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  reduce_coords(c);
  return wrap(std::move(c));
}

Scalar Field::neg(const Scalar& a) const {
  check(a);
  if (is_prime_backend()) return wrap(a.residue_ == 0 ? 0 : p_ - a.residue_);
  std::vector<Rational> c(a.coords_);
  for (auto& x : c) x = -x;
  return wrap(std::move(c));
}

Scalar Field::inv(const Scalar& a) const {
  check(a);
  if (a.is_zero()) throw std::invalid_argument("scalar: inverse of zero");
  if (is_prime_backend()) return wrap(powmod(a.residue_, p_ - 2, p_));
  // Extended Euclid in Q[x] against Phi_e: s*a + t*Phi = g with g a nonzero
  // constant (Phi_e is irreducible over Q), so a^{-1} = s/g.
  RPoly r0 = phi_;
  RPoly r1 = a.coords_;
  rtrim(r1);
  RPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [quo, rem] = rdivmod(r0, r1);
    RPoly s2 = rsub(s0, rmul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("scalar: inversion failed (gcd not constant)");
  const Rational g = r0[0];
  std::vector<Rational> out(s0);
  for (auto& x : out) x /= g;
  out.resize(static_cast<std::size_t>(deg_), Rational(0));
  return wrap(std::move(out));
}

const std::vector<Rational>& Field::coords(const Scalar& a) const {
  check(a);
  if (is_prime_backend()) throw std::invalid_argument("scalar: coords on prime backend");
  return a.coords_;
}

std::uint64_t Field::residue(const Scalar& a) const {
  check(a);
  if (!is_prime_backend()) throw std::invalid_argument("scalar: residue on cyclotomic backend");
  return a.residue_;
}

bool Scalar::is_zero() const {
  if (!valid()) throw std::invalid_argument("scalar: detached value queried");
  if (field_->is_prime_backend()) return residue_ == 0;
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

bool Scalar::is_one() const { return valid() && *this == field_->one(); }

std::string Scalar::to_string() const {
  if (!valid()) throw std::invalid_argument("scalar: detached value printed");
  if (field_->is_prime_backend()) return std::to_string(residue_);
  return rational_poly_to_string(coords_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.valid()) throw std::invalid_argument("scalar: detached value used in arithmetic");
  return a.field_->add(a, b);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (!a.valid()) throw std::invalid_argument("scalar: detached value used in arithmetic");
  return a.field_->sub(a, b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.valid()) throw std::invalid_argument("scalar: detached value used in arithmetic");
  return a.field_->mul(a, b);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (!a.valid()) throw std::invalid_argument("scalar: detached value used in arithmetic");
  return a.field_->mul(a, a.field_->inv(b));
}

Scalar Scalar::operator-() const {
  if (!valid()) throw std::invalid_argument("scalar: detached value used in arithmetic");
  return field_->neg(*this);
}

Scalar Scalar::inverse() const {
  if (!valid()) throw std::invalid_argument("scalar: detached value used in arithmetic");
  return field_->inv(*this);
}

bool Scalar::operator==(const Scalar& other) const {
  if (!valid() || !other.valid()) throw std::invalid_argument("scalar: detached value compared");
  if (!(field_->spec() == other.field_->spec()))
    throw std::invalid_argument("scalar: mixed fields compared");
  return residue_ == other.residue_ && coords_ == other.coords_;
}

bool Scalar::operator<(const Scalar& other) const {
  if (!valid() || !other.valid()) throw std::invalid_argument("scalar: detached value compared");
  if (residue_ != other.residue_) return residue_ < other.residue_;
  return std::lexicographical_compare(coords_.begin(), coords_.end(), other.coords_.begin(),
                                      other.coords_.end());
}

}  // namespace weylhom
