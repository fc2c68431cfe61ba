#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace weylhom {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense polynomial in q with integer coefficients, lowest degree first.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, int k);  // c * q^k

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& leading() const;  // undefined on zero

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const IntPoly& other) const { return !(*this == other); }

  IntPoly shifted(int k) const;  // * q^k, k >= 0

  Int content() const;  // gcd of coefficients (>= 0); 0 for the zero polynomial
  Int eval_at_one() const;

  // Exact division; throws std::invalid_argument when the division is not exact.
  static IntPoly div_exact(const IntPoly& a, const IntPoly& b);
  // Polynomial gcd (content * primitive part), positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

// Phi_e for e >= 1 (memoized, thread-safe).
IntPoly cyclotomic_polynomial(int e);

// Gaussian binomial as a polynomial in q, via the Pascal recurrence
// gauss(m+1, j) = gauss(m, j-1) + q^j * gauss(m, j).
// Zero polynomial unless m >= j >= 0.  Memoized, thread-safe.
IntPoly gauss_polynomial(long long m, long long j);

// [m] = 1 + q + ... + q^{m-1}, m >= 0.
IntPoly quantum_int_polynomial(long long m);

// Rational function num/den over Z[q], fully reduced (coprime including
// content), denominator nonzero with positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : num_(), den_(IntPoly::constant(1)) {}
  RatFunc(IntPoly num, IntPoly den);

  static RatFunc from_poly(IntPoly p) { return RatFunc(std::move(p), IntPoly::constant(1)); }
  static RatFunc integer(long long v) { return from_poly(IntPoly::constant(Int(v))); }
  static RatFunc q_power(long long k);  // q^k, any sign of k

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws on /0
  RatFunc operator-() const;
  bool operator==(const RatFunc& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const RatFunc& other) const { return !(*this == other); }

  // True when den = c * q^k; fills k and c when requested.
  bool denominator_is_monomial(long long* k = nullptr, Int* c = nullptr) const;

  std::string to_string() const;

 private:
  void reduce();
  IntPoly num_;
  IntPoly den_;
};

// Parses "2*q^3 - q/2 + 1"-style polynomials with rational coefficients,
// lowest degree first in the result.  Throws std::invalid_argument.
std::vector<Rational> parse_rational_poly(const std::string& text,
                                          const std::string& var = "q");

// Pretty-printer shared by Z[q] and field-element display, highest degree first.
std::string rational_poly_to_string(const std::vector<Rational>& coeffs,
                                    const std::string& var = "q");

}  // namespace weylhom
