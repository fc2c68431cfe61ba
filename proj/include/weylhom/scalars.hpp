#pragma once

#include "weylhom/intpoly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylhom {

// Raised when a generic (rational-function) quantity cannot be specialized
// to the working field, e.g. a denominator that evaluates to zero.
struct SpecializationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  enum class Kind { prime, cyclotomic };
  Kind kind = Kind::cyclotomic;
  std::uint64_t p = 0;  // prime backend: modulus
  std::uint64_t q = 0;  // prime backend: image of q, 0 < q < p
  int e = 0;            // cyclotomic backend: e >= 2

  static FieldSpec prime(std::uint64_t p, std::uint64_t q);
  static FieldSpec cyclotomic(int e);
  // "p=7,q=2" or "cyclotomic,e=3" (spaces allowed around tokens).
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p && a.q == b.q && a.e == b.e;
  }
};

bool is_prime_u64(std::uint64_t n);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element of the working field; carries a handle to its field.  Stored as
// a residue (prime backend) or as coordinates in the power basis
// 1, q, ..., q^{deg-1} of Q[q]/Phi_e (cyclotomic backend).
class Scalar {
 public:
  Scalar() = default;  // detached; any arithmetic on it throws
  bool valid() const { return field_ != nullptr; }
  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }
  // Total order for use as a map key; meaningful only within one field.
  bool operator<(const Scalar& other) const;

 private:
  friend class Field;
  FieldPtr field_;
  std::uint64_t residue_ = 0;
  std::vector<Rational> coords_;
};

// The coefficient field together with its distinguished element q.  Either
// F_p with q an explicit residue, or Q[x]/Phi_e(x) with q = x.  Immutable
// after construction; shared by the scalars it creates.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr make(const FieldSpec& spec);
  static FieldPtr make(const std::string& spec) { return make(FieldSpec::parse(spec)); }

  const FieldSpec& spec() const { return spec_; }
  std::string to_string() const { return spec_.to_string(); }
  // Quantum characteristic: least f >= 2 with [f] = 0.
  int quantum_char() const { return e_; }
  bool is_prime_backend() const { return spec_.kind == FieldSpec::Kind::prime; }

  Scalar zero() const;
  Scalar one() const;
  Scalar q() const { return q_power(1); }
  Scalar from_integer(const Int& n) const;
  Scalar from_integer(long long n) const { return from_integer(Int(n)); }
  Scalar from_rational(const Rational& r) const;
  Scalar q_power(long long k) const;  // q^k, any sign
  Scalar quantum_integer(long long m) const;
  Scalar gauss(long long m, long long j) const;  // memoized per field
  Scalar eval(const IntPoly& p) const;
  Scalar eval(const RatFunc& f) const;  // throws SpecializationError if den |-> 0
  Scalar parse_scalar(const std::string& text) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  // Cyclotomic backend only: the coordinate vector (length = deg Phi_e).
  const std::vector<Rational>& coords(const Scalar& a) const;
  // Prime backend only: the residue.
  std::uint64_t residue(const Scalar& a) const;

 private:
  explicit Field(const FieldSpec& spec);
  Scalar wrap(std::uint64_t r) const;
  Scalar wrap(std::vector<Rational> c) const;
  void check(const Scalar& a) const;
  void reduce_coords(std::vector<Rational>& c) const;

  FieldSpec spec_;
  int e_ = 0;  // quantum characteristic
  // prime backend
  std::uint64_t p_ = 0;
  std::uint64_t qres_ = 0;
  // cyclotomic backend
  int deg_ = 0;
  std::vector<Rational> phi_;  // monic Phi_e, lowest degree first, size deg_+1

  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<long long, long long>, Scalar> gauss_memo_;
};

}  // namespace weylhom
