#pragma once

#include "weylhom/homelement.hpp"
#include "weylhom/intpoly.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylhom {

// The straightening budget (number of relation expansions) was exhausted.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal guarantee failed (singular straightening system, coefficient
// that cannot be specialized, ...).  Never a silent wrong answer.
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A coefficient in closed form: sign * q^{q_exp} * prod gauss(m_i, j_i).
// Evaluates either into the working field or into Q(q).
struct CoeffExpr {
  int sign = 1;
  long long q_exp = 0;
  std::vector<std::pair<long long, long long>> gauss_factors;

  Scalar eval(const FieldPtr& field) const;
  RatFunc eval_generic() const;
};

struct ExpansionTerm {
  Tableau tableau;
  CoeffExpr coeff;
};

// One-box-value moves: rewrites Theta_T after converting t entries equal to
// d+1 into d, summed over all row distributions s with sum s_j = t,
// s_j <= T^{d+1}_j:
//
//   prod_j q^{T^d_{>j} s_j} gauss(T^d_j + s_j, T^d_j) Theta_S(s).
//
// Requires 1 <= d < num_values and 1 <= t <= (number of entries d+1).
std::vector<ExpansionTerm> expand_move(const Tableau& tab, int d, int t);

// The straightening relation between rows r, r+1 at value d, with
// G = S^d_{r+1}.  For G = 0 this is the identity rewrite {T |-> 1}; for G > 0
//
//   Theta_S = (-1)^G q^{-G(G+1)/2 - G S^{<d}_{r+1}}
//             sum_{g} q^{g_1 + ... + g_{d-1}} prod_i q^{g_i S^{<i}_{r+1}}
//                     gauss(S^i_{r+1} + g_i, g_i) Theta_{U_g},
//
// where g runs over tuples with g_d = 0, sum g_i = G, g_i <= S^i_r, and U_g
// moves all d's of row r+1 up to row r and g_i entries of value i from row r
// down to row r+1.  An empty sum means Theta_S = 0.
std::vector<ExpansionTerm> expand_straighten(const Tableau& tab, int r, int d);

// Applies the type-shift operator to every term: the image of H under
// converting t entries d+1 into d (no straightening).
HomElement constraint_image(const HomElement& h, int d, int t);

// The right-hand side of the straightening relation at (r, d), evaluated in
// the field, as an element of the same shape and type.
HomElement straighten_once(const Tableau& tab, int r, int d, const FieldPtr& field);

namespace detail {
struct StraightenCacheAccess;
}

// Memoized straightening results, shareable across calls and threads.  Holds
// field-level expansions per field and field-independent expansions over
// Q(q) used to resolve cyclic rewriting.
class StraightenCache {
 public:
  StraightenCache() = default;
  StraightenCache(const StraightenCache&) = delete;
  StraightenCache& operator=(const StraightenCache&) = delete;

 private:
  friend struct detail::StraightenCacheAccess;
  std::mutex mutex_;
  std::map<Tableau, std::map<Tableau, RatFunc>> generic_;
  std::map<std::string, std::map<Tableau, std::map<Tableau, Scalar>>> by_field_;
};

struct NormalizeOptions {
  // Cap on the number of straightening-relation expansions per top-level call.
  std::uint64_t budget = 1000000;
  ViolationScan strategy = ViolationScan::top_smallest;
  // Optional shared cache; a call-local one is used when null.
  StraightenCache* cache = nullptr;
};

// Rewrites H as a combination of semistandard tableaux.  Cyclic rewriting is
// resolved exactly by solving the straightening relations over Q(q) and
// specializing, so the result is strategy-independent.
HomElement normalize(const HomElement& h, const NormalizeOptions& opts = {});

bool is_zero_hom(const HomElement& h, const NormalizeOptions& opts = {});

struct ConstraintColumn {
  int d = 0;
  int t = 0;
  Tableau target;
};

// Rows are indexed by T_0(lambda, mu) and columns by (d, t, S) with S running
// over T_0(lambda, nu(d,t)), both in enumeration order; (d, t) pairs whose
// target set is empty contribute no columns.  entries[i][k] is the
// coefficient of the column's target in the normalized image of row i.
struct ConstraintMatrix {
  std::vector<Tableau> rows;
  std::vector<ConstraintColumn> cols;
  std::vector<std::vector<Scalar>> entries;
};

ConstraintMatrix build_constraint_matrix(const Partition& mu, const Partition& lambda,
                                         const FieldPtr& field,
                                         const NormalizeOptions& opts = {});

// Basis of the right nullspace {x in F^ncols : A x = 0} of the given
// row-major matrix, via exact Gauss-Jordan elimination with first-nonzero
// pivoting.  One basis vector per free column, in ascending column order.
// The column count is explicit so that a constraint-free system (no rows)
// still knows its ambient dimension.
std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& a,
                                           std::size_t ncols, const FieldPtr& field);

struct KernelResult {
  long long dimension = 0;
  std::vector<Tableau> index;               // T_0(lambda, mu) in enumeration order
  std::vector<std::vector<Scalar>> basis;   // coefficient vectors over `index`
};

// The space of solutions of all constraints: combinations sum x_T Theta_T
// whose every shift image normalizes to zero.
KernelResult hom_space(const Partition& mu, const Partition& lambda, const FieldPtr& field,
                       const NormalizeOptions& opts = {});

long long hom_dim(const Partition& mu, const Partition& lambda, const FieldPtr& field,
                  const NormalizeOptions& opts = {});

struct MembershipCheck {
  int d = 0;
  int t = 0;
  bool vanishes = false;
  std::size_t residual_terms = 0;
};

struct MembershipReport {
  std::vector<MembershipCheck> checks;
  bool member = true;
};

// Checks every constraint image of H (including those with no semistandard
// targets).  H must be supported on T_0(lambda, mu).
MembershipReport verify_membership(const HomElement& h, const Partition& mu,
                                   const Partition& lambda,
                                   const NormalizeOptions& opts = {});

}  // namespace weylhom
