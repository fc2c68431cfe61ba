#include "weylhom/homcalc.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace weylhom {

namespace detail {

struct StraightenCacheAccess {
  static std::optional<std::map<Tableau, RatFunc>> find_generic(StraightenCache& c,
                                                                const Tableau& t) {
    std::lock_guard<std::mutex> lock(c.mutex_);
    auto it = c.generic_.find(t);
    if (it == c.generic_.end()) return std::nullopt;
    return it->second;
  }
  static void store_generic(StraightenCache& c, const Tableau& t,
                            std::map<Tableau, RatFunc> exp) {
    std::lock_guard<std::mutex> lock(c.mutex_);
    c.generic_[t] = std::move(exp);
  }
  static std::optional<std::map<Tableau, Scalar>> find_field(StraightenCache& c,
                                                             const std::string& key,
                                                             const Tableau& t) {
    std::lock_guard<std::mutex> lock(c.mutex_);
    auto fit = c.by_field_.find(key);
    if (fit == c.by_field_.end()) return std::nullopt;
    auto it = fit->second.find(t);
    if (it == fit->second.end()) return std::nullopt;
    return it->second;
  }
  static void store_field(StraightenCache& c, const std::string& key, const Tableau& t,
                          std::map<Tableau, Scalar> exp) {
    std::lock_guard<std::mutex> lock(c.mutex_);
    c.by_field_[key][t] = std::move(exp);
  }
};

}  // namespace detail

using detail::StraightenCacheAccess;

Scalar CoeffExpr::eval(const FieldPtr& field) const {
  Scalar v = field->q_power(q_exp);
  for (const auto& [m, j] : gauss_factors) v = v * field->gauss(m, j);
  if (sign < 0) v = -v;
  return v;
}

RatFunc CoeffExpr::eval_generic() const {
  RatFunc v = RatFunc::q_power(q_exp);
  for (const auto& [m, j] : gauss_factors) v = v * RatFunc::from_poly(gauss_polynomial(m, j));
  if (sign < 0) v = -v;
  return v;
}

std::vector<ExpansionTerm> expand_move(const Tableau& tab, int d, int t) {
  const int values = tab.num_values();
  const int rows = tab.num_rows();
  if (d < 1 || d >= values) throw std::invalid_argument("expand_move: d out of range");
  int avail = 0;
  for (int j = 1; j <= rows; ++j) avail += tab.count(d + 1, j);
  if (t < 1 || t > avail) throw std::invalid_argument("expand_move: t out of range");

  std::vector<ExpansionTerm> out;
  std::vector<int> s(static_cast<std::size_t>(rows), 0);
  std::function<void(int, int)> choose = [&](int j, int left) {
    if (j > rows) {
      if (left != 0) return;
      auto counts = tab.counts();
      CoeffExpr coeff;
      for (int jj = 1; jj <= rows; ++jj) {
        int sj = s[static_cast<std::size_t>(jj - 1)];
        counts[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(jj - 1)] += sj;
        counts[static_cast<std::size_t>(d)][static_cast<std::size_t>(jj - 1)] -= sj;
        if (sj > 0) {
          coeff.q_exp += static_cast<long long>(tab.count_in_rows_below(d, jj)) * sj;
          coeff.gauss_factors.emplace_back(tab.count(d, jj) + sj, tab.count(d, jj));
        }
      }
      out.push_back(ExpansionTerm{Tableau(std::move(counts)), std::move(coeff)});
      return;
    }
    int cap = tab.count(d + 1, j);
    for (int sj = 0; sj <= std::min(cap, left); ++sj) {
      s[static_cast<std::size_t>(j - 1)] = sj;
      choose(j + 1, left - sj);
      s[static_cast<std::size_t>(j - 1)] = 0;
    }
  };
  choose(1, t);
  return out;
}

std::vector<ExpansionTerm> expand_straighten(const Tableau& tab, int r, int d) {
  const int values = tab.num_values();
  const int rows = tab.num_rows();
  if (r < 1 || r >= rows) throw std::invalid_argument("expand_straighten: r out of range");
  if (d < 1 || d > values) throw std::invalid_argument("expand_straighten: d out of range");
  const int g_total = tab.count(d, r + 1);
  if (g_total == 0) {
    return {ExpansionTerm{tab, CoeffExpr{}}};
  }

  CoeffExpr prefix;
  prefix.sign = (g_total % 2 == 0) ? 1 : -1;
  prefix.q_exp = -static_cast<long long>(g_total) * (g_total + 1) / 2 -
                 static_cast<long long>(g_total) * tab.count_less_in_row(d, r + 1);

  std::vector<ExpansionTerm> out;
  std::vector<int> g(static_cast<std::size_t>(values), 0);
  std::function<void(int, int)> choose = [&](int i, int left) {
    if (i > values) {
      if (left != 0) return;
      auto counts = tab.counts();
      CoeffExpr coeff = prefix;
      counts[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(r - 1)] += g_total;
      counts[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(r)] -= g_total;
      for (int ii = 1; ii <= values; ++ii) {
        int gi = g[static_cast<std::size_t>(ii - 1)];
        if (gi == 0) continue;
        counts[static_cast<std::size_t>(ii - 1)][static_cast<std::size_t>(r - 1)] -= gi;
        counts[static_cast<std::size_t>(ii - 1)][static_cast<std::size_t>(r)] += gi;
        if (ii < d) coeff.q_exp += gi;
        coeff.q_exp += static_cast<long long>(gi) * tab.count_less_in_row(ii, r + 1);
        coeff.gauss_factors.emplace_back(tab.count(ii, r + 1) + gi, gi);
      }
      out.push_back(ExpansionTerm{Tableau(std::move(counts)), std::move(coeff)});
      return;
    }
    if (i == d) {
      choose(i + 1, left);
      return;
    }
    int cap = tab.count(i, r);
    for (int gi = 0; gi <= std::min(cap, left); ++gi) {
      g[static_cast<std::size_t>(i - 1)] = gi;
      choose(i + 1, left - gi);
      g[static_cast<std::size_t>(i - 1)] = 0;
    }
  };
  choose(1, g_total);
  return out;
}

HomElement constraint_image(const HomElement& h, int d, int t) {
  Composition nu = shifted_type(h.type(), d, t);
  HomElement out(h.shape(), nu, h.field());
  for (const auto& [tab, c] : h.terms()) {
    for (const auto& term : expand_move(tab, d, t)) {
      out.add_term(term.tableau, c * term.coeff.eval(h.field()));
    }
  }
  return out;
}

HomElement straighten_once(const Tableau& tab, int r, int d, const FieldPtr& field) {
  HomElement out(tab.shape(), tab.type(), field);
  for (const auto& term : expand_straighten(tab, r, d)) {
    out.add_term(term.tableau, term.coeff.eval(field));
  }
  return out;
}

namespace {

void add_into(std::map<Tableau, Scalar>& m, const Tableau& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.emplace(t, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void add_into(std::map<Tableau, RatFunc>& m, const Tableau& t, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.emplace(t, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// Tarjan's algorithm, iterative.  Components are emitted such that every
// successor component of an emitted component was emitted before it.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> onstack(n, false);
  std::vector<std::vector<int>> sccs;
  int counter = 0;
  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int s = 0; s < n; ++s) {
    if (index[s] != -1) continue;
    std::vector<Frame> frames{{s, 0}};
    index[s] = low[s] = counter++;
    stack.push_back(s);
    onstack[s] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[static_cast<std::size_t>(f.v)].size()) {
        int w = adj[static_cast<std::size_t>(f.v)][f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          onstack[w] = true;
          frames.push_back({w, 0});
        } else if (onstack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            onstack[w] = false;
            comp.push_back(w);
            if (w == v) break;
          }
          sccs.push_back(std::move(comp));
        }
      }
    }
  }
  return sccs;
}

struct Resolver {
  FieldPtr field;
  std::string field_key;
  ViolationScan strategy;
  std::uint64_t budget;
  std::uint64_t steps = 0;
  StraightenCache& cache;

  Resolver(FieldPtr f, const NormalizeOptions& opts, StraightenCache& c)
      : field(std::move(f)),
        field_key(field->spec().to_string()),
        strategy(opts.strategy),
        budget(opts.budget),
        cache(c) {}

  void charge() {
    if (++steps > budget) {
      throw BudgetExceededError("straightening budget of " + std::to_string(budget) +
                                " relation expansions exceeded");
    }
  }

  Scalar specialize(const RatFunc& rf) {
    long long k = 0;
    Int c;
    if (rf.denominator_is_monomial(&k, &c) && c == 1) {
      return field->eval(rf.num()) * field->q_power(-k);
    }
    // The straightening expansion of any tableau lies in Z[q, q^{-1}], so a
    // non-monomial denominator indicates lost exactness; fall back to direct
    // evaluation and refuse to continue when it has no value in the field.
    try {
      return field->eval(rf);
    } catch (const SpecializationError& ex) {
      throw EngineError(std::string("straightening coefficient cannot be specialized: ") +
                        ex.what());
    }
  }

  std::map<Tableau, Scalar> resolve_field(const Tableau& root) {
    if (root.is_semistandard()) return {{root, field->one()}};
    if (auto hit = StraightenCacheAccess::find_field(cache, field_key, root)) return *hit;

    struct Node {
      Tableau tab;
      std::vector<std::pair<int, Scalar>> edges;
      std::map<Tableau, Scalar> resolved;
    };
    std::map<Tableau, int> ids;
    std::vector<Node> nodes;
    std::vector<int> pending;
    auto intern = [&](const Tableau& t) {
      auto it = ids.find(t);
      if (it != ids.end()) return it->second;
      int id = static_cast<int>(nodes.size());
      ids.emplace(t, id);
      nodes.push_back(Node{t, {}, {}});
      pending.push_back(id);
      return id;
    };
    intern(root);
    while (!pending.empty()) {
      int id = pending.back();
      pending.pop_back();
      const Tableau tab = nodes[static_cast<std::size_t>(id)].tab;
      auto site = find_violation(tab, strategy);
      if (!site) throw std::logic_error("resolve: semistandard tableau in rewrite graph");
      charge();
      std::vector<std::pair<int, Scalar>> edges;
      std::map<Tableau, Scalar> resolved;
      for (const auto& term : expand_straighten(tab, site->first, site->second)) {
        Scalar c = term.coeff.eval(field);
        if (c.is_zero()) continue;
        if (term.tableau.is_semistandard()) {
          add_into(resolved, term.tableau, c);
          continue;
        }
        if (auto hit = StraightenCacheAccess::find_field(cache, field_key, term.tableau)) {
          for (const auto& [u, w] : *hit) add_into(resolved, u, c * w);
          continue;
        }
        edges.emplace_back(intern(term.tableau), c);
      }
      nodes[static_cast<std::size_t>(id)].edges = std::move(edges);
      nodes[static_cast<std::size_t>(id)].resolved = std::move(resolved);
    }

    std::vector<std::vector<int>> adj(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      for (const auto& [w, c] : nodes[v].edges) adj[v].push_back(w);
    }
    std::vector<std::map<Tableau, Scalar>> expansion(nodes.size());
    for (const auto& comp : strongly_connected_components(adj)) {
      bool cyclic = comp.size() > 1;
      if (!cyclic) {
        for (int w : adj[static_cast<std::size_t>(comp[0])]) {
          if (w == comp[0]) cyclic = true;
        }
      }
      if (!cyclic) {
        const int v = comp[0];
        auto& node = nodes[static_cast<std::size_t>(v)];
        std::map<Tableau, Scalar> exp = std::move(node.resolved);
        for (const auto& [w, cw] : node.edges) {
          for (const auto& [u, x] : expansion[static_cast<std::size_t>(w)]) {
            add_into(exp, u, cw * x);
          }
        }
        StraightenCacheAccess::store_field(cache, field_key, node.tab, exp);
        expansion[static_cast<std::size_t>(v)] = std::move(exp);
      } else {
        // Field-level rewriting cycles among these tableaux; resolve them
        // exactly over Q(q) and specialize.
        for (int v : comp) {
          const Tableau& tab = nodes[static_cast<std::size_t>(v)].tab;
          std::map<Tableau, RatFunc> gexp = resolve_generic(tab);
          std::map<Tableau, Scalar> exp;
          for (const auto& [u, rf] : gexp) add_into(exp, u, specialize(rf));
          StraightenCacheAccess::store_field(cache, field_key, tab, exp);
          expansion[static_cast<std::size_t>(v)] = std::move(exp);
        }
      }
    }
    return expansion[static_cast<std::size_t>(ids.at(root))];
  }

  std::map<Tableau, RatFunc> resolve_generic(const Tableau& root) {
    if (root.is_semistandard()) return {{root, RatFunc::integer(1)}};
    if (auto hit = StraightenCacheAccess::find_generic(cache, root)) return *hit;

    struct Node {
      Tableau tab;
      std::vector<std::pair<int, RatFunc>> edges;
      std::map<Tableau, RatFunc> resolved;
    };
    std::map<Tableau, int> ids;
    std::vector<Node> nodes;
    std::vector<int> pending;
    auto intern = [&](const Tableau& t) {
      auto it = ids.find(t);
      if (it != ids.end()) return it->second;
      int id = static_cast<int>(nodes.size());
      ids.emplace(t, id);
      nodes.push_back(Node{t, {}, {}});
      pending.push_back(id);
      return id;
    };
    intern(root);
    while (!pending.empty()) {
      int id = pending.back();
      pending.pop_back();
      const Tableau tab = nodes[static_cast<std::size_t>(id)].tab;
      auto site = find_violation(tab, strategy);
      if (!site) throw std::logic_error("resolve: semistandard tableau in rewrite graph");
      charge();
      std::vector<std::pair<int, RatFunc>> edges;
      std::map<Tableau, RatFunc> resolved;
      for (const auto& term : expand_straighten(tab, site->first, site->second)) {
        RatFunc c = term.coeff.eval_generic();
        if (term.tableau.is_semistandard()) {
          add_into(resolved, term.tableau, c);
          continue;
        }
        if (auto hit = StraightenCacheAccess::find_generic(cache, term.tableau)) {
          for (const auto& [u, w] : *hit) add_into(resolved, u, c * w);
          continue;
        }
        edges.emplace_back(intern(term.tableau), c);
      }
      nodes[static_cast<std::size_t>(id)].edges = std::move(edges);
      nodes[static_cast<std::size_t>(id)].resolved = std::move(resolved);
    }

    std::vector<std::vector<int>> adj(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      for (const auto& [w, c] : nodes[v].edges) adj[v].push_back(w);
    }
    std::vector<std::map<Tableau, RatFunc>> expansion(nodes.size());
    for (const auto& comp : strongly_connected_components(adj)) {
      bool cyclic = comp.size() > 1;
      if (!cyclic) {
        for (int w : adj[static_cast<std::size_t>(comp[0])]) {
          if (w == comp[0]) cyclic = true;
        }
      }
      if (!cyclic) {
        const int v = comp[0];
        auto& node = nodes[static_cast<std::size_t>(v)];
        // A closure solve started from an earlier component may already have
        // covered this tableau.
        if (auto hit = StraightenCacheAccess::find_generic(cache, node.tab)) {
          expansion[static_cast<std::size_t>(v)] = *hit;
          continue;
        }
        std::map<Tableau, RatFunc> exp = std::move(node.resolved);
        for (const auto& [w, cw] : node.edges) {
          for (const auto& [u, x] : expansion[static_cast<std::size_t>(w)]) {
            add_into(exp, u, cw * x);
          }
        }
        StraightenCacheAccess::store_generic(cache, node.tab, exp);
        expansion[static_cast<std::size_t>(v)] = std::move(exp);
      } else {
        for (int v : comp) {
          const Tableau& tab = nodes[static_cast<std::size_t>(v)].tab;
          if (!StraightenCacheAccess::find_generic(cache, tab)) solve_closure(tab);
          auto hit = StraightenCacheAccess::find_generic(cache, tab);
          if (!hit) throw std::logic_error("resolve: closure solve missed its seed");
          expansion[static_cast<std::size_t>(v)] = std::move(*hit);
        }
      }
    }
    return expansion[static_cast<std::size_t>(ids.at(root))];
  }

  // Solves the straightening relations of the non-semistandard tableaux
  // reachable from seed (through unresolved neighbours) as one exact linear
  // system over Q(q), using every relation site with S^d_{r+1} > 0, and
  // memoizes the unique solution.
  void solve_closure(const Tableau& seed) {
    std::vector<Tableau> unknowns;
    std::map<Tableau, int> uidx;
    std::vector<int> worklist;
    auto intern = [&](const Tableau& t) {
      auto it = uidx.find(t);
      if (it != uidx.end()) return it->second;
      int id = static_cast<int>(unknowns.size());
      uidx.emplace(t, id);
      unknowns.push_back(t);
      worklist.push_back(id);
      return id;
    };

    // Reduced row echelon accumulator: each stored row has coefficient 1 in
    // its own pivot column and zeros in every other pivot column.
    struct Row {
      int pivot = -1;
      std::map<int, RatFunc> coeffs;
      std::map<Tableau, RatFunc> rhs;
    };
    std::vector<Row> pivot_rows;
    std::map<int, int> pivot_of_col;

    // row -= f * other for the non-pivot part of other (whose pivot entry is 1).
    auto subtract_multiple = [](Row& row, const RatFunc& f, const Row& other) {
      for (const auto& [col, r] : other.coeffs) {
        if (col == other.pivot) continue;
        auto jt = row.coeffs.find(col);
        if (jt == row.coeffs.end()) {
          RatFunc v = -(f * r);
          if (!v.is_zero()) row.coeffs.emplace(col, std::move(v));
        } else {
          jt->second = jt->second - f * r;
          if (jt->second.is_zero()) row.coeffs.erase(jt);
        }
      }
      for (const auto& [u, r] : other.rhs) add_into(row.rhs, u, -(f * r));
    };

    auto reduce_and_insert = [&](Row row) {
      for (const auto& prow : pivot_rows) {
        auto it = row.coeffs.find(prow.pivot);
        if (it == row.coeffs.end()) continue;
        RatFunc f = it->second;
        row.coeffs.erase(it);
        subtract_multiple(row, f, prow);
      }
      if (row.coeffs.empty()) {
        if (!row.rhs.empty())
          throw EngineError("inconsistent straightening relations (internal error)");
        return;  // dependent relation
      }
      row.pivot = row.coeffs.begin()->first;
      RatFunc lead = row.coeffs.begin()->second;
      for (auto& [col, r] : row.coeffs) r = r / lead;
      for (auto& [u, r] : row.rhs) r = r / lead;
      for (auto& prow : pivot_rows) {
        auto it = prow.coeffs.find(row.pivot);
        if (it == prow.coeffs.end()) continue;
        RatFunc f = it->second;
        prow.coeffs.erase(it);
        subtract_multiple(prow, f, row);
      }
      pivot_of_col[row.pivot] = static_cast<int>(pivot_rows.size());
      pivot_rows.push_back(std::move(row));
    };

    intern(seed);
    while (!worklist.empty()) {
      int id = worklist.back();
      worklist.pop_back();
      const Tableau tab = unknowns[static_cast<std::size_t>(id)];
      const int rows = tab.num_rows();
      const int values = tab.num_values();
      for (int r = 1; r < rows; ++r) {
        for (int d = 1; d <= values; ++d) {
          if (tab.count(d, r + 1) == 0) continue;
          charge();
          Row row;
          row.coeffs.emplace(id, RatFunc::integer(1));
          for (const auto& term : expand_straighten(tab, r, d)) {
            RatFunc c = term.coeff.eval_generic();
            if (term.tableau.is_semistandard()) {
              add_into(row.rhs, term.tableau, c);
              continue;
            }
            if (auto hit = StraightenCacheAccess::find_generic(cache, term.tableau)) {
              for (const auto& [u, w] : *hit) add_into(row.rhs, u, c * w);
              continue;
            }
            int j = intern(term.tableau);
            auto it = row.coeffs.find(j);
            if (it == row.coeffs.end()) {
              RatFunc v = -c;
              row.coeffs.emplace(j, std::move(v));
            } else {
              it->second = it->second - c;
              if (it->second.is_zero()) row.coeffs.erase(it);
            }
          }
          reduce_and_insert(std::move(row));
        }
      }
    }

    if (pivot_rows.size() != unknowns.size() ||
        pivot_of_col.size() != unknowns.size()) {
      throw EngineError(
          "straightening relations do not determine a unique expansion for '" +
          seed.to_text() + "' (rank " + std::to_string(pivot_rows.size()) + " of " +
          std::to_string(unknowns.size()) + ")");
    }
    for (const auto& [col, rowidx] : pivot_of_col) {
      Row& row = pivot_rows[static_cast<std::size_t>(rowidx)];
      if (row.coeffs.size() != 1)
        throw EngineError("straightening system not fully reduced (internal error)");
      StraightenCacheAccess::store_generic(cache, unknowns[static_cast<std::size_t>(col)],
                                           std::move(row.rhs));
    }
  }
};

void canonicalize_basis_vector(std::vector<Scalar>& v, const FieldPtr& field) {
  if (!field->is_prime_backend()) {
    Int lcm_den(1);
    for (const Scalar& s : v) {
      for (const Rational& r : field->coords(s)) {
        if (r == 0) continue;
        Int den = boost::multiprecision::denominator(r);
        lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, den) * den;
      }
    }
    Int gcd_num(0);
    for (const Scalar& s : v) {
      for (const Rational& r : field->coords(s)) {
        if (r == 0) continue;
        Rational scaled = r * Rational(lcm_den);
        gcd_num = boost::multiprecision::gcd(gcd_num, boost::multiprecision::numerator(scaled));
      }
    }
    if (gcd_num == 0) return;  // zero vector; nothing to scale
    Scalar factor = field->from_rational(Rational(lcm_den, gcd_num));
    for (Scalar& s : v) s = s * factor;
    for (const Scalar& s : v) {
      bool decided = false;
      for (const Rational& r : field->coords(s)) {
        if (r == 0) continue;
        if (r < 0) {
          for (Scalar& x : v) x = -x;
        }
        decided = true;
        break;
      }
      if (decided) break;
    }
  }
}

}  // namespace

HomElement normalize(const HomElement& h, const NormalizeOptions& opts) {
  StraightenCache local;
  StraightenCache& cache = opts.cache ? *opts.cache : local;
  Resolver resolver(h.field(), opts, cache);
  HomElement out(h.shape(), h.type(), h.field());
  for (const auto& [tab, c] : h.terms()) {
    if (tab.is_semistandard()) {
      out.add_term(tab, c);
      continue;
    }
    for (const auto& [u, w] : resolver.resolve_field(tab)) out.add_term(u, c * w);
  }
  return out;
}

bool is_zero_hom(const HomElement& h, const NormalizeOptions& opts) {
  return normalize(h, opts).empty();
}

ConstraintMatrix build_constraint_matrix(const Partition& mu, const Partition& lambda,
                                         const FieldPtr& field, const NormalizeOptions& opts) {
  if (!is_partition(mu) || mu.empty()) throw std::invalid_argument("hom space: mu must be a partition");
  if (!is_partition(lambda) || lambda.empty())
    throw std::invalid_argument("hom space: lambda must be a partition");
  if (parts_sum(mu) != parts_sum(lambda))
    throw std::invalid_argument("hom space: |mu| != |lambda|");

  ConstraintMatrix m;
  m.rows = semistandard_tableaux(lambda, mu);
  if (m.rows.empty()) return m;

  struct Group {
    int d;
    int t;
    std::size_t first_col;
    std::map<Tableau, std::size_t> position;
  };
  std::vector<Group> groups;
  const int levels = static_cast<int>(mu.size());
  for (int d = 1; d < levels; ++d) {
    for (int t = 1; t <= mu[static_cast<std::size_t>(d)]; ++t) {
      Composition nu = shifted_type(mu, d, t);
      std::vector<Tableau> targets = semistandard_tableaux(lambda, nu);
      if (targets.empty()) continue;
      Group g{d, t, m.cols.size(), {}};
      for (std::size_t k = 0; k < targets.size(); ++k) {
        g.position.emplace(targets[k], m.cols.size() + k);
      }
      for (auto& s : targets) m.cols.push_back(ConstraintColumn{d, t, std::move(s)});
      groups.push_back(std::move(g));
    }
  }

  StraightenCache local;
  NormalizeOptions eff = opts;
  if (!eff.cache) eff.cache = &local;

  m.entries.assign(m.rows.size(), std::vector<Scalar>(m.cols.size(), field->zero()));
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    HomElement unit = HomElement::single(m.rows[i], field->one());
    for (const Group& g : groups) {
      HomElement image = normalize(constraint_image(unit, g.d, g.t), eff);
      for (const auto& [u, c] : image.terms()) {
        auto it = g.position.find(u);
        if (it == g.position.end())
          throw std::logic_error("hom space: normalized image outside the target basis");
        m.entries[i][it->second] = c;
      }
    }
  }
  return m;
}

std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& a,
                                           std::size_t ncols, const FieldPtr& field) {
  for (const auto& row : a) {
    if (row.size() != ncols) throw std::invalid_argument("nullspace: ragged matrix");
  }
  std::vector<std::vector<Scalar>> r = a;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols; ++col) {
    std::size_t pivot = r.size();
    for (std::size_t i = rank; i < r.size(); ++i) {
      if (!r[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == r.size()) {
      free_cols.push_back(col);
      continue;
    }
    std::swap(r[rank], r[pivot]);
    Scalar inv = r[rank][col].inverse();
    for (std::size_t j = col; j < ncols; ++j) r[rank][j] = r[rank][j] * inv;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i == rank || r[i][col].is_zero()) continue;
      Scalar f = r[i][col];
      for (std::size_t j = col; j < ncols; ++j) r[i][j] = r[i][j] - f * r[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<std::vector<Scalar>> basis;
  basis.reserve(free_cols.size());
  for (std::size_t f : free_cols) {
    std::vector<Scalar> v(ncols, field->zero());
    v[f] = field->one();
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      v[pivot_cols[k]] = -r[k][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

KernelResult hom_space(const Partition& mu, const Partition& lambda, const FieldPtr& field,
                       const NormalizeOptions& opts) {
  ConstraintMatrix m = build_constraint_matrix(mu, lambda, field, opts);
  KernelResult out;
  out.index = m.rows;
  if (m.rows.empty()) return out;
  // One linear functional per constraint column: sum_T x_T entries[T][col] = 0.
  std::vector<std::vector<Scalar>> a(m.cols.size(),
                                     std::vector<Scalar>(m.rows.size(), field->zero()));
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t k = 0; k < m.cols.size(); ++k) a[k][i] = m.entries[i][k];
  }
  out.basis = nullspace(a, m.rows.size(), field);
  for (auto& v : out.basis) canonicalize_basis_vector(v, field);
  out.dimension = static_cast<long long>(out.basis.size());
  return out;
}

long long hom_dim(const Partition& mu, const Partition& lambda, const FieldPtr& field,
                  const NormalizeOptions& opts) {
  return hom_space(mu, lambda, field, opts).dimension;
}

MembershipReport verify_membership(const HomElement& h, const Partition& mu,
                                   const Partition& lambda, const NormalizeOptions& opts) {
  if (h.shape() != lambda)
    throw std::invalid_argument("verify_membership: element shape is not lambda");
  if (mu != h.type()) throw std::invalid_argument("verify_membership: element type is not mu");
  if (!is_partition(mu)) throw std::invalid_argument("verify_membership: mu must be a partition");
  for (const auto& [tab, c] : h.terms()) {
    if (!tab.is_semistandard())
      throw std::invalid_argument("verify_membership: support not semistandard");
  }
  StraightenCache local;
  NormalizeOptions eff = opts;
  if (!eff.cache) eff.cache = &local;
  MembershipReport report;
  const int levels = static_cast<int>(mu.size());
  for (int d = 1; d < levels; ++d) {
    for (int t = 1; t <= mu[static_cast<std::size_t>(d)]; ++t) {
      HomElement image = normalize(constraint_image(h, d, t), eff);
      MembershipCheck check{d, t, image.empty(), image.size()};
      report.member = report.member && check.vanishes;
      report.checks.push_back(check);
    }
  }
  return report;
}

}  // namespace weylhom
