// Acceptance gate: one pass/fail line per criterion; the exit code is the
// number of failed criteria.  Every check is exact; time limits are asserted
// in-process against a steady clock.

#include "gauss_suite.hpp"
#include "weylhom/families.hpp"
#include "weylhom/homcalc.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace weylhom;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  bool pass = true;
  std::ostringstream log;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    pass = false;
    log << "; FAILED: " << what;
  }
};

// c * Theta_T for the tableau written in text form, padded to min_values.
HomElement term(const FieldPtr& f, const std::string& text, const Scalar& c,
                int min_values) {
  Tableau t = Tableau::from_text(text);
  if (t.num_values() < min_values) t = t.padded_to_values(min_values);
  return HomElement::single(t, c);
}

HomElement combo(const FieldPtr& f,
                 std::vector<std::pair<std::string, Scalar>> parts,
                 int min_values = 0) {
  int values = min_values;
  std::vector<Tableau> tabs;
  for (const auto& [text, c] : parts) {
    tabs.push_back(Tableau::from_text(text));
    values = std::max(values, tabs.back().num_values());
  }
  HomElement out = HomElement::single(
      tabs[0].num_values() < values ? tabs[0].padded_to_values(values) : tabs[0],
      parts[0].second);
  for (std::size_t i = 1; i < tabs.size(); ++i) {
    Tableau t = tabs[i].num_values() < values ? tabs[i].padded_to_values(values)
                                              : tabs[i];
    out.add_term(t, parts[i].second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 1: the e=2 worked example, reproduced display by display over the
// cyclotomic field and over F_3 with q = 2.
// ---------------------------------------------------------------------------

void ex1_checks_for_field(const FieldPtr& f, Criterion& c) {
  const std::string name = f->to_string();
  const Partition mu{5, 5, 3, 1, 1};
  const Partition lambda{7, 5, 3};
  auto qi = [&](long long m) { return f->quantum_integer(m); };
  auto qp = [&](long long k) { return f->q_power(k); };
  const Scalar one = f->one();

  // Theta = tab(1111123,22223,345); all ten constraint images vanish.
  HomElement theta = term(f, "1^5 2 3 / 2^4 3 / 3 4 5", one, 5);
  MembershipReport r = verify_membership(theta, mu, lambda);
  c.expect(r.member, "theta not a member over " + name);
  c.expect(r.checks.size() == 10,
           "theta membership ran " + std::to_string(r.checks.size()) +
               " checks over " + name);
  std::set<std::pair<int, int>> seen;
  for (const auto& check : r.checks) {
    seen.insert({check.d, check.t});
    c.expect(check.vanishes, "theta image (d=" + std::to_string(check.d) +
                                 ",t=" + std::to_string(check.t) +
                                 ") does not vanish over " + name);
  }
  std::set<std::pair<int, int>> wanted{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                       {2, 1}, {2, 2}, {2, 3}, {3, 1}, {4, 1}};
  c.expect(seen == wanted, "theta membership checked the wrong (d,t) set over " + name);

  // The six displayed expansions of Theta(m_mu h_{d,t}).
  auto image = [&](int d, int t) { return constraint_image(theta, d, t); };
  c.expect(image(4, 1) == combo(f, {{"1^5 2 3 / 2^4 3 / 3 4^2", qi(2)}}, 5),
           "display h_{4,1} over " + name);
  c.expect(image(3, 1) == combo(f, {{"1^5 2 3 / 2^4 3 / 3^2 5", qi(2)}}, 5),
           "display h_{3,1} over " + name);
  c.expect(image(2, 1) ==
               combo(f,
                     {{"1^5 2^2 / 2^4 3 / 3 4 5", qp(4) * qi(2)},
                      {"1^5 2 3 / 2^5 / 3 4 5", qi(5)},
                      {"1^5 2 3 / 2^4 3 / 2 4 5", one}},
                     5),
           "display h_{2,1} over " + name);
  c.expect(image(2, 2) ==
               combo(f,
                     {{"1^5 2^2 / 2^5 / 3 4 5", qp(4) * qi(2) * qi(5)},
                      {"1^5 2^2 / 2^4 3 / 2 4 5", qp(4) * qi(2)},
                      {"1^5 2 3 / 2^5 / 2 4 5", qi(5)}},
                     5),
           "display h_{2,2} over " + name);
  c.expect(image(1, 1) ==
               combo(f,
                     {{"1^6 3 / 2^4 3 / 3 4 5", qi(6)},
                      {"1^5 2 3 / 1 2^3 3 / 3 4 5", one}},
                     5),
           "display h_{1,1} over " + name);
  c.expect(image(1, 2) ==
               combo(f,
                     {{"1^6 3 / 1 2^3 3 / 3 4 5", qi(6)},
                      {"1^5 2 3 / 1^2 2^2 3 / 3 4 5", one}},
                     5),
           "display h_{1,2} over " + name);

  // The displayed straightening steps.
  c.expect(straighten_once(Tableau::from_text("1^5 2 3 / 2^4 3 / 2 4 5"), 2, 2,
                           f) ==
               combo(f, {{"1^5 2 3 / 2^5 / 3 4 5", -one}}, 5),
           "straightening step -tab(1111123,22222,345) over " + name);
  c.expect(straighten_once(Tableau::from_text("1^5 2 3 / 1 2^3 3 / 3 4 5"), 1,
                           1, f) ==
               combo(f,
                     {{"1^6 3 / 2^4 3 / 3 4 5", -qi(4)},
                      {"1^6 2 / 2^3 3^2 / 3 4 5", -qp(3) * qi(2)}},
                     5),
           "straightening step for h_{1,1} over " + name);
  c.expect(normalize(term(f, "1^5 2^2 / 2^4 3 / 2 4 5", one, 5)) ==
               combo(f, {{"1^5 2^2 / 2^5 / 3 4 5", -one}}, 5),
           "h_{2,2} straightening of tab(1111122,22223,245) over " + name);
  c.expect(normalize(term(f, "1^5 2 3 / 2^5 / 2 4 5", one, 5)).empty(),
           "h_{2,2} vanishing of tab(1111123,22222,245) over " + name);
  c.expect(normalize(term(f, "1^6 3 / 1 2^3 3 / 3 4 5", one, 5)) ==
               combo(f, {{"1^7 / 2^3 3^2 / 3 4 5", -qp(3) * qi(2)}}, 5),
           "h_{1,2} normalization of tab(1111113,12223,345) over " + name);
  c.expect(normalize(term(f, "1^5 2 3 / 1^2 2^2 3 / 3 4 5", one, 5)) ==
               combo(f, {{"1^7 / 2^3 3^2 / 3 4 5", qp(3) * qi(3) * qi(2)}}, 5),
           "h_{1,2} normalization of tab(1111123,11223,345) over " + name);

  // Phi: the six tableaux listed with coefficient 1 (over these fields the
  // family element's -q coefficients equal 1).
  HomElement phi_listed = combo(f, {{"1^5 2 5 / 2^4 4 / 3^3", one},
                                    {"1^5 2 4 / 2^4 5 / 3^3", one},
                                    {"1^5 2 5 / 2^4 3 / 3^2 4", one},
                                    {"1^5 2 4 / 2^4 3 / 3^2 5", one},
                                    {"1^5 2 3 / 2^4 5 / 3^2 4", one},
                                    {"1^5 2 3 / 2^4 4 / 3^2 5", one}});
  FamilyParams ex1{4, 4, 3, 2};
  c.expect(phi_element(ex1, f) == phi_listed,
           "phi_element differs from the listed six-tableau sum over " + name);
  MembershipReport pr = verify_membership(phi_listed, mu, lambda);
  c.expect(pr.member, "phi not a member over " + name);
}

Criterion criterion1() {
  Criterion c;
  auto start = Clock::now();
  for (const std::string& spec : {"cyclotomic,e=2", "prime,p=3,q=2"})
    ex1_checks_for_field(Field::make(spec), c);
  double secs = seconds_since(start);
  c.expect(secs < 5.0, "exceeded the 5 s limit");
  c.log << "worked example reproduced over cyclotomic,e=2 and p=3,q=2 in "
        << secs << " s (limit 5 s)";
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 2: dimension >= 2 across the four listed family members.
// ---------------------------------------------------------------------------

Criterion criterion2() {
  Criterion c;
  auto start = Clock::now();
  c.log << "dimensions:";
  for (FamilyParams p : {FamilyParams{4, 4, 3, 2}, {5, 4, 3, 2}, {5, 5, 4, 2},
                         {4, 4, 3, 3}}) {
    auto [mu, lambda] = family_partitions(p);
    FieldPtr f = Field::make("cyclotomic,e=" + std::to_string(p.e));
    long long dim = hom_dim(mu, lambda, f);
    c.log << " (" << p.a << "," << p.b << "," << p.c << "," << p.e
          << ")->" << dim;
    std::ostringstream tag;
    tag << "dimension " << dim << " < 2 at (" << p.a << "," << p.b << ","
        << p.c << "," << p.e << ")";
    c.expect(dim >= 2, tag.str());
  }
  double secs = seconds_since(start);
  c.expect(secs < 600.0, "exceeded the 10 min limit");
  c.log << " in " << secs << " s (limit 600 s)";
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 3: the Gaussian identity suite.
// ---------------------------------------------------------------------------

Criterion criterion3() {
  Criterion c;
  auto start = Clock::now();
  testsuite::SuiteResult r = testsuite::run_gauss_identity_suite();
  double secs = seconds_since(start);
  c.expect(r.ok(), r.first_failure);
  c.expect(secs < 60.0, "exceeded the 1 min limit");
  c.log << r.checks << " identity checks over 9 fields, " << r.failures
        << " failures, in " << secs << " s (limit 60 s)";
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 4: the closed-form expansion agrees with the generic engine on
// every family-form tableau and every in-range (d, t).
// ---------------------------------------------------------------------------

Criterion criterion4() {
  Criterion c;
  auto start = Clock::now();
  long long comparisons = 0;
  for (FamilyParams p : {FamilyParams{4, 4, 3, 2}, {5, 4, 3, 2}, {4, 4, 3, 3}}) {
    auto [mu, lambda] = family_partitions(p);
    std::vector<Tableau> form_tableaux;
    for (const Tableau& t : semistandard_tableaux(lambda, mu))
      if (matches_family_form(p, t)) form_tableaux.push_back(t);
    c.expect(!form_tableaux.empty(), "no family-form tableaux found");

    std::vector<FieldPtr> fields{
        Field::make("cyclotomic,e=" + std::to_string(p.e))};
    fields.push_back(Field::make(p.e == 2 ? "prime,p=3,q=2" : "prime,p=7,q=2"));
    // Ranges per part: d = 4, 3 up to e-1; d = 2 up to mu_3 - 1 (zero past
    // e-1); d = 1 up to mu_2 - 1 (zero past 2e-2).
    const std::vector<std::pair<int, int>> ranges{
        {4, p.e - 1}, {3, p.e - 1}, {2, mu[2] - 1}, {1, mu[1] - 1}};
    for (const FieldPtr& f : fields) {
      c.expect(f->quantum_char() == p.e, "field/parameter mismatch");
      for (const Tableau& tab : form_tableaux) {
        HomElement single = HomElement::single(tab, f->one());
        for (auto [d, tmax] : ranges) {
          for (int t = 1; t <= tmax; ++t) {
            HomElement oracle = closed_form_image(p, tab, d, t, f);
            HomElement engine = normalize(constraint_image(single, d, t));
            ++comparisons;
            if (!(oracle == engine)) {
              std::ostringstream tag;
              tag << "closed form differs from engine at (" << p.a << ","
                  << p.b << "," << p.c << "," << p.e << "), d=" << d
                  << ", t=" << t << ", T=" << tab.to_text() << ", over "
                  << f->to_string();
              c.expect(false, tag.str());
            }
            bool vanishing_range = (d == 2 && t > p.e - 1) ||
                                   (d == 1 && t > 2 * p.e - 2);
            if (vanishing_range) {
              std::ostringstream tag;
              tag << "automatic vanishing fails at d=" << d << ", t=" << t
                  << ", T=" << tab.to_text() << ", over " << f->to_string();
              c.expect(oracle.empty(), tag.str());
            }
          }
        }
      }
    }
  }
  double secs = seconds_since(start);
  c.expect(secs < 300.0, "exceeded the 5 min limit");
  c.log << comparisons << " oracle/engine comparisons in " << secs
        << " s (limit 300 s)";
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 5: normalize is idempotent and strategy-independent on random
// row-standard tableaux, with no budget exhaustion.
// ---------------------------------------------------------------------------

Criterion criterion5() {
  Criterion c;
  auto start = Clock::now();
  std::mt19937 rng(20260817u);
  std::vector<FieldPtr> fields{Field::make("cyclotomic,e=2"),
                               Field::make("cyclotomic,e=3")};
  int budget_failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    // Random partition shape: at most 4 rows, at most 10 cells.
    Partition shape;
    for (;;) {
      int rows = 1 + static_cast<int>(rng() % 4);
      shape.assign(static_cast<std::size_t>(rows), 0);
      int total = 0;
      for (int& part : shape) {
        part = 1 + static_cast<int>(rng() % 6);
        total += part;
      }
      std::sort(shape.rbegin(), shape.rend());
      if (total <= 10) break;
    }
    // Random counts matrix (indexed value-then-row) over a random number of
    // values: each cell of row i lands in a uniform value bucket, which is
    // exactly row-standardness.
    std::size_t values = 1 + rng() % 5;
    std::vector<std::vector<int>> counts(values,
                                         std::vector<int>(shape.size(), 0));
    for (std::size_t row = 0; row < shape.size(); ++row)
      for (int cell = 0; cell < shape[row]; ++cell) ++counts[rng() % values][row];
    Tableau tab(counts);
    const FieldPtr& f = fields[static_cast<std::size_t>(trial % 2)];
    HomElement h = HomElement::single(tab, f->one());
    try {
      NormalizeOptions top;
      top.strategy = ViolationScan::top_smallest;
      NormalizeOptions bottom;
      bottom.strategy = ViolationScan::bottom_largest;
      HomElement a = normalize(h, top);
      HomElement b = normalize(h, bottom);
      if (!(a == b))
        c.expect(false, "strategies disagree on " + tab.to_text() + " over " +
                            f->to_string());
      if (!(normalize(a, top) == a))
        c.expect(false, "normalize not idempotent on " + tab.to_text() +
                            " over " + f->to_string());
    } catch (const BudgetExceededError&) {
      ++budget_failures;
    }
  }
  c.expect(budget_failures == 0,
           std::to_string(budget_failures) + " runs exhausted the budget");
  c.log << "500 random tableaux, strategies agree, idempotent, "
        << budget_failures << " budget exhaustions, in "
        << seconds_since(start) << " s";
  return c;
}

// ---------------------------------------------------------------------------
// Criterion 6: glue produces valid partitions of the right size; tiny-scale
// spot check of the dimension.
// ---------------------------------------------------------------------------

Criterion criterion6() {
  Criterion c;
  auto start = Clock::now();
  std::mt19937 rng(8254u);
  auto random_partition = [&](int n) {
    Partition parts;
    int left = n;
    while (left > 0) {
      int part = 1 + static_cast<int>(rng() % static_cast<std::size_t>(left));
      parts.push_back(part);
      left -= part;
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
  };
  int accepted = 0;
  while (accepted < 50) {
    int n = 1 + static_cast<int>(rng() % 8);
    Partition mu = random_partition(n);
    Partition lambda = random_partition(n);
    if (!dominates(lambda, mu)) continue;
    ++accepted;
    auto [alpha, beta] = glue(mu, lambda);
    c.expect(is_partition(alpha), "alpha not a partition for mu=" +
                                      parts_to_string(mu) + " lambda=" +
                                      parts_to_string(lambda));
    c.expect(is_partition(beta), "beta not a partition for mu=" +
                                     parts_to_string(mu) + " lambda=" +
                                     parts_to_string(lambda));
    long long alpha_size = 0, beta_size = 0, mu_size = 0;
    for (int part : alpha) alpha_size += part;
    for (int part : beta) beta_size += part;
    for (int part : mu) mu_size += part;
    long long wanted =
        2 * mu_size + static_cast<long long>(mu.size()) * lambda[0];
    c.expect(alpha_size == wanted && beta_size == wanted,
             "size identity fails for mu=" + parts_to_string(mu) +
                 " lambda=" + parts_to_string(lambda));
  }
  auto [alpha, beta] = glue({2, 1}, {2, 1});
  c.expect(alpha == Partition{4, 3, 2, 1} && beta == Partition{4, 3, 2, 1},
           "glue((2,1),(2,1)) is not ((4,3,2,1),(4,3,2,1))");
  long long dim =
      hom_dim(alpha, beta, Field::make("cyclotomic,e=2"));
  c.expect(dim == 1, "hom_dim(glue((2,1),(2,1))) = " + std::to_string(dim));
  c.log << "50 random dominance pairs glued, spot dimension " << dim
        << ", in " << seconds_since(start) << " s";
  return c;
}

void report(int number, const std::string& name, const Criterion& c,
            int& failures) {
  std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << number << " ("
            << name << "): " << c.log.str() << "\n";
  if (!c.pass) ++failures;
}

Criterion guarded(Criterion (*fn)()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    Criterion c;
    c.expect(false, std::string("unhandled exception: ") + e.what());
    return c;
  }
}

}  // namespace

int main() {
  int failures = 0;
  report(1, "worked-example reproduction", guarded(criterion1), failures);
  report(2, "dimension lower bound", guarded(criterion2), failures);
  report(3, "Gaussian identity suite", guarded(criterion3), failures);
  report(4, "closed-form oracle equality", guarded(criterion4), failures);
  report(5, "straightening robustness", guarded(criterion5), failures);
  report(6, "glue construction", guarded(criterion6), failures);
  return failures;
}
