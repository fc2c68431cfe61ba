#include "weylhom/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace weylhom {

void validate_family(const FamilyParams& p) {
  if (p.e < 2) throw std::invalid_argument("family: e must be >= 2");
  if (p.c < 3) throw std::invalid_argument("family: c must be >= 3");
  if (p.b < p.c + 1) throw std::invalid_argument("family: b must be >= c+1");
  if (p.a < p.b) throw std::invalid_argument("family: a must be >= b");
}

std::pair<Partition, Partition> family_partitions(const FamilyParams& p) {
  validate_family(p);
  const int e = p.e;
  Partition mu{p.a * e - 3, p.b * e - 3, p.c * e - 3, e - 1, e - 1};
  Partition lambda{(p.a + 2) * e - 5, p.b * e - 3, p.c * e - 3};
  return {std::move(mu), std::move(lambda)};
}

Tableau family_theta_tableau(const FamilyParams& p) {
  validate_family(p);
  const int e = p.e;
  std::vector<std::vector<int>> counts(5, std::vector<int>(3, 0));
  counts[0][0] = p.a * e - 3;
  counts[1][0] = e - 1;
  counts[1][1] = (p.b - 1) * e - 2;
  counts[2][0] = e - 1;
  counts[2][1] = e - 1;
  counts[2][2] = (p.c - 2) * e - 1;
  counts[3][2] = e - 1;
  counts[4][2] = e - 1;
  return Tableau(std::move(counts));
}

HomElement theta_element(const FamilyParams& p, const FieldPtr& field) {
  return HomElement::single(family_theta_tableau(p), field->one());
}

namespace {

std::vector<Tableau> phi_completions(const FamilyParams& p, int row3_threes) {
  const int e = p.e;
  const int lambda3 = p.c * e - 3;
  const int free3 = lambda3 - row3_threes;
  const int free_threes = lambda3 - row3_threes;  // all other 3s are fixed in row 3
  std::vector<int> rshape{e - 1, e - 1, free3};
  while (!rshape.empty() && rshape.back() == 0) rshape.pop_back();
  Composition rtype{free_threes, e - 1, e - 1};
  std::vector<Tableau> out;
  for (const Tableau& rt : row_standard_tableaux(rshape, rtype)) {
    if (rt.num_rows() >= 3 && rt.count(1, 3) != 0) continue;  // no free 3s in row 3
    std::vector<std::vector<int>> counts(5, std::vector<int>(3, 0));
    counts[0][0] = p.a * e - 3;
    counts[1][0] = e - 1;
    counts[1][1] = (p.b - 1) * e - 2;
    counts[2][2] = row3_threes;
    for (int value = 1; value <= rt.num_values(); ++value) {
      for (int row = 1; row <= rt.num_rows(); ++row) {
        counts[static_cast<std::size_t>(value + 1)][static_cast<std::size_t>(row - 1)] +=
            rt.count(value, row);
      }
    }
    out.emplace_back(std::move(counts));
  }
  return out;
}

}  // namespace

std::vector<Tableau> phi_plus_tableaux(const FamilyParams& p) {
  validate_family(p);
  return phi_completions(p, (p.c - 1) * p.e - 2);
}

std::vector<Tableau> phi_minus_tableaux(const FamilyParams& p) {
  validate_family(p);
  return phi_completions(p, (p.c - 1) * p.e - 1);
}

HomElement phi_element(const FamilyParams& p, const FieldPtr& field) {
  auto [mu, lambda] = family_partitions(p);
  HomElement h(lambda, mu, field);
  const Scalar one = field->one();
  for (const Tableau& t : phi_plus_tableaux(p)) h.add_term(t, one);
  const Scalar minus_q = -field->q();
  for (const Tableau& t : phi_minus_tableaux(p)) h.add_term(t, minus_q);
  return h;
}

bool matches_family_form(const FamilyParams& p, const Tableau& t) {
  validate_family(p);
  auto [mu, lambda] = family_partitions(p);
  if (t.num_values() != 5 || t.num_rows() != 3) return false;
  if (t.shape() != lambda || t.type() != mu) return false;
  const int e = p.e;
  if (t.count(1, 1) != p.a * e - 3 || t.count(1, 2) != 0 || t.count(1, 3) != 0) return false;
  if (t.count(2, 1) != e - 1 || t.count(2, 2) != (p.b - 1) * e - 2 || t.count(2, 3) != 0)
    return false;
  return t.is_semistandard();
}

namespace {

long long binom2(long long n) { return n * (n - 1) / 2; }

}  // namespace

std::vector<ExpansionTerm> closed_form_terms(const FamilyParams& p, const Tableau& t, int d,
                                             int tcount) {
  if (!matches_family_form(p, t))
    throw std::invalid_argument("closed form: tableau is not of the template form");
  const int e = p.e;
  const int hi = (d == 4 || d == 3) ? e - 1 : (d == 2 ? p.c * e - 4 : (d == 1 ? p.b * e - 4 : 0));
  if (d < 1 || d > 4 || tcount < 1 || tcount > hi)
    throw std::invalid_argument("closed form: (d, t) outside the covered range");

  const int t11 = t.count(1, 1);
  const int t21 = t.count(2, 1), t22 = t.count(2, 2);
  const int t31 = t.count(3, 1), t32 = t.count(3, 2), t33 = t.count(3, 3);
  const int t41 = t.count(4, 1), t42 = t.count(4, 2), t43 = t.count(4, 3);
  const int t51 = t.count(5, 1), t52 = t.count(5, 2), t53 = t.count(5, 3);

  std::vector<ExpansionTerm> out;

  auto push = [&out, &t](int dv, const std::array<int, 3>& dplus, const std::array<int, 3>& dminus,
                         CoeffExpr coeff) {
    auto counts = t.counts();
    for (int j = 0; j < 3; ++j) {
      counts[static_cast<std::size_t>(dv - 1)][static_cast<std::size_t>(j)] += dplus[static_cast<std::size_t>(j)];
      counts[static_cast<std::size_t>(dv)][static_cast<std::size_t>(j)] -= dminus[static_cast<std::size_t>(j)];
    }
    out.push_back(ExpansionTerm{Tableau(std::move(counts)), std::move(coeff)});
  };

  if (d == 4 || d == 3) {
    // Plain moves of value d+1 up to d; no straightening is ever needed.
    const int c1 = (d == 4) ? t51 : t41;
    const int c2 = (d == 4) ? t52 : t42;
    const int c3 = (d == 4) ? t53 : t43;
    const int b1 = (d == 4) ? t41 : t31;
    const int b2 = (d == 4) ? t42 : t32;
    const int b3 = (d == 4) ? t43 : t33;
    for (int k1 = 0; k1 <= std::min(c1, tcount); ++k1) {
      for (int k2 = 0; k2 <= std::min(c2, tcount - k1); ++k2) {
        int k3 = tcount - k1 - k2;
        if (k3 < 0 || k3 > c3) continue;
        CoeffExpr coeff;
        coeff.q_exp = static_cast<long long>(b2 + b3) * k1 + static_cast<long long>(b3) * k2;
        for (auto [kk, bb] : {std::pair(k1, b1), std::pair(k2, b2), std::pair(k3, b3)}) {
          if (kk > 0) coeff.gauss_factors.emplace_back(bb + kk, bb);
        }
        push(d, {k1, k2, k3}, {k1, k2, k3}, std::move(coeff));
      }
    }
    return out;
  }

  if (d == 2) {
    // t threes become 2s in rows 2 and 3, and the row-3 twos are exchanged
    // back up; 4s and 5s may migrate between rows 2 and 3.
    const int sigma3 = t32 + t33 - tcount;
    if (sigma3 < 0) return out;
    for (int s33 = std::max(0, sigma3 - t32); s33 <= std::min(t33, sigma3); ++s33) {
      const int s32 = sigma3 - s33;
      for (int s43 = t43; s43 <= t43 + t42; ++s43) {
        const int s42 = t42 + t43 - s43;
        const int row3 = t33 + t43 + t53;
        const int s53 = row3 - s33 - s43;
        if (s53 < t53 || s53 > t53 + t52) continue;
        const int s52 = t52 + t53 - s53;
        auto counts = t.counts();
        counts[1][1] = t22 + tcount;
        counts[2][1] = s32;
        counts[2][2] = s33;
        counts[3][1] = s42;
        counts[3][2] = s43;
        counts[4][1] = s52;
        counts[4][2] = s53;
        CoeffExpr coeff;
        coeff.sign = ((t33 - s33) % 2 == 0) ? 1 : -1;
        coeff.q_exp = binom2(t33 - s33) + static_cast<long long>(s33) * tcount +
                      static_cast<long long>(t43) * (s53 - t53);
        coeff.gauss_factors.emplace_back(t22 + tcount - t33, t22 - s33);
        coeff.gauss_factors.emplace_back(s43, t43);
        coeff.gauss_factors.emplace_back(s53, t53);
        out.push_back(ExpansionTerm{Tableau(std::move(counts)), std::move(coeff)});
      }
    }
    return out;
  }

  // d == 1: t twos become 1s in rows 1 and 2, the row-2 ones are exchanged
  // back up, and 3s, 4s, 5s may migrate between rows 1 and 2.
  const int sigma2 = t21 + t22 - tcount;
  if (sigma2 < 0) return out;
  for (int s22 = std::max(0, t22 - tcount); s22 <= std::min(t22, sigma2); ++s22) {
    const int s21 = sigma2 - s22;
    for (int s32 = t32; s32 <= t32 + t31; ++s32) {
      const int s31 = t31 + t32 - s32;
      for (int s42 = t42; s42 <= t42 + t41; ++s42) {
        const int s41 = t41 + t42 - s42;
        const int s52 = t52 + (t22 - s22) - (s32 - t32) - (s42 - t42);
        if (s52 < t52 || s52 > t52 + t51) continue;
        const int s51 = t51 + t52 - s52;
        auto counts = t.counts();
        counts[0][0] = t11 + tcount;
        counts[1][0] = s21;
        counts[1][1] = s22;
        counts[2][0] = s31;
        counts[2][1] = s32;
        counts[3][0] = s41;
        counts[3][1] = s42;
        counts[4][0] = s51;
        counts[4][1] = s52;
        CoeffExpr coeff;
        coeff.sign = ((t22 - s22) % 2 == 0) ? 1 : -1;
        coeff.q_exp = binom2(t22 - s22) + static_cast<long long>(s22) * tcount +
                      static_cast<long long>(t32) * (s42 - t42) +
                      static_cast<long long>(t32 + t42) * (s52 - t52);
        coeff.gauss_factors.emplace_back(t11 + tcount - t22, t11 - s22);
        coeff.gauss_factors.emplace_back(s32, t32);
        coeff.gauss_factors.emplace_back(s42, t42);
        coeff.gauss_factors.emplace_back(s52, t52);
        out.push_back(ExpansionTerm{Tableau(std::move(counts)), std::move(coeff)});
      }
    }
  }
  return out;
}

HomElement closed_form_image(const FamilyParams& p, const Tableau& t, int d, int tcount,
                             const FieldPtr& field) {
  auto [mu, lambda] = family_partitions(p);
  HomElement out(lambda, shifted_type(mu, d, tcount), field);
  for (const auto& term : closed_form_terms(p, t, d, tcount)) {
    out.add_term(term.tableau, term.coeff.eval(field));
  }
  // The displayed sums can target a non-semistandard tableau when row 3 of T
  // is 3-heavy (the exchange pushes a 4 or 5 above a 3); express the result
  // over the semistandard basis.  This is a no-op on the tableaux the paper
  // feeds to the closed forms.
  return normalize(out);
}

std::pair<Partition, Partition> glue(const Partition& mu, const Partition& lambda) {
  if (mu.empty() || !is_partition(mu)) throw std::invalid_argument("glue: mu must be a partition");
  if (lambda.empty() || !is_partition(lambda))
    throw std::invalid_argument("glue: lambda must be a partition");
  if (parts_sum(mu) != parts_sum(lambda)) throw std::invalid_argument("glue: |mu| != |lambda|");
  if (!dominates(lambda, mu))
    throw std::invalid_argument("glue: lambda must dominate mu");
  const std::size_t a = mu.size();
  const int l1 = lambda[0];
  Partition alpha, beta;
  alpha.reserve(2 * a);
  beta.reserve(a + lambda.size());
  for (std::size_t i = 0; i < a; ++i) alpha.push_back(mu[i] + l1);
  for (int x : mu) alpha.push_back(x);
  for (std::size_t i = 0; i < a; ++i) beta.push_back((i < lambda.size() ? lambda[i] : 0) + l1);
  for (int x : lambda) beta.push_back(x);
  if (!is_partition(alpha) || !is_partition(beta))
    throw std::invalid_argument("glue: inputs do not glue to partitions (lambda_1 is too small)");
  return {std::move(alpha), std::move(beta)};
}

}  // namespace weylhom
