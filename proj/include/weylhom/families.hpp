#pragma once

#include "weylhom/homcalc.hpp"

#include <utility>

namespace weylhom {

// Parameters of the two-generator family: integers with a >= b >= c+1 >= 4
// and quantum characteristic e >= 2.
struct FamilyParams {
  int a = 0;
  int b = 0;
  int c = 0;
  int e = 0;
};

void validate_family(const FamilyParams& p);  // throws std::invalid_argument

// mu = (ae-3, be-3, ce-3, e-1, e-1) and lambda = ((a+2)e-5, be-3, ce-3).
std::pair<Partition, Partition> family_partitions(const FamilyParams& p);

// [1^{ae-3} 2^{e-1} 3^{e-1} / 2^{(b-1)e-2} 3^{e-1} / 3^{(c-2)e-1} 4^{e-1} 5^{e-1}]
Tableau family_theta_tableau(const FamilyParams& p);

// The singleton combination Theta of the tableau above.
HomElement theta_element(const FamilyParams& p, const FieldPtr& field);

// Support of the second generator Phi: completions of the template rows
// 1^{ae-3} 2^{e-1} * / 2^{(b-1)e-2} * / 3^{k} * by values 3, 4, 5 with no
// further 3s in row 3; k = (c-1)e-2 for the coefficient-1 terms and
// k = (c-1)e-1 for the coefficient(-q) terms.
std::vector<Tableau> phi_plus_tableaux(const FamilyParams& p);
std::vector<Tableau> phi_minus_tableaux(const FamilyParams& p);

// Phi = sum(plus) - q * sum(minus).
HomElement phi_element(const FamilyParams& p, const FieldPtr& field);

// Whether T is semistandard of the family shape and type with first row
// 1^{ae-3} 2^{e-1} {3,4,5}* , second row 2^{(b-1)e-2} {3,4,5}* and no 1s or
// 2s in the third row — the template covered by the closed-form images.
bool matches_family_form(const FamilyParams& p, const Tableau& t);

// Closed-form normalized constraint image of Theta_T for template tableaux,
// used as an independent oracle against expand_move + normalize.  Covers
// d = 4 and d = 3 for 1 <= t <= e-1, d = 2 for 1 <= t <= ce-4, and d = 1 for
// 1 <= t <= be-4 (images for larger t in those ranges come out empty on
// their own).  Throws std::invalid_argument outside this range.
//
// The d = 2 formula drops the moves that touch row 1: their coefficients
// are multiples of gauss(e-1+s, s), zero in any field of quantum
// characteristic e.  It therefore matches the engine only over such fields,
// while d = 1, 3, 4 are identities at arbitrary q.
//
// closed_form_terms returns the displayed sums verbatim; a target tableau
// can be non-semistandard when row 3 of T carries few 4s and 5s (a moved-up
// 4 or 5 in row 2 can sit above a 3).  closed_form_image expresses that sum
// over the semistandard basis, which is the engine's convention; on every
// tableau the paper applies the closed forms to, the terms are already
// semistandard and the two agree verbatim.
std::vector<ExpansionTerm> closed_form_terms(const FamilyParams& p, const Tableau& t, int d,
                                             int tcount);
HomElement closed_form_image(const FamilyParams& p, const Tableau& t, int d, int tcount,
                             const FieldPtr& field);

// The glued dominance pair: alpha = (mu_i + lambda_1)_{i <= l(mu)} ++ mu and
// beta = (lambda_i + lambda_1)_{i <= l(mu), lambda padded by zero parts} ++
// lambda.  Requires lambda to dominate mu (which makes both results
// partitions of 2|mu| + l(mu)*lambda_1).
std::pair<Partition, Partition> glue(const Partition& mu, const Partition& lambda);

}  // namespace weylhom
