// Python bindings: a thin string/JSON facade over the library.  Structured
// values cross the boundary as JSON text in the same schemas the CLI prints,
// so the Python layer stays free of wrapper classes.

#include "weylhom/families.hpp"
#include "weylhom/homcalc.hpp"
#include "weylhom/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace weylhom;

namespace {

FieldPtr field_of(const std::string& spec) { return Field::make(spec); }

NormalizeOptions opts_with(std::uint64_t budget) {
  NormalizeOptions opts;
  opts.budget = budget;
  return opts;
}

constexpr std::uint64_t kDefaultBudget = NormalizeOptions{}.budget;

}  // namespace

PYBIND11_MODULE(_weylhom, m) {
  m.doc() =
      "Homomorphism spaces between Weyl modules of q-Schur algebras: exact "
      "Gaussian arithmetic, tableau straightening, and kernel computation.";

  py::register_exception<BudgetExceededError>(m, "BudgetExceededError",
                                              PyExc_RuntimeError);
  py::register_exception<SpecializationError>(m, "SpecializationError",
                                              PyExc_ArithmeticError);

  m.def(
      "quantum_char",
      [](const std::string& field) { return field_of(field)->quantum_char(); },
      py::arg("field"),
      "Quantum characteristic of the field: the least f >= 2 with [f] = 0.");

  m.def(
      "quantum_int",
      [](long long n, const std::string& field) {
        return field_of(field)->quantum_integer(n).to_string();
      },
      py::arg("n"), py::arg("field") = "cyclotomic,e=2",
      "The quantum integer [n] as a printed scalar.");

  m.def(
      "gauss",
      [](long long mm, long long j, const std::string& field) {
        return field_of(field)->gauss(mm, j).to_string();
      },
      py::arg("m"), py::arg("j"), py::arg("field") = "cyclotomic,e=2",
      "The Gaussian binomial [m choose j] as a printed scalar.");

  m.def(
      "gauss_poly",
      [](long long mm, long long j) { return gauss_polynomial(mm, j).to_string(); },
      py::arg("m"), py::arg("j"),
      "The Gaussian binomial as an integer polynomial in q.");

  m.def(
      "dominates",
      [](const std::vector<int>& a, const std::vector<int>& b) {
        return dominates(a, b);
      },
      py::arg("a"), py::arg("b"), "Dominance order on compositions.");

  m.def(
      "hom_dim",
      [](const std::vector<int>& mu, const std::vector<int>& lambda,
         const std::string& field, std::uint64_t budget) {
        return hom_dim(mu, lambda, field_of(field), opts_with(budget));
      },
      py::arg("mu"), py::arg("lambda"), py::arg("field") = "cyclotomic,e=2",
      py::arg("budget") = kDefaultBudget,
      "Dimension of Hom(Delta(mu), Delta(lambda)).");

  m.def(
      "hom_kernel",
      [](const std::vector<int>& mu, const std::vector<int>& lambda,
         const std::string& field, std::uint64_t budget) {
        KernelResult k =
            hom_space(mu, lambda, field_of(field), opts_with(budget));
        return kernel_to_json(k).dump();
      },
      py::arg("mu"), py::arg("lambda"), py::arg("field") = "cyclotomic,e=2",
      py::arg("budget") = kDefaultBudget,
      "Kernel dimension, index tableaux, and basis vectors as JSON text.");

  m.def(
      "straighten",
      [](const std::string& tableau, int r, int d, const std::string& field) {
        HomElement out =
            straighten_once(Tableau::from_text(tableau), r, d, field_of(field));
        return homelement_to_json(out).dump();
      },
      py::arg("tableau"), py::arg("r"), py::arg("d"),
      py::arg("field") = "cyclotomic,e=2",
      "One straightening relation applied at row r, value d; JSON text.");

  m.def(
      "normalize",
      [](const std::string& element_json, const std::string& field,
         std::uint64_t budget) {
        FieldPtr f = field_of(field);
        HomElement h =
            homelement_from_json(nlohmann::json::parse(element_json), f);
        return homelement_to_json(normalize(h, opts_with(budget))).dump();
      },
      py::arg("element"), py::arg("field") = "cyclotomic,e=2",
      py::arg("budget") = kDefaultBudget,
      "Rewrite a HomElement (JSON text) over the semistandard basis.");

  m.def(
      "verify_membership",
      [](const std::string& element_json, const std::vector<int>& mu,
         const std::vector<int>& lambda, const std::string& field) {
        FieldPtr f = field_of(field);
        HomElement h =
            homelement_from_json(nlohmann::json::parse(element_json), f);
        return membership_to_json(verify_membership(h, mu, lambda)).dump();
      },
      py::arg("element"), py::arg("mu"), py::arg("lambda"),
      py::arg("field") = "cyclotomic,e=2",
      "Per-(d,t) vanishing report for a candidate kernel element; JSON text.");

  m.def(
      "family_partitions",
      [](int a, int b, int c, int e) {
        FamilyParams p{a, b, c, e};
        return family_partitions(p);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("e"),
      "The pair (mu, lambda) for the two-dimensional family.");

  m.def(
      "theta",
      [](int a, int b, int c, int e) {
        return family_theta_tableau(FamilyParams{a, b, c, e}).to_text();
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("e"),
      "The single-tableau homomorphism Theta, in tableau text form.");

  m.def(
      "phi",
      [](int a, int b, int c, int e, const std::string& field) {
        FamilyParams p{a, b, c, e};
        FieldPtr f = field.empty()
                         ? Field::make("cyclotomic,e=" + std::to_string(e))
                         : field_of(field);
        return homelement_to_json(phi_element(p, f)).dump();
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("e"),
      py::arg("field") = "",
      "The companion homomorphism Phi as HomElement JSON text (default "
      "field: cyclotomic at the family's e).");

  m.def(
      "verify_family",
      [](int a, int b, int c, int e, const std::string& field) {
        FamilyParams p{a, b, c, e};
        FieldPtr f = field.empty()
                         ? Field::make("cyclotomic,e=" + std::to_string(e))
                         : field_of(field);
        auto [mu, lambda] = family_partitions(p);
        nlohmann::json out{
            {"mu", mu},
            {"lambda", lambda},
            {"theta",
             membership_to_json(verify_membership(theta_element(p, f), mu, lambda))},
            {"phi",
             membership_to_json(verify_membership(phi_element(p, f), mu, lambda))}};
        return out.dump();
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("e"),
      py::arg("field") = "",
      "Membership reports for Theta and Phi as JSON text.");

  m.def(
      "glue",
      [](const std::vector<int>& mu, const std::vector<int>& lambda) {
        return glue(mu, lambda);
      },
      py::arg("mu"), py::arg("lambda"),
      "The glued pair (alpha, beta) of a dominance-compatible pair.");
}
