// weyl-hom: command-line front end for the homomorphism-space engine.
//
// Subcommands: dim, verify-family, straighten, normalize, gauss, glue, scan.
// Exit codes: 0 success; 1 verify-family found a non-member; 2 bad input
// (malformed flags, partitions, tableaux, field specs, family parameters);
// 3 engine failure (straightening budget, specialization at a dying
// denominator, internal errors).

#include "weylhom/families.hpp"
#include "weylhom/homcalc.hpp"
#include "weylhom/json_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::json;
using namespace weylhom;

struct CommonOpts {
  std::string field = "cyclotomic,e=2";
  std::string output = "text";
  std::uint64_t budget = NormalizeOptions{}.budget;

  bool json_out() const { return output == "json"; }
  NormalizeOptions normalize_opts() const {
    NormalizeOptions opts;
    opts.budget = budget;
    return opts;
  }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--field", c.field,
                  "Coefficient field: cyclotomic,e=E or prime,p=P,q=Q")
      ->capture_default_str();
  cmd->add_option("--output", c.output, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--budget", c.budget, "Straightening expansion budget")
      ->capture_default_str();
}

json parts_json(const std::vector<int>& parts) { return json(parts); }

// ---------------------------------------------------------------- dim ------

int run_dim(const CommonOpts& c, const std::string& mu_text,
            const std::string& lambda_text, bool with_basis) {
  Partition mu = parse_parts(mu_text);
  Partition lambda = parse_parts(lambda_text);
  FieldPtr field = Field::make(c.field);
  KernelResult k = hom_space(mu, lambda, field, c.normalize_opts());
  if (c.json_out()) {
    json out{{"field", field->to_string()},
             {"mu", parts_json(mu)},
             {"lambda", parts_json(lambda)},
             {"index_size", k.index.size()},
             {"dimension", k.dimension}};
    if (with_basis) out["kernel"] = kernel_to_json(k);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "field: " << field->to_string() << '\n'
              << "mu: " << parts_to_string(mu) << '\n'
              << "lambda: " << parts_to_string(lambda) << '\n'
              << "index size: " << k.index.size() << '\n'
              << "dimension: " << k.dimension << '\n';
    if (with_basis) std::cout << kernel_to_json(k).dump(2) << '\n';
  }
  return 0;
}

// ------------------------------------------------------- verify-family -----

void print_membership_text(const std::string& name, const MembershipReport& r) {
  for (const auto& check : r.checks) {
    std::cout << name << " (d=" << check.d << ",t=" << check.t << "): ";
    if (check.vanishes)
      std::cout << "vanishes\n";
    else
      std::cout << "residual " << check.residual_terms << " terms\n";
  }
  std::cout << name << ": " << (r.member ? "member" : "NOT a member") << '\n';
}

int run_verify_family(const CommonOpts& c, bool field_given, int a, int b,
                      int cc, int e) {
  FamilyParams p{a, b, cc, e};
  validate_family(p);
  std::string field_spec =
      field_given ? c.field : "cyclotomic,e=" + std::to_string(e);
  FieldPtr field = Field::make(field_spec);
  if (field->quantum_char() != e)
    throw std::invalid_argument(
        "verify-family: the field's quantum characteristic must equal e (got " +
        std::to_string(field->quantum_char()) + ", need " + std::to_string(e) +
        ")");

  auto [mu, lambda] = family_partitions(p);
  HomElement theta = theta_element(p, field);
  HomElement phi = phi_element(p, field);
  NormalizeOptions opts = c.normalize_opts();
  MembershipReport theta_report = verify_membership(theta, mu, lambda, opts);
  MembershipReport phi_report = verify_membership(phi, mu, lambda, opts);

  Tableau theta_tab = family_theta_tableau(p);
  bool disjoint = true;
  for (const auto& [tab, coeff] : phi.terms())
    if (tab == theta_tab) disjoint = false;

  bool both = theta_report.member && phi_report.member;
  if (c.json_out()) {
    json out{{"family", {{"a", a}, {"b", b}, {"c", cc}, {"e", e}}},
             {"field", field->to_string()},
             {"mu", parts_json(mu)},
             {"lambda", parts_json(lambda)},
             {"theta", membership_to_json(theta_report)},
             {"phi", membership_to_json(phi_report)},
             {"supports_disjoint", disjoint},
             {"both_member", both}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "family: a=" << a << " b=" << b << " c=" << cc << " e=" << e
              << '\n'
              << "field: " << field->to_string() << '\n'
              << "mu: " << parts_to_string(mu) << '\n'
              << "lambda: " << parts_to_string(lambda) << '\n';
    print_membership_text("theta", theta_report);
    print_membership_text("phi", phi_report);
    std::cout << "supports disjoint: " << (disjoint ? "yes" : "no") << '\n';
  }
  return both ? 0 : 1;
}

// --------------------------------------------- straighten / normalize ------

int run_straighten(const CommonOpts& c, const std::string& tableau_text, int r,
                   int d) {
  Tableau tab = Tableau::from_text(tableau_text);
  FieldPtr field = Field::make(c.field);
  HomElement result = straighten_once(tab, r, d, field);
  std::cout << homelement_to_json(result).dump(2) << '\n';
  return 0;
}

int run_normalize(const CommonOpts& c, const std::string& path) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin, nullptr, true);
    } else {
      std::ifstream in(path);
      if (!in)
        throw std::invalid_argument("normalize: cannot open file: " + path);
      j = json::parse(in, nullptr, true);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("normalize: ") + e.what());
  }
  FieldPtr field = Field::make(c.field);
  HomElement h = homelement_from_json(j, field);
  HomElement result = normalize(h, c.normalize_opts());
  std::cout << homelement_to_json(result).dump(2) << '\n';
  return 0;
}

// -------------------------------------------------------------- gauss ------

int run_gauss(const CommonOpts& c, long long m, long long j) {
  FieldPtr field = Field::make(c.field);
  Scalar value = field->gauss(m, j);
  IntPoly preimage = gauss_polynomial(m, j);
  if (c.json_out()) {
    json out{{"field", field->to_string()},
             {"m", m},
             {"j", j},
             {"value", value.to_string()},
             {"polynomial", preimage.to_string()}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "field: " << field->to_string() << '\n'
              << "gauss(" << m << "," << j << ") = " << value.to_string()
              << '\n'
              << "polynomial: " << preimage.to_string() << '\n';
  }
  return 0;
}

// --------------------------------------------------------------- glue ------

int run_glue(const CommonOpts& c, const std::string& mu_text,
             const std::string& lambda_text) {
  Partition mu = parse_parts(mu_text);
  Partition lambda = parse_parts(lambda_text);
  auto [alpha, beta] = glue(mu, lambda);
  long long size = 0;
  for (int part : alpha) size += part;
  long long a = static_cast<long long>(mu.size());
  long long lambda1 = lambda.empty() ? 0 : lambda[0];
  long long mu_size = 0;
  for (int part : mu) mu_size += part;
  bool extended = mu.size() > lambda.size();
  if (c.json_out()) {
    json out{{"mu", parts_json(mu)},       {"lambda", parts_json(lambda)},
             {"alpha", parts_json(alpha)}, {"beta", parts_json(beta)},
             {"size", size},               {"lambda_zero_extended", extended}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "mu: " << parts_to_string(mu) << '\n'
              << "lambda: " << parts_to_string(lambda) << '\n'
              << "alpha: " << parts_to_string(alpha) << '\n'
              << "beta: " << parts_to_string(beta) << '\n'
              << "|alpha| = |beta| = " << size << " = 2*" << mu_size << " + "
              << a << "*" << lambda1 << '\n';
    if (extended)
      std::cout << "note: lambda was zero-extended to " << mu.size()
                << " rows in the shifted block\n";
  }
  return 0;
}

// --------------------------------------------------------------- scan ------

struct GridRange {
  int lo = 0;
  int hi = -1;
};

// Grammar: "a=4..6;b=4..5;c=3..4;e=2..3" — all four keys required, each a
// single value or an inclusive lo..hi range.
std::map<std::string, GridRange> parse_grid_spec(const std::string& text) {
  std::map<std::string, GridRange> ranges;
  std::stringstream ss(text);
  std::string clause;
  while (std::getline(ss, clause, ';')) {
    if (clause.empty()) continue;
    auto eq = clause.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("grid spec: expected key=range in '" +
                                  clause + "'");
    std::string key = clause.substr(0, eq);
    std::string range_text = clause.substr(eq + 1);
    if (key != "a" && key != "b" && key != "c" && key != "e")
      throw std::invalid_argument("grid spec: unknown key '" + key + "'");
    if (ranges.count(key))
      throw std::invalid_argument("grid spec: duplicate key '" + key + "'");
    GridRange range;
    auto dots = range_text.find("..");
    try {
      if (dots == std::string::npos) {
        range.lo = range.hi = std::stoi(range_text);
      } else {
        range.lo = std::stoi(range_text.substr(0, dots));
        range.hi = std::stoi(range_text.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("grid spec: bad range '" + range_text + "'");
    }
    if (range.lo > range.hi)
      throw std::invalid_argument("grid spec: empty range '" + range_text +
                                  "'");
    ranges[key] = range;
  }
  for (const char* key : {"a", "b", "c", "e"})
    if (!ranges.count(key))
      throw std::invalid_argument(std::string("grid spec: missing key '") +
                                  key + "'");
  return ranges;
}

int run_scan(const CommonOpts& c, bool field_given,
             const std::string& grid_spec, int jobs) {
  auto ranges = parse_grid_spec(grid_spec);
  std::vector<FamilyParams> tuples;
  for (int a = ranges["a"].lo; a <= ranges["a"].hi; ++a)
    for (int b = ranges["b"].lo; b <= ranges["b"].hi; ++b)
      for (int cc = ranges["c"].lo; cc <= ranges["c"].hi; ++cc)
        for (int e = ranges["e"].lo; e <= ranges["e"].hi; ++e) {
          FamilyParams p{a, b, cc, e};
          try {
            validate_family(p);
          } catch (const std::invalid_argument&) {
            continue;  // outside the family's parameter domain
          }
          tuples.push_back(p);
        }

  std::vector<std::string> records(tuples.size());
  std::atomic<bool> any_failed{false};
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tuples.size()) return;
      const FamilyParams& p = tuples[i];
      std::string field_spec =
          field_given ? c.field : "cyclotomic,e=" + std::to_string(p.e);
      json record{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"e", p.e}};
      try {
        auto [mu, lambda] = family_partitions(p);
        record["mu"] = parts_json(mu);
        record["lambda"] = parts_json(lambda);
        record["field"] = field_spec;
        FieldPtr field = Field::make(field_spec);
        record["dimension"] = hom_dim(mu, lambda, field, c.normalize_opts());
        record["status"] = "ok";
      } catch (const std::exception& ex) {
        record["status"] = "error";
        record["error"] = ex.what();
        any_failed = true;
      }
      records[i] = record.dump();
    }
  };

  int thread_count = std::max(1, std::min<int>(jobs, 64));
  if (thread_count == 1 || tuples.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // The tuple list is generated in (a, b, c, e) order, so indexed assembly
  // keeps the output sorted no matter which worker finished first.
  for (const auto& line : records) std::cout << line << '\n';
  return any_failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homomorphism spaces between Weyl modules of q-Schur algebras"};
  app.require_subcommand(1);

  CommonOpts common;
  int exit_code = 0;

  // dim
  std::string mu_text, lambda_text;
  bool with_basis = false;
  CLI::App* dim = app.add_subcommand(
      "dim", "Dimension of the homomorphism space Hom(Delta(mu), Delta(lambda))");
  dim->add_option("--mu", mu_text, "Partition, comma-separated")->required();
  dim->add_option("--lambda", lambda_text, "Partition, comma-separated")
      ->required();
  dim->add_flag("--basis", with_basis, "Also print the kernel basis as JSON");
  add_common(dim, common);
  dim->callback(
      [&]() { exit_code = run_dim(common, mu_text, lambda_text, with_basis); });

  // verify-family
  int fa = 0, fb = 0, fc = 0, fe = 0;
  CLI::App* verify = app.add_subcommand(
      "verify-family",
      "Check that the family's Theta and Phi lie in the kernel");
  verify->add_option("--a", fa, "Family parameter a (a >= b)")->required();
  verify->add_option("--b", fb, "Family parameter b (b > c)")->required();
  verify->add_option("--c", fc, "Family parameter c (c >= 3)")->required();
  verify->add_option("--e", fe, "Quantum characteristic e (e >= 2)")
      ->required();
  add_common(verify, common);
  verify->callback([&]() {
    exit_code = run_verify_family(common, verify->count("--field") > 0, fa, fb,
                                  fc, fe);
  });

  // straighten
  std::string tableau_text;
  int row = 0, value = 0;
  CLI::App* straighten = app.add_subcommand(
      "straighten", "Apply one straightening relation at row r, value d");
  straighten->add_option("--tableau", tableau_text, "Tableau text, e.g. '1^2 3 / 2 3^2'")
      ->required();
  straighten->add_option("--r", row, "Row of the violation")->required();
  straighten->add_option("--d", value, "Value being straightened")->required();
  add_common(straighten, common);
  straighten->callback([&]() {
    exit_code = run_straighten(common, tableau_text, row, value);
  });

  // normalize
  std::string element_path;
  CLI::App* norm = app.add_subcommand(
      "normalize", "Rewrite a combination of tableaux in semistandard terms");
  norm->add_option("--homelement-file", element_path,
                   "Path to a HomElement JSON file, or - for stdin")
      ->required();
  add_common(norm, common);
  norm->callback([&]() { exit_code = run_normalize(common, element_path); });

  // gauss
  long long gm = 0, gj = 0;
  CLI::App* gauss = app.add_subcommand(
      "gauss", "Gaussian binomial coefficient in the chosen field");
  gauss->add_option("--m", gm, "Upper index")->required();
  gauss->add_option("--j", gj, "Lower index")->required();
  add_common(gauss, common);
  gauss->callback([&]() { exit_code = run_gauss(common, gm, gj); });

  // glue
  std::string glue_mu, glue_lambda;
  CLI::App* glue_cmd = app.add_subcommand(
      "glue", "Glue a dominance pair into larger partitions (alpha, beta)");
  glue_cmd->add_option("--mu", glue_mu, "Partition, comma-separated")
      ->required();
  glue_cmd->add_option("--lambda", glue_lambda, "Partition, comma-separated")
      ->required();
  add_common(glue_cmd, common);
  glue_cmd->callback(
      [&]() { exit_code = run_glue(common, glue_mu, glue_lambda); });

  // scan
  std::string grid_spec;
  int jobs = 1;
  CLI::App* scan = app.add_subcommand(
      "scan", "Sweep hom_dim over a family parameter grid, one JSON record per line");
  scan->add_option("--grid-spec", grid_spec,
                   "Grid, e.g. 'a=4..5;b=4..5;c=3..4;e=2..3'")
      ->required();
  scan->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  add_common(scan, common);
  scan->callback([&]() {
    exit_code = run_scan(common, scan->count("--field") > 0, grid_spec, jobs);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return exit_code;
}
