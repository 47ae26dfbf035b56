// tropsi: intersection products of weighted tropical psi-classes on
// heavy/light tropical Hassett spaces, with exact arithmetic throughout.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropsi/divisors.hpp"
#include "tropsi/fan.hpp"
#include "tropsi/json_io.hpp"
#include "tropsi/psi.hpp"
#include "tropsi/trees.hpp"
#include "tropsi/verify.hpp"
#include "tropsi/weights.hpp"

namespace {

using nlohmann::json;
using namespace tropsi;

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    return Rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  }
}

// Weight spec: either "heavy,light" counts (two integers summing to n) or an
// explicit list of n rationals such as "1,1,1/3,1/3,1/4".
WeightVector parse_weights(const std::string& spec, int n) {
  std::vector<std::string> fields;
  std::stringstream stream(spec);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (fields.size() == 2) {
    bool integral = true;
    for (const std::string& f : fields) {
      if (f.find('/') != std::string::npos) integral = false;
    }
    if (integral) {
      const int heavy = std::stoi(fields[0]);
      const int light = std::stoi(fields[1]);
      if (heavy + light != n) {
        throw std::invalid_argument("weight counts " + spec + " do not sum to n=" +
                                    std::to_string(n));
      }
      return WeightVector(n, light);
    }
  }
  if (static_cast<int>(fields.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " weights, got " +
                                std::to_string(fields.size()));
  }
  std::vector<Rat> weights;
  for (const std::string& f : fields) weights.push_back(parse_rational(f));
  return WeightVector::from_weights(weights);
}

void print_cycle(const Cycle& z, const std::string& format) {
  if (format == "json") {
    std::cout << cycle_to_json(z).dump(2) << "\n";
    return;
  }
  std::cout << "dim " << z.dim << ", " << z.entries.size() << " cone(s)\n";
  for (const auto& [t, weight] : z.entries) {
    std::cout << "  " << weight << "  " << t.to_string() << "\n";
  }
}

int report_outcome(const verify::Report& report) {
  bool ok = true;
  for (const verify::CheckResult& check : report) {
    std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << " (" << check.cases
              << " cases)";
    if (!check.pass) std::cout << "\n       first counterexample: " << check.detail;
    std::cout << "\n";
    ok = ok && check.pass;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection products of weighted tropical psi-classes"};
  app.require_subcommand(1);
  app.fallthrough();  // --n/--w/--format may follow the subcommand

  int n = 0;
  std::string weight_spec;
  std::string format = "json";
  app.add_option("--n", n, "number of marks");
  app.add_option("--w", weight_spec, "weights: 'heavy,light' counts or explicit rationals");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list w-stable types by codimension");
  int codim = 0;
  enumerate_cmd->add_option("--codim", codim, "codimension")->required();

  auto* rays_cmd = app.add_subcommand("rays", "list the rays of the moduli fan");

  auto* psi_cmd = app.add_subcommand("psi", "the weighted tropical psi-class of a mark");
  int psi_mark = 0;
  psi_cmd->add_option("mark", psi_mark, "the mark N")->required();

  auto* intersect_cmd = app.add_subcommand("intersect", "intersection product psi^k");
  std::vector<std::int64_t> exponents;
  intersect_cmd->add_option("exponents", exponents, "k_1 ... k_n")->expected(-1);
  std::string method = "product";
  intersect_cmd->add_option("--method", method, "closed form or recursive oracle")
      ->check(CLI::IsMember({"product", "recursive"}));

  auto* degree_cmd = app.add_subcommand("degree", "top-degree intersection number");
  std::vector<std::int64_t> degree_exponents;
  degree_cmd->add_option("exponents", degree_exponents, "k_1 ... k_n")->expected(-1);

  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  verify_cmd->add_option("suite", suite, "balance | divisor | oracle | appendix")
      ->required()
      ->check(CLI::IsMember({"balance", "divisor", "oracle", "appendix"}));
  int max_n = 6;
  verify_cmd->add_option("--max-n", max_n, "largest n to sweep (7 is hours-scale)")
      ->check(CLI::Range(4, 7));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) {
      if (suite == "balance") return report_outcome(verify::fan_suite(max_n));
      if (suite == "divisor") return report_outcome(verify::divisor_suite(max_n));
      if (suite == "oracle") return report_outcome(verify::psi_suite(max_n));
      return report_outcome(verify::appendix_suite(max_n));
    }

    if (n == 0 || weight_spec.empty()) {
      throw std::invalid_argument("--n and --w are required for this subcommand");
    }
    const WeightVector w = parse_weights(weight_spec, n);

    if (*enumerate_cmd) {
      const std::vector<CombinatorialType> types = enumerate_types(w, codim);
      if (format == "json") {
        json out = json::array();
        for (const CombinatorialType& t : types) out.push_back(type_to_json(t));
        std::cout << json{{"n", n}, {"codim", codim}, {"types", std::move(out)}}.dump(2) << "\n";
      } else {
        for (const CombinatorialType& t : types) std::cout << t.to_string() << "\n";
      }
      return 0;
    }

    if (*rays_cmd) {
      const AmbientSpace space(w);
      if (format == "json") {
        json out = json::array();
        for (const Split& s : valid_splits(w)) {
          out.push_back(json{{"split", marks_of(s.side())},
                             {"vector", vector_to_json(space.ray_vector(s))}});
        }
        std::cout << json{{"n", n}, {"rays", std::move(out)}}.dump(2) << "\n";
      } else {
        for (const Split& s : valid_splits(w)) {
          std::cout << s.to_string() << "  " << space.ray_vector(s).to_string() << "\n";
        }
      }
      return 0;
    }

    if (*psi_cmd) {
      if (psi_mark < 1 || psi_mark > n) throw std::invalid_argument("psi mark out of range");
      print_cycle(psi_class(psi_mark, w), format);
      return 0;
    }

    if (*intersect_cmd) {
      if (static_cast<int>(exponents.size()) != n) {
        throw std::invalid_argument("expected n=" + std::to_string(n) + " exponents");
      }
      const PsiProductQuery q(w, PsiExponents(exponents));
      print_cycle(method == "product" ? intersect_product(q) : intersect_recursive(q), format);
      return 0;
    }

    if (*degree_cmd) {
      if (static_cast<int>(degree_exponents.size()) != n) {
        throw std::invalid_argument("expected n=" + std::to_string(n) + " exponents");
      }
      const PsiProductQuery q(w, PsiExponents(degree_exponents));
      std::cout << degree(q).str() << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
