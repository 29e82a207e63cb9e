// lincomp: identifiability of linear compartmental models from the command line.
//
// Exit codes: 0 ok, 1 usage, 2 invalid model or request, 3 internal failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lincomp/audit.hpp"
#include "lincomp/det_oracle.hpp"
#include "lincomp/forestcalc.hpp"
#include "lincomp/ident_engine.hpp"
#include "lincomp/transforms.hpp"

namespace {

using namespace lincomp;
using nlohmann::ordered_json;

constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

// Errors that map to exit code 2.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Errors that map to exit code 3.
struct InternalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

AnalysisOptions options(std::uint64_t seed, int trials, bool force_rank) {
  AnalysisOptions o;
  o.seed = seed;
  o.trials = trials;
  o.force_rank = force_rank;
  return o;
}

int cmd_analyze(const std::string& path, const AnalysisOptions& opts, bool json) {
  const Model m = load_model(path);
  const Analysis a = analyze(m, opts);
  if (json) {
    std::cout << analysis_json(a) << "\n";
    return 0;
  }
  std::cout << "verdict: " << to_string(a.verdict.status) << "\n"
            << "method: " << to_string(a.verdict.method) << " (" << a.verdict.evidence
            << ")\n"
            << "parameters: " << a.rank.p << "\n"
            << "coefficients: " << a.rank.m << "\n"
            << "jacobian rank: " << a.rank.rank << " (max over " << a.rank.trials.size()
            << " trials)\n"
            << "expected dimension: " << (a.dimension.has_expected_dimension ? "yes" : "no")
            << " (image " << a.dimension.image_dim << ", min(p, m) = "
            << a.dimension.expected << ")\n";
  return 0;
}

ordered_json equation_json(const IoEquation& eq, bool plain) {
  ordered_json j;
  j["out"] = eq.out;
  auto lhs = ordered_json::array();
  for (const auto& c : eq.lhs) lhs.push_back(c.to_string());
  j["lhs"] = std::move(lhs);
  auto rhs = ordered_json::array();
  for (const auto& [in, r] : eq.rhs) {
    ordered_json jr;
    jr["in"] = in;
    jr["sign"] = r.sign;
    auto d = ordered_json::array();
    for (const auto& p : r.d) d.push_back(p.to_string());
    jr["d"] = std::move(d);
    rhs.push_back(std::move(jr));
  }
  j["rhs"] = std::move(rhs);
  j["text"] = render_equation(eq, plain);
  return j;
}

void print_equation(const IoEquation& eq, bool plain) {
  std::cout << "y" << eq.out << ": " << render_equation(eq, plain) << "\n";
  for (int k = static_cast<int>(eq.lhs.size()) - 1; k >= 0; --k) {
    std::cout << "  c" << k << " = " << eq.lhs[k].to_string() << "\n";
  }
  for (const auto& [in, r] : eq.rhs) {
    std::cout << "  u" << in << " (sign " << (r.sign > 0 ? "+1" : "-1") << ")\n";
    for (int k = static_cast<int>(r.d.size()) - 1; k >= 0; --k) {
      std::cout << "    d" << k << " = " << r.d[k].to_string() << "\n";
    }
  }
}

int cmd_coeffs(const std::string& path, const std::string& method, bool json) {
  const Model m = load_model(path);
  if (m.inputs().empty()) throw InvalidInput("model has no inputs");
  const bool plain = m.inputs().size() == 1 && m.outputs().size() == 1;

  std::vector<IoEquation> forest;
  std::vector<IoEquation> det;
  for (int out : m.outputs()) {
    if (method != "det") forest.push_back(forest_io_equation(m, out));
    if (method != "forest") det.push_back(io_equation(m, out));
  }
  const auto& shown = method == "det" ? det : forest;
  const bool agree = method != "both" || forest == det;

  if (json) {
    ordered_json doc;
    doc["method"] = method;
    auto eqs = ordered_json::array();
    for (const auto& eq : shown) eqs.push_back(equation_json(eq, plain));
    doc["equations"] = std::move(eqs);
    if (method == "both") doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& eq : shown) print_equation(eq, plain);
    if (method == "both") {
      std::cout << (agree ? "forest and determinant coefficients agree\n"
                          : "MISMATCH between forest and determinant coefficients\n");
    }
  }
  if (!agree) {
    for (const auto& eq : det) {
      std::cerr << "determinant: " << render_equation(eq, plain) << "\n";
    }
    return kInternal;
  }
  return 0;
}

int cmd_sweep(int max_n, const AnalysisOptions& opts, bool json) {
  if (max_n < 1 || max_n > 7) throw InvalidInput("--max-n must be in 1..7");
  const SweepSummary s = sweep_trees(max_n, opts);
  if (json) {
    std::cout << sweep_json(s) << "\n";
  } else {
    for (int n = 1; n <= max_n; ++n) {
      std::cout << "n=" << n << ": " << s.trees_per_n[n - 1] << " trees, "
                << s.models_per_n[n - 1] << " models\n";
    }
    std::cout << "models: " << s.models << "\n"
              << "identifiable: " << s.identifiable << "\n"
              << "disagreements: " << s.disagreements.size() << "\n";
    for (const auto& d : s.disagreements) std::cout << "  " << d << "\n";
  }
  return s.disagreements.empty() ? 0 : kInternal;
}

int cmd_selftest(const AnalysisOptions& opts, bool json) {
  const SelftestSummary s = selftest(opts.seed, opts.trials);
  if (json) {
    std::cout << selftest_json(s) << "\n";
  } else {
    for (const auto& c : s.checks) {
      std::cout << (c.failed == 0 ? "PASS " : "FAIL ") << c.name << " (" << c.passed
                << " passed, " << c.failed << " failed)\n";
    }
    for (const auto& f : s.failures) std::cout << "  " << f << "\n";
    std::cout << (s.ok() ? "selftest passed\n" : "selftest FAILED\n");
  }
  return s.ok() ? 0 : kInternal;
}

int cmd_transform(const std::string& path, const std::string& op, int at, bool json) {
  const Model m = load_model(path);
  TransformKind kind;
  try {
    kind = parse_transform_kind(op);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--op", e.what());
  }
  TransformResult r = [&] {
    try {
      return apply_transform(m, {kind, at});
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
  }();
  ordered_json doc;
  doc["model"] = ordered_json::parse(serialize_model(r.model));
  doc["transform"] = {{"op", to_string(kind)}, {"at", at}};
  doc["guarantee"] = to_string(r.guarantee);
  doc["theorem"] = r.theorem_tag;
  doc["note"] = r.note;
  if (json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << serialize_model(r.model) << "\n"
              << "guarantee: " << to_string(r.guarantee) << "\n";
    if (!r.theorem_tag.empty()) std::cout << "theorem: " << r.theorem_tag << "\n";
    if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identifiability and input-output equations of linear compartmental models"};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t seed = 20240101;
  int trials = 3;
  bool force_rank = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Emit JSON");
    sub->add_option("--seed", seed, "Random seed for rank trials");
    sub->add_option("--trials", trials, "Number of rank trials")->check(CLI::Range(1, 1000));
  };

  std::string model_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide identifiability and expected dimension");
  analyze_cmd->add_option("model", model_path, "Model JSON file")->required();
  add_common(analyze_cmd);
  analyze_cmd->add_flag("--force-rank", force_rank, "Decide by Jacobian rank only");

  std::string method = "forest";
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Print input-output equation coefficients");
  coeffs_cmd->add_option("model", model_path, "Model JSON file")->required();
  coeffs_cmd->add_option("--method", method, "forest, det or both")
      ->check(CLI::IsMember({"forest", "det", "both"}));
  coeffs_cmd->add_flag("--json", json, "Emit JSON");

  int max_n = 5;
  auto* sweep_cmd = app.add_subcommand("sweep-trees", "Tree theorem against Jacobian rank");
  sweep_cmd->add_option("--max-n", max_n, "Largest tree size");
  add_common(sweep_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Randomized consistency checks");
  add_common(selftest_cmd);

  std::string op;
  int at = 1;
  auto* transform_cmd = app.add_subcommand("transform", "Rewrite a model");
  transform_cmd->add_option("model", model_path, "Model JSON file")->required();
  transform_cmd->add_option("--op", op,
                            "add-leaf, add-leaf-move-output, add-leaf-move-input, "
                            "add-leak or remove-leak")
      ->required();
  transform_cmd->add_option("--at", at, "Compartment the transform acts on");
  transform_cmd->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const AnalysisOptions opts = options(seed, trials, force_rank);
    if (*analyze_cmd) return cmd_analyze(model_path, opts, json);
    if (*coeffs_cmd) return cmd_coeffs(model_path, method, json);
    if (*sweep_cmd) return cmd_sweep(max_n, opts, json);
    if (*selftest_cmd) return cmd_selftest(opts, json);
    if (*transform_cmd) return cmd_transform(model_path, op, at, json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ModelError& e) {
    std::cerr << "invalid model: " << e.what() << "\n";
    return kInvalid;
  } catch (const AnalysisRefused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    // Library precondition failures on user-supplied models (e.g. no inputs).
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
