#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "geocurv/classify.hpp"
#include "geocurv/fixtures.hpp"
#include "geocurv/manifest.hpp"

namespace {

using namespace geocurv;

struct CommonOpts {
  std::string manifest, preset, format = "human", out;
  std::uint64_t seed = 1;
};

void add_source_flags(CLI::App* cmd, CommonOpts& opts) {
  auto* m = cmd->add_option("--manifest", opts.manifest, "manifest file path");
  auto* p = cmd->add_option("--preset", opts.preset,
                            "built-in model (morris-thorne)");
  m->excludes(p);
}

Model load_model(const CommonOpts& opts) {
  if (opts.manifest.empty() == opts.preset.empty())
    throw ManifestError("exactly one of --manifest/--preset is required", 0);
  return opts.manifest.empty() ? Model::preset(opts.preset)
                               : Model::from_manifest_file(opts.manifest);
}

int write_output(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(opts.out);
  if (!f) {
    std::cerr << "error: cannot open output file `" << opts.out << "`\n";
    return 2;
  }
  f << text;
  return 0;
}

const std::map<std::string, std::string>& display_names() {
  static const std::map<std::string, std::string> names = {
      {"metric", "g"},
      {"christoffel", "Gamma"},
      {"riemann", "R"},
      {"ricci", "Ric"},
      {"scalar", "kappa"},
      {"weyl", "C"},
      {"conharmonic", "K"},
      {"concircular", "W"},
      {"projective", "P"},
      {"ricci2", "Ric2"},
      {"ricci3", "Ric3"},
      {"ricci4", "Ric4"},
      {"nabla-riemann", "nabla R"},
      {"nabla-ricci", "nabla Ric"},
      {"nabla-weyl", "nabla C"},
      {"nabla-projective", "nabla P"},
      {"nabla-conharmonic", "nabla K"},
      {"rr", "(R.R)"},
      {"pr", "(P.R)"},
      {"cc", "(C.C)"},
      {"ck", "(C.K)"},
      {"kc", "(K.C)"},
      {"kk", "(K.K)"},
      {"q-ric-r", "Q(Ric,R)"},
      {"q-g-c", "Q(g,C)"},
      {"q-g-k", "Q(g,K)"}};
  return names;
}

std::string index_text(const std::vector<int>& idx) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i] + 1);
  }
  return s + "]";
}

int cmd_compute(const CommonOpts& opts, const std::vector<std::string>& tensors) {
  Model model = load_model(opts);
  CurvatureBundle bundle = model.build();
  Catalog catalog(bundle);
  const Chart& chart = bundle.chart();
  for (const std::string& name : tensors)
    if (!catalog.has(name)) {
      std::cerr << "error: unknown tensor `" << name << "`\n";
      return 2;
    }
  std::ostringstream human;
  nlohmann::ordered_json tree;
  tree["kind"] = "component-table";
  tree["tensors"] = nlohmann::ordered_json::object();
  for (const std::string& name : tensors) {
    const std::string& display = display_names().at(name);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (name == "scalar") {
      Expr k = simplified(bundle.kappa(), chart);
      human << display << " = " << k.str() << "\n";
      rows.push_back({{"index", nlohmann::ordered_json::array()},
                      {"value", k.str()}});
    } else {
      const TensorField& t = catalog.get(name);
      bool any = false;
      t.for_each_index([&](const std::vector<int>& idx) {
        Expr v = simplified(t.at(idx), chart);
        if (v.is_zero_literal()) return;
        any = true;
        std::vector<int> one_based;
        for (int i : idx) one_based.push_back(i + 1);
        human << display << index_text(idx) << " = " << v.str() << "\n";
        rows.push_back({{"index", one_based}, {"value", v.str()}});
      });
      if (!any) human << display << ": all components zero\n";
    }
    tree["tensors"][name] = std::move(rows);
  }
  return write_output(opts, opts.format == "tree" ? tree.dump(2) + "\n"
                                                  : human.str());
}

int cmd_report(const CommonOpts& opts) {
  Model model = load_model(opts);
  CurvatureBundle bundle = model.build();
  StructureReport report = theorem_report(bundle, opts.seed);
  int rc = write_output(
      opts, opts.format == "tree" ? report.tree() : report.human());
  if (rc != 0) return rc;
  if (opts.preset == "morris-thorne" && !report.all_match()) return 1;
  return 0;
}

int cmd_validate(const CommonOpts& opts) {
  if (opts.preset != "morris-thorne") {
    std::cerr << "error: validate runs against --preset morris-thorne only\n";
    return 2;
  }
  Model model = load_model(opts);
  CurvatureBundle bundle = model.build();
  ValidationReport report = run_validation(bundle);
  std::ostringstream os;
  for (const GroupResult& g : report.groups) {
    os << (g.pass ? "PASS" : "FAIL") << "  " << g.id << "\n";
    for (const ValidationFailure& f : g.failures) {
      os << "      " << f.tensor;
      if (!f.index.empty()) {
        os << "[";
        for (std::size_t i = 0; i < f.index.size(); ++i)
          os << (i ? "," : "") << f.index[i];
        os << "]";
      }
      os << ": computed " << f.computed << ", expected " << f.expected << "\n";
    }
  }
  os << report.passed() << "/" << report.groups.size()
     << " equation groups PASS\n";
  int rc = write_output(opts, os.str());
  if (rc != 0) return rc;
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "geocurv: exact curvature tensors and structure classification for "
      "semi-Riemannian metrics with semi-symmetric non-metric connections"};
  app.require_subcommand(1);

  CommonOpts compute_opts, report_opts, validate_opts;
  std::vector<std::string> tensors;

  CLI::App* compute =
      app.add_subcommand("compute", "print nonzero tensor components");
  add_source_flags(compute, compute_opts);
  compute->add_option("--tensor", tensors, "tensor name (repeatable)")
      ->required();
  compute->add_option("--format", compute_opts.format, "human|tree")
      ->check(CLI::IsMember({"human", "tree"}));
  compute->add_option("--out", compute_opts.out, "output file");
  compute->add_option("--seed", compute_opts.seed, "sampling seed");

  CLI::App* report =
      app.add_subcommand("report", "run the structure classifiers");
  add_source_flags(report, report_opts);
  report->add_option("--format", report_opts.format, "human|tree")
      ->check(CLI::IsMember({"human", "tree"}));
  report->add_option("--out", report_opts.out, "output file");
  report->add_option("--seed", report_opts.seed, "sampling seed");

  CLI::App* validate = app.add_subcommand(
      "validate", "compare the preset against the embedded golden tables");
  validate->add_option("--preset", validate_opts.preset, "morris-thorne")
      ->required();
  validate->add_option("--out", validate_opts.out, "output file");
  validate->add_option("--seed", validate_opts.seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(compute_opts, tensors);
    if (report->parsed()) return cmd_report(report_opts);
    if (validate->parsed()) return cmd_validate(validate_opts);
  } catch (const ManifestError& e) {
    std::cerr << "manifest error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
