#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "geomlab/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kUsage = 2;

struct Options {
  std::string builtin;
  std::string model;
  std::string format = "markdown";
  std::string coeffs;
  std::string volume;
  std::string out;
};

void add_common(CLI::App* sub, Options& o) {
  auto* b = sub->add_option("--builtin", o.builtin, "built-in model name");
  auto* m = sub->add_option("--model", o.model, "model file (geomlab-model/1 JSON)");
  b->excludes(m);
  m->excludes(b);
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "markdown"}));
  sub->add_option("--coeffs", o.coeffs, "field coefficients in basis order, e.g. 0,1,0,1/2");
  sub->add_option("--volume", o.volume, "positive rational volume of the integration domain");
  sub->add_option("--out", o.out, "write the report to this file instead of stdout");
}

int run_command(const std::string& command, const Options& o) {
  geomlab::LoadedModel model =
      o.builtin.empty() ? geomlab::load_model_file(o.model) : geomlab::builtin(o.builtin);

  geomlab::ReportRequest request{*geomlab::ReportSections::for_command(command), std::nullopt, std::nullopt};
  if (!o.coeffs.empty()) {
    auto coeffs = geomlab::parse_coefficients(o.coeffs);
    if (coeffs.size() != model.space.dimension()) {
      std::cerr << "geomlab: --coeffs has " << coeffs.size() << " entries, model dimension is "
                << model.space.dimension() << "\n";
      return kValidation;
    }
    request.field = std::move(coeffs);
    request.sections.fields = true;
  }
  if (!o.volume.empty()) {
    geomlab::Rational v;
    try {
      v = geomlab::Rational::parse(o.volume);
    } catch (const geomlab::MalformedRational& e) {
      throw geomlab::ModelError(geomlab::ModelErrorKind::MalformedRational, std::string("--volume: ") + e.what());
    }
    if (v.sign() <= 0) {
      std::cerr << "geomlab: --volume must be positive, got " << v << "\n";
      return kValidation;
    }
    request.volume = v;
  }

  const auto report = geomlab::build_report(model, request);
  const std::string text = o.format == "json" ? geomlab::render_json(report) : geomlab::render_markdown(report);
  if (o.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!(file << text)) {
    std::cerr << "geomlab: cannot write '" << o.out << "'\n";
    return kValidation;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometry of Lie groups with left-invariant pseudo-Riemannian metrics"};
  app.require_subcommand(1);
  Options opts;
  const std::pair<const char*, const char*> commands[] = {
      {"analyze", "full report"},
      {"connection", "Levi-Civita connection and bi-invariance"},
      {"curvature", "curvature, Ricci, Weyl and Ledger conditions"},
      {"solitons", "Einstein, invariant and algebraic Ricci soliton solvers"},
      {"walker", "parallel null line fields and parallel vector fields"},
      {"classify", "harmonic invariant vector fields"},
      {"field", "report for one vector field (--coeffs) or every basis field"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (opts.builtin.empty() == opts.model.empty()) {
    std::cerr << "geomlab " << command << ": exactly one of --builtin NAME or --model PATH is required\n";
    return kUsage;
  }

  try {
    return run_command(command, opts);
  } catch (const geomlab::ModelError& e) {
    std::cerr << "geomlab: model error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "geomlab: " << e.what() << "\n";
  }
  return kValidation;
}
