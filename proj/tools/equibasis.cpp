// Command-line front end: figure data, spectra, multipartite cuts, verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "equibasis/equibasis.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const char* flag) {
  const auto value = equibasis::parse_double(text);
  if (!value) throw usage_error(std::string(flag) + ": not a number: '" + text + "'");
  return *value;
}

equibasis::Construction parse_construction(const std::string& text) {
  if (text == "gauss") return equibasis::Construction::gauss;
  if (text == "graph") return equibasis::Construction::graph;
  throw usage_error("--construction must be gauss or graph, got '" + text + "'");
}

equibasis::VerifyScope parse_scope(const std::string& text) {
  using equibasis::VerifyScope;
  if (text == "all") return VerifyScope::all;
  if (text == "gauss") return VerifyScope::gauss;
  if (text == "graph") return VerifyScope::graph;
  if (text == "reciprocity") return VerifyScope::reciprocity;
  if (text == "multipartite") return VerifyScope::multipartite;
  throw usage_error("--scope must be one of all, gauss, graph, reciprocity, multipartite; got '" + text + "'");
}

void emit(const equibasis::Table& table, const std::string& path) {
  std::ostringstream buffer;
  equibasis::write_csv(buffer, table);
  if (path == "-") {
    std::cout << buffer.str();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw usage_error("cannot open output file '" + path + "'");
  file << buffer.str();
  if (!file) throw usage_error("failed writing '" + path + "'");
}

int print_report(const equibasis::VerifyReport& report) {
  for (const auto& check : report.checks) {
    const char* tag = check.informational ? "INFO" : (check.passed ? "PASS" : "FAIL");
    std::cout << tag << "  " << check.name << "  value=" << equibasis::format_double(check.value);
    if (!check.informational) std::cout << "  threshold=" << equibasis::format_double(check.threshold);
    std::cout << '\n';
  }
  const bool ok = report.passed();
  std::cout << (ok ? "verification passed" : "verification FAILED") << '\n';
  return ok ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equientangled bipartite qudit bases: figure data, spectra and numerical certificates"};
  app.require_subcommand(1);

  int figure_id = 0;
  std::optional<std::size_t> figure_dim;
  std::string out_path = "-";
  auto* figure = app.add_subcommand("figure", "Write the data behind figure 1..8 as CSV");
  figure->add_option("--id", figure_id, "Figure number 1..8")->required();
  figure->add_option("--D", figure_dim, "Override the dimension (or the list of dimensions for 3, 7, 8)");
  figure->add_option("--out", out_path, "Output CSV path, '-' for stdout")->capture_default_str();

  std::string scope = "all";
  std::size_t dmax = 20;
  std::string tol_text;
  auto* verify = app.add_subcommand("verify", "Run the numerical certificate suites");
  verify->add_option("--scope", scope, "all | gauss | graph | reciprocity | multipartite")->capture_default_str();
  verify->add_option("--dmax", dmax, "Largest dimension exercised (>= 2)")->capture_default_str();
  verify->add_option("--tol", tol_text, "Override every residual tolerance");

  std::string construction = "graph";
  std::size_t dim = 2;
  std::string t_text;
  auto* spectrum = app.add_subcommand("spectrum", "Schmidt coefficients, entropy and G-concurrence of one family member");
  spectrum->add_option("--construction", construction, "gauss | graph")->required();
  spectrum->add_option("--D", dim, "Local dimension")->required();
  spectrum->add_option("--t", t_text, "Interpolation parameter in [0, 1]")->required();
  spectrum->add_option("--out", out_path, "Output CSV path, '-' for stdout")->capture_default_str();

  std::size_t sites = 3;
  std::vector<std::size_t> shifts;
  std::size_t cap = equibasis::default_amplitude_cap;
  auto* ghz = app.add_subcommand("ghz", "Bipartition entropies (base D) of the complete-graph multipartite family");
  ghz->add_option("--sites", sites, "Number of qudits (>= 2)")->required();
  ghz->add_option("--D", dim, "Local dimension")->required();
  ghz->add_option("--t", t_text, "Interpolation parameter in [0, 1]")->required();
  ghz->add_option("--shifts", shifts, "Per-site Z powers (default all zero)");
  ghz->add_option("--max-amplitudes", cap, "Memory cap on D^sites")->capture_default_str();
  ghz->add_option("--out", out_path, "Output CSV path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (figure->parsed()) {
      emit(equibasis::figure_table(figure_id, figure_dim), out_path);
    } else if (verify->parsed()) {
      equibasis::VerifyOptions options{parse_scope(scope), dmax, std::nullopt};
      if (!tol_text.empty()) options.tolerance = parse_real(tol_text, "--tol");
      return print_report(equibasis::run_verification(options));
    } else if (spectrum->parsed()) {
      emit(equibasis::spectrum_table(parse_construction(construction), dim, parse_real(t_text, "--t")), out_path);
    } else if (ghz->parsed()) {
      emit(equibasis::ghz_table(sites, dim, parse_real(t_text, "--t"), shifts, cap), out_path);
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {  // contract and shape errors
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const equibasis::resource_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_ok;
}
