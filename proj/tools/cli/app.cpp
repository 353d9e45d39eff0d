#include "app.hpp"

#include "matrix_document.hpp"
#include "report.hpp"

#include "bott/enumerate.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <ostream>

namespace bott::cli {

namespace {

struct MatrixInput {
  std::string file;
  std::string inline_matrix;

  BottMatrix load() const {
    if (!inline_matrix.empty() && !file.empty()) throw ParseError("give either a matrix file or --matrix, not both");
    if (!inline_matrix.empty()) return parse_inline_matrix(inline_matrix).matrix;
    if (file.empty()) throw ParseError("no matrix given (pass a file or --matrix)");
    return read_matrix_file(file).matrix;
  }
};

void add_matrix_input(CLI::App* cmd, MatrixInput& input) {
  cmd->add_option("file", input.file, "Matrix file: n lines of n 0/1 tokens, '#' comments");
  cmd->add_option("--matrix", input.inline_matrix, "Inline matrix, rows separated by ';' (e.g. \"0110;0011;0000;0000\")");
}

void emit(std::ostream& out, const Json& report, bool json) {
  if (json) {
    out << report.dump(2) << '\n';
  } else {
    out << render_text(report);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orientability, symplectic and Kahler structure of real Bott manifolds M(A)", "bott"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of aligned text");

  MatrixInput check_in, betti_in, omega_in, kahler_in, flux_in;
  auto* check = app.add_subcommand("check", "Orientability, symplecticness, flux rank and a column pairing");
  add_matrix_input(check, check_in);

  bool basis = false;
  auto* betti = app.add_subcommand("betti", "Betti numbers and Poincare polynomial of M(A)");
  add_matrix_input(betti, betti_in);
  betti->add_flag("--basis", basis, "List invariant monomials per degree");

  auto* omega = app.add_subcommand("omega", "Invariant symplectic form built from the column pairing");
  add_matrix_input(omega, omega_in);
  auto* kahler = app.add_subcommand("kahler", "Complex coordinates and the action of each generator on them");
  add_matrix_input(kahler, kahler_in);
  auto* flux = app.add_subcommand("flux", "Flux-group rank and generator directions");
  add_matrix_input(flux, flux_in);

  std::size_t census_n = 0;
  std::size_t workers = 1;
  bool oracle = false;
  auto* census = app.add_subcommand("census", "Count orientable and symplectic matrices of size n");
  census->add_option("n", census_n, "Matrix size")->required();
  census->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  census->add_flag("--oracle", oracle, "Also run the cohomological oracle on every matrix");

  std::size_t verify_n = 0;
  auto* verify = app.add_subcommand("verify", "Cross-check pairing criterion against both cohomological oracles");
  verify->add_option("n", verify_n, "Matrix size (at most 6)")->required();

  std::size_t list_n = 0;
  bool nonzero = false;
  auto* list = app.add_subcommand("list", "Print every symplectic matrix of size n in the matrix file format");
  list->add_option("n", list_n, "Matrix size")->required();
  list->add_flag("--nonzero", nonzero, "Drop the zero matrix");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (check->parsed()) {
      emit(out, check_report(check_in.load()), json);
    } else if (betti->parsed()) {
      emit(out, betti_report(betti_in.load(), basis), json);
    } else if (omega->parsed()) {
      emit(out, omega_report(omega_in.load()), json);
    } else if (kahler->parsed()) {
      emit(out, kahler_report(kahler_in.load()), json);
    } else if (flux->parsed()) {
      emit(out, flux_report(flux_in.load()), json);
    } else if (census->parsed()) {
      enumerate::CensusReport report;
      try {
        report = enumerate::census(census_n, {oracle, workers, std::nullopt});
      } catch (const std::exception& e) {
        throw PreconditionError(e.what());
      }
      // Timing stays out of the JSON so that reports are reproducible.
      auto doc = census_report(report);
      if (!json) doc["elapsed_ms"] = report.elapsed.count();
      emit(out, doc, json);
      if (!report.mismatches.empty()) {
        err << "mismatch at " << report.mismatches.front().matrix << ": " << report.mismatches.front().reason << '\n';
        return kMismatch;
      }
    } else if (verify->parsed()) {
      std::vector<enumerate::Mismatch> mismatches;
      try {
        mismatches = enumerate::cross_validate(verify_n);
      } catch (const std::exception& e) {
        throw PreconditionError(e.what());
      }
      emit(out, verify_report(verify_n, mismatches), json);
      if (!mismatches.empty()) {
        err << "counterexample:\n" << format_matrix(enumerate::decode(verify_n, mismatches.front().counter))
            << mismatches.front().reason << '\n';
        return kMismatch;
      }
    } else if (list->parsed()) {
      std::vector<BottMatrix> matrices;
      try {
        matrices = enumerate::list_symplectic(list_n, nonzero);
      } catch (const std::exception& e) {
        throw PreconditionError(e.what());
      }
      if (json) {
        emit(out, list_report(list_n, nonzero, matrices), true);
      } else {
        for (std::size_t i = 0; i < matrices.size(); ++i) {
          if (i > 0) out << '\n';
          out << format_matrix(matrices[i]);
        }
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << e.what() << '\n';
    return kPrecondition;
  }
  return kSuccess;
}

}  // namespace bott::cli
