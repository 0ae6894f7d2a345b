// milreg: runs one job file and prints a JSON report.
//
//   milreg --job job.json [--csv rows.csv] [--threads N] [--grid-N N]
//          [--mask-delta D] [--lattice-R R]
//
// Exit codes: 0 success, 2 schema, 3 domain, 4 internal.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "milreg/error.hpp"
#include "milreg/io/job.hpp"

namespace {

int fail(int code, const milreg::io::Json& body) {
  std::cout << body.dump(2) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor K-theory and regulator workbench"};
  std::string job_path = "-";
  std::string csv_path;
  std::optional<int> threads, grid_n, lattice_r;
  std::optional<double> mask_delta;
  app.add_option("--job", job_path, "job file ('-' or absent: standard input)");
  app.add_option("--csv", csv_path, "write CSV rows here (converge)");
  app.add_option("--threads", threads, "worker threads (0: hardware concurrency)");
  app.add_option("--grid-N", grid_n, "quadrature cells per real direction");
  app.add_option("--mask-delta", mask_delta, "mask radius around singular points");
  app.add_option("--lattice-R", lattice_r, "lattice rows in the sigma product");
  app.set_version_flag("--version", milreg::io::tool_version());
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, milreg::io::error_json("UsageError", e.what()));
  }

  using milreg::io::Json;
  try {
    Json job;
    if (job_path == "-") {
      job = Json::parse(std::cin);
    } else {
      std::ifstream in(job_path);
      if (!in) return fail(2, milreg::io::error_json("SchemaError", "cannot open job file " + job_path));
      job = Json::parse(in);
    }
    milreg::io::Overrides o{grid_n, mask_delta, lattice_r, threads};
    const auto rep = milreg::io::run_job(job, o);
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out) return fail(4, milreg::io::error_json("InternalError", "cannot write " + csv_path));
      out << rep.csv;
    }
    std::cout << rep.json.dump(2) << '\n';
    return 0;
  } catch (const Json::parse_error& e) {
    return fail(2, milreg::io::error_json("SchemaError", std::string("invalid JSON: ") + e.what()));
  } catch (const milreg::io::SchemaError& e) {
    return fail(2, milreg::io::error_json("SchemaError", e.what()));
  } catch (const milreg::DomainError& e) {
    return fail(3, milreg::io::error_json(std::string(milreg::to_string(e.kind())), e.what()));
  } catch (const std::exception& e) {
    return fail(4, milreg::io::error_json("InternalError", e.what()));
  }
}
