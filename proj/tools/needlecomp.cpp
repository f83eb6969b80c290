// Command-line front end for the needlecomp library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "needlecomp/config.hpp"
#include "needlecomp/errors.hpp"
#include "needlecomp/model1d.hpp"
#include "needlecomp/runner.hpp"

namespace {

constexpr const char* kVersion = "needlecomp 1.0.0";

enum ExitCode : int { ok = 0, check_failed = 1, bad_input = 2, io_failure = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw needlecomp::IoError(path, "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw needlecomp::IoError(path, "read failed");
  return buffer.str();
}

int run_command(const std::string& config_path, const std::vector<std::string>& sets,
                const std::string& format, const std::string& output) {
  std::vector<needlecomp::ConfigOverride> overrides;
  for (const auto& s : sets) overrides.push_back(needlecomp::parse_override(s));
  if (!format.empty()) overrides.push_back({"output", "format", format});
  if (!output.empty()) overrides.push_back({"output", "path", output});

  const auto config = needlecomp::parse_config(read_file(config_path), overrides);
  const auto record = needlecomp::run(config);
  if (config.output_path.empty()) {
    std::cout << needlecomp::render(record, config.format);
  } else {
    needlecomp::emit(record, config.format, config.output_path);
  }
  if (record.exit_status() != 0) std::cerr << needlecomp::failure_summary_json(record) << '\n';
  return record.exit_status() == 0 ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Needle-decomposition checks for Heintze-Karcher type inequalities"};
  app.require_subcommand(1);

  std::string config_path, format, output;
  std::vector<std::string> sets;
  auto* run = app.add_subcommand("run", "Run the checks named in a configuration file");
  run->add_option("config", config_path, "Configuration file")->required();
  run->add_option("--set", sets, "Override a key: section.key=value");
  run->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"report", "csv", "plotdata"}));
  run->add_option("--output", output, "Output path (default: standard output)");

  double H = 0, K = 0, N = 2, r = 0, v = 0.5;
  auto* jac = app.add_subcommand("jacobian", "Evaluate the model Jacobian J_{H,K,N}(r)");
  jac->add_option("--H", H)->required();
  jac->add_option("--K", K)->required();
  jac->add_option("--N", N)->required();
  jac->add_option("--r", r)->required();

  auto* prof = app.add_subcommand("profile", "Evaluate the model isoperimetric profile");
  prof->add_option("--K", K)->required();
  prof->add_option("--N", N)->required();
  prof->add_option("--v", v)->required();

  app.add_subcommand("version", "Print the version");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_command(config_path, sets, format, output);
    if (*jac) {
      const needlecomp::JacobianParams p(H, needlecomp::CurvatureDimension(K, N));
      std::cout << needlecomp::format_real(needlecomp::jacobian(p, r)) << '\n';
      return ok;
    }
    if (*prof) {
      const needlecomp::CurvatureDimension cd(K, N);
      std::cout << needlecomp::format_real(needlecomp::model_profile(cd, v)) << '\n';
      return ok;
    }
    std::cout << kVersion << '\n';
    return ok;
  } catch (const needlecomp::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io_failure;
  } catch (const needlecomp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  }
}
