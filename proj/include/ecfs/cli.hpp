#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ecfs::cli {

enum class Command { rank, evaluate, stability, synth };
enum class OutputFormat { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNonConvergence = 2;

/// Raw flag values. validate() checks all of them and reports every problem
/// at once before anything is computed.
struct RunConfig {
  Command command = Command::rank;

  std::string data_path;
  std::string format = "csv";  // csv | matrix
  std::string labels_path;
  std::string label_col;
  std::string out_path;  // empty writes to stdout; synth uses it as a prefix
  std::string output_format = "json";

  std::string alpha = "0.5";  // number or "cv"
  std::string method = "ecfs";
  std::vector<std::string> methods = {"ecfs", "fisher", "mi"};
  int bins = 0;
  double tol = 1e-10;
  int max_iter = 10'000;
  std::uint64_t seed = 0;

  double c = 1.0;
  std::vector<double> alpha_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<double> c_grid = {0.01, 0.1, 1.0, 10.0};
  int folds = 5;
  int cv_cardinality = 100;
  int epochs = 50;

  std::vector<int> cardinalities;  // empty selects the command default
  double train_fraction = 2.0 / 3.0;
  int repeats = 100;
  bool stratified = true;
  int workers = 1;
  bool timing = false;
  std::vector<std::string> ranking_files;

  int samples = 200;
  int features = 500;
  int informative = 20;
  double separation = 2.0;
  double noise = 1.0;
};

std::vector<std::string> validate(const RunConfig& cfg);

/// Runs one command; returns the process exit code.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (including the program name) and executes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// ECFS_SEED when set and numeric, otherwise 0.
std::uint64_t default_seed();

}  // namespace ecfs::cli
