#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tiltkit::cli {

enum class OutputFormat { json, text };

struct JobConfig {
  std::string command;  // blocks, components, dict, kl, pkl-import, tilt, simple, weyl, wgroup
  std::string type;
  std::string isogeny = "adjoint";
  std::string datum_file;
  std::optional<long long> ell;
  std::optional<int> max_length;
  std::optional<long long> box;
  std::string mode;  // "", "kl_fallback" or "file"
  std::string pcan_path;
  std::string hat_path;
  std::optional<std::vector<long long>> lambda;
  std::optional<std::string> word;
  OutputFormat format = OutputFormat::json;
  unsigned threads = 1;

  /// Throws ValidationError on inconsistent settings.
  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitDataFile = 3;

/// Parse argv; on failure writes an error record to err and returns nullopt
/// with exit_code set (0 for --help).
std::optional<JobConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Run one job. The report goes to out, errors as JSON to err.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tiltkit::cli
