#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sugawara/rational.hpp"

namespace sugawara::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Json, Text };

/// Bad flag values detected after parsing; maps to kExitUsage.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ComputeOptions {
  int n = 2;
  std::string family = "cdet";  // cdet | trace
  int k = 1;
};

struct VerifyOptions {
  int n = 2;
  std::string suite = "all";
  /// Newton truncation; 0 selects n + 3.
  int truncation = 0;
  int k_max = 4;
  int r_max = 2;
};

struct WAlgebraOptions {
  int n = 2;
  std::string family = "cdet";  // cdet | trace
  int k_max = 3;
  bool screening = false;
};

struct GaudinOptions {
  int n = 2;
  std::vector<Rational> sites;
  std::string convention = "on";  // on | off | both
  std::string dump_path;
};

struct EigenvalueOptions {
  std::string family = "cdet";  // cdet | trace
  int k = 1;
  std::string chi_path;
  std::vector<Rational> residues;
  int order = 0;
};

/// Names accepted by --suite, "all" first.
const std::vector<std::string>& suite_names();

// Each command writes its result to out and returns an exit code.
int run_compute(const ComputeOptions& opts, Format format, std::ostream& out);
int run_verify(const VerifyOptions& opts, Format format, std::ostream& out);
int run_walgebra(const WAlgebraOptions& opts, Format format, std::ostream& out);
int run_gaudin(const GaudinOptions& opts, Format format, std::ostream& out);
int run_eigenvalue(const EigenvalueOptions& opts, Format format, std::ostream& out);

/// "0,1,1/2" -> rationals. Throws UsageError.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace sugawara::cli
