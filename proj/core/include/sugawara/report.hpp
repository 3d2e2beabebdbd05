#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sugawara {

struct Witness {
  std::string label;
  std::string residual;
};

/// Outcome of one verification check.
struct CheckReport {
  std::string check;
  int n = 0;
  bool passed = true;
  /// Number of individual identities examined.
  std::size_t checked = 0;
  std::vector<Witness> witnesses;
  double wall_ms = 0.0;

  static CheckReport named(std::string check, int n) {
    CheckReport r;
    r.check = std::move(check);
    r.n = n;
    return r;
  }

  void fail(std::string label, std::string residual) {
    passed = false;
    witnesses.push_back({std::move(label), std::move(residual)});
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace sugawara
