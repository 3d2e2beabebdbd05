#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sugawara {

enum class GeneratorKind : std::uint8_t { E, Tau, K };

/// An atomic generator e_{ij}[r], tau or the central element K.
///
/// Generators are packed into a 32-bit code whose integer order is the
/// canonical PBW order: E-generators with negative mode first (mode
/// ascending, then row, then column), then tau, then E-generators with
/// nonnegative mode, then K. On U(g_- + C tau) this is "tau rightmost,
/// E sorted by (mode, row, column)"; placing nonnegative modes last makes
/// the left ideal generated by gl_n[t] a span of basis words, which is what
/// the vacuum-module projection relies on.
class Generator {
 public:
  static constexpr int kMaxIndex = 63;
  static constexpr int kModeBias = 1 << 17;

  static Generator e(int row, int col, int mode);
  static Generator tau() { return Generator(kTauGroup << kGroupShift); }
  static Generator central() { return Generator(kKGroup << kGroupShift); }
  static Generator from_code(std::uint32_t code) { return Generator(code); }

  [[nodiscard]] GeneratorKind kind() const;
  [[nodiscard]] bool is_e() const { return kind() == GeneratorKind::E; }
  [[nodiscard]] bool is_tau() const { return group() == kTauGroup; }
  [[nodiscard]] bool is_central() const { return group() == kKGroup; }
  [[nodiscard]] int row() const { return static_cast<int>((code_ >> 6) & 63U); }
  [[nodiscard]] int col() const { return static_cast<int>(code_ & 63U); }
  [[nodiscard]] int mode() const { return static_cast<int>((code_ >> kModeShift) & kModeMask) - kModeBias; }
  [[nodiscard]] std::uint32_t code() const { return code_; }

  /// Same generator with the mode replaced (E only).
  [[nodiscard]] Generator with_mode(int mode) const { return e(row(), col(), mode); }

  /// Bracket notation: e_{12}[-1], tau, K.
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;

 private:
  static constexpr std::uint32_t kGroupShift = 30;
  static constexpr std::uint32_t kModeShift = 12;
  static constexpr std::uint32_t kModeMask = (1U << 18) - 1;
  static constexpr std::uint32_t kNegGroup = 0;
  static constexpr std::uint32_t kTauGroup = 1;
  static constexpr std::uint32_t kNonNegGroup = 2;
  static constexpr std::uint32_t kKGroup = 3;

  explicit Generator(std::uint32_t code) : code_(code) {}
  [[nodiscard]] std::uint32_t group() const { return code_ >> kGroupShift; }

  std::uint32_t code_ = 0;
};

using Word = std::vector<Generator>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& g : w) {
      h ^= g.code();
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Canonical word order used for serialization: length first, then
/// lexicographic in the generator order.
inline bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace sugawara
