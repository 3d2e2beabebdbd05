#include "sugawara/generator.hpp"

#include <stdexcept>

namespace sugawara {

Generator Generator::e(int row, int col, int mode) {
  if (row < 1 || row > kMaxIndex || col < 1 || col > kMaxIndex)
    throw std::out_of_range("generator index out of range");
  if (mode <= -kModeBias || mode >= kModeBias) throw std::out_of_range("generator mode out of range");
  const std::uint32_t group = mode < 0 ? kNegGroup : kNonNegGroup;
  const auto biased = static_cast<std::uint32_t>(mode + kModeBias);
  return Generator((group << kGroupShift) | (biased << kModeShift) | (static_cast<std::uint32_t>(row) << 6) |
                   static_cast<std::uint32_t>(col));
}

GeneratorKind Generator::kind() const {
  switch (group()) {
    case kTauGroup:
      return GeneratorKind::Tau;
    case kKGroup:
      return GeneratorKind::K;
    default:
      return GeneratorKind::E;
  }
}

std::string Generator::to_string() const {
  switch (kind()) {
    case GeneratorKind::Tau:
      return "tau";
    case GeneratorKind::K:
      return "K";
    case GeneratorKind::E:
      break;
  }
  std::string idx = (row() < 10 && col() < 10) ? std::to_string(row()) + std::to_string(col())
                                               : std::to_string(row()) + "," + std::to_string(col());
  return "e_{" + idx + "}[" + std::to_string(mode()) + "]";
}

}  // namespace sugawara
