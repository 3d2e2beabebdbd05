#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sugawara::props {

struct PropertyResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  /// First failing instance, if any.
  std::string first_failure;

  [[nodiscard]] bool passed() const { return failures == 0 && instances > 0; }
};

// Each property runs `count` instances drawn from a fixed seed.
PropertyResult jacobi_on_generators(int count, std::uint64_t seed = 0xA11CE);
PropertyResult jacobi_on_elements(int count, std::uint64_t seed = 0xB0B);
PropertyResult associativity(int count, std::uint64_t seed = 0xC0FFEE);
PropertyResult translation_is_derivation(int count, std::uint64_t seed = 0xD00D);
PropertyResult commutator_is_derivation(int count, std::uint64_t seed = 0xDE71);
PropertyResult row_swap_antisymmetry(int count, std::uint64_t seed = 0x5EED);
PropertyResult column_swap_antisymmetry_manin(int count, std::uint64_t seed = 0xFACE);
PropertyResult serialization_round_trip(int count, std::uint64_t seed = 0x5E71A1);

}  // namespace sugawara::props
