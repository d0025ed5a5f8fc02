#pragma once

#include <cstdint>
#include <optional>

#include "essentia/instance.hpp"
#include "essentia/rational.hpp"

namespace essentia {

struct GapReport {
  Rational fractional;
  int integral = 0;
  std::optional<Rational> ratio;  // absent when fractional is 0
  std::optional<int> pinned;
};

struct GapOptions {
  int size_cap = 64;
  std::optional<std::uint64_t> node_cap;
};

// Standard LP (no pin) or v-avoiding LP against the exact optimum with the
// same vertex forbidden. integral is -1 when no solution avoids the pin.
GapReport measure_gap(const Instance& inst, std::optional<int> pinned,
                      const GapOptions& options = {});

}  // namespace essentia
