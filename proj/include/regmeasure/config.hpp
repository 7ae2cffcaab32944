#pragma once

#include <cstddef>
#include <cstdint>

namespace regmeasure {

/// Resource caps and the seed for sampled checks.
struct Config {
  std::size_t product_states = 1'000'000;
  std::size_t monoid_size = 100'000;
  std::size_t group_order = 10'000;
  std::size_t enumerate_max_len = 24;
  std::size_t partial_horizon = 1u << 16;
  std::size_t sandwich_level = 20;
  /// Tables up to this size get an exhaustive associativity check; larger
  /// ones are sampled.
  std::size_t exhaustive_associativity = 200;
  std::size_t associativity_samples = 10'000;
  std::uint64_t seed = 20240601;
};

inline const Config& default_config() {
  static const Config config{};
  return config;
}

}  // namespace regmeasure
