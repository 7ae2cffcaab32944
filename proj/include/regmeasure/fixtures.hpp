#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "regmeasure/dfa.hpp"
#include "regmeasure/monoid.hpp"

namespace regmeasure {

/// Words over {a, b} with #a - #b divisible by k.
Dfa mod_count_language(std::size_t k);
/// A*abA* over {a, b}.
Dfa contains_ab();
/// abA* over {a, b}.
Dfa starts_with_ab();
/// (ba)* over {a, b}.
Dfa ba_star();

/// Generated by e = [0,1,0,1] and f = [3,2,2,3] over the alphabet {e, f}.
FiniteMonoid counterexample_monoid(const Config& config = default_config());
/// Cayley automaton of the counterexample monoid accepting the fiber of e.
Dfa counterexample_fiber();

struct NamedFixture {
  std::string name;
  std::string description;
  Dfa dfa;
};

/// Every fixture in a fixed order.
std::vector<NamedFixture> fixture_corpus(const Config& config = default_config());

/// Writes <name>.dfa for every fixture and returns the paths written.
/// Output is deterministic. Throws InputError on I/O failure.
std::vector<std::filesystem::path> emit_fixtures(const std::filesystem::path& directory,
                                                 const Config& config = default_config());

}  // namespace regmeasure
