#pragma once

#include <optional>
#include <vector>

#include "regmeasure/config.hpp"
#include "regmeasure/dfa.hpp"
#include "regmeasure/monoid.hpp"
#include "regmeasure/rational.hpp"

namespace regmeasure {

/// The uniform-letter Markov chain on a DFA's reachable states.
///
/// Bottom strongly connected components are the recurrent classes. The
/// Cesàro limit of the occupancy of state q is the probability of being
/// absorbed into q's bottom component times q's stationary weight there;
/// transient states get 0. Period plays no role in the Cesàro limit.
struct ChainAnalysis {
  /// Sparse rows: transition[q] lists (target, probability).
  std::vector<std::vector<std::pair<StateId, BigRational>>> transition;
  std::vector<std::vector<StateId>> bottom_components;
  /// Probability, from the initial state, of ending in each bottom component.
  std::vector<BigRational> absorption;
  /// stationary[c][i] is the weight of bottom_components[c][i].
  std::vector<std::vector<BigRational>> stationary;
  /// Cesàro-limit occupancy per state (0 for transient or unreachable).
  std::vector<BigRational> limit_occupancy;
};

/// Builds the analysis and checks row sums, absorption total and
/// stationarity; a failed check throws InternalError.
ChainAnalysis analyze_chain(const Dfa& d);

/// Exact Cesàro density lim (1/n) sum_{k<n} |L ∩ A^k| / |A|^k.
BigRational density(const Dfa& d);

/// (1/n) sum_{k<n} |L ∩ A^k| / |A|^k.
BigRational density_partial(const Dfa& d, std::size_t horizon, const Config& config = default_config());

/// Shortlex-least w with L ∩ A* w A* = ∅, if any. One exists iff the
/// density is zero.
std::optional<Word> forbidden_word(const Dfa& d, const Config& config = default_config());

/// Density of eta^{-1}(m) for every element m.
std::vector<BigRational> fiber_densities(const FiniteMonoid& monoid);
inline std::vector<BigRational> fiber_densities(const RecognizingMorphism& morphism) {
  return fiber_densities(morphism.monoid);
}

}  // namespace regmeasure
