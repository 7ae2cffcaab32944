#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regmeasure/monoid.hpp"

namespace regmeasure {

/// Two-generated group fixtures over the alphabet {a, b}.
///   cyclic k:     Z/k with a -> 1, b -> k-1
///   dihedral 2m:  D_{2m} (order 2m) with a -> rotation r, b -> reflection s
///   symmetric 3:  S_3 with a -> (1 2), b -> (1 2 3)
struct GroupPreset {
  enum class Family { cyclic, dihedral, symmetric };
  Family family;
  std::size_t parameter;

  /// "cyclic:6", "dihedral:8", "symmetric:3".
  static GroupPreset parse(const std::string& text);
  std::string name() const;
};

FiniteMonoid build_group(const GroupPreset& preset, const Config& config = default_config());

/// Throws NotGroupLanguage unless the identity is the only idempotent.
void require_group(const FiniteMonoid& monoid);

ElementId inverse(const FiniteMonoid& group, ElementId x);
/// [x, y] = x y x^{-1} y^{-1}.
ElementId commutator(const FiniteMonoid& group, ElementId x, ElementId y);

/// Subgroup generated by `generators`, as a membership mask.
std::vector<bool> subgroup_closure(const FiniteMonoid& group, const std::vector<ElementId>& generators);

/// Subgroup generated by all [x, y] with x in lhs, y in rhs.
std::vector<bool> commutator_subgroup(const FiniteMonoid& group, const std::vector<bool>& lhs,
                                      const std::vector<bool>& rhs);

/// G = gamma_1 >= gamma_2 >= ... until the series stabilizes.
std::vector<std::vector<bool>> lower_central_series(const FiniteMonoid& group);
/// G = G^(0) >= G^(1) >= ... until the series stabilizes.
std::vector<std::vector<bool>> derived_series(const FiniteMonoid& group);

/// Least c with gamma_{c+1} trivial; empty if the group is not nilpotent.
/// The trivial group has class 0.
std::optional<std::size_t> nilpotency_class(const FiniteMonoid& group);
/// Least n with G^(n) trivial; empty if the group is not solvable.
/// The trivial group has length 0.
std::optional<std::size_t> derived_length(const FiniteMonoid& group);

/// eta^{-1}(1_G): the Cayley automaton with the identity accepting.
Dfa word_problem_language(const FiniteMonoid& group);
inline Dfa word_problem_language(const RecognizingMorphism& morphism) {
  return word_problem_language(morphism.monoid);
}

}  // namespace regmeasure
