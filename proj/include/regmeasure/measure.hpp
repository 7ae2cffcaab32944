#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regmeasure/config.hpp"
#include "regmeasure/dfa.hpp"
#include "regmeasure/gd_expr.hpp"
#include "regmeasure/monoid.hpp"
#include "regmeasure/rational.hpp"

namespace regmeasure {

/// Result of the star-free measurability test.
struct SfDecision {
  bool measurable = false;
  std::size_t monoid_size = 0;
  std::size_t kernel_size = 0;
  /// A nontrivial H-class of the kernel, as representative words. Empty
  /// when measurable. The class with the least element is reported.
  std::vector<Word> h_class;
};

/// Measurable by star-free (equivalently generalized definite) languages
/// iff every H-class in the kernel of the syntactic monoid is trivial.
/// Throws InputError for a unary alphabet.
SfDecision decide_sf_measurable(const Dfa& d, const Config& config = default_config());

struct SandwichReport {
  std::size_t level = 0;
  GdExpr inner;
  GdExpr outer;
  Dfa inner_dfa;
  Dfa outer_dfa;
  BigRational inner_density;
  BigRational outer_density;
  BigRational gap;
  bool inclusion_verified = false;
};

/// Generalized definite languages inner ⊆ L ⊆ outer built from the kernel
/// fibers of the syntactic monoid, looking at the first and last `level`
/// letters of a word. Throws ImmeasurableKernel when the kernel is not
/// H-trivial and CapExceeded when `level` exceeds config.sandwich_level.
SandwichReport gd_sandwich(const Dfa& d, std::size_t level, const Config& config = default_config());

/// One sandwich per level, in the given order. Levels are evaluated
/// concurrently.
std::vector<SandwichReport> gap_table(const Dfa& d, const std::vector<std::size_t>& levels,
                                      const Config& config = default_config());

inline const std::vector<std::size_t>& default_levels() {
  static const std::vector<std::size_t> levels{0, 2, 4, 6, 8, 10};
  return levels;
}

struct IndependenceReport {
  BigRational lhs;
  BigRational rhs;
  bool equal = false;
};

/// density(l ∩ k) against density(l) * density(k). Throws NotStarFree
/// unless l has an aperiodic syntactic monoid and NotGroupLanguage unless
/// k has a group as syntactic monoid.
IndependenceReport check_independence(const Dfa& l, const Dfa& k, const Config& config = default_config());

struct GroupClass {
  enum class Kind { commutative, nilpotent, solvable, all };
  Kind kind = Kind::all;
  std::size_t bound = 0;
  /// "gcom", "gnil:n", "gsol:n" or "g".
  static GroupClass parse(const std::string& text);
  std::string name() const;
};

/// Whether the syntactic group of a group language lies in `cls`. A group
/// language is measurable by a group subvariety exactly when it already
/// belongs to it.
bool subvariety_measurable(const Dfa& d, const GroupClass& cls, const Config& config = default_config());

/// The 9-element monoid generated by e = [0,1,0,1] and f = [3,2,2,3] on
/// four points, with the fiber of e, checked fact by fact.
struct CounterexampleReport {
  std::size_t monoid_size = 0;
  std::vector<Word> elements;
  bool relations_hold = false;
  std::size_t kernel_size = 0;
  bool kernel_is_nonidentity = false;
  std::vector<Word> h_e;
  std::vector<Word> h_f;
  std::size_t kernel_r_class_count = 0;
  std::size_t h_class_size_in_kernel = 0;
  bool fiber_measurable = true;
  std::size_t fiber_syntactic_size = 0;
  BigRational identity_fiber;
  BigRational kernel_fiber_sum;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Builds the report; failed checks are listed in `failures`.
CounterexampleReport build_counterexample_report(const Config& config = default_config());
/// As above, but any failed check throws InternalError.
CounterexampleReport counterexample_report(const Config& config = default_config());

}  // namespace regmeasure
