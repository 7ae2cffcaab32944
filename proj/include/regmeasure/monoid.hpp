#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "regmeasure/config.hpp"
#include "regmeasure/dfa.hpp"

namespace regmeasure {

using ElementId = std::uint32_t;

/// image[q] is the image of point q. Words act on the right: the element of
/// `uv` maps q to v(u(q)).
using Transformation = std::vector<StateId>;

/// A finite monoid generated by the letters of an alphabet.
///
/// Elements are numbered by breadth-first closure from the identity with
/// letters tried in alphabet order, so element 0 is the identity and the
/// representative word of every element is its shortlex-least preimage.
/// Products are served from a dense table when the monoid is small enough
/// and by walking the right Cayley graph otherwise.
class FiniteMonoid {
 public:
  /// Monoids up to this size keep a dense multiplication table.
  static constexpr std::size_t kDenseTableLimit = 4096;

  /// Submonoid of the full transformation monoid on `degree` points
  /// generated by one transformation per letter.
  static FiniteMonoid from_transformations(const Alphabet& alphabet, std::size_t degree,
                                           const std::vector<Transformation>& generators,
                                           const Config& config = default_config());

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return size_; }
  ElementId identity() const noexcept { return 0; }
  ElementId generator(Letter a) const { return right_[a]; }

  ElementId right(ElementId x, Letter a) const noexcept { return right_[x * alphabet_.size() + a]; }
  ElementId left(Letter a, ElementId x) const noexcept { return left_[x * alphabet_.size() + a]; }
  std::span<const ElementId> right_cayley() const noexcept { return right_; }
  std::span<const ElementId> left_cayley() const noexcept { return left_; }

  ElementId multiply(ElementId x, ElementId y) const;
  ElementId evaluate(std::string_view word) const;
  ElementId power(ElementId x, std::size_t exponent) const;

  /// Shortlex-least word for x.
  const Word& word(ElementId x) const { return words_.at(x); }
  const std::vector<Word>& element_words() const noexcept { return words_; }

  bool has_table() const noexcept { return !table_.empty(); }
  std::span<const ElementId> table() const noexcept { return table_; }

 private:
  FiniteMonoid() = default;
  void finish(const Config& config);

  Alphabet alphabet_;
  std::size_t size_ = 0;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
  std::vector<ElementId> parent_;
  std::vector<Letter> letter_;
  std::vector<Word> words_;
  std::vector<ElementId> table_;
};

/// A morphism from A* onto a finite monoid together with an accepting
/// subset P; it recognizes the language eta^{-1}(P).
struct RecognizingMorphism {
  FiniteMonoid monoid;
  std::vector<bool> accepting;

  ElementId letter_map(Letter a) const { return monoid.generator(a); }
  ElementId evaluate(std::string_view word) const { return monoid.evaluate(word); }
  bool accepts(std::string_view word) const { return accepting[evaluate(word)]; }
};

/// Transition monoid of the minimal DFA, i.e. the syntactic monoid.
RecognizingMorphism syntactic_monoid(const Dfa& d, const Config& config = default_config());

/// Automaton on the right Cayley graph: states are elements, the identity
/// is initial, and P is accepting. Recognizes eta^{-1}(P).
Dfa cayley_dfa(const FiniteMonoid& monoid, const std::vector<bool>& accepting);

/// Green's relations. Every class list is sorted and classes are ordered by
/// their least element.
struct GreenStructure {
  std::vector<std::vector<ElementId>> r_classes;
  std::vector<std::vector<ElementId>> l_classes;
  std::vector<std::vector<ElementId>> j_classes;
  std::vector<std::vector<ElementId>> h_classes;
  std::vector<std::uint32_t> r_of, l_of, j_of, h_of;
  /// Index into j_classes of the minimal ideal.
  std::uint32_t kernel_class = 0;
  std::vector<ElementId> kernel;

  bool in_kernel(ElementId x) const { return j_of.at(x) == kernel_class; }
};

GreenStructure green_structure(const FiniteMonoid& monoid);

/// The idempotent among x, x^2, x^3, ...
ElementId omega_power(const FiniteMonoid& monoid, ElementId x);

bool is_idempotent(const FiniteMonoid& monoid, ElementId x);
/// x^{omega+1} = x^omega for every x.
bool is_aperiodic(const FiniteMonoid& monoid);
/// Every H-class is a singleton.
bool is_h_trivial(const GreenStructure& green);
/// The identity is the only idempotent.
bool is_group(const FiniteMonoid& monoid);
bool is_commutative(const FiniteMonoid& monoid);
bool kernel_h_trivial(const FiniteMonoid& monoid);
bool kernel_h_trivial(const GreenStructure& green);

}  // namespace regmeasure
