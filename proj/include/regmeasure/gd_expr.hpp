#pragma once

#include <memory>
#include <string>
#include <vector>

#include "regmeasure/config.hpp"
#include "regmeasure/dfa.hpp"
#include "regmeasure/monoid.hpp"

namespace regmeasure {

/// A set of words used by prefix and suffix atoms. Either an explicit list,
/// or every word of one fixed length whose image under a monoid morphism
/// lies in a target set. The second form is never materialized.
class WordSet {
 public:
  static WordSet listed(std::vector<Word> words);
  static WordSet image_slice(std::shared_ptr<const FiniteMonoid> monoid, std::vector<bool> targets,
                             std::size_t length);

  bool contains(std::string_view word) const;
  /// DFA for W A*.
  Dfa prefix_language(const Alphabet& alphabet, const Config& config) const;
  /// DFA for A* W.
  Dfa suffix_language(const Alphabet& alphabet, const Config& config) const;
  std::string describe() const;

 private:
  std::vector<Word> words_;
  std::shared_ptr<const FiniteMonoid> monoid_;
  std::vector<bool> targets_;
  std::size_t length_ = 0;
};

/// A finite language: an explicit list, or L ∩ A^{<bound} for a regular L.
class FiniteSet {
 public:
  static FiniteSet listed(std::vector<Word> words);
  static FiniteSet bounded(Dfa language, std::size_t bound);

  Dfa compile(const Alphabet& alphabet) const;
  std::string describe() const;

 private:
  std::vector<Word> words_;
  std::shared_ptr<const Dfa> language_;
  std::size_t bound_ = 0;
};

/// Boolean combination of prefix atoms W A*, suffix atoms A* W and finite
/// sets. Every such expression denotes a generalized definite language, so
/// a GdExpr is a syntactic certificate of membership in GD.
class GdExpr {
 public:
  static GdExpr prefix(WordSet words);
  static GdExpr suffix(WordSet words);
  static GdExpr finite(FiniteSet words);
  static GdExpr nothing();
  static GdExpr everything();
  static GdExpr unite(GdExpr lhs, GdExpr rhs);
  static GdExpr intersect(GdExpr lhs, GdExpr rhs);
  static GdExpr complement(GdExpr inner);
  static GdExpr any_of(const std::vector<GdExpr>& parts);
  static GdExpr all_of(const std::vector<GdExpr>& parts);

  /// Minimal DFA of the denoted language. Shared subexpressions are
  /// compiled once.
  Dfa compile(const Alphabet& alphabet, const Config& config = default_config()) const;
  std::string to_string() const;

 private:
  struct Node;
  explicit GdExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace regmeasure
