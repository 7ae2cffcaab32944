#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "regmeasure/config.hpp"
#include "regmeasure/dfa.hpp"

namespace regmeasure {

/// Regular expression tree: empty set, epsilon, letter, union,
/// concatenation, star. Immutable and cheaply copyable.
class RegexAst {
 public:
  enum class Kind { empty_set, epsilon, letter, alternation, concatenation, star };

  static RegexAst empty_set();
  static RegexAst epsilon();
  static RegexAst letter(char symbol);
  static RegexAst alternation(RegexAst lhs, RegexAst rhs);
  static RegexAst concatenation(RegexAst lhs, RegexAst rhs);
  static RegexAst star(RegexAst inner);

  Kind kind() const noexcept { return node_->kind; }
  char symbol() const noexcept { return node_->symbol; }
  const RegexAst& lhs() const { return node_->children.at(0); }
  const RegexAst& rhs() const { return node_->children.at(1); }
  const RegexAst& inner() const { return node_->children.at(0); }

  /// Fully parenthesized rendering in the input grammar.
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    char symbol = 0;
    std::vector<RegexAst> children;
  };
  explicit RegexAst(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: union := concat ('|' concat)*; concat := star+;
/// star := atom '*'*; atom := '(' union ')' | letter | '_' | '#'.
/// Blanks are ignored.
RegexAst parse_regex(std::string_view text);

/// Thompson construction, subset construction, completion with a sink.
/// The result is complete but not necessarily minimal.
Dfa compile_regex(const RegexAst& ast, const Alphabet& alphabet,
                  const Config& config = default_config());

inline Dfa compile_regex(std::string_view text, const Alphabet& alphabet,
                         const Config& config = default_config()) {
  return compile_regex(parse_regex(text), alphabet, config);
}

}  // namespace regmeasure
