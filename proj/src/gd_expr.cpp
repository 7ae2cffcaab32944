#include "regmeasure/gd_expr.hpp"

#include <map>
#include <optional>
#include <unordered_map>

#include "regmeasure/automata.hpp"
#include "regmeasure/errors.hpp"

namespace regmeasure {

namespace {

// DFA for W A* where W is the set of words of length `length` whose image,
// computed from `start` by `step`, is in `targets`. States are
// (image, depth) pairs for depth < length plus two absorbing verdicts.
template <typename Step>
Dfa image_prefix_dfa(const Alphabet& alphabet, std::size_t length, ElementId start, Step step,
                     const std::vector<bool>& targets, const Config& config) {
  const std::size_t k = alphabet.size();
  if (length == 0) return targets[start] ? universal_dfa(alphabet) : empty_dfa(alphabet);
  constexpr StateId reject = 0;
  constexpr StateId accept = 1;
  std::map<std::pair<ElementId, std::size_t>, StateId> ids;
  std::vector<std::pair<ElementId, std::size_t>> states{{0, 0}, {0, 0}};
  auto intern = [&](ElementId x, std::size_t depth) -> StateId {
    if (depth == length) return targets[x] ? accept : reject;
    auto [it, inserted] = ids.try_emplace({x, depth}, static_cast<StateId>(states.size()));
    if (inserted) {
      if (states.size() >= config.product_states) {
        throw CapExceeded("prefix atom automaton", states.size() + 1, config.product_states);
      }
      states.emplace_back(x, depth);
    }
    return it->second;
  };
  const StateId initial = intern(start, 0);
  std::vector<StateId> delta(2 * k);
  for (Letter a = 0; a < k; ++a) {
    delta[reject * k + a] = reject;
    delta[accept * k + a] = accept;
  }
  for (std::size_t i = 2; i < states.size(); ++i) {
    auto [x, depth] = states[i];
    for (Letter a = 0; a < k; ++a) delta.push_back(intern(step(x, a), depth + 1));
  }
  std::vector<bool> accepting(states.size(), false);
  accepting[accept] = true;
  return minimize(Dfa(alphabet, states.size(), initial, std::move(accepting), std::move(delta)));
}

// DFA for W A* with W listed: a trie whose word ends are absorbing.
Dfa listed_prefix_dfa(const Alphabet& alphabet, const std::vector<Word>& words) {
  const std::size_t k = alphabet.size();
  constexpr StateId unset = ~StateId{0};
  constexpr StateId reject = 0;
  constexpr StateId accept = 1;
  std::vector<StateId> delta(3 * k, unset);
  for (Letter a = 0; a < k; ++a) {
    delta[reject * k + a] = reject;
    delta[accept * k + a] = accept;
  }
  const StateId root = 2;
  bool root_accepts = false;
  for (const auto& w : words) {
    if (w.empty()) root_accepts = true;
  }
  if (root_accepts) return universal_dfa(alphabet);
  for (const auto& w : words) {
    StateId q = root;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (q == accept) break;
      Letter a = alphabet.index(w[i]);
      StateId& slot = delta[q * k + a];
      if (i + 1 == w.size()) {
        slot = accept;
      } else if (slot == unset) {
        slot = static_cast<StateId>(delta.size() / k);
        delta.resize(delta.size() + k, unset);
      }
      q = slot;
    }
  }
  for (auto& t : delta) {
    if (t == unset) t = reject;
  }
  const std::size_t n = delta.size() / k;
  std::vector<bool> accepting(n, false);
  accepting[accept] = true;
  return minimize(Dfa(alphabet, n, root, std::move(accepting), std::move(delta)));
}

std::string join(const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ",";
    out += words[i].empty() ? "_" : words[i];
  }
  return out + "}";
}

}  // namespace

WordSet WordSet::listed(std::vector<Word> words) {
  WordSet s;
  s.words_ = std::move(words);
  return s;
}

WordSet WordSet::image_slice(std::shared_ptr<const FiniteMonoid> monoid, std::vector<bool> targets,
                             std::size_t length) {
  if (!monoid || targets.size() != monoid->size()) throw InputError("image slice targets do not match the monoid");
  WordSet s;
  s.monoid_ = std::move(monoid);
  s.targets_ = std::move(targets);
  s.length_ = length;
  return s;
}

bool WordSet::contains(std::string_view word) const {
  if (!monoid_) {
    for (const auto& w : words_) {
      if (w == word) return true;
    }
    return false;
  }
  return word.size() == length_ && targets_[monoid_->evaluate(word)];
}

Dfa WordSet::prefix_language(const Alphabet& alphabet, const Config& config) const {
  if (!monoid_) return listed_prefix_dfa(alphabet, words_);
  if (!(monoid_->alphabet() == alphabet)) throw InputError("word set alphabet mismatch");
  const FiniteMonoid& m = *monoid_;
  return image_prefix_dfa(
      alphabet, length_, m.identity(), [&m](ElementId x, Letter a) { return m.right(x, a); }, targets_,
      config);
}

Dfa WordSet::suffix_language(const Alphabet& alphabet, const Config& config) const {
  // A* W is the reversal of rev(W) A*.
  if (!monoid_) {
    std::vector<Word> reversed;
    for (const auto& w : words_) reversed.emplace_back(w.rbegin(), w.rend());
    return minimize(reverse(listed_prefix_dfa(alphabet, reversed), config));
  }
  if (!(monoid_->alphabet() == alphabet)) throw InputError("word set alphabet mismatch");
  const FiniteMonoid& m = *monoid_;
  // Reading v backwards, the image of v is built by left multiplication.
  Dfa reversed = image_prefix_dfa(
      alphabet, length_, m.identity(), [&m](ElementId x, Letter a) { return m.left(a, x); }, targets_,
      config);
  return minimize(reverse(reversed, config));
}

std::string WordSet::describe() const {
  if (!monoid_) return join(words_);
  std::vector<Word> names;
  for (ElementId x = 0; x < targets_.size(); ++x) {
    if (targets_[x]) names.push_back(monoid_->word(x));
  }
  return "{w in A^" + std::to_string(length_) + " : eta(w) in " + join(names) + "}";
}

FiniteSet FiniteSet::listed(std::vector<Word> words) {
  FiniteSet s;
  s.words_ = std::move(words);
  return s;
}

FiniteSet FiniteSet::bounded(Dfa language, std::size_t bound) {
  FiniteSet s;
  s.language_ = std::make_shared<const Dfa>(std::move(language));
  s.bound_ = bound;
  return s;
}

Dfa FiniteSet::compile(const Alphabet& alphabet) const {
  if (!language_) return minimize(finite_language(alphabet, words_));
  if (!(language_->alphabet() == alphabet)) throw InputError("finite set alphabet mismatch");
  return truncate(*language_, bound_);
}

std::string FiniteSet::describe() const {
  if (!language_) return join(words_);
  return "{w in L(" + std::to_string(language_->state_count()) + "-state DFA) : |w| < " +
         std::to_string(bound_) + "}";
}

struct GdExpr::Node {
  enum class Kind { prefix, suffix, finite, unite, intersect, complement };
  Kind kind;
  std::optional<WordSet> words;
  std::optional<FiniteSet> finite;
  std::vector<GdExpr> children;
};

GdExpr GdExpr::prefix(WordSet words) {
  return GdExpr(std::make_shared<const Node>(Node{Node::Kind::prefix, std::move(words), {}, {}}));
}
GdExpr GdExpr::suffix(WordSet words) {
  return GdExpr(std::make_shared<const Node>(Node{Node::Kind::suffix, std::move(words), {}, {}}));
}
GdExpr GdExpr::finite(FiniteSet words) {
  return GdExpr(std::make_shared<const Node>(Node{Node::Kind::finite, {}, std::move(words), {}}));
}
GdExpr GdExpr::nothing() { return finite(FiniteSet::listed({})); }
GdExpr GdExpr::everything() { return complement(nothing()); }
GdExpr GdExpr::unite(GdExpr lhs, GdExpr rhs) {
  return GdExpr(std::make_shared<const Node>(Node{Node::Kind::unite, {}, {}, {std::move(lhs), std::move(rhs)}}));
}
GdExpr GdExpr::intersect(GdExpr lhs, GdExpr rhs) {
  return GdExpr(
      std::make_shared<const Node>(Node{Node::Kind::intersect, {}, {}, {std::move(lhs), std::move(rhs)}}));
}
GdExpr GdExpr::complement(GdExpr inner) {
  return GdExpr(std::make_shared<const Node>(Node{Node::Kind::complement, {}, {}, {std::move(inner)}}));
}
GdExpr GdExpr::any_of(const std::vector<GdExpr>& parts) {
  if (parts.empty()) return nothing();
  GdExpr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = unite(out, parts[i]);
  return out;
}
GdExpr GdExpr::all_of(const std::vector<GdExpr>& parts) {
  if (parts.empty()) return everything();
  GdExpr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = intersect(out, parts[i]);
  return out;
}

Dfa GdExpr::compile(const Alphabet& alphabet, const Config& config) const {
  std::unordered_map<const Node*, Dfa> cache;
  auto go = [&](auto&& self, const GdExpr& e) -> Dfa {
    if (auto it = cache.find(e.node_.get()); it != cache.end()) return it->second;
    const Node& n = *e.node_;
    Dfa result = [&]() -> Dfa {
      switch (n.kind) {
        case Node::Kind::prefix: return n.words->prefix_language(alphabet, config);
        case Node::Kind::suffix: return n.words->suffix_language(alphabet, config);
        case Node::Kind::finite: return n.finite->compile(alphabet);
        case Node::Kind::unite:
          return minimize(combine(self(self, n.children[0]), self(self, n.children[1]), BoolOp::disjunction, config));
        case Node::Kind::intersect:
          return minimize(combine(self(self, n.children[0]), self(self, n.children[1]), BoolOp::conjunction, config));
        case Node::Kind::complement: return regmeasure::complement(self(self, n.children[0]));
      }
      throw InternalError("unknown GD expression node");
    }();
    cache.emplace(e.node_.get(), result);
    return result;
  };
  return go(go, *this);
}

std::string GdExpr::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::prefix: return n.words->describe() + "A*";
    case Node::Kind::suffix: return "A*" + n.words->describe();
    case Node::Kind::finite: return n.finite->describe();
    case Node::Kind::unite: return "(" + n.children[0].to_string() + " | " + n.children[1].to_string() + ")";
    case Node::Kind::intersect: return "(" + n.children[0].to_string() + " & " + n.children[1].to_string() + ")";
    case Node::Kind::complement: return "~" + n.children[0].to_string();
  }
  return {};
}

}  // namespace regmeasure
