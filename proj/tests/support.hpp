#pragma once
// Test-only oracles and generators. Nothing here calls into the library's
// construction algorithms except to obtain the object under test.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "regmeasure/dfa.hpp"
#include "regmeasure/gd_expr.hpp"
#include "regmeasure/monoid.hpp"
#include "regmeasure/rational.hpp"
#include "regmeasure/regex.hpp"

namespace testing {

using regmeasure::Alphabet;
using regmeasure::BigInt;
using regmeasure::BigRational;
using regmeasure::Dfa;
using regmeasure::ElementId;
using regmeasure::FiniteMonoid;
using regmeasure::FiniteSet;
using regmeasure::GdExpr;
using regmeasure::WordSet;
using regmeasure::RegexAst;
using regmeasure::StateId;
using regmeasure::Word;

/// All words of length exactly n in shortlex order.
inline std::vector<Word> words_of_length(const Alphabet& a, std::size_t n) {
  std::vector<Word> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (char c : a.symbols()) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

/// All words of length <= n in shortlex order.
inline std::vector<Word> words_upto(const Alphabet& a, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = words_of_length(a, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

using Member = std::function<bool(const Word&)>;

/// Same membership on every word up to length n.
inline bool agree_upto(const Alphabet& a, std::size_t n, const Member& lhs, const Member& rhs) {
  for (const auto& w : words_upto(a, n)) {
    if (lhs(w) != rhs(w)) return false;
  }
  return true;
}

/// (1/n) sum_{k<n} |L ∩ A^k| / |A|^k by enumerating every word.
inline BigRational brute_partial_density(const Dfa& d, std::size_t n) {
  BigRational sum = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t hits = 0;
    auto layer = words_of_length(d.alphabet(), k);
    for (const auto& w : layer) hits += d.accepts(w);
    BigRational term(BigInt(hits), BigInt(layer.size()));
    term.canonicalize();
    sum += term;
  }
  sum /= BigInt(n);
  sum.canonicalize();
  return sum;
}

/// Number of Myhill-Nerode classes among words up to length `prefixes`,
/// told apart by suffixes up to length `suffixes`. A lower bound on the
/// minimal DFA size that is exact once both bounds are large enough.
inline std::size_t residual_count(const Member& member, const Alphabet& a, std::size_t prefixes,
                                  std::size_t suffixes) {
  auto tails = words_upto(a, suffixes);
  std::set<std::vector<bool>> seen;
  for (const auto& u : words_upto(a, prefixes)) {
    std::vector<bool> sig;
    for (const auto& v : tails) sig.push_back(member(u + v));
    seen.insert(sig);
  }
  return seen.size();
}

// ---- Brzozowski derivative matcher -------------------------------------

inline bool nullable(const RegexAst& r) {
  switch (r.kind()) {
    case RegexAst::Kind::empty_set: return false;
    case RegexAst::Kind::epsilon: return true;
    case RegexAst::Kind::letter: return false;
    case RegexAst::Kind::alternation: return nullable(r.lhs()) || nullable(r.rhs());
    case RegexAst::Kind::concatenation: return nullable(r.lhs()) && nullable(r.rhs());
    case RegexAst::Kind::star: return true;
  }
  return false;
}

inline RegexAst derivative(const RegexAst& r, char c) {
  using K = RegexAst::Kind;
  switch (r.kind()) {
    case K::empty_set:
    case K::epsilon: return RegexAst::empty_set();
    case K::letter: return r.symbol() == c ? RegexAst::epsilon() : RegexAst::empty_set();
    case K::alternation: return RegexAst::alternation(derivative(r.lhs(), c), derivative(r.rhs(), c));
    case K::concatenation: {
      RegexAst head = RegexAst::concatenation(derivative(r.lhs(), c), r.rhs());
      return nullable(r.lhs()) ? RegexAst::alternation(head, derivative(r.rhs(), c)) : head;
    }
    case K::star: return RegexAst::concatenation(derivative(r.inner(), c), r);
  }
  return RegexAst::empty_set();
}

inline bool regex_matches(RegexAst r, const Word& w) {
  for (char c : w) r = derivative(r, c);
  return nullable(r);
}

/// Random regex text over `letters` with roughly `size` operators.
inline std::string random_regex(std::mt19937& rng, const std::string& letters, int size) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (size <= 0) {
    int k = pick(rng);
    if (k == 0) return "_";
    if (k == 1) return "#";
    return std::string(1, letters[k % letters.size()]);
  }
  int op = pick(rng) % 3;
  int left = std::uniform_int_distribution<int>(0, size - 1)(rng);
  if (op == 0) return "(" + random_regex(rng, letters, left) + "|" + random_regex(rng, letters, size - 1 - left) + ")";
  if (op == 1) return "(" + random_regex(rng, letters, left) + random_regex(rng, letters, size - 1 - left) + ")";
  return "(" + random_regex(rng, letters, size - 1) + ")*";
}

// ---- Random automata ----------------------------------------------------

inline Dfa random_dfa(std::mt19937& rng, const Alphabet& a, std::size_t min_states, std::size_t max_states) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(min_states, max_states)(rng);
  std::uniform_int_distribution<StateId> state(0, static_cast<StateId>(n - 1));
  std::vector<StateId> delta(n * a.size());
  for (auto& t : delta) t = state(rng);
  std::vector<bool> accepting(n);
  for (std::size_t q = 0; q < n; ++q) accepting[q] = rng() % 2 == 0;
  return Dfa(a, n, 0, std::move(accepting), std::move(delta));
}

/// DFA whose letters act as permutations, so its language is a group
/// language.
inline Dfa random_permutation_dfa(std::mt19937& rng, const Alphabet& a, std::size_t max_states) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  std::vector<StateId> delta(n * a.size());
  for (std::size_t l = 0; l < a.size(); ++l) {
    std::vector<StateId> perm(n);
    for (std::size_t q = 0; q < n; ++q) perm[q] = static_cast<StateId>(q);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t q = 0; q < n; ++q) delta[q * a.size() + l] = perm[q];
  }
  std::vector<bool> accepting(n);
  for (std::size_t q = 0; q < n; ++q) accepting[q] = rng() % 2 == 0;
  return Dfa(a, n, 0, std::move(accepting), std::move(delta));
}

// ---- Brute-force algebra ------------------------------------------------

/// Full multiplication table by evaluating concatenated representatives,
/// independent of the library's product routines.
inline std::vector<ElementId> brute_table(const FiniteMonoid& m) {
  std::vector<ElementId> t(m.size() * m.size());
  for (ElementId x = 0; x < m.size(); ++x) {
    for (ElementId y = 0; y < m.size(); ++y) t[x * m.size() + y] = m.evaluate(m.word(x) + m.word(y));
  }
  return t;
}

/// Partition of the elements by equality of the given ideal sets.
inline std::vector<std::set<ElementId>> classes_by(std::size_t n, const std::function<std::set<ElementId>(ElementId)>& ideal) {
  std::map<std::set<ElementId>, std::set<ElementId>> groups;
  for (ElementId x = 0; x < n; ++x) groups[ideal(x)].insert(x);
  std::vector<std::set<ElementId>> out;
  for (auto& [k, v] : groups) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

/// Searches all generator images for an isomorphism between two monoids
/// generated by the letters of their alphabets (alphabets may differ in
/// symbols but must have equal size).
inline bool isomorphic(const FiniteMonoid& m, const FiniteMonoid& n) {
  if (m.size() != n.size() || m.alphabet().size() != n.alphabet().size()) return false;
  const std::size_t k = m.alphabet().size();
  const auto nt = brute_table(n);
  std::vector<ElementId> images(k, 0);
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == k) {
      // phi(x) = product of the images along x's representative word.
      std::vector<ElementId> phi(m.size());
      std::vector<bool> hit(n.size(), false);
      for (ElementId x = 0; x < m.size(); ++x) {
        ElementId y = n.identity();
        for (char c : m.word(x)) y = nt[y * n.size() + images[m.alphabet().index(c)]];
        if (hit[y]) return false;
        hit[y] = true;
        phi[x] = y;
      }
      for (ElementId x = 0; x < m.size(); ++x) {
        for (regmeasure::Letter a = 0; a < k; ++a) {
          if (phi[m.right(x, a)] != nt[phi[x] * n.size() + images[a]]) return false;
        }
      }
      return true;
    }
    for (ElementId y = 0; y < n.size(); ++y) {
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

// ---- Random GD expressions over {a, b} ---------------------------------

struct GdSample {
  GdExpr expr;
  Member member;
};

inline std::vector<Word> random_words(std::mt19937& rng, std::size_t count, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t len = rng() % (max_len + 1);
    Word w;
    for (std::size_t j = 0; j < len; ++j) w += "ab"[rng() % 2];
    out.push_back(w);
  }
  return out;
}

/// A random GD expression together with a membership test that reads the
/// definition of each atom directly.
inline GdSample random_gd(std::mt19937& rng, const std::shared_ptr<const FiniteMonoid>& monoid, int depth) {
  int kind = static_cast<int>(rng() % (depth > 0 ? 7 : 4));
  auto slice = [&]() {
    std::vector<bool> targets(monoid->size());
    for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = rng() % 2 == 0;
    return WordSet::image_slice(monoid, targets, rng() % 4);
  };
  auto prefix_member = [](WordSet s) {
    return [s](const Word& w) {
      for (std::size_t i = 0; i <= w.size(); ++i) {
        if (s.contains(w.substr(0, i))) return true;
      }
      return false;
    };
  };
  auto suffix_member = [](WordSet s) {
    return [s](const Word& w) {
      for (std::size_t i = 0; i <= w.size(); ++i) {
        if (s.contains(w.substr(i))) return true;
      }
      return false;
    };
  };
  switch (kind) {
    case 0: {
      WordSet s = rng() % 2 ? slice() : WordSet::listed(random_words(rng, 3, 3));
      return {GdExpr::prefix(s), prefix_member(s)};
    }
    case 1: {
      WordSet s = rng() % 2 ? slice() : WordSet::listed(random_words(rng, 3, 3));
      return {GdExpr::suffix(s), suffix_member(s)};
    }
    case 2: {
      auto words = random_words(rng, 4, 5);
      return {GdExpr::finite(FiniteSet::listed(words)), [words](const Word& w) {
                return std::find(words.begin(), words.end(), w) != words.end();
              }};
    }
    case 3: {
      std::size_t bound = rng() % 6;
      Dfa lang = random_dfa(rng, Alphabet("ab"), 1, 4);
      return {GdExpr::finite(FiniteSet::bounded(lang, bound)),
              [lang, bound](const Word& w) { return w.size() < bound && lang.accepts(w); }};
    }
    case 4: {
      GdSample x = random_gd(rng, monoid, depth - 1);
      GdSample y = random_gd(rng, monoid, depth - 1);
      return {GdExpr::unite(x.expr, y.expr), [x, y](const Word& w) { return x.member(w) || y.member(w); }};
    }
    case 5: {
      GdSample x = random_gd(rng, monoid, depth - 1);
      GdSample y = random_gd(rng, monoid, depth - 1);
      return {GdExpr::intersect(x.expr, y.expr), [x, y](const Word& w) { return x.member(w) && y.member(w); }};
    }
    default: {
      GdSample x = random_gd(rng, monoid, depth - 1);
      return {GdExpr::complement(x.expr), [x](const Word& w) { return !x.member(w); }};
    }
  }
}

}  // namespace testing
