#include "regmeasure/regex.hpp"

#include <map>

#include "regmeasure/errors.hpp"

namespace regmeasure {

RegexAst RegexAst::empty_set() { return RegexAst(std::make_shared<Node>(Node{Kind::empty_set, 0, {}})); }
RegexAst RegexAst::epsilon() { return RegexAst(std::make_shared<Node>(Node{Kind::epsilon, 0, {}})); }
RegexAst RegexAst::letter(char symbol) {
  return RegexAst(std::make_shared<Node>(Node{Kind::letter, symbol, {}}));
}
RegexAst RegexAst::alternation(RegexAst lhs, RegexAst rhs) {
  return RegexAst(std::make_shared<Node>(Node{Kind::alternation, 0, {std::move(lhs), std::move(rhs)}}));
}
RegexAst RegexAst::concatenation(RegexAst lhs, RegexAst rhs) {
  return RegexAst(
      std::make_shared<Node>(Node{Kind::concatenation, 0, {std::move(lhs), std::move(rhs)}}));
}
RegexAst RegexAst::star(RegexAst inner) {
  return RegexAst(std::make_shared<Node>(Node{Kind::star, 0, {std::move(inner)}}));
}

std::string RegexAst::to_string() const {
  switch (kind()) {
    case Kind::empty_set: return "#";
    case Kind::epsilon: return "_";
    case Kind::letter: return std::string(1, symbol());
    case Kind::alternation: return "(" + lhs().to_string() + "|" + rhs().to_string() + ")";
    case Kind::concatenation: return "(" + lhs().to_string() + rhs().to_string() + ")";
    case Kind::star: return "(" + inner().to_string() + ")*";
  }
  return {};
}

namespace {

bool is_reserved(char c) {
  return c == '|' || c == '(' || c == ')' || c == '*' || c == '_' || c == '#';
}

class RegexParser {
 public:
  explicit RegexParser(std::string_view text) : text_(text) {}

  RegexAst parse() {
    RegexAst result = parse_union();
    skip_blanks();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool peek(char c) {
    skip_blanks();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip_blanks();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '_' || c == '#' || !is_reserved(c);
  }

  RegexAst parse_union() {
    RegexAst result = parse_concat();
    while (peek('|')) {
      ++pos_;
      result = RegexAst::alternation(std::move(result), parse_concat());
    }
    return result;
  }

  RegexAst parse_concat() {
    if (!starts_atom()) {
      fail(pos_ < text_.size() ? "expected an expression before '" + std::string(1, text_[pos_]) + "'"
                               : "unexpected end of expression");
    }
    RegexAst result = parse_star();
    while (starts_atom()) result = RegexAst::concatenation(std::move(result), parse_star());
    return result;
  }

  RegexAst parse_star() {
    RegexAst result = parse_atom();
    while (peek('*')) {
      ++pos_;
      result = RegexAst::star(std::move(result));
    }
    return result;
  }

  RegexAst parse_atom() {
    skip_blanks();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RegexAst inner = parse_union();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    ++pos_;
    if (c == '_') return RegexAst::epsilon();
    if (c == '#') return RegexAst::empty_set();
    return RegexAst::letter(c);
  }
};

// Thompson NFA with epsilon moves; letters are alphabet indices.
struct Nfa {
  struct State {
    std::vector<std::pair<Letter, std::uint32_t>> moves;
    std::vector<std::uint32_t> epsilon;
  };
  std::vector<State> states;

  std::uint32_t add() {
    states.emplace_back();
    return static_cast<std::uint32_t>(states.size() - 1);
  }
};

struct Fragment {
  std::uint32_t start;
  std::uint32_t accept;
};

Fragment build(const RegexAst& ast, const Alphabet& alphabet, Nfa& nfa) {
  using Kind = RegexAst::Kind;
  switch (ast.kind()) {
    case Kind::empty_set: {
      Fragment f{nfa.add(), nfa.add()};
      return f;
    }
    case Kind::epsilon: {
      Fragment f{nfa.add(), nfa.add()};
      nfa.states[f.start].epsilon.push_back(f.accept);
      return f;
    }
    case Kind::letter: {
      Letter a = alphabet.index(ast.symbol());
      Fragment f{nfa.add(), nfa.add()};
      nfa.states[f.start].moves.emplace_back(a, f.accept);
      return f;
    }
    case Kind::alternation: {
      Fragment l = build(ast.lhs(), alphabet, nfa);
      Fragment r = build(ast.rhs(), alphabet, nfa);
      Fragment f{nfa.add(), nfa.add()};
      nfa.states[f.start].epsilon = {l.start, r.start};
      nfa.states[l.accept].epsilon.push_back(f.accept);
      nfa.states[r.accept].epsilon.push_back(f.accept);
      return f;
    }
    case Kind::concatenation: {
      Fragment l = build(ast.lhs(), alphabet, nfa);
      Fragment r = build(ast.rhs(), alphabet, nfa);
      nfa.states[l.accept].epsilon.push_back(r.start);
      return {l.start, r.accept};
    }
    case Kind::star: {
      Fragment in = build(ast.inner(), alphabet, nfa);
      Fragment f{nfa.add(), nfa.add()};
      nfa.states[f.start].epsilon = {in.start, f.accept};
      nfa.states[in.accept].epsilon = {in.start, f.accept};
      return f;
    }
  }
  throw InternalError("unknown regex node");
}

std::vector<std::uint32_t> closure(const Nfa& nfa, std::vector<std::uint32_t> set) {
  std::vector<bool> seen(nfa.states.size(), false);
  for (auto s : set) seen[s] = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (auto t : nfa.states[set[i]].epsilon) {
      if (!seen[t]) {
        seen[t] = true;
        set.push_back(t);
      }
    }
  }
  std::vector<std::uint32_t> sorted;
  for (std::uint32_t s = 0; s < seen.size(); ++s) {
    if (seen[s]) sorted.push_back(s);
  }
  return sorted;
}

}  // namespace

RegexAst parse_regex(std::string_view text) { return RegexParser(text).parse(); }

Dfa compile_regex(const RegexAst& ast, const Alphabet& alphabet, const Config& config) {
  Nfa nfa;
  Fragment top = build(ast, alphabet, nfa);
  const std::size_t k = alphabet.size();

  // The empty subset doubles as the sink, which makes the result complete.
  std::map<std::vector<std::uint32_t>, StateId> ids;
  std::vector<std::vector<std::uint32_t>> subsets;
  auto intern = [&](std::vector<std::uint32_t> set) {
    auto [it, inserted] = ids.try_emplace(set, static_cast<StateId>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= config.product_states) {
        throw CapExceeded("regex subset construction", subsets.size() + 1, config.product_states);
      }
      subsets.push_back(std::move(set));
    }
    return it->second;
  };

  intern(closure(nfa, {top.start}));
  std::vector<StateId> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      std::vector<std::uint32_t> next;
      for (auto s : subsets[i]) {
        for (auto [letter, t] : nfa.states[s].moves) {
          if (letter == a) next.push_back(t);
        }
      }
      StateId target = intern(closure(nfa, std::move(next)));
      delta.push_back(target);
    }
  }
  std::vector<bool> accepting(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (auto s : subsets[i]) {
      if (s == top.accept) accepting[i] = true;
    }
  }
  return Dfa(alphabet, subsets.size(), 0, std::move(accepting), std::move(delta));
}

}  // namespace regmeasure
