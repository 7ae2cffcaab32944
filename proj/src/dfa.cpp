#include "regmeasure/dfa.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "regmeasure/errors.hpp"

namespace regmeasure {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) {
    throw InputError("alphabet must contain at least one symbol");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto c = static_cast<unsigned char>(symbols_[i]);
    if (index_[c] >= 0) {
      throw InputError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
    index_[c] = static_cast<int>(i);
  }
}

Letter Alphabet::index(char c) const {
  auto found = find(c);
  if (!found) {
    throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + symbols_ + "}");
  }
  return *found;
}

std::optional<Letter> Alphabet::find(char c) const noexcept {
  int i = index_[static_cast<unsigned char>(c)];
  if (i < 0) return std::nullopt;
  return static_cast<Letter>(i);
}

std::vector<Letter> Alphabet::encode(std::string_view word) const {
  std::vector<Letter> out;
  out.reserve(word.size());
  for (char c : word) out.push_back(index(c));
  return out;
}

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, StateId initial,
         std::vector<bool> accepting, std::vector<StateId> delta)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  if (alphabet_.size() == 0) throw InputError("DFA alphabet is empty");
  if (state_count_ == 0) throw InputError("DFA needs at least one state");
  if (initial_ >= state_count_) throw InputError("initial state out of range");
  if (accepting_.size() != state_count_) {
    throw InputError("accepting flags do not match the state count");
  }
  if (delta_.size() != state_count_ * alphabet_.size()) {
    throw InputError("transition table is not total");
  }
  for (StateId target : delta_) {
    if (target >= state_count_) throw InputError("transition to a nonexistent state");
  }
}

StateId Dfa::run(StateId q, std::string_view word) const {
  for (char c : word) q = next(q, alphabet_.index(c));
  return q;
}

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
  std::size_t offset = 0;
};

class Scanner {
 public:
  explicit Scanner(Line line) : line_(std::move(line)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_.number, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < line_.text.size() && (line_.text[pos_] == ' ' || line_.text[pos_] == '\t')) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= line_.text.size();
  }

  void expect_keyword(std::string_view keyword) {
    skip_space();
    if (line_.text.compare(pos_, keyword.size(), keyword) != 0) {
      fail("expected '" + std::string(keyword) + "'");
    }
    pos_ += keyword.size();
    skip_space();
    if (pos_ >= line_.text.size() || line_.text[pos_] != ':') fail("expected ':'");
    ++pos_;
  }

  std::string token() {
    skip_space();
    if (pos_ >= line_.text.size()) fail("unexpected end of line");
    std::size_t start = pos_;
    while (pos_ < line_.text.size() && line_.text[pos_] != ' ' && line_.text[pos_] != '\t') ++pos_;
    token_start_ = start;
    return line_.text.substr(start, pos_ - start);
  }

  std::size_t number() {
    std::string t = token();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      pos_ = token_start_;
      fail("expected a nonnegative decimal, got '" + t + "'");
    }
    return value;
  }

  void rewind_token() { pos_ = token_start_; }

 private:
  Line line_;
  std::size_t pos_ = 0;
  std::size_t token_start_ = 0;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(start, end - start));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    bool blank = raw.find_first_not_of(" \t") == std::string::npos;
    if (!blank) lines.push_back({number, std::move(raw)});
    start = end + 1;
  }
  return lines;
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  auto lines = content_lines(text);
  std::size_t last_line = lines.empty() ? 1 : lines.back().number;
  auto header = [&](std::size_t i, std::string_view keyword) {
    if (i >= lines.size()) {
      throw ParseError("missing '" + std::string(keyword) + ":' line", last_line, 1);
    }
    Scanner s(lines[i]);
    s.expect_keyword(keyword);
    return s;
  };

  Scanner alpha = header(0, "alphabet");
  std::string symbols;
  while (!alpha.at_end()) {
    std::string t = alpha.token();
    if (t.size() != 1) {
      alpha.rewind_token();
      alpha.fail("alphabet symbols must be single characters");
    }
    if (symbols.find(t[0]) != std::string::npos) {
      alpha.rewind_token();
      alpha.fail("duplicate alphabet symbol '" + t + "'");
    }
    symbols += t;
  }
  if (symbols.empty()) alpha.fail("alphabet is empty");
  Alphabet alphabet(symbols);

  Scanner states_line = header(1, "states");
  std::size_t n = states_line.number();
  if (n == 0) {
    states_line.rewind_token();
    states_line.fail("state count must be positive");
  }
  if (!states_line.at_end()) states_line.fail("trailing input after state count");

  auto state_ref = [n](Scanner& s) {
    std::size_t q = s.number();
    if (q >= n) {
      s.rewind_token();
      s.fail("dangling state reference " + std::to_string(q));
    }
    return static_cast<StateId>(q);
  };

  Scanner init_line = header(2, "initial");
  StateId initial = state_ref(init_line);
  if (!init_line.at_end()) init_line.fail("trailing input after initial state");

  Scanner acc_line = header(3, "accepting");
  std::vector<bool> accepting(n, false);
  while (!acc_line.at_end()) accepting[state_ref(acc_line)] = true;

  const std::size_t k = alphabet.size();
  constexpr StateId unset = ~StateId{0};
  std::vector<StateId> delta(n * k, unset);
  for (std::size_t i = 4; i < lines.size(); ++i) {
    Scanner s(lines[i]);
    StateId q = state_ref(s);
    std::string letter = s.token();
    if (letter.size() != 1 || !alphabet.contains(letter[0])) {
      s.rewind_token();
      s.fail("unknown letter '" + letter + "'");
    }
    StateId target = state_ref(s);
    if (!s.at_end()) s.fail("trailing input after transition");
    auto& slot = delta[q * k + alphabet.index(letter[0])];
    if (slot != unset) s.fail("duplicate transition for state " + std::to_string(q) + " on '" + letter + "'");
    slot = target;
  }
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      if (delta[q * k + a] == unset) {
        throw ParseError("partial transition table: no transition for state " + std::to_string(q) +
                             " on '" + std::string(1, alphabet.symbol(static_cast<Letter>(a))) + "'",
                         last_line, 1);
      }
    }
  }
  return Dfa(std::move(alphabet), n, initial, std::move(accepting), std::move(delta));
}

std::string format_dfa(const Dfa& d) {
  std::ostringstream out;
  const auto& alphabet = d.alphabet();
  out << "alphabet:";
  for (char c : alphabet.symbols()) out << ' ' << c;
  out << "\nstates: " << d.state_count() << "\ninitial: " << d.initial() << "\naccepting:";
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    if (d.is_accepting(static_cast<StateId>(q))) out << ' ' << q;
  }
  out << '\n';
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    for (Letter a = 0; a < alphabet.size(); ++a) {
      out << q << ' ' << alphabet.symbol(a) << ' ' << d.next(static_cast<StateId>(q), a) << '\n';
    }
  }
  return out.str();
}

Dfa load_dfa(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open DFA file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dfa(buffer.str());
}

Dfa universal_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {true}, std::vector<StateId>(alphabet.size(), 0));
}

Dfa empty_dfa(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {false}, std::vector<StateId>(alphabet.size(), 0));
}

}  // namespace regmeasure
