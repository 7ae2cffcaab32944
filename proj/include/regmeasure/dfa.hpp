#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regmeasure {

using StateId = std::uint32_t;
using Letter = std::uint32_t;
/// Words are stored as strings of alphabet symbols.
using Word = std::string;

/// Ordered set of distinct single-character symbols. The position of a
/// symbol is its letter index.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Letter letter) const { return symbols_.at(letter); }
  const std::string& symbols() const noexcept { return symbols_; }

  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }
  /// Throws InputError for symbols outside the alphabet.
  Letter index(char c) const;
  std::optional<Letter> find(char c) const noexcept;

  /// Letter indices of a word; throws InputError on foreign symbols.
  std::vector<Letter> encode(std::string_view word) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::array<int, 256> index_ = filled();

  static std::array<int, 256> filled() {
    std::array<int, 256> a{};
    a.fill(-1);
    return a;
  }
};

/// Complete deterministic finite automaton.
class Dfa {
 public:
  /// `delta` is row-major: delta[q * |A| + a]. Validates every invariant.
  Dfa(Alphabet alphabet, std::size_t state_count, StateId initial,
      std::vector<bool> accepting, std::vector<StateId> delta);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }
  StateId initial() const noexcept { return initial_; }
  bool is_accepting(StateId q) const { return accepting_.at(q); }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }
  std::span<const StateId> transitions() const noexcept { return delta_; }

  StateId next(StateId q, Letter a) const noexcept {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + a];
  }
  StateId run(StateId q, std::string_view word) const;
  bool accepts(std::string_view word) const { return accepting_[run(initial_, word)]; }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  std::size_t state_count_;
  StateId initial_;
  std::vector<bool> accepting_;
  std::vector<StateId> delta_;
};

/// Reads the line-based DFA text format.
Dfa parse_dfa(std::string_view text);
/// Writes the same format; parse_dfa(format_dfa(d)) == d.
std::string format_dfa(const Dfa& d);

Dfa load_dfa(const std::string& path);

/// Single-state DFAs for A* and the empty language.
Dfa universal_dfa(const Alphabet& alphabet);
Dfa empty_dfa(const Alphabet& alphabet);

}  // namespace regmeasure
