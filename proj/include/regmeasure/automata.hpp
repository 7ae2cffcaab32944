#pragma once

#include <vector>

#include "regmeasure/config.hpp"
#include "regmeasure/dfa.hpp"
#include "regmeasure/rational.hpp"

namespace regmeasure {

enum class BoolOp { conjunction, disjunction, difference, symmetric_difference };

/// Restriction to states reachable from the initial state, renumbered in
/// breadth-first order (letters in alphabet order).
Dfa reachable_part(const Dfa& d);

/// Minimal complete DFA of the same language in canonical BFS numbering.
Dfa minimize(const Dfa& d);

/// Product construction over reachable pairs. Alphabets must be equal.
Dfa combine(const Dfa& lhs, const Dfa& rhs, BoolOp op, const Config& config = default_config());

Dfa complement(const Dfa& d);

/// u^{-1} L v^{-1} = { w : uwv in L }.
Dfa quotient(const Dfa& d, std::string_view u, std::string_view v);

/// DFA for the reversed language (subset construction).
Dfa reverse(const Dfa& d, const Config& config = default_config());

/// DFA for u L v.
Dfa wrap(const Dfa& d, std::string_view u, std::string_view v,
         const Config& config = default_config());

bool is_empty(const Dfa& d);
bool language_equal(const Dfa& lhs, const Dfa& rhs, const Config& config = default_config());
/// L(lhs) is a subset of L(rhs).
bool is_subset(const Dfa& lhs, const Dfa& rhs, const Config& config = default_config());

/// |L ∩ A^k|.
BigInt count_words(const Dfa& d, std::size_t length);

/// |L ∩ A^k| for k = 0 .. horizon-1.
std::vector<BigInt> count_words_upto(const Dfa& d, std::size_t horizon);

/// Accepted words of length <= max_len, shortest first, then
/// lexicographically by alphabet order.
std::vector<Word> enumerate_words(const Dfa& d, std::size_t max_len,
                                  const Config& config = default_config());

/// DFA accepting exactly the given finite set.
Dfa finite_language(const Alphabet& alphabet, const std::vector<Word>& words);

/// L ∩ A^{<bound}.
Dfa truncate(const Dfa& d, std::size_t bound);

}  // namespace regmeasure
