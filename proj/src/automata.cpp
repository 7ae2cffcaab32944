#include "regmeasure/automata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "regmeasure/errors.hpp"
#include "regmeasure/kernels.hpp"

namespace regmeasure {

namespace {

std::vector<bool> reachable_states(const Dfa& d) {
  std::vector<bool> seen(d.state_count(), false);
  std::vector<StateId> queue{d.initial()};
  seen[d.initial()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Letter a = 0; a < d.alphabet().size(); ++a) {
      StateId t = d.next(queue[i], a);
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

// Renumbers `partition` classes (one per state) in BFS order from the class
// of the initial state and returns the quotient automaton.
Dfa quotient_by_partition(const Dfa& d, const std::vector<std::uint32_t>& block) {
  const std::size_t k = d.alphabet().size();
  std::unordered_map<std::uint32_t, StateId> rename;
  std::vector<StateId> representative;
  auto visit = [&](StateId q) {
    auto [it, inserted] = rename.try_emplace(block[q], static_cast<StateId>(representative.size()));
    if (inserted) representative.push_back(q);
    return it->second;
  };
  visit(d.initial());
  std::vector<StateId> delta;
  for (std::size_t i = 0; i < representative.size(); ++i) {
    for (Letter a = 0; a < k; ++a) delta.push_back(visit(d.next(representative[i], a)));
  }
  std::vector<bool> accepting(representative.size());
  for (std::size_t i = 0; i < representative.size(); ++i) {
    accepting[i] = d.is_accepting(representative[i]);
  }
  return Dfa(d.alphabet(), representative.size(), 0, std::move(accepting), std::move(delta));
}

}  // namespace

Dfa reachable_part(const Dfa& d) {
  std::vector<std::uint32_t> identity(d.state_count());
  for (std::uint32_t q = 0; q < identity.size(); ++q) identity[q] = q;
  return quotient_by_partition(d, identity);
}

Dfa minimize(const Dfa& input) {
  // Moore refinement on the reachable part.
  Dfa d = reachable_part(input);
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  std::vector<std::uint32_t> block(n);
  for (std::size_t q = 0; q < n; ++q) block[q] = d.is_accepting(static_cast<StateId>(q)) ? 1 : 0;
  std::size_t blocks = 0;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signature_ids;
    std::vector<std::uint32_t> refined(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<std::uint32_t> signature;
      signature.reserve(k + 1);
      signature.push_back(block[q]);
      for (Letter a = 0; a < k; ++a) signature.push_back(block[d.next(static_cast<StateId>(q), a)]);
      auto [it, _] = signature_ids.try_emplace(std::move(signature),
                                               static_cast<std::uint32_t>(signature_ids.size()));
      refined[q] = it->second;
    }
    block = std::move(refined);
    if (signature_ids.size() == blocks) break;
    blocks = signature_ids.size();
  }
  return quotient_by_partition(d, block);
}

Dfa combine(const Dfa& lhs, const Dfa& rhs, BoolOp op, const Config& config) {
  if (!(lhs.alphabet() == rhs.alphabet())) {
    throw InputError("alphabet mismatch: {" + lhs.alphabet().symbols() + "} vs {" +
                     rhs.alphabet().symbols() + "}");
  }
  const std::size_t k = lhs.alphabet().size();
  std::unordered_map<std::uint64_t, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto intern = [&](StateId p, StateId q) {
    std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto [it, inserted] = ids.try_emplace(key, static_cast<StateId>(pairs.size()));
    if (inserted) {
      if (pairs.size() >= config.product_states) {
        throw CapExceeded("product construction", pairs.size() + 1, config.product_states);
      }
      pairs.emplace_back(p, q);
    }
    return it->second;
  };
  intern(lhs.initial(), rhs.initial());
  std::vector<StateId> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      auto [p, q] = pairs[i];
      delta.push_back(intern(lhs.next(p, a), rhs.next(q, a)));
    }
  }
  std::vector<bool> accepting(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool x = lhs.is_accepting(pairs[i].first);
    bool y = rhs.is_accepting(pairs[i].second);
    switch (op) {
      case BoolOp::conjunction: accepting[i] = x && y; break;
      case BoolOp::disjunction: accepting[i] = x || y; break;
      case BoolOp::difference: accepting[i] = x && !y; break;
      case BoolOp::symmetric_difference: accepting[i] = x != y; break;
    }
  }
  return Dfa(lhs.alphabet(), pairs.size(), 0, std::move(accepting), std::move(delta));
}

Dfa complement(const Dfa& d) {
  std::vector<bool> accepting = d.accepting();
  accepting.flip();
  return Dfa(d.alphabet(), d.state_count(), d.initial(), std::move(accepting),
             {d.transitions().begin(), d.transitions().end()});
}

Dfa quotient(const Dfa& d, std::string_view u, std::string_view v) {
  std::vector<bool> accepting(d.state_count());
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    accepting[q] = d.is_accepting(d.run(static_cast<StateId>(q), v));
  }
  return Dfa(d.alphabet(), d.state_count(), d.run(d.initial(), u), std::move(accepting),
             {d.transitions().begin(), d.transitions().end()});
}

Dfa reverse(const Dfa& d, const Config& config) {
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  // back[a][t] = states q with q --a--> t
  std::vector<std::vector<std::vector<StateId>>> back(k, std::vector<std::vector<StateId>>(n));
  for (std::size_t q = 0; q < n; ++q) {
    for (Letter a = 0; a < k; ++a) back[a][d.next(static_cast<StateId>(q), a)].push_back(static_cast<StateId>(q));
  }
  using Subset = std::vector<bool>;
  std::map<Subset, StateId> ids;
  std::vector<Subset> subsets;
  auto intern = [&](Subset s) {
    auto [it, inserted] = ids.try_emplace(s, static_cast<StateId>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= config.product_states) {
        throw CapExceeded("reversal subset construction", subsets.size() + 1, config.product_states);
      }
      subsets.push_back(std::move(s));
    }
    return it->second;
  };
  intern(d.accepting());
  std::vector<StateId> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      Subset next(n, false);
      for (std::size_t t = 0; t < n; ++t) {
        if (!subsets[i][t]) continue;
        for (StateId q : back[a][t]) next[q] = true;
      }
      delta.push_back(intern(std::move(next)));
    }
  }
  std::vector<bool> accepting(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) accepting[i] = subsets[i][d.initial()];
  return Dfa(d.alphabet(), subsets.size(), 0, std::move(accepting), std::move(delta));
}

namespace {

// DFA for w L: a chain reading w, then d; any deviation goes to a sink.
Dfa prepend(const Dfa& d, std::string_view w) {
  if (w.empty()) return d;
  const std::size_t k = d.alphabet().size();
  const std::size_t n = d.state_count();
  const auto letters = d.alphabet().encode(w);
  const auto chain = static_cast<StateId>(n);               // chain states n .. n+|w|-1
  const auto sink = static_cast<StateId>(n + letters.size());
  std::vector<StateId> delta(d.transitions().begin(), d.transitions().end());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    StateId on_match = i + 1 < letters.size() ? chain + static_cast<StateId>(i + 1) : d.initial();
    for (Letter a = 0; a < k; ++a) delta.push_back(a == letters[i] ? on_match : sink);
  }
  for (Letter a = 0; a < k; ++a) delta.push_back(sink);
  std::vector<bool> accepting = d.accepting();
  accepting.resize(n + letters.size() + 1, false);
  return Dfa(d.alphabet(), n + letters.size() + 1, chain, std::move(accepting), std::move(delta));
}

}  // namespace

Dfa wrap(const Dfa& d, std::string_view u, std::string_view v, const Config& config) {
  Dfa with_prefix = prepend(d, u);
  if (v.empty()) return with_prefix;
  std::string reversed_v(v.rbegin(), v.rend());
  return reverse(prepend(reverse(with_prefix, config), reversed_v), config);
}

bool is_empty(const Dfa& d) {
  auto seen = reachable_states(d);
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    if (seen[q] && d.is_accepting(static_cast<StateId>(q))) return false;
  }
  return true;
}

bool language_equal(const Dfa& lhs, const Dfa& rhs, const Config& config) {
  return is_empty(combine(lhs, rhs, BoolOp::symmetric_difference, config));
}

bool is_subset(const Dfa& lhs, const Dfa& rhs, const Config& config) {
  return is_empty(combine(lhs, rhs, BoolOp::difference, config));
}

std::vector<BigInt> count_words_upto(const Dfa& d, std::size_t horizon) {
  const std::size_t n = d.state_count();
  kernels::Predecessors pred(d);
  std::vector<BigInt> current(n, 0), next(n, 0);
  current[d.initial()] = 1;
  std::vector<BigInt> counts;
  counts.reserve(horizon);
  for (std::size_t k = 0; k < horizon; ++k) {
    BigInt accepted = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (d.is_accepting(static_cast<StateId>(q))) accepted += current[q];
    }
    counts.push_back(std::move(accepted));
    if (k + 1 < horizon) {
      kernels::parallel::count_step(d, pred, current, next);
      std::swap(current, next);
    }
  }
  return counts;
}

BigInt count_words(const Dfa& d, std::size_t length) {
  return count_words_upto(d, length + 1).back();
}

std::vector<Word> enumerate_words(const Dfa& d, std::size_t max_len, const Config& config) {
  if (max_len > config.enumerate_max_len) {
    throw CapExceeded("enumeration length", max_len, config.enumerate_max_len);
  }
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  // live[r][q]: some word of length exactly r leads from q to acceptance.
  std::vector<std::vector<bool>> live(max_len + 1, std::vector<bool>(n, false));
  live[0] = d.accepting();
  for (std::size_t r = 1; r <= max_len; ++r) {
    for (std::size_t q = 0; q < n; ++q) {
      for (Letter a = 0; a < k && !live[r][q]; ++a) {
        if (live[r - 1][d.next(static_cast<StateId>(q), a)]) live[r][q] = true;
      }
    }
  }
  std::vector<Word> out;
  Word prefix;
  auto walk = [&](auto&& self, StateId q, std::size_t remaining) -> void {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (Letter a = 0; a < k; ++a) {
      StateId t = d.next(q, a);
      if (!live[remaining - 1][t]) continue;
      prefix.push_back(d.alphabet().symbol(a));
      self(self, t, remaining - 1);
      prefix.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (live[len][d.initial()]) walk(walk, d.initial(), len);
  }
  return out;
}

Dfa finite_language(const Alphabet& alphabet, const std::vector<Word>& words) {
  // Trie rooted at state 0; missing edges go to a trailing sink.
  const std::size_t k = alphabet.size();
  constexpr StateId unset = ~StateId{0};
  std::vector<StateId> delta(k, unset);
  std::vector<bool> accepting{false};
  for (const auto& w : words) {
    StateId q = 0;
    for (char c : w) {
      Letter a = alphabet.index(c);
      if (delta[q * k + a] == unset) {
        delta[q * k + a] = static_cast<StateId>(accepting.size());
        accepting.push_back(false);
        delta.resize(delta.size() + k, unset);
      }
      q = delta[q * k + a];
    }
    accepting[q] = true;
  }
  const auto sink = static_cast<StateId>(accepting.size());
  accepting.push_back(false);
  delta.resize(delta.size() + k, unset);
  for (auto& t : delta) {
    if (t == unset) t = sink;
  }
  const std::size_t n = accepting.size();
  return Dfa(alphabet, n, 0, std::move(accepting), std::move(delta));
}

Dfa truncate(const Dfa& d, std::size_t bound) {
  // States (q, length) for length < bound, plus one sink.
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  if (bound == 0) return empty_dfa(d.alphabet());
  const auto sink = static_cast<StateId>(n * bound);
  std::vector<StateId> delta;
  delta.reserve((n * bound + 1) * k);
  std::vector<bool> accepting(n * bound + 1, false);
  for (std::size_t len = 0; len < bound; ++len) {
    for (std::size_t q = 0; q < n; ++q) {
      accepting[len * n + q] = d.is_accepting(static_cast<StateId>(q));
      for (Letter a = 0; a < k; ++a) {
        delta.push_back(len + 1 < bound
                            ? static_cast<StateId>((len + 1) * n + d.next(static_cast<StateId>(q), a))
                            : sink);
      }
    }
  }
  for (Letter a = 0; a < k; ++a) delta.push_back(sink);
  return minimize(Dfa(d.alphabet(), n * bound + 1, d.initial(), std::move(accepting), std::move(delta)));
}

}  // namespace regmeasure
