#include "regmeasure/density.hpp"

#include <algorithm>

#include "regmeasure/automata.hpp"
#include "regmeasure/errors.hpp"
#include "regmeasure/graph.hpp"
#include "regmeasure/linalg.hpp"

namespace regmeasure {

namespace {

std::vector<bool> reachable_mask(const Dfa& d) {
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

// Letter counts from q to each target, in target order.
std::vector<std::pair<StateId, std::size_t>> out_counts(const Dfa& d, StateId q) {
  std::vector<StateId> targets;
  for (Letter a = 0; a < d.alphabet().size(); ++a) targets.push_back(d.next(q, a));
  std::sort(targets.begin(), targets.end());
  std::vector<std::pair<StateId, std::size_t>> out;
  for (StateId t : targets) {
    if (!out.empty() && out.back().first == t) {
      ++out.back().second;
    } else {
      out.emplace_back(t, 1);
    }
  }
  return out;
}

void check(bool condition, const char* what) {
  if (!condition) throw InternalError(std::string("chain analysis: ") + what);
}

}  // namespace

ChainAnalysis analyze_chain(const Dfa& d) {
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  const BigRational letter_weight(1, k);
  const auto reachable = reachable_mask(d);

  ChainAnalysis chain;
  chain.transition.resize(n);
  std::vector<std::vector<std::pair<StateId, std::size_t>>> counts(n);
  for (std::size_t q = 0; q < n; ++q) {
    counts[q] = out_counts(d, static_cast<StateId>(q));
    BigRational row_sum = 0;
    for (auto [t, c] : counts[q]) {
      BigRational p = letter_weight * static_cast<unsigned long>(c);
      row_sum += p;
      chain.transition[q].emplace_back(t, std::move(p));
    }
    check(row_sum == 1, "row does not sum to 1");
  }

  // Tarjan numbers components sinks first: every edge leaving component c
  // enters a component with a smaller number.
  SccResult scc = strongly_connected_components(n, k, d.transitions());
  auto bottom = bottom_components(scc, k, d.transitions());
  std::vector<std::vector<StateId>> members(scc.count);
  for (std::size_t q = 0; q < n; ++q) members[scc.component[q]].push_back(static_cast<StateId>(q));

  std::vector<std::uint32_t> bottom_index(scc.count, ~0u);
  for (std::uint32_t c = 0; c < scc.count; ++c) {
    if (bottom[c] && reachable[members[c].front()]) {
      bottom_index[c] = static_cast<std::uint32_t>(chain.bottom_components.size());
      chain.bottom_components.push_back(members[c]);
    }
  }
  const std::size_t b = chain.bottom_components.size();
  check(b > 0, "no reachable bottom component");

  // Stationary distribution of each bottom component: pi (C - kI) = 0 with
  // the last balance equation replaced by sum(pi) = 1.
  for (const auto& component : chain.bottom_components) {
    const std::size_t size = component.size();
    std::vector<std::uint32_t> local(n, ~0u);
    for (std::size_t i = 0; i < size; ++i) local[component[i]] = static_cast<std::uint32_t>(i);
    IntMatrix a(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      for (auto [t, c] : counts[component[i]]) {
        std::uint32_t j = local[t];
        if (j + 1 < size) a.at(j, i) += static_cast<unsigned long>(c);
      }
      if (i + 1 < size) a.at(i, i) -= static_cast<unsigned long>(k);
    }
    std::vector<BigRational> rhs(size, 0);
    for (std::size_t i = 0; i < size; ++i) a.at(size - 1, i) = 1;
    rhs[size - 1] = 1;
    auto pi = solve_exact(std::move(a), std::move(rhs), 1);

    BigRational total = 0;
    for (const auto& p : pi) total += p;
    check(total == 1, "stationary distribution does not sum to 1");
    std::vector<BigRational> flow(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
      for (const auto& [t, p] : chain.transition[component[i]]) flow[local[t]] += pi[i] * p;
    }
    check(flow == pi, "distribution is not stationary");
    chain.stationary.push_back(std::move(pi));
  }

  // Absorption probabilities h[q][c], solved one transient component at a
  // time in topological order from the sinks.
  std::vector<std::vector<BigRational>> h(n);
  for (std::uint32_t c = 0; c < scc.count; ++c) {
    if (!reachable[members[c].front()]) continue;
    if (bottom_index[c] != ~0u) {
      for (StateId q : members[c]) {
        h[q].assign(b, 0);
        h[q][bottom_index[c]] = 1;
      }
      continue;
    }
    const auto& component = members[c];
    const std::size_t size = component.size();
    std::vector<std::uint32_t> local(n, ~0u);
    for (std::size_t i = 0; i < size; ++i) local[component[i]] = static_cast<std::uint32_t>(i);
    IntMatrix a(size, size);
    std::vector<BigRational> rhs(size * b, 0);
    for (std::size_t i = 0; i < size; ++i) {
      a.at(i, i) += static_cast<unsigned long>(k);
      for (auto [t, count] : counts[component[i]]) {
        if (local[t] != ~0u) {
          a.at(i, local[t]) -= static_cast<unsigned long>(count);
        } else {
          for (std::size_t j = 0; j < b; ++j) rhs[i * b + j] += h[t][j] * static_cast<unsigned long>(count);
        }
      }
    }
    auto solution = solve_exact(std::move(a), std::move(rhs), b);
    for (std::size_t i = 0; i < size; ++i) {
      h[component[i]].assign(solution.begin() + static_cast<std::ptrdiff_t>(i * b),
                             solution.begin() + static_cast<std::ptrdiff_t>((i + 1) * b));
    }
  }
  chain.absorption = h[d.initial()];
  BigRational absorbed = 0;
  for (const auto& p : chain.absorption) absorbed += p;
  check(absorbed == 1, "absorption probabilities do not sum to 1");

  chain.limit_occupancy.assign(n, 0);
  for (std::size_t c = 0; c < b; ++c) {
    const auto& component = chain.bottom_components[c];
    for (std::size_t i = 0; i < component.size(); ++i) {
      chain.limit_occupancy[component[i]] = chain.absorption[c] * chain.stationary[c][i];
    }
  }
  return chain;
}

BigRational density(const Dfa& d) {
  ChainAnalysis chain = analyze_chain(d);
  BigRational total = 0;
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    if (d.is_accepting(static_cast<StateId>(q))) total += chain.limit_occupancy[q];
  }
  return total;
}

BigRational density_partial(const Dfa& d, std::size_t horizon, const Config& config) {
  if (horizon == 0) throw InputError("partial density needs a horizon n >= 1");
  if (horizon > config.partial_horizon) {
    throw CapExceeded("partial density horizon", horizon, config.partial_horizon);
  }
  const auto counts = count_words_upto(d, horizon);
  const BigInt k = static_cast<unsigned long>(d.alphabet().size());
  // sum_k count_k / |A|^k = (sum_k count_k |A|^{n-1-k}) / |A|^{n-1}
  BigInt numerator = 0;
  BigInt scale = 1;
  for (std::size_t i = 0; i < horizon; ++i) {
    numerator = numerator * k + counts[i];
    if (i > 0) scale *= k;
  }
  BigRational result(numerator, scale * static_cast<unsigned long>(horizon));
  result.canonicalize();
  return result;
}

std::optional<Word> forbidden_word(const Dfa& d, const Config& config) {
  // w is forbidden iff the ideal M eta(w) M misses P. Mark every element
  // whose ideal meets P by searching backwards from P along left and right
  // multiplication by letters.
  RecognizingMorphism eta = syntactic_monoid(d, config);
  const FiniteMonoid& m = eta.monoid;
  const std::size_t n = m.size();
  const std::size_t k = m.alphabet().size();
  std::vector<std::vector<ElementId>> back(n);
  for (ElementId x = 0; x < n; ++x) {
    for (Letter a = 0; a < k; ++a) {
      back[m.right(x, a)].push_back(x);
      back[m.left(a, x)].push_back(x);
    }
  }
  std::vector<bool> meets(n, false);
  std::vector<ElementId> queue;
  for (ElementId x = 0; x < n; ++x) {
    if (eta.accepting[x]) {
      meets[x] = true;
      queue.push_back(x);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElementId y : back[queue[i]]) {
      if (!meets[y]) {
        meets[y] = true;
        queue.push_back(y);
      }
    }
  }
  // Element ids follow shortlex order of their representative words.
  for (ElementId x = 0; x < n; ++x) {
    if (!meets[x]) return m.word(x);
  }
  return std::nullopt;
}

std::vector<BigRational> fiber_densities(const FiniteMonoid& monoid) {
  Dfa cayley = cayley_dfa(monoid, std::vector<bool>(monoid.size(), false));
  return analyze_chain(cayley).limit_occupancy;
}

}  // namespace regmeasure
