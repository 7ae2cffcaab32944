#include "regmeasure/kernels.hpp"

namespace regmeasure::kernels {

Predecessors::Predecessors(const Dfa& d) {
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();
  offsets.assign(n + 1, 0);
  for (std::size_t q = 0; q < n; ++q) {
    for (Letter a = 0; a < k; ++a) ++offsets[d.next(static_cast<StateId>(q), a) + 1];
  }
  for (std::size_t t = 0; t < n; ++t) offsets[t + 1] += offsets[t];
  sources.resize(n * k);
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (std::size_t q = 0; q < n; ++q) {
    for (Letter a = 0; a < k; ++a) {
      sources[fill[d.next(static_cast<StateId>(q), a)]++] = static_cast<StateId>(q);
    }
  }
}

namespace serial {

void count_step(const Dfa& d, std::span<const BigInt> current, std::span<BigInt> next) {
  const std::size_t k = d.alphabet().size();
  for (auto& v : next) v = 0;
  for (std::size_t q = 0; q < d.state_count(); ++q) {
    if (current[q] == 0) continue;
    for (Letter a = 0; a < k; ++a) next[d.next(static_cast<StateId>(q), a)] += current[q];
  }
}

std::vector<std::uint32_t> multiplication_table(const CayleyTree& tree) {
  const std::size_t n = tree.size;
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    auto* row = table.data() + x * n;
    row[tree.identity] = static_cast<std::uint32_t>(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y == tree.identity) continue;
      row[y] = tree.right[row[tree.parent[y]] * tree.letters + tree.letter[y]];
    }
  }
  return table;
}

std::uint64_t associativity_violations(std::span<const std::uint32_t> table, std::size_t size) {
  std::uint64_t bad = 0;
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const std::uint32_t xy = table[x * size + y];
      for (std::size_t z = 0; z < size; ++z) {
        if (table[xy * size + z] != table[x * size + table[y * size + z]]) ++bad;
      }
    }
  }
  return bad;
}

}  // namespace serial
}  // namespace regmeasure::kernels
