#include <omp.h>

#include "regmeasure/kernels.hpp"

namespace regmeasure::kernels::parallel {

namespace {

// Below these sizes thread start-up costs more than the loop.
constexpr std::int64_t kMinStates = 256;
constexpr std::int64_t kMinRows = 64;

}  // namespace

void count_step(const Dfa& d, const Predecessors& pred, std::span<const BigInt> current,
                std::span<BigInt> next) {
  const auto n = static_cast<std::int64_t>(d.state_count());
#pragma omp parallel for schedule(static) if (n >= kMinStates)
  for (std::int64_t t = 0; t < n; ++t) {
    BigInt sum = 0;
    for (auto i = pred.offsets[t]; i < pred.offsets[t + 1]; ++i) sum += current[pred.sources[i]];
    next[t] = std::move(sum);
  }
}

std::vector<std::uint32_t> multiplication_table(const CayleyTree& tree) {
  const auto n = static_cast<std::int64_t>(tree.size);
  std::vector<std::uint32_t> table(tree.size * tree.size);
#pragma omp parallel for schedule(dynamic, 16) if (n >= kMinRows)
  for (std::int64_t x = 0; x < n; ++x) {
    auto* row = table.data() + x * n;
    row[tree.identity] = static_cast<std::uint32_t>(x);
    for (std::int64_t y = 0; y < n; ++y) {
      if (y == tree.identity) continue;
      row[y] = tree.right[row[tree.parent[y]] * tree.letters + tree.letter[y]];
    }
  }
  return table;
}

std::uint64_t associativity_violations(std::span<const std::uint32_t> table, std::size_t size) {
  const auto n = static_cast<std::int64_t>(size);
  std::uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : bad) if (n >= kMinRows)
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) {
      const std::uint32_t xy = table[x * n + y];
      const std::uint32_t* lhs = table.data() + static_cast<std::size_t>(xy) * size;
      const std::uint32_t* yrow = table.data() + y * n;
      const std::uint32_t* xrow = table.data() + x * n;
      for (std::int64_t z = 0; z < n; ++z) {
        if (lhs[z] != xrow[yrow[z]]) ++bad;
      }
    }
  }
  return bad;
}

}  // namespace regmeasure::kernels::parallel
