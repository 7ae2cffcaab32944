#pragma once

// Data-parallel inner loops. Each kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::parallel` with the
// same signature; the library calls the parallel one and the tests check the
// two agree.

#include <cstdint>
#include <span>
#include <vector>

#include "regmeasure/dfa.hpp"
#include "regmeasure/rational.hpp"

namespace regmeasure::kernels {

/// Incoming edges of a DFA in compressed row form, with multiplicity.
struct Predecessors {
  std::vector<std::uint32_t> offsets;  // state_count + 1 entries
  std::vector<StateId> sources;

  explicit Predecessors(const Dfa& d);
};

/// A monoid presented by its right Cayley graph and a BFS spanning tree:
/// element y != identity equals parent[y] * letter[y], with parent[y] < y.
struct CayleyTree {
  std::size_t size = 0;
  std::size_t letters = 0;
  std::uint32_t identity = 0;
  std::span<const std::uint32_t> right;  // right[x * letters + a] = x * a
  std::span<const std::uint32_t> parent;
  std::span<const std::uint32_t> letter;
};

namespace serial {

/// next[t] = number of paths of length k+1 ending in t, given the counts
/// for length k in `current`.
void count_step(const Dfa& d, std::span<const BigInt> current, std::span<BigInt> next);

/// Row-major multiplication table of a Cayley-presented monoid.
std::vector<std::uint32_t> multiplication_table(const CayleyTree& tree);

/// Number of triples (x, y, z) with (xy)z != x(yz).
std::uint64_t associativity_violations(std::span<const std::uint32_t> table, std::size_t size);

}  // namespace serial

namespace parallel {

void count_step(const Dfa& d, const Predecessors& pred, std::span<const BigInt> current,
                std::span<BigInt> next);

std::vector<std::uint32_t> multiplication_table(const CayleyTree& tree);

std::uint64_t associativity_violations(std::span<const std::uint32_t> table, std::size_t size);

}  // namespace parallel

}  // namespace regmeasure::kernels
