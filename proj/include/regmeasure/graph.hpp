#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace regmeasure {

/// Strongly connected components of a graph with a fixed out-degree, given
/// as a row-major successor table (`succ[v * degree + i]`). Extra edges may
/// be supplied through `extra` with the same shape (used for two-sided
/// Cayley graphs).
struct SccResult {
  /// component[v]; components are numbered in reverse topological order of
  /// the condensation (sinks first), as Tarjan's algorithm emits them.
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
};

SccResult strongly_connected_components(std::size_t vertex_count, std::size_t degree,
                                        std::span<const std::uint32_t> succ,
                                        std::span<const std::uint32_t> extra = {});

/// Renumbers components so that they are ordered by their smallest vertex.
void order_components_by_min_vertex(SccResult& scc);

/// True for components without edges leaving them.
std::vector<bool> bottom_components(const SccResult& scc, std::size_t degree,
                                    std::span<const std::uint32_t> succ,
                                    std::span<const std::uint32_t> extra = {});

}  // namespace regmeasure
