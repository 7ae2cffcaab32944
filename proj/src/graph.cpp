#include "regmeasure/graph.hpp"

#include <algorithm>
#include <limits>

namespace regmeasure {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

}  // namespace

SccResult strongly_connected_components(std::size_t vertex_count, std::size_t degree,
                                        std::span<const std::uint32_t> succ,
                                        std::span<const std::uint32_t> extra) {
  const std::size_t out = extra.empty() ? degree : 2 * degree;
  auto edge = [&](std::uint32_t v, std::size_t i) {
    return i < degree ? succ[v * degree + i] : extra[v * degree + (i - degree)];
  };

  SccResult result;
  result.component.assign(vertex_count, kUnvisited);
  std::vector<std::uint32_t> index(vertex_count, kUnvisited);
  std::vector<std::uint32_t> low(vertex_count, 0);
  std::vector<bool> on_stack(vertex_count, false);
  std::vector<std::uint32_t> stack;
  struct Frame {
    std::uint32_t vertex;
    std::size_t next_edge;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;

  for (std::uint32_t root = 0; root < vertex_count; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& frame = call.back();
      std::uint32_t v = frame.vertex;
      if (frame.next_edge < out) {
        std::uint32_t w = edge(v, frame.next_edge++);
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component[w] = result.count;
        } while (w != v);
        ++result.count;
      }
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return result;
}

void order_components_by_min_vertex(SccResult& scc) {
  std::vector<std::uint32_t> rename(scc.count, kUnvisited);
  std::uint32_t next = 0;
  for (auto& c : scc.component) {
    if (rename[c] == kUnvisited) rename[c] = next++;
    c = rename[c];
  }
}

std::vector<bool> bottom_components(const SccResult& scc, std::size_t degree,
                                    std::span<const std::uint32_t> succ,
                                    std::span<const std::uint32_t> extra) {
  std::vector<bool> bottom(scc.count, true);
  const std::size_t n = scc.component.size();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < degree; ++i) {
      if (scc.component[succ[v * degree + i]] != scc.component[v]) bottom[scc.component[v]] = false;
      if (!extra.empty() && scc.component[extra[v * degree + i]] != scc.component[v]) {
        bottom[scc.component[v]] = false;
      }
    }
  }
  return bottom;
}

}  // namespace regmeasure
