#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "agc/detail/sorted.hpp"

namespace agc::detail {

// Index-compressed adjacency over positions in a sorted vertex vector.
// Row order follows the (sorted) edge list, so iteration order is stable.
struct Csr {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> targets;

  struct Row {
    const std::uint32_t* first;
    const std::uint32_t* last;
    const std::uint32_t* begin() const { return first; }
    const std::uint32_t* end() const { return last; }
  };

  Row row(std::uint32_t v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

template <typename Id>
Csr csr_forward(const std::vector<Id>& verts, const std::vector<std::pair<Id, Id>>& edges) {
  Csr c;
  c.offsets.assign(verts.size() + 1, 0);
  for (const auto& e : edges) c.offsets[index_of(verts, e.first) + 1]++;
  for (std::size_t i = 1; i < c.offsets.size(); ++i) c.offsets[i] += c.offsets[i - 1];
  c.targets.resize(edges.size());
  std::vector<std::uint32_t> cursor(c.offsets.begin(), c.offsets.end() - 1);
  for (const auto& e : edges) {
    std::size_t s = index_of(verts, e.first);
    c.targets[cursor[s]++] = static_cast<std::uint32_t>(index_of(verts, e.second));
  }
  return c;
}

template <typename Id>
Csr csr_reverse(const std::vector<Id>& verts, const std::vector<std::pair<Id, Id>>& edges) {
  Csr c;
  c.offsets.assign(verts.size() + 1, 0);
  for (const auto& e : edges) c.offsets[index_of(verts, e.second) + 1]++;
  for (std::size_t i = 1; i < c.offsets.size(); ++i) c.offsets[i] += c.offsets[i - 1];
  c.targets.resize(edges.size());
  std::vector<std::uint32_t> cursor(c.offsets.begin(), c.offsets.end() - 1);
  for (const auto& e : edges) {
    std::size_t d = index_of(verts, e.second);
    c.targets[cursor[d]++] = static_cast<std::uint32_t>(index_of(verts, e.first));
  }
  return c;
}

}  // namespace agc::detail
