#pragma once

#include <algorithm>
#include <vector>

namespace agc::detail {

// Helpers for vectors kept sorted and duplicate-free.

template <class T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// Returns false if x was already present.
template <class T>
bool insert_sorted(std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) return false;
  v.insert(it, x);
  return true;
}

// Returns false if x was not present.
template <class T>
bool erase_sorted(std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || !(*it == x)) return false;
  v.erase(it);
  return true;
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Index of x in a sorted vector, or v.size() if absent.
template <class T>
std::size_t index_of(const std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) return v.size();
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace agc::detail
