#ifndef HRLB_SRC_SUBSETS_HPP
#define HRLB_SRC_SUBSETS_HPP

#include <cstddef>
#include <numeric>
#include <type_traits>
#include <span>
#include <vector>

namespace hrlb::detail {

// Calls fn(span of positions) for every `size`-subset of {0..n-1} in
// lexicographic order. fn may return void or bool (false stops the walk).
template <class Fn>
void for_each_subset(std::size_t n, std::size_t size, Fn&& fn) {
  if (size > n) return;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if constexpr (std::is_same_v<decltype(fn(std::span<const std::size_t>(idx))), bool>) {
      if (!fn(std::span<const std::size_t>(idx))) return;
    } else {
      fn(std::span<const std::size_t>(idx));
    }
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace hrlb::detail

#endif  // HRLB_SRC_SUBSETS_HPP
