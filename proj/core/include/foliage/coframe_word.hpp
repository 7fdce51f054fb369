#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foliage/types.hpp"

namespace foliage {

// Monomial in the unitary coframe. Generator g < n is omega^{g+1}, generator
// n + a is conj(omega^{a+1}). Canonical order is ascending generator index,
// so holomorphic factors come first.
class CoframeWord {
 public:
  CoframeWord() = default;
  CoframeWord(int n, std::uint32_t mask);

  // 1-based index lists, as in omega^1 ^ omega^2 ^ conj(omega^1).
  static CoframeWord from_indices(int n, const std::vector<int>& holo,
                                  const std::vector<int>& anti);
  static CoframeWord unit(int n) { return CoframeWord(n, 0); }
  static CoframeWord full(int n) { return CoframeWord(n, (1u << (2 * n)) - 1u); }

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int degree() const;
  int holo_degree() const;
  int anti_degree() const;
  bool contains(int generator) const { return (mask_ >> generator) & 1u; }
  std::vector<int> holo() const;
  std::vector<int> anti() const;

  std::string to_string() const;

  auto operator<=>(const CoframeWord& o) const { return mask_ <=> o.mask_; }
  bool operator==(const CoframeWord& o) const { return mask_ == o.mask_ && n_ == o.n_; }

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

inline int generator_count(int n) { return 2 * n; }
inline int conjugate_generator(int n, int g) { return g < n ? g + n : g - n; }

// Sign of reordering a ^ b into canonical order; 0 when the words overlap.
int wedge_sign(std::uint32_t a, std::uint32_t b);
// Sign picked up by moving generator g to the front of `mask`.
int removal_sign(std::uint32_t mask, int g);

}  // namespace foliage
