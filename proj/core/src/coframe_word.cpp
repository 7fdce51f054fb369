#include "foliage/coframe_word.hpp"

#include <bit>

namespace foliage {

CoframeWord::CoframeWord(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > kMaxHalfCodim) throw ArgumentError("CoframeWord: unsupported half-codimension");
  if (mask >> (2 * n)) throw ArgumentError("CoframeWord: generator index out of range");
}

CoframeWord CoframeWord::from_indices(int n, const std::vector<int>& holo, const std::vector<int>& anti) {
  std::uint32_t mask = 0;
  auto put = [&](int g) {
    if (mask & (1u << g)) throw ArgumentError("CoframeWord: repeated index");
    mask |= 1u << g;
  };
  for (int a : holo) {
    if (a < 1 || a > n) throw ArgumentError("CoframeWord: index out of range");
    put(a - 1);
  }
  for (int a : anti) {
    if (a < 1 || a > n) throw ArgumentError("CoframeWord: index out of range");
    put(n + a - 1);
  }
  return CoframeWord(n, mask);
}

int CoframeWord::degree() const { return std::popcount(mask_); }
int CoframeWord::holo_degree() const { return std::popcount(mask_ & ((1u << n_) - 1u)); }
int CoframeWord::anti_degree() const { return std::popcount(mask_ >> n_); }

std::vector<int> CoframeWord::holo() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    if (contains(a)) out.push_back(a + 1);
  return out;
}

std::vector<int> CoframeWord::anti() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    if (contains(n_ + a)) out.push_back(a + 1);
  return out;
}

std::string CoframeWord::to_string() const {
  if (mask_ == 0) return "1";
  std::string s;
  for (int g = 0; g < 2 * n_; ++g) {
    if (!contains(g)) continue;
    if (!s.empty()) s += '^';
    s += g < n_ ? "w" + std::to_string(g + 1) : "wb" + std::to_string(g - n_ + 1);
  }
  return s;
}

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

int removal_sign(std::uint32_t mask, int g) {
  return (std::popcount(mask & ((1u << g) - 1u)) & 1) ? -1 : 1;
}

}  // namespace foliage
