#include "hklab/linalg.hpp"

#include "hklab/prime_field.hpp"

namespace hklab {

std::size_t gf_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][col] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = modular_inverse(rows[rank][col] % p, p);
    for (std::size_t c = col; c < cols; ++c) {
      rows[rank][c] = static_cast<std::uint32_t>(rows[rank][c] * inv % p);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] % p == 0) continue;
      const std::uint64_t factor = p - rows[r][col] % p;
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] = static_cast<std::uint32_t>(
            (rows[r][c] + factor * rows[rank][c]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace hklab
