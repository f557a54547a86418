#ifndef HKLAB_LINALG_HPP
#define HKLAB_LINALG_HPP

#include <cstdint>
#include <vector>

namespace hklab {

// Rank over GF(p) of a dense row-major matrix, by Gaussian elimination.
std::size_t gf_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

}  // namespace hklab

#endif
