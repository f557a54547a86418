#include "hklab/prime_field.hpp"

#include <mutex>
#include <ostream>
#include <unordered_map>
#include <vector>

namespace hklab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

constexpr std::uint32_t kInverseTableMax = 1u << 16;

std::uint32_t euclid_inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid tracking only the coefficient of a.
  std::int64_t r0 = p, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (t0 < 0) t0 += p;
  return static_cast<std::uint32_t>(t0);
}

// Inverse tables per characteristic, built once and then read concurrently.
const std::vector<std::uint32_t>& inverse_table(std::uint32_t p) {
  static std::mutex mu;
  static std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(p);
  if (it == tables.end()) {
    std::vector<std::uint32_t> table(p, 0);
    if (p > 2) {
      // inv(1) = 1; inv(a) = -(p/a) * inv(p mod a) mod p.
      table[1] = 1;
      for (std::uint32_t a = 2; a < p; ++a) {
        const std::uint64_t q = p / a;
        table[a] = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(p - table[p % a]) * q) % p);
      }
    } else if (p == 2) {
      table[1] = 1;
    }
    it = tables.emplace(p, std::move(table)).first;
  }
  return it->second;
}

}  // namespace

std::uint32_t modular_inverse(std::uint32_t a, std::uint32_t p) {
  if (a == 0 || a >= p) throw Error(ErrorCode::DivisionByZero, "inverse of 0 mod p");
  if (p <= kInverseTableMax) return inverse_table(p)[a];
  return euclid_inverse(a, p);
}

FieldElement FieldElement::pow(std::uint64_t k) const {
  FieldElement acc(characteristic(), 1);
  FieldElement base = *this;
  for (std::uint64_t e = k; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, FieldElement x) { return os << x.residue(); }

}  // namespace hklab
