#include "hklab/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace hklab {

namespace {

constexpr std::uint32_t kExponentMax = 65535;

std::uint16_t checked_exponent(std::uint64_t value) {
  if (value > kExponentMax) {
    throw Error(ErrorCode::ExponentOverflow, "exponent exceeds 65535");
  }
  return static_cast<std::uint16_t>(value);
}

}  // namespace

bool Monomial::is_constant() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint16_t x) { return x == 0; });
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (std::uint16_t x : e_) d += x;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  check_arity(o);
  Monomial out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    out.e_[i] = checked_exponent(static_cast<std::uint64_t>(e_[i]) + o.e_[i]);
  }
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  check_arity(o);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > o.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  check_arity(o);
  Monomial out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) {
      throw Error(ErrorCode::NotDivisible, "monomial quotient does not exist");
    }
    out.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& o) const {
  check_arity(o);
  Monomial out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    out.e_[i] = std::max(e_[i], o.e_[i]);
  }
  return out;
}

bool Monomial::coprime(const Monomial& o) const {
  check_arity(o);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0 && o.e_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::power(std::uint64_t q) const {
  Monomial out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    out.e_[i] = checked_exponent(static_cast<std::uint64_t>(e_[i]) * q);
  }
  return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::ArityMismatch, "comparing monomials of different arity");
  }
  const std::size_t n = a.nvars();
  if (!perm_.empty() && perm_.size() != n) {
    throw Error(ErrorCode::ArityMismatch, "order permutation length mismatch");
  }
  auto var_at = [&](std::size_t k) { return perm_.empty() ? k : perm_[k]; };
  if (kind_ == OrderKind::Grevlex) {
    const std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Degree tie: the monomial with the smaller exponent in the last
    // position where they differ is the larger one.
    for (std::size_t k = n; k-- > 0;) {
      const std::uint16_t ea = a.exponent(var_at(k)), eb = b.exponent(var_at(k));
      if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint16_t ea = a.exponent(var_at(k)), eb = b.exponent(var_at(k));
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  std::string base = kind_ == OrderKind::Grevlex ? "grevlex" : "lex";
  if (!perm_.empty()) {
    base += "[";
    for (std::size_t k = 0; k < perm_.size(); ++k) {
      if (k) base += ",";
      base += std::to_string(perm_[k]);
    }
    base += "]";
  }
  return base;
}

}  // namespace hklab
