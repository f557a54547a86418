#include "hklab/staircase.hpp"

#include <algorithm>
#include <unordered_map>

#include "hklab/errors.hpp"

namespace hklab {

namespace {

using Exponents = std::vector<std::uint16_t>;

// Keeps only minimal generators: no kept monomial divides another.
std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  auto divides = [](const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  };
  std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
    std::uint32_t da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> minimal;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (divides(kept, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  return minimal;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint16_t>& key) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : key) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::ResourceLimit, "standard monomial count exceeds 2^64-1");
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::ResourceLimit, "standard monomial count exceeds 2^64-1");
  }
  return out;
}

class StaircaseCounter {
 public:
  explicit StaircaseCounter(std::size_t nvars) : nvars_(nvars) {}

  std::uint64_t count(std::vector<Exponents> gens) {
    gens = minimalize(std::move(gens));
    std::vector<std::uint16_t> key;
    key.reserve(gens.size() * nvars_);
    for (const auto& g : gens) key.insert(key.end(), g.begin(), g.end());
    const auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    const std::uint64_t result = count_minimal(gens);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::uint64_t count_minimal(const std::vector<Exponents>& gens) {
    for (const auto& g : gens) {
      bool constant = true;
      for (auto x : g) constant &= x == 0;
      if (constant) return 0;  // unit ideal
    }

    // Base case: all generators are pure powers, so the staircase is a box.
    std::size_t pivot_gen = gens.size();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int support = 0;
      for (auto x : gens[s]) support += x > 0 ? 1 : 0;
      if (support > 1) {
        pivot_gen = s;
        break;
      }
    }
    if (pivot_gen == gens.size()) {
      std::vector<std::uint32_t> bound(nvars_, 0);
      for (const auto& g : gens) {
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (g[i] > 0) bound[i] = g[i];
        }
      }
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (bound[i] == 0) {
          throw Error(ErrorCode::InfiniteLength, "ideal is not Artinian");
        }
        total = checked_mul(total, bound[i]);
      }
      return total;
    }

    // Split on a variable from a mixed generator: monomials outside the
    // ideal are those without the variable (add it to the ideal) plus the
    // variable times those outside the quotient by it.
    std::size_t var = 0;
    std::uint16_t best = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (gens[pivot_gen][i] > best) {
        best = gens[pivot_gen][i];
        var = i;
      }
    }

    std::vector<Exponents> plus_var;
    Exponents pure(nvars_, 0);
    pure[var] = 1;
    plus_var.push_back(pure);
    for (const auto& g : gens) {
      if (g[var] == 0) plus_var.push_back(g);
    }

    std::vector<Exponents> colon;
    colon.reserve(gens.size());
    for (auto g : gens) {
      if (g[var] > 0) --g[var];
      colon.push_back(std::move(g));
    }

    return checked_add(count(std::move(plus_var)), count(std::move(colon)));
  }

  std::size_t nvars_;
  std::unordered_map<std::vector<std::uint16_t>, std::uint64_t, KeyHash> memo_;
};

std::vector<Exponents> to_exponents(std::size_t nvars, const std::vector<Monomial>& gens) {
  std::vector<Exponents> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.nvars() != nvars) {
      throw Error(ErrorCode::ArityMismatch, "monomial arity differs from nvars");
    }
    out.push_back(g.exponents());
  }
  return out;
}

}  // namespace

bool is_artinian(std::size_t nvars, const std::vector<Monomial>& gens) {
  std::vector<bool> bounded(nvars, false);
  for (const auto& g : gens) {
    if (g.nvars() != nvars) {
      throw Error(ErrorCode::ArityMismatch, "monomial arity differs from nvars");
    }
    if (g.is_constant()) return true;  // unit ideal
    std::size_t support_var = nvars;
    int support = 0;
    for (std::size_t i = 0; i < nvars && support < 2; ++i) {
      if (g.exponent(i) > 0) {
        support_var = i;
        ++support;
      }
    }
    if (support == 1) bounded[support_var] = true;
  }
  return std::all_of(bounded.begin(), bounded.end(), [](bool b) { return b; });
}

std::uint64_t standard_monomial_count(std::size_t nvars,
                                      const std::vector<Monomial>& gens) {
  if (!is_artinian(nvars, gens)) {
    throw Error(ErrorCode::InfiniteLength, "ideal is not Artinian");
  }
  StaircaseCounter counter(nvars);
  return counter.count(to_exponents(nvars, gens));
}

std::vector<Monomial> standard_monomials(std::size_t nvars,
                                         const std::vector<Monomial>& gens) {
  if (!is_artinian(nvars, gens)) {
    throw Error(ErrorCode::InfiniteLength, "ideal is not Artinian");
  }
  const std::vector<Exponents> minimal = minimalize(to_exponents(nvars, gens));
  std::vector<std::uint32_t> bound(nvars, 0);
  for (const auto& g : minimal) {
    int support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (g[i] > 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1) bound[var] = g[var];
    if (support == 0) return {};  // unit ideal
  }
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    cells = checked_mul(cells, bound[i]);
    if (cells > (1u << 24)) {
      throw Error(ErrorCode::ResourceLimit, "staircase too large to enumerate");
    }
  }
  std::vector<Monomial> out;
  Exponents point(nvars, 0);
  while (true) {
    bool inside = false;
    for (const auto& g : minimal) {
      bool div = true;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (g[i] > point[i]) {
          div = false;
          break;
        }
      }
      if (div) {
        inside = true;
        break;
      }
    }
    if (!inside) out.emplace_back(point);
    std::size_t i = 0;
    while (i < nvars && point[i] + 1u >= bound[i]) point[i++] = 0;
    if (i == nvars) break;
    ++point[i];
  }
  return out;
}

int krull_dimension(std::size_t nvars, const std::vector<Monomial>& gens) {
  if (nvars > 24) {
    throw Error(ErrorCode::ResourceLimit, "cover search supports at most 24 variables");
  }
  std::vector<std::uint32_t> supports;
  for (const auto& raw : minimalize(to_exponents(nvars, gens))) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (raw[i] > 0) mask |= 1u << i;
    }
    if (mask == 0) {
      throw Error(ErrorCode::UnitIdeal, "dimension of the zero ring");
    }
    supports.push_back(mask);
  }
  if (supports.empty()) return static_cast<int>(nvars);

  // Only variables occurring in some support can be useful cover members.
  std::vector<std::size_t> relevant;
  std::uint32_t relevant_mask = 0;
  for (std::uint32_t s : supports) relevant_mask |= s;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (relevant_mask & (1u << i)) relevant.push_back(i);
  }

  // Smallest set of variables meeting every support, by increasing size.
  const std::size_t m = relevant.size();
  for (std::size_t k = 1; k <= m; ++k) {
    // Enumerate k-subsets of the relevant variables (Gosper's hack).
    for (std::uint32_t bits = (1u << k) - 1; bits < (1u << m);) {
      std::uint32_t cover = 0;
      for (std::size_t t = 0; t < m; ++t) {
        if (bits & (1u << t)) cover |= 1u << relevant[t];
      }
      bool covers = true;
      for (std::uint32_t s : supports) {
        if ((s & cover) == 0) {
          covers = false;
          break;
        }
      }
      if (covers) return static_cast<int>(nvars) - static_cast<int>(k);
      const std::uint32_t c = bits & -bits;
      const std::uint32_t r = bits + c;
      bits = (((r ^ bits) >> 2) / c) | r;
    }
  }
  throw Error(ErrorCode::BadInput, "unreachable: full variable set covers everything");
}

}  // namespace hklab
