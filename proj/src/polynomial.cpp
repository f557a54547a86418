#include "hklab/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace hklab {

std::size_t RingContext::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return i;
  }
  return vars.size();
}

RingContextPtr make_context(std::uint32_t p, std::vector<std::string> vars,
                            MonomialOrder order) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::NonPrimeModulus,
                "characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !seen.insert(v).second) {
      throw Error(ErrorCode::BadInput, "variable names must be distinct and nonempty");
    }
  }
  if (!order.permutation().empty() && order.permutation().size() != vars.size()) {
    throw Error(ErrorCode::ArityMismatch, "order permutation length mismatch");
  }
  return std::make_shared<RingContext>(RingContext{p, std::move(vars), std::move(order)});
}

Polynomial Polynomial::constant(const RingContextPtr& ctx, std::int64_t value) {
  return from_term(ctx, Monomial(ctx->nvars()), FieldElement(ctx->p, value));
}

Polynomial Polynomial::variable(const RingContextPtr& ctx, std::size_t index) {
  std::vector<std::uint16_t> e(ctx->nvars(), 0);
  e.at(index) = 1;
  return from_term(ctx, Monomial(std::move(e)), FieldElement(ctx->p, 1));
}

Polynomial Polynomial::from_term(const RingContextPtr& ctx, Monomial m, FieldElement c) {
  Polynomial out(ctx);
  if (m.nvars() != ctx->nvars()) {
    throw Error(ErrorCode::ArityMismatch, "monomial arity differs from ring arity");
  }
  if (c.characteristic() != ctx->p) {
    throw Error(ErrorCode::CharMismatch, "coefficient characteristic differs from ring");
  }
  if (!c.is_zero()) {
    out.terms_.push_back(Term{std::move(m), c});
  }
  return out;
}

Polynomial Polynomial::from_terms(const RingContextPtr& ctx, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ctx->order.greater(a.mono, b.mono);
  });
  Polynomial out(ctx);
  for (auto& t : terms) {
    if (t.mono.nvars() != ctx->nvars()) {
      throw Error(ErrorCode::ArityMismatch, "monomial arity differs from ring arity");
    }
    if (t.coeff.characteristic() != ctx->p) {
      throw Error(ErrorCode::CharMismatch, "coefficient characteristic differs from ring");
    }
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) {
    throw Error(ErrorCode::BadInput, "lead term of the zero polynomial");
  }
  return terms_.front();
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

FieldElement Polynomial::constant_coefficient() const {
  for (const auto& t : terms_) {
    if (t.mono.is_constant()) return t.coeff;
  }
  return FieldElement(ctx_->p, 0);
}

bool Polynomial::has_positive_degree_terms_only() const {
  return constant_coefficient().is_zero();
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (ctx_ == o.ctx_) return;
  if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_)) {
    if (ctx_ && o.ctx_ && ctx_->p != o.ctx_->p) {
      throw Error(ErrorCode::CharMismatch, "polynomials over different characteristics");
    }
    if (ctx_ && o.ctx_ && ctx_->vars != o.ctx_->vars) {
      throw Error(ErrorCode::ArityMismatch, "polynomials over different variable sets");
    }
    throw Error(ErrorCode::OrderMismatch, "polynomials under different term orders");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ctx_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, -t.coeff});
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& order = ctx_->order;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = order.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      merged.push_back(terms_[i++]);
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      FieldElement sum = terms_[i].coeff + o.terms_[j].coeff;
      if (!sum.is_zero()) merged.push_back(Term{terms_[i].mono, sum});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial acc = Polynomial::zero(a.context());
  for (const auto& t : b.terms()) {
    acc += a.times_term(t.mono, t.coeff);
  }
  return acc;
}

Polynomial Polynomial::times_term(const Monomial& m, FieldElement c) const {
  Polynomial out(ctx_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.terms_.push_back(Term{t.mono.times(m), t.coeff * c});
  }
  return out;
}

Polynomial Polynomial::times_scalar(FieldElement c) const {
  return times_term(Monomial(ctx_->nvars()), c);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return times_scalar(lead_coefficient().inverse());
}

Polynomial Polynomial::frobenius_power(std::uint64_t q) const {
  Polynomial out(ctx_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.terms_.push_back(Term{t.mono.power(q), t.coeff});
  }
  return out;
}

Polynomial Polynomial::mapped_to(const RingContextPtr& target,
                                 const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ctx_->nvars()) {
    throw Error(ErrorCode::ArityMismatch, "variable map arity mismatch");
  }
  if (target->p != ctx_->p) {
    throw Error(ErrorCode::CharMismatch, "variable map across characteristics");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint16_t> e(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      e.at(var_map[i]) = t.mono.exponent(i);
    }
    terms.push_back(Term{Monomial(std::move(e)), FieldElement(target->p, t.coeff.residue())});
  }
  return from_terms(target, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (!t.coeff.is_one() || t.mono.is_constant()) {
      os << t.coeff.residue();
      printed = true;
    }
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      const auto e = t.mono.exponent(i);
      if (e == 0) continue;
      if (printed) os << "*";
      os << ctx_->vars[i];
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.str(); }

}  // namespace hklab
