#include "clusterlab/laurent.hpp"

#include <algorithm>
#include <limits>

namespace clusterlab {

namespace {

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponent sub_exp(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<std::string> vars)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {}

LaurentPoly::LaurentPoly(std::shared_ptr<const std::vector<std::string>> vars, Terms terms)
    : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    if (e.size() != nvars()) throw DimensionError("exponent length does not match variable count");
    if (c != 0) terms_.emplace(e, c);
  }
}

LaurentPoly LaurentPoly::constant(std::shared_ptr<const std::vector<std::string>> vars, const Int& c) {
  const auto n = vars->size();
  return monomial(std::move(vars), Exponent(n, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::shared_ptr<const std::vector<std::string>> vars, Exponent e,
                                  const Int& c) {
  LaurentPoly p;
  p.vars_ = std::move(vars);
  if (e.size() != p.nvars()) throw DimensionError("exponent length does not match variable count");
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::shared_ptr<const std::vector<std::string>> vars, std::size_t i) {
  Exponent e(vars->size(), 0);
  if (i >= e.size()) throw IndexError("variable index out of range");
  e[i] = 1;
  return monomial(std::move(vars), std::move(e));
}

const std::vector<std::string>& LaurentPoly::vars() const {
  static const std::vector<std::string> empty;
  return vars_ ? *vars_ : empty;
}

Int LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int v : e)
      if (v < 0) return false;
  return true;
}

bool LaurentPoly::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (nvars() != o.nvars()) throw DimensionError("Laurent polynomials over different variable sets");
}

void LaurentPoly::add_term(const Exponent& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (!vars_) vars_ = o.vars_;
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (!vars_) vars_ = o.vars_;
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::times_monomial(const Exponent& e, const Int& c) const {
  if (e.size() != nvars()) throw DimensionError("monomial length mismatch");
  LaurentPoly p;
  p.vars_ = vars_;
  if (c == 0) return p;
  for (const auto& [te, tc] : terms_) p.terms_.emplace_hint(p.terms_.end(), add_exp(te, e), tc * c);
  return p;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("Laurent polynomials over different variable sets");
  LaurentPoly::Terms acc;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e = add_exp(ea, eb);
      auto [it, inserted] = acc.try_emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return LaurentPoly(a.shared_vars() ? a.shared_vars() : b.shared_vars(), std::move(acc));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw ConsistencyError("division by the zero Laurent polynomial");
  LaurentPoly quotient;
  quotient.vars_ = vars_;
  if (is_zero()) return quotient;

  const std::size_t n = nvars();
  auto bounds = [n](const Terms& t) {
    Exponent lo(n, std::numeric_limits<int>::max()), hi(n, std::numeric_limits<int>::min());
    for (const auto& [e, c] : t)
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    return std::pair{lo, hi};
  };
  const auto [num_lo, num_hi] = bounds(terms_);
  const auto [den_lo, den_hi] = bounds(divisor.terms_);
  const Exponent q_lo = sub_exp(num_lo, den_lo);
  const Exponent q_hi = sub_exp(num_hi, den_hi);

  const auto& [lead_exp, lead_coef] = *divisor.terms_.rbegin();
  LaurentPoly rem = *this;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_coef.get_mpz_t())) return std::nullopt;
    Exponent qe = sub_exp(re, lead_exp);
    for (std::size_t i = 0; i < n; ++i)
      if (qe[i] < q_lo[i] || qe[i] > q_hi[i]) return std::nullopt;
    Int qc = rc / lead_coef;
    quotient.add_term(qe, qc);
    rem -= divisor.times_monomial(qe, qc);
  }
  return quotient;
}

LaurentPoly LaurentPoly::set_to_one(const std::vector<bool>& mask) const {
  if (mask.size() != nvars()) throw DimensionError("substitution mask length mismatch");
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (!mask[i]) kept.push_back(vars()[i]);
  LaurentPoly out(std::move(kept));
  for (const auto& [e, c] : terms_) {
    Exponent r;
    r.reserve(out.nvars());
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (!mask[i]) r.push_back(e[i]);
    out.add_term(r, c);
  }
  return out;
}

std::string LaurentPoly::canonical_string() const {
  std::string s;
  for (const auto& [e, c] : terms_) {
    s += '[';
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(e[i]);
    }
    s += "]:";
    s += c.get_str();
    s += ';';
  }
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Highest term first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars()[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += mag.get_str();
    else if (mag == 1)
      s += mono;
    else
      s += mag.get_str() + "*" + mono;
  }
  return s;
}

}  // namespace clusterlab
