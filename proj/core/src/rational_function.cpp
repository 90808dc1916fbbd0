#include "clusterlab/rational_function.hpp"

#include <algorithm>
#include <limits>

namespace clusterlab {

namespace {

using Terms = LaurentPoly::Terms;

int degree_in(const LaurentPoly& p, std::size_t v) {
  int d = -1;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

// Coefficient of v^d, as a polynomial not involving v.
LaurentPoly coeff_in(const LaurentPoly& p, std::size_t v, int d) {
  Terms out;
  for (const auto& [e, c] : p.terms())
    if (e[v] == d) {
      Exponent r = e;
      r[v] = 0;
      out.emplace(std::move(r), c);
    }
  return LaurentPoly(p.shared_vars(), std::move(out));
}

std::optional<std::size_t> main_variable(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = std::max(a.nvars(), b.nvars());
  for (std::size_t v = n; v-- > 0;)
    if (degree_in(a, v) > 0 || degree_in(b, v) > 0) return v;
  return std::nullopt;
}

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw ConsistencyError("polynomial gcd: inexact division");
  return *q;
}

LaurentPoly normalize_sign(LaurentPoly p) {
  if (!p.is_zero() && p.terms().rbegin()->second < 0) return -p;
  return p;
}

Int integer_content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, c);
  return g;
}

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly g;
  bool first = true;
  for (int d = degree_in(p, v); d >= 0; --d) {
    LaurentPoly c = coeff_in(p, v, d);
    if (c.is_zero()) continue;
    g = first ? normalize_sign(c) : poly_gcd(g, c);
    first = false;
  }
  return g;
}

LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
  const int db = degree_in(b, v);
  const LaurentPoly lc = coeff_in(b, v, db);
  Exponent shift(a.nvars(), 0);
  while (!a.is_zero()) {
    const int da = degree_in(a, v);
    if (da < db) break;
    shift.assign(a.nvars(), 0);
    shift[v] = da - db;
    LaurentPoly lead = coeff_in(a, v, da).times_monomial(shift);
    a = lc * a - lead * b;
  }
  return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("gcd over different variable sets");
  if (!a.is_polynomial() || !b.is_polynomial()) throw PreconditionError("gcd needs polynomials");
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const auto& vars = a.shared_vars() ? a.shared_vars() : b.shared_vars();

  auto v = main_variable(a, b);
  if (!v) {
    Int g;
    g = gcd(integer_content(a), integer_content(b));
    return LaurentPoly::constant(vars, g);
  }
  const LaurentPoly ca = content_in(a, *v);
  const LaurentPoly cb = content_in(b, *v);
  const LaurentPoly content = poly_gcd(ca, cb);
  LaurentPoly pa = normalize_sign(exact(a, ca));
  LaurentPoly pb = normalize_sign(exact(b, cb));
  if (degree_in(pa, *v) < degree_in(pb, *v)) std::swap(pa, pb);

  LaurentPoly prim;
  if (degree_in(pb, *v) <= 0) {
    prim = LaurentPoly::constant(vars, 1);
  } else {
    while (true) {
      LaurentPoly r = pseudo_remainder(pa, pb, *v);
      if (r.is_zero()) {
        prim = pb;
        break;
      }
      if (degree_in(r, *v) <= 0) {
        prim = LaurentPoly::constant(vars, 1);
        break;
      }
      pa = std::move(pb);
      pb = normalize_sign(exact(r, content_in(r, *v)));
    }
  }
  return normalize_sign(content * prim);
}

RationalFunction::RationalFunction(const LaurentPoly& p) : RationalFunction(p, LaurentPoly::constant(p.shared_vars(), 1)) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw ConsistencyError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  // Clear negative exponents from both sides with a common monomial.
  const std::size_t n = num_.nvars();
  Exponent shift(n, 0);
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms())
      for (std::size_t i = 0; i < n; ++i) shift[i] = std::max(shift[i], -e[i]);
  num_ = num_.times_monomial(shift);
  den_ = den_.times_monomial(shift);
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(den_.shared_vars(), 1);
    return;
  }
  LaurentPoly g = poly_gcd(num_, den_);
  num_ = exact(num_, g);
  den_ = exact(den_, g);
  if (den_.terms().rbegin()->second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw ConsistencyError("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

std::string RationalFunction::to_string() const {
  if (den_.size() == 1 && den_.terms().begin()->second == 1 &&
      std::all_of(den_.terms().begin()->first.begin(), den_.terms().begin()->first.end(),
                  [](int v) { return v == 0; }))
    return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace clusterlab
