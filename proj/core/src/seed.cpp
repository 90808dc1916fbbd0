#include "clusterlab/seed.hpp"

#include <limits>

namespace clusterlab {

namespace {

int to_exponent(const Int& v) {
  if (!v.fits_sint_p()) throw ConsistencyError("exponent exceeds machine range: " + v.get_str());
  return static_cast<int>(v.get_si());
}

std::shared_ptr<const std::vector<std::string>> make_vars(std::size_t n, std::size_t m, char gen) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < m; ++j) names.push_back(std::string(1, gen) + std::to_string(j + 1));
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// Laurent monomial z^t for a tropical element, over the seed's variables.
LaurentPoly tropical_monomial(const SeedContext& ctx, const TropicalElement& t) {
  Exponent e(ctx.rank + ctx.generators, 0);
  for (std::size_t j = 0; j < ctx.generators; ++j) e[ctx.rank + j] = to_exponent(t.exponents[j]);
  return LaurentPoly::monomial(ctx.vars, std::move(e));
}

}  // namespace

TropicalElement TropicalElement::generator(std::size_t m, std::size_t j) {
  TropicalElement t = one(m);
  t.exponents.at(j) = 1;
  return t;
}

TropicalElement TropicalElement::operator*(const TropicalElement& o) const {
  if (o.exponents.size() != exponents.size()) throw DimensionError("tropical length mismatch");
  TropicalElement r = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += o.exponents[i];
  return r;
}

TropicalElement TropicalElement::inverse() const {
  TropicalElement r = *this;
  for (auto& v : r.exponents) v = -v;
  return r;
}

TropicalElement TropicalElement::pow(const Int& e) const {
  TropicalElement r = *this;
  for (auto& v : r.exponents) v *= e;
  return r;
}

TropicalElement TropicalElement::oplus(const TropicalElement& o) const {
  if (o.exponents.size() != exponents.size()) throw DimensionError("tropical length mismatch");
  TropicalElement r = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (o.exponents[i] < r.exponents[i]) r.exponents[i] = o.exponents[i];
  return r;
}

Seed::Seed(std::shared_ptr<const SeedContext> ctx, std::vector<LaurentPoly> cluster,
           std::vector<TropicalElement> coeffs, ExchangeMatrix b)
    : ctx_(std::move(ctx)), cluster_(std::move(cluster)), coeffs_(std::move(coeffs)), b_(std::move(b)) {
  if (cluster_.size() != ctx_->rank || coeffs_.size() != ctx_->rank || b_.rank() != ctx_->rank)
    throw DimensionError("seed components disagree on rank");
}

IntMatrix Seed::coefficient_matrix() const {
  IntMatrix c(ctx_->generators, rank());
  for (std::size_t j = 0; j < rank(); ++j) c.set_column(j, coeffs_[j].exponents);
  return c;
}

Seed make_seed(const ExchangeMatrix& b, std::vector<TropicalElement> coeffs) {
  const std::size_t n = b.rank();
  if (coeffs.size() != n) throw DimensionError("need one coefficient per cluster variable");
  const std::size_t m = n ? coeffs.front().exponents.size() : 0;
  for (const auto& t : coeffs)
    if (t.exponents.size() != m) throw DimensionError("coefficients over different semifields");
  auto ctx = std::make_shared<SeedContext>();
  ctx->rank = n;
  ctx->generators = m;
  ctx->initial_matrix = b.matrix();
  ctx->vars = make_vars(n, m, 'z');
  std::vector<LaurentPoly> cluster;
  for (std::size_t i = 0; i < n; ++i) cluster.push_back(LaurentPoly::variable(ctx->vars, i));
  return Seed(std::move(ctx), std::move(cluster), std::move(coeffs), b);
}

Seed make_principal_seed(const ExchangeMatrix& b) {
  const std::size_t n = b.rank();
  auto ctx = std::make_shared<SeedContext>();
  ctx->rank = n;
  ctx->generators = n;
  ctx->principal = true;
  ctx->initial_matrix = b.matrix();
  ctx->vars = make_vars(n, n, 'y');
  std::vector<LaurentPoly> cluster;
  std::vector<TropicalElement> coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    cluster.push_back(LaurentPoly::variable(ctx->vars, i));
    coeffs.push_back(TropicalElement::generator(n, i));
  }
  return Seed(std::move(ctx), std::move(cluster), std::move(coeffs), b);
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  if (k >= n) throw IndexError("mutation index " + std::to_string(k + 1) + " out of range");
  const auto& ctx = s.context();
  const auto& b = s.exchange_matrix();
  const auto& yk = s.coeffs()[k];

  // y'
  const TropicalElement one = TropicalElement::one(ctx.generators);
  const TropicalElement yk_oplus_1 = yk.oplus(one);
  std::vector<TropicalElement> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      coeffs[i] = yk.inverse();
      continue;
    }
    const Int& bki = b(k, i);
    coeffs[i] = s.coeffs()[i] * yk.pow(positive_part(bki)) * yk_oplus_1.pow(-bki);
  }

  // x'_k = (y_k prod x_i^[b_ik]_+ + prod x_i^[-b_ik]_+) / ((y_k (+) 1) x_k)
  LaurentPoly plus = tropical_monomial(ctx, yk);
  LaurentPoly minus = LaurentPoly::constant(ctx.vars, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Int& bik = b(i, k);
    if (bik > 0)
      plus *= s.cluster()[i].pow(static_cast<unsigned>(to_exponent(bik)));
    else if (bik < 0)
      minus *= s.cluster()[i].pow(static_cast<unsigned>(to_exponent(-bik)));
  }
  LaurentPoly numerator = (plus + minus) * tropical_monomial(ctx, yk_oplus_1.inverse());
  auto quotient = numerator.divide_exact(s.cluster()[k]);
  if (!quotient)
    throw ConsistencyError("exchange relation at " + std::to_string(k + 1) +
                           " is not divisible in the Laurent ring");

  std::vector<LaurentPoly> cluster = s.cluster();
  cluster[k] = std::move(*quotient);
  return Seed(s.shared_context(), std::move(cluster), std::move(coeffs), b.mutate(k));
}

Seed mutate_along(const Seed& s, const Path& path) {
  Seed out = s;
  for (auto k : path) out = mutate_seed(out, k);
  return out;
}

LaurentPoly f_polynomial(const Seed& s, std::size_t i) {
  if (!s.principal()) throw UnsupportedError("F-polynomials need principal coefficients");
  if (i >= s.rank()) throw IndexError("cluster index out of range");
  std::vector<bool> mask(s.rank() * 2, false);
  for (std::size_t j = 0; j < s.rank(); ++j) mask[j] = true;
  return s.cluster()[i].set_to_one(mask);
}

IntVector g_vector_from_grading(const Seed& s, std::size_t i) {
  if (!s.principal()) throw UnsupportedError("g-vectors need principal coefficients");
  if (i >= s.rank()) throw IndexError("cluster index out of range");
  const std::size_t n = s.rank();
  const auto& b0 = s.context().initial_matrix;
  std::optional<IntVector> degree;
  for (const auto& [e, c] : s.cluster()[i].terms()) {
    IntVector d(n);
    for (std::size_t r = 0; r < n; ++r) {
      d[r] = e[r];
      for (std::size_t j = 0; j < n; ++j) d[r] -= b0(r, j) * e[n + j];
    }
    if (!degree)
      degree = std::move(d);
    else if (*degree != d)
      throw ConsistencyError("cluster variable x" + std::to_string(i + 1) + " is not homogeneous");
  }
  if (!degree) throw ConsistencyError("zero cluster variable");
  return *degree;
}

IntMatrix g_matrix_from_grading(const Seed& s) {
  IntMatrix g(s.rank(), s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) g.set_column(i, g_vector_from_grading(s, i));
  return g;
}

RecurrenceState initial_recurrence_state(const ExchangeMatrix& b0) {
  const std::size_t n = b0.rank();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  auto vars = std::make_shared<const std::vector<std::string>>(std::move(names));
  RecurrenceState st;
  st.f.assign(n, LaurentPoly::constant(vars, 1));
  st.c = IntMatrix::identity(n);
  st.g = IntMatrix::identity(n);
  st.b = b0.matrix();
  return st;
}

RecurrenceState recurrence_step(const RecurrenceState& st, const IntMatrix& b0, std::size_t k) {
  const std::size_t n = st.b.rows();
  if (st.c.rows() != n || st.c.cols() != n || st.g.rows() != n || st.g.cols() != n ||
      st.f.size() != n || b0.rows() != n || b0.cols() != n)
    throw DimensionError("recurrence inputs disagree on rank");
  if (k >= n) throw IndexError("mutation index " + std::to_string(k + 1) + " out of range");
  const auto& vars = st.f[k].shared_vars();

  RecurrenceState out;
  // F
  Exponent plus_exp(n, 0), minus_exp(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const Int& cjk = st.c(j, k);
    if (cjk > 0) plus_exp[j] = to_exponent(cjk);
    if (cjk < 0) minus_exp[j] = to_exponent(-cjk);
  }
  LaurentPoly plus = LaurentPoly::monomial(vars, plus_exp);
  LaurentPoly minus = LaurentPoly::monomial(vars, minus_exp);
  for (std::size_t j = 0; j < n; ++j) {
    const Int& bjk = st.b(j, k);
    if (bjk > 0) plus *= st.f[j].pow(static_cast<unsigned>(to_exponent(bjk)));
    if (bjk < 0) minus *= st.f[j].pow(static_cast<unsigned>(to_exponent(-bjk)));
  }
  auto fk = (plus + minus).divide_exact(st.f[k]);
  if (!fk) throw ConsistencyError("F-polynomial recurrence is not exact");
  out.f = st.f;
  out.f[k] = std::move(*fk);

  // C: c'_ij = -c_ik (j = k), c_ij + sign(c_ik)[c_ik b_kj]_+ otherwise.
  out.c = st.c;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) {
        out.c(i, j) = -st.c(i, k);
        continue;
      }
      const Int prod = st.c(i, k) * st.b(k, j);
      if (prod > 0) out.c(i, j) += sgn(st.c(i, k)) * prod;
    }
  }

  // G: g'_k = -g_k + sum_s g_s [-b_sk]_+ - sum_s b0_s [-c_sk]_+.
  out.g = st.g;
  for (std::size_t i = 0; i < n; ++i) {
    Int v = -st.g(i, k);
    for (std::size_t s = 0; s < n; ++s) {
      v += st.g(i, s) * positive_part(-st.b(s, k));
      v -= b0(i, s) * positive_part(-st.c(s, k));
    }
    out.g(i, k) = v;
  }

  out.b = mutate_matrix(st.b, k);
  return out;
}

bool check_positivity(const Seed& s) {
  for (const auto& x : s.cluster())
    if (!x.all_coefficients_positive()) return false;
  return true;
}

bool check_constant_term_one(const LaurentPoly& f) {
  return f.coefficient(Exponent(f.nvars(), 0)) == 1;
}

}  // namespace clusterlab
