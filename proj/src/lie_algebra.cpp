#include "liebider/lie_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "liebider/errors.hpp"

namespace liebider {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names, ConstantTable constants,
                       std::optional<std::vector<std::size_t>> factors)
    : name_(std::move(name)), names_(std::move(basis_names)), factors_(std::move(factors)) {
  const std::size_t n = names_.size();
  for (auto& [key, value] : constants) {
    if (key.i >= n || key.j >= n || key.k >= n) throw IndexError("structure constant index out of range");
    if (key.i >= key.j) throw IndexError("structure constants must be keyed with i < j");
    if (!value.is_zero()) constants_.emplace(key, value);
  }
  if (factors_) {
    if (std::accumulate(factors_->begin(), factors_->end(), std::size_t{0}) != n)
      throw FactorMismatch("factor sizes do not sum to the dimension");
    if (std::any_of(factors_->begin(), factors_->end(), [](std::size_t s) { return s == 0; }))
      throw FactorMismatch("factor sizes must be positive");
  }
  dense_.assign(n * n * n, Rational());
  for (const auto& [key, value] : constants_) {
    if (factors_ && (factor_of(key.i) != factor_of(key.j) || factor_of(key.i) != factor_of(key.k)))
      throw FactorMismatch("structure constant crosses factor blocks");
    dense_[(key.i * n + key.j) * n + key.k] = value;
    dense_[(key.j * n + key.i) * n + key.k] = -value;
  }
}

std::vector<std::size_t> LieAlgebra::factor_sizes() const {
  if (factors_) return *factors_;
  if (dim() == 0) return {};
  return {dim()};
}

std::size_t LieAlgebra::factor_of(std::size_t k) const {
  if (!factors_) return 0;
  std::size_t end = 0;
  for (std::size_t f = 0; f < factors_->size(); ++f) {
    end += (*factors_)[f];
    if (k < end) return f;
  }
  throw IndexError("basis index outside every factor");
}

Element LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  Element out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = c(i, j, k);
  return out;
}

Element LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimMismatch("element length does not match algebra dimension");
  Element out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

LieAlgebra LieAlgebra::with_name(std::string name) const {
  LieAlgebra copy(*this);
  copy.name_ = std::move(name);
  return copy;
}

std::optional<JacobiViolation> validate(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Element ei = unit_vector(n, i);
        const Element ej = unit_vector(n, j);
        const Element ek = unit_vector(n, k);
        Element r = alg.bracket(alg.basis_bracket(i, j), ek) + alg.bracket(alg.basis_bracket(j, k), ei) +
                    alg.bracket(alg.basis_bracket(k, i), ej);
        if (!is_zero(r)) return JacobiViolation{i, j, k, std::move(r)};
      }
  return std::nullopt;
}

void require_valid(const LieAlgebra& alg) {
  if (auto v = validate(alg)) {
    std::ostringstream msg;
    msg << "Jacobi identity fails for basis triple (" << v->i << "," << v->j << "," << v->k << "), residual [";
    for (std::size_t t = 0; t < v->residual.size(); ++t) msg << (t ? "," : "") << v->residual[t];
    msg << "]";
    throw JacobiError(msg.str());
  }
}

Matrix adjoint_matrix(const LieAlgebra& alg, std::span<const Rational> x) {
  const std::size_t n = alg.dim();
  if (x.size() != n) throw DimMismatch("element length does not match algebra dimension");
  Matrix ad(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!alg.c(i, j, k).is_zero()) ad(k, j) += x[i] * alg.c(i, j, k);
  }
  return ad;
}

StructureMatrices structure_matrices(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  StructureMatrices out{std::vector<Matrix>(n, Matrix(n, n))};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.mats[k](i, j) = alg.c(i, j, k);
  return out;
}

Subspace center(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  EchelonBuilder rows(n);
  Vector row(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) row[i] = alg.c(i, j, k);
      rows.add_row(row);
    }
  return kernel_of(rows);
}

Subspace derived_algebra(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) brackets.push_back(alg.basis_bracket(i, j));
  return Subspace::span(n, brackets);
}

LowerCentralSeries lower_central_series(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  LowerCentralSeries out;
  out.terms.push_back(derived_algebra(alg));
  while (true) {
    const Subspace& last = out.terms.back();
    if (last.is_zero()) {
      out.nilpotency_class = out.terms.size();
      break;
    }
    std::vector<Vector> next;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : last.basis()) next.push_back(alg.bracket(unit_vector(n, i), v));
    Subspace term = Subspace::span(n, next);
    const bool stable = term == last;
    out.terms.push_back(std::move(term));
    if (stable && !out.terms.back().is_zero()) break;
  }
  return out;
}

bool is_two_step_nilpotent(const LieAlgebra& alg) {
  const auto series = lower_central_series(alg);
  return series.nilpotency_class && *series.nilpotency_class <= 2;
}

KillingForm killing_form(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint_matrix(alg, unit_vector(n, i)));
  KillingForm out{Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!ads[i](a, b).is_zero() && !ads[j](b, a).is_zero()) t += ads[i](a, b) * ads[j](b, a);
      out.form(i, j) = t;
      out.form(j, i) = t;
    }
  out.rank = rref(out.form).rank();
  out.semisimple = out.rank == n;
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (b.dim() == 0) return a;
  if (a.dim() == 0) return b;
  const std::size_t shift = a.dim();
  std::vector<std::string> names = a.basis_names();
  std::set<std::string> taken(names.begin(), names.end());
  for (std::string nm : b.basis_names()) {
    while (taken.count(nm)) nm += "'";
    taken.insert(nm);
    names.push_back(std::move(nm));
  }
  ConstantTable table = a.constants();
  for (const auto& [key, value] : b.constants()) table.emplace(ConstantKey{key.i + shift, key.j + shift, key.k + shift}, value);
  std::vector<std::size_t> factors = a.factor_sizes();
  for (auto s : b.factor_sizes()) factors.push_back(s);
  return LieAlgebra(a.name() + "+" + b.name(), std::move(names), std::move(table), std::move(factors));
}

namespace {

std::vector<std::string> numbered_names(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

LieAlgebra make_abelian(std::size_t n) {
  return LieAlgebra("abelian(" + std::to_string(n) + ")", numbered_names("e", n), {});
}

LieAlgebra make_sl2() {
  // Chevalley basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
  return LieAlgebra("sl2", {"e", "f", "h"}, {{{0, 1, 2}, 1}, {{0, 2, 0}, -2}, {{1, 2, 1}, 2}});
}

LieAlgebra make_so3() {
  // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
  return LieAlgebra("so3", {"e1", "e2", "e3"}, {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{0, 2, 1}, -1}});
}

// sl3 in the basis E12, E13, E23, E21, E31, E32, H1 = E11 - E22,
// H2 = E22 - E33; constants read off the commutators of 3x3 matrices.
LieAlgebra make_sl3() {
  auto unit = [](std::size_t r, std::size_t c) {
    Matrix m(3, 3);
    m(r, c) = 1;
    return m;
  };
  const std::vector<Matrix> basis = {unit(0, 1), unit(0, 2), unit(1, 2), unit(1, 0),
                                     unit(2, 0), unit(2, 1), unit(0, 0) - unit(1, 1), unit(1, 1) - unit(2, 2)};
  Matrix coords(9, 8);
  for (std::size_t b = 0; b < 8; ++b) coords.set_column(b, flatten(basis[b]));
  ConstantTable table;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      const auto x = solve_linear(coords, flatten(commutator(basis[i], basis[j])));
      if (!x) throw InternalInconsistency("sl3 commutator outside the span of the basis");
      for (std::size_t k = 0; k < 8; ++k)
        if (!(*x)[k].is_zero()) table.emplace(ConstantKey{i, j, k}, (*x)[k]);
    }
  return LieAlgebra("sl3", {"E12", "E13", "E23", "E21", "E31", "E32", "H1", "H2"}, std::move(table));
}

// Parses "stem(a,b,...)" into integer arguments; nullopt if the stem differs.
std::optional<std::vector<std::uint64_t>> parse_call(std::string_view name, std::string_view stem) {
  if (name.size() < stem.size() + 2 || name.substr(0, stem.size()) != stem || name[stem.size()] != '(' ||
      name.back() != ')')
    return std::nullopt;
  std::vector<std::uint64_t> args;
  std::string_view body = name.substr(stem.size() + 1, name.size() - stem.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    std::string_view part = body.substr(0, comma);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw UnknownName("bad argument in catalog name '" + std::string(name) + "'");
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return args;
}

}  // namespace

LieAlgebra random_two_step(std::size_t generators, std::size_t central, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = generators + central;
  ConstantTable table;
  for (std::size_t i = 0; i < generators; ++i)
    for (std::size_t j = i + 1; j < generators; ++j)
      for (std::size_t k = generators; k < n; ++k) {
        const auto coeff = static_cast<std::int64_t>(rng() % 5) - 2;
        if (coeff != 0) table.emplace(ConstantKey{i, j, k}, coeff);
      }
  std::vector<std::string> names = numbered_names("x", generators);
  for (auto& z : numbered_names("z", central)) names.push_back(std::move(z));
  return LieAlgebra("twostep(" + std::to_string(generators) + "," + std::to_string(central) + ")", std::move(names),
                    std::move(table));
}

LieAlgebra catalog(std::string_view name, std::uint64_t seed) {
  if (name == "L22") return LieAlgebra("L22", {"e1", "e2"}, {{{0, 1, 0}, 1}});
  if (name == "heisenberg3") return LieAlgebra("heisenberg3", {"e1", "e2", "e3"}, {{{0, 1, 2}, 1}});
  if (name == "sl2") return make_sl2();
  if (name == "so3") return make_so3();
  if (name == "sl3") return make_sl3();
  if (name == "sl2_plus_sl2") return direct_sum(make_sl2(), make_sl2()).with_name("sl2_plus_sl2");
  if (name == "sl3_plus_sl2") return direct_sum(make_sl3(), make_sl2()).with_name("sl3_plus_sl2");
  if (auto args = parse_call(name, "abelian")) {
    if (args->size() != 1) throw UnknownName("abelian takes one argument");
    return make_abelian((*args)[0]);
  }
  if (auto args = parse_call(name, "twostep")) {
    if (args->size() != 2 && args->size() != 3) throw UnknownName("twostep takes (generators,central[,seed])");
    const std::uint64_t s = args->size() == 3 ? (*args)[2] : seed;
    return random_two_step((*args)[0], (*args)[1], s);
  }
  throw UnknownName("unknown catalog algebra '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian(N)", "L22", "heisenberg3", "sl2", "sl3", "so3", "sl2_plus_sl2", "sl3_plus_sl2", "twostep(N,M)"};
}

}  // namespace liebider
