#include "liebider/biderivations.hpp"

#include <algorithm>

#include "liebider/derivations.hpp"
#include "liebider/errors.hpp"

namespace liebider {

namespace {

// Unknown b_ij^k sits at column k*n^2 + i*n + j.
struct Unknowns {
  std::size_t n;
  std::size_t operator()(std::size_t k, std::size_t i, std::size_t j) const { return (k * n + i) * n + j; }
};

class RowAccumulator {
 public:
  void add(std::size_t col, const Rational& coeff) {
    if (!coeff.is_zero()) terms_.emplace_back(col, coeff);
  }
  void sub(std::size_t col, const Rational& coeff) {
    if (!coeff.is_zero()) terms_.emplace_back(col, -coeff);
  }
  SparseRow take() {
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& [c, v] : terms_) {
      if (!out.empty() && out.back().first == c) {
        out.back().second += v;
        if (out.back().second.is_zero()) out.pop_back();
      } else {
        out.emplace_back(c, std::move(v));
      }
    }
    terms_.clear();
    return out;
  }

 private:
  SparseRow terms_;
};

// Constraint row (block, i, j, k, r), derived from the two identities
// expanded on the basis triple (e_i, e_j, e_k) and read at coordinate r.
SparseRow constraint_row(const LieAlgebra& alg, int block, std::size_t i, std::size_t j, std::size_t k,
                         std::size_t r, RowAccumulator& acc) {
  const std::size_t n = alg.dim();
  const Unknowns b{n};
  for (std::size_t t = 0; t < n; ++t) {
    if (block == 0) {
      // B([e_i,e_j], e_k) - [e_i, B(e_j,e_k)] - [B(e_i,e_k), e_j]
      acc.add(b(r, t, k), alg.c(i, j, t));
      acc.sub(b(t, j, k), alg.c(i, t, r));
      acc.sub(b(t, i, k), alg.c(t, j, r));
    } else {
      // B(e_i, [e_j,e_k]) - [B(e_i,e_j), e_k] - [e_j, B(e_i,e_k)]
      acc.add(b(r, i, t), alg.c(j, k, t));
      acc.sub(b(t, i, j), alg.c(t, k, r));
      acc.sub(b(t, i, k), alg.c(j, t, r));
    }
  }
  return acc.take();
}

template <typename Sink>
void for_each_constraint(const LieAlgebra& alg, Sink&& sink) {
  const std::size_t n = alg.dim();
  RowAccumulator acc;
  std::size_t index = 0;
  for (int block = 0; block < 2; ++block)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t r = 0; r < n; ++r) sink(index++, constraint_row(alg, block, i, j, k, r, acc));
}

void require_same_dim(const LieAlgebra& alg, const Biderivation& b) {
  if (b.dim() != alg.dim()) throw DimMismatch("biderivation tuple length does not match algebra dimension");
  for (const auto& m : b.mats)
    if (m.rows() != alg.dim() || m.cols() != alg.dim())
      throw DimMismatch("biderivation matrix size does not match algebra dimension");
}

}  // namespace

Biderivation Biderivation::zero(std::size_t n) { return Biderivation{std::vector<Matrix>(n, Matrix(n, n))}; }

Biderivation Biderivation::from_flat(std::span<const Rational> flat, std::size_t n) {
  if (flat.size() != n * n * n) throw DimMismatch("flattened biderivation length is not n^3");
  Biderivation out = zero(n);
  for (std::size_t k = 0; k < n; ++k) out.mats[k] = unflatten(flat.subspan(k * n * n, n * n), n);
  return out;
}

Vector Biderivation::flatten() const {
  Vector out;
  out.reserve(dim() * dim() * dim());
  for (const auto& m : mats) out.insert(out.end(), m.entries().begin(), m.entries().end());
  return out;
}

Element Biderivation::value(std::size_t i, std::size_t j) const {
  Element out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = mats[k](i, j);
  return out;
}

Element Biderivation::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  Element out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector my = mats[k].apply(y);
    for (std::size_t i = 0; i < n; ++i)
      if (!x[i].is_zero()) out[k] += x[i] * my[i];
  }
  return out;
}

bool Biderivation::is_symmetric() const {
  return std::all_of(mats.begin(), mats.end(), [](const Matrix& m) { return m == m.transpose(); });
}

bool Biderivation::is_skew() const {
  return std::all_of(mats.begin(), mats.end(), [](const Matrix& m) { return m == Rational(-1) * m.transpose(); });
}

Biderivation operator+(const Biderivation& a, const Biderivation& b) {
  if (a.dim() != b.dim()) throw DimMismatch("biderivation sum of different sizes");
  Biderivation out = a;
  for (std::size_t k = 0; k < a.dim(); ++k) out.mats[k] += b.mats[k];
  return out;
}

Biderivation operator*(const Rational& s, const Biderivation& b) {
  Biderivation out = b;
  for (auto& m : out.mats) m *= s;
  return out;
}

Biderivation BiderivationSpace::element(std::size_t idx) const {
  return Biderivation::from_flat(space.basis().at(idx), algebra_dim);
}

bool BiderivationSpace::contains(const Biderivation& b) const {
  if (b.dim() != algebra_dim) throw DimMismatch("biderivation size does not match space");
  return space.contains(b.flatten());
}

Matrix assemble_constraints(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix out(2 * n * n * n * n, n * n * n);
  for_each_constraint(alg, [&](std::size_t row, const SparseRow& entries) {
    for (const auto& [c, v] : entries) out(row, c) = v;
  });
  return out;
}

void stream_constraints(const LieAlgebra& alg, EchelonBuilder& rows) {
  for_each_constraint(alg, [&](std::size_t, SparseRow entries) { rows.add_row(std::move(entries)); });
}

BiderivationSpace constrained_biderivation_space(const LieAlgebra& alg, SymmetryMode mode) {
  const std::size_t n = alg.dim();
  const Unknowns b{n};
  EchelonBuilder rows(n * n * n);
  stream_constraints(alg, rows);
  if (mode != SymmetryMode::none) {
    const Rational sign = mode == SymmetryMode::symmetric ? Rational(-1) : Rational(1);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          if (i == j) {
            if (mode == SymmetryMode::skew) rows.add_row(SparseRow{{b(k, i, i), Rational(1)}});
            continue;
          }
          rows.add_row(SparseRow{{b(k, i, j), Rational(1)}, {b(k, j, i), sign}});
        }
  }
  BiderivationSpace out{n, kernel_of(rows)};
  for (std::size_t idx = 0; idx < out.dim(); ++idx)
    if (is_biderivation(alg, out.element(idx)))
      throw InternalInconsistency("kernel basis element fails the direct biderivation check");
  return out;
}

BiderivationSpace biderivation_space(const LieAlgebra& alg) {
  return constrained_biderivation_space(alg, SymmetryMode::none);
}

std::optional<BiderivationViolation> is_biderivation(const LieAlgebra& alg, const Biderivation& cand) {
  require_same_dim(alg, cand);
  const std::size_t n = alg.dim();
  std::vector<Element> values(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) values[i * n + j] = cand.value(i, j);
  auto B = [&](std::size_t i, std::size_t j) -> const Element& { return values[i * n + j]; };
  std::vector<Element> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vector(n, i));

  // B(sum_t w_t e_t, e_k) or B(e_i, sum_t w_t e_t) for a coordinate vector w.
  auto combine = [&](const Element& w, auto&& pick) {
    Element out(n);
    for (std::size_t t = 0; t < n; ++t)
      if (!w[t].is_zero()) out = out + w[t] * pick(t);
    return out;
  };

  std::optional<BiderivationViolation> first;
  for (int condition = 1; condition <= 2; ++condition)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Element residual;
          if (condition == 1) {
            const Element lhs = combine(alg.basis_bracket(i, j), [&](std::size_t t) { return B(t, k); });
            residual = lhs - alg.bracket(units[i], B(j, k)) - alg.bracket(B(i, k), units[j]);
          } else {
            const Element lhs = combine(alg.basis_bracket(j, k), [&](std::size_t t) { return B(i, t); });
            residual = lhs - alg.bracket(B(i, j), units[k]) - alg.bracket(units[j], B(i, k));
          }
          if (!first && !is_zero(residual)) first = BiderivationViolation{condition, i, j, k, std::move(residual)};
        }
  return first;
}

Biderivation inner_biderivation(const LieAlgebra& alg, const std::vector<Rational>& lambdas) {
  const auto sizes = alg.factor_sizes();
  if (lambdas.size() != sizes.size())
    throw FactorMismatch("expected " + std::to_string(sizes.size()) + " scalars, got " + std::to_string(lambdas.size()));
  const auto A = structure_matrices(alg);
  Biderivation out = Biderivation::zero(alg.dim());
  for (std::size_t k = 0; k < alg.dim(); ++k) out.mats[k] = lambdas[alg.factor_of(k)] * A.mats[k];
  return out;
}

RowColumnMaps row_column_derivations(const LieAlgebra& alg, const Biderivation& b, std::size_t i) {
  require_same_dim(alg, b);
  const std::size_t n = alg.dim();
  if (i >= n) throw IndexError("basis index out of range");
  RowColumnMaps out{Matrix(n, n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      out.row_map(k, j) = b.mats[k](i, j);
      out.column_map(k, j) = b.mats[k](j, i);
    }
  const Subspace der = derivation_space(alg);
  out.both_derivations = der.contains(flatten(out.row_map)) && der.contains(flatten(out.column_map));
  return out;
}

PhiPsiPair extract_phi_psi(const LieAlgebra& alg, const Biderivation& b) {
  require_same_dim(alg, b);
  if (!is_complete(alg).complete) throw NotComplete("algebra is not complete");
  if (is_biderivation(alg, b)) throw NotBiderivation("input is not a biderivation");
  const std::size_t n = alg.dim();
  PhiPsiPair out{Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    Matrix row_map(n, n);
    Matrix column_map(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        row_map(k, j) = b.mats[k](i, j);
        column_map(k, j) = b.mats[k](j, i);
      }
    // B(e_i, -) = ad(phi(e_i)); B(-, e_i) = ad(v) with psi(e_i) = -v.
    out.phi.set_column(i, ad_preimage(alg, row_map));
    out.psi.set_column(i, Rational(-1) * ad_preimage(alg, column_map));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element expected = b.value(i, j);
      if (alg.bracket(out.phi.column(i), unit_vector(n, j)) != expected ||
          alg.bracket(unit_vector(n, i), out.psi.column(j)) != expected)
        throw InternalInconsistency("phi/psi fail to reproduce the biderivation");
    }
  return out;
}

Biderivation biderivation_from_phi(const LieAlgebra& alg, const Matrix& phi) {
  const std::size_t n = alg.dim();
  if (phi.rows() != n || phi.cols() != n) throw DimMismatch("map size does not match algebra dimension");
  const auto A = structure_matrices(alg);
  const Matrix phi_t = phi.transpose();
  Biderivation out = Biderivation::zero(n);
  for (std::size_t k = 0; k < n; ++k) out.mats[k] = phi_t * A.mats[k];
  return out;
}

SymmetricSkewSplit symmetric_skew_split(const Biderivation& b) {
  SymmetricSkewSplit out{b, b};
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Matrix t = b.mats[k].transpose();
    out.plus.mats[k] += t;
    out.minus.mats[k] -= t;
  }
  return out;
}

BracketClosure bider_bracket_closure(const BiderivationSpace& space) {
  BracketClosure out;
  const std::size_t d = space.dim();
  const std::size_t n = space.algebra_dim;
  std::vector<Biderivation> basis;
  for (std::size_t a = 0; a < d; ++a) basis.push_back(space.element(a));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Biderivation comm = Biderivation::zero(n);
      for (std::size_t k = 0; k < n; ++k) comm.mats[k] = commutator(basis[a].mats[k], basis[b].mats[k]);
      auto coords = space.space.coordinates(comm.flatten());
      if (!coords) {
        out.closed = false;
        out.witness = std::make_pair(a, b);
        out.constants.clear();
        return out;
      }
      if (!is_zero(*coords)) out.constants.emplace(std::make_pair(a, b), std::move(*coords));
    }
  out.closed = true;
  return out;
}

BracketClosure bider_bracket_closure(const LieAlgebra& alg) { return bider_bracket_closure(biderivation_space(alg)); }

TwoStepReport two_step_properties(const LieAlgebra& alg, const Biderivation& b) {
  require_same_dim(alg, b);
  const Subspace derived = derived_algebra(alg);
  if (!is_subspace_of(derived, center(alg))) throw NotTwoStep("L' is not contained in Z(L)");
  const std::size_t n = alg.dim();
  TwoStepReport out;
  out.derived_dim = derived.dim();
  const auto& zs = derived.basis();
  for (std::size_t d = 0; d < zs.size(); ++d) {
    for (std::size_t i = 0; i < n; ++i) {
      const Element e = unit_vector(n, i);
      if (!derived.contains(b.apply(e, zs[d]))) out.failures.push_back({"B(x,z) in L'", i, d, 0});
      if (!derived.contains(b.apply(zs[d], e))) out.failures.push_back({"B(z,x) in L'", i, d, 0});
    }
    for (std::size_t d2 = 0; d2 < zs.size(); ++d2)
      if (!is_zero(b.apply(zs[d], zs[d2]))) out.failures.push_back({"B(z,z')=0", 0, d, d2});
  }
  out.pass = out.failures.empty();
  return out;
}

}  // namespace liebider
