#ifndef LIEBIDER_LIE_ALGEBRA_HPP
#define LIEBIDER_LIE_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liebider/exactla.hpp"
#include "liebider/matrix.hpp"

namespace liebider {

/// Key of a structure constant c_ij^k with i < j.
struct ConstantKey {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  friend auto operator<=>(const ConstantKey&, const ConstantKey&) = default;
};

using ConstantTable = std::map<ConstantKey, Rational>;

/// Coordinates of an element in the fixed basis of its algebra.
using Element = Vector;

/// Finite-dimensional Lie algebra given by structure constants in a fixed
/// basis: [e_i, e_j] = sum_k c_ij^k e_k.
///
/// Only i < j constants are stored; c_ji^k = -c_ij^k and c_ii^k = 0 are
/// implied, so antisymmetry holds by construction. The Jacobi identity is
/// not checked here; see validate().
///
/// `factors`, when present, lists the sizes of consecutive basis blocks
/// L = L_1 + ... + L_t. Every stored constant must keep i, j and k inside
/// one block.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> basis_names, ConstantTable constants,
             std::optional<std::vector<std::size_t>> factors = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const ConstantTable& constants() const { return constants_; }
  const std::optional<std::vector<std::size_t>>& factors() const { return factors_; }

  /// Factor sizes, treating an algebra without factor data as one block.
  std::vector<std::size_t> factor_sizes() const;
  /// Index of the factor containing basis index k.
  std::size_t factor_of(std::size_t k) const;

  /// c_ij^k for any i, j (antisymmetry applied).
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return dense_[(i * dim() + j) * dim() + k]; }

  Element basis_bracket(std::size_t i, std::size_t j) const;
  Element bracket(std::span<const Rational> x, std::span<const Rational> y) const;

  LieAlgebra with_name(std::string name) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.name_ == b.name_ && a.names_ == b.names_ && a.constants_ == b.constants_ && a.factors_ == b.factors_;
  }

 private:
  std::string name_;
  std::vector<std::string> names_;
  ConstantTable constants_;
  std::optional<std::vector<std::size_t>> factors_;
  std::vector<Rational> dense_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  Element residual;
};

/// Checks [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for all
/// i < j < k; returns the lexicographically first failing triple.
std::optional<JacobiViolation> validate(const LieAlgebra& alg);

/// Throws JacobiError describing the first violation, if any.
void require_valid(const LieAlgebra& alg);

/// Column j is the coordinate vector of [x, e_j].
Matrix adjoint_matrix(const LieAlgebra& alg, std::span<const Rational> x);

/// (A_1, ..., A_n) with (A_k)_ij = c_ij^k.
struct StructureMatrices {
  std::vector<Matrix> mats;
};

StructureMatrices structure_matrices(const LieAlgebra& alg);

Subspace center(const LieAlgebra& alg);
/// L' = span of all [e_i, e_j].
Subspace derived_algebra(const LieAlgebra& alg);

struct LowerCentralSeries {
  std::vector<Subspace> terms;                 // L^1, L^2, ...
  std::optional<std::size_t> nilpotency_class;  // k with L^{k-1} != 0 and L^k = 0
};

LowerCentralSeries lower_central_series(const LieAlgebra& alg);
bool is_two_step_nilpotent(const LieAlgebra& alg);

struct KillingForm {
  Matrix form;
  std::size_t rank = 0;
  bool semisimple = false;
};

KillingForm killing_form(const LieAlgebra& alg);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Built-in algebras. Accepted names: "abelian(N)", "L22", "heisenberg3",
/// "sl2", "sl3", "so3", "sl2_plus_sl2", "sl3_plus_sl2", "twostep(N,M)".
/// twostep is random; `seed` drives it. Throws UnknownName.
LieAlgebra catalog(std::string_view name, std::uint64_t seed = 0);
std::vector<std::string> catalog_names();

/// Random two-step nilpotent algebra: N generators whose brackets land in M
/// central vectors, coefficients in [-2, 2].
LieAlgebra random_two_step(std::size_t generators, std::size_t central, std::uint64_t seed);

}  // namespace liebider

#endif  // LIEBIDER_LIE_ALGEBRA_HPP
