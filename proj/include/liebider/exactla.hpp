#ifndef LIEBIDER_EXACTLA_HPP
#define LIEBIDER_EXACTLA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "liebider/matrix.hpp"
#include "liebider/rational.hpp"

namespace liebider {

/// Sparse row: (column, value) pairs with strictly increasing columns and
/// nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct SparseRowHash {
  std::size_t operator()(const SparseRow& row) const noexcept;
};

/// Incremental exact row reduction.
///
/// Rows are scaled to primitive integer vectors and eliminated
/// fraction-free against the pivot rows seen so far, so the builder keeps
/// at most rank-many rows no matter how many constraints are streamed in.
/// Zero rows and rows proportional to an earlier input row are dropped
/// before elimination. The reduced echelon form is unique, so the result
/// does not depend on insertion order.
class EchelonBuilder {
 public:
  struct Reduced {
    std::vector<SparseRow> rows;      // monic, pivot entries 1, sorted by pivot
    std::vector<std::size_t> pivots;  // strictly increasing
  };

  explicit EchelonBuilder(std::size_t cols) : cols_(cols), pivot_index_(cols, kNone) {}

  void add_row(std::span<const Rational> dense);
  void add_row(SparseRow row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivot_rows_.size(); }

  Reduced reduce() const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t cols_;
  std::vector<SparseRow> pivot_rows_;
  std::vector<std::size_t> pivot_index_;  // column -> index into pivot_rows_
  std::unordered_set<SparseRow, SparseRowHash> seen_;
};

/// Canonical subspace of Q^ambient: basis in reduced row echelon form.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  static Subspace from_reduced(std::size_t ambient_dim, const EchelonBuilder::Reduced& reduced);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  /// Coordinates of v in the canonical basis, or nullopt if v is not a member.
  std::optional<Vector> coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(const Matrix& m);

/// Canonical basis of {v : M v = 0}.
Subspace kernel_basis(const Matrix& m);
Subspace kernel_of(const EchelonBuilder& rows);

/// One exact solution of M x = b with every free variable set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve_linear(const Matrix& m, std::span<const Rational> b);

enum class Containment { equal, first_in_second, second_in_first, incomparable };

Containment subspace_compare(const Subspace& s, const Subspace& t);
bool is_subspace_of(const Subspace& s, const Subspace& t);

struct SubspaceSum {
  Subspace sum;
  Subspace intersection;
};

SubspaceSum subspace_combine(const Subspace& s, const Subspace& t);

/// Image of s under the coordinate projection onto [begin, begin + count).
Subspace subspace_projection(const Subspace& s, std::size_t begin, std::size_t count);

const char* to_string(Containment c);

}  // namespace liebider

#endif  // LIEBIDER_EXACTLA_HPP
