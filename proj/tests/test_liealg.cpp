#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liebider/derivations.hpp"
#include "liebider/errors.hpp"
#include "liebider/lie_algebra.hpp"
#include "test_support.hpp"

using namespace liebider;
using test_support::ints;

namespace {

LieAlgebra table(std::size_t n, ConstantTable c) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return LieAlgebra("T", names, std::move(c));
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK_FALSE(validate(catalog("sl2")).has_value());
  CHECK_FALSE(validate(catalog("abelian(4)")).has_value());

  const LieAlgebra bad = table(3, {{{0, 1, 2}, 1}, {{0, 2, 0}, 1}, {{1, 2, 1}, 1}});
  const auto v = validate(bad);
  REQUIRE(v.has_value());
  CHECK(v->i == 0);
  CHECK(v->j == 1);
  CHECK(v->k == 2);
  CHECK(v->residual == ints({0, 0, -2}));
  CHECK_THROWS_AS(require_valid(bad), JacobiError);
}

TEST_CASE("constructor rejects malformed tables") {
  CHECK_THROWS_AS(table(2, {{{1, 0, 0}, 1}}), IndexError);
  CHECK_THROWS_AS(table(2, {{{0, 0, 0}, 1}}), IndexError);
  CHECK_THROWS_AS(table(2, {{{0, 1, 2}, 1}}), IndexError);
  CHECK_THROWS_AS(LieAlgebra("x", {"a", "b"}, {}, std::vector<std::size_t>{1, 2}), FactorMismatch);
}

TEST_CASE("bracket examples") {
  const LieAlgebra sl2 = catalog("sl2");
  CHECK(sl2.bracket(unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 2));
  CHECK(sl2.bracket(unit_vector(3, 2), unit_vector(3, 0)) == ints({2, 0, 0}));
  CHECK(sl2.bracket(unit_vector(3, 2), unit_vector(3, 1)) == ints({0, -2, 0}));

  std::mt19937_64 rng(3);
  for (const auto& name : {"sl2", "so3", "heisenberg3", "sl3", "L22"}) {
    const LieAlgebra alg = catalog(name);
    const std::size_t n = alg.dim();
    for (int t = 0; t < 10; ++t) {
      const Vector x = test_support::random_vector(rng, n);
      const Vector y = test_support::random_vector(rng, n);
      const Vector z = test_support::random_vector(rng, n);
      CHECK(is_zero(std::span<const Rational>(alg.bracket(x, x))));
      CHECK(alg.bracket(Rational(2) * x + y, z) == Rational(2) * alg.bracket(x, z) + alg.bracket(y, z));
      CHECK(alg.bracket(x, y) == Rational(-1) * alg.bracket(y, x));
    }
  }
}

TEST_CASE("adjoint matrix examples") {
  const LieAlgebra sl2 = catalog("sl2");
  CHECK(adjoint_matrix(sl2, unit_vector(3, 2)) == Matrix{{2, 0, 0}, {0, -2, 0}, {0, 0, 0}});
  CHECK(adjoint_matrix(sl2, Vector(3)).is_zero());
  CHECK(adjoint_matrix(catalog("abelian(3)"), ints({1, 2, 3})).is_zero());
}

TEST_CASE("center examples") {
  CHECK(center(catalog("sl2")).dim() == 0);
  const Subspace z = center(catalog("heisenberg3"));
  CHECK(z == Subspace::span(3, {ints({0, 0, 1})}));
  CHECK(center(catalog("abelian(4)")) == Subspace::whole(4));
}

TEST_CASE("lower central series examples") {
  const auto h3 = lower_central_series(catalog("heisenberg3"));
  REQUIRE(h3.terms.size() == 2);
  CHECK(h3.terms[0] == Subspace::span(3, {ints({0, 0, 1})}));
  CHECK(h3.terms[1].dim() == 0);
  CHECK(h3.nilpotency_class == 2u);
  CHECK(is_two_step_nilpotent(catalog("heisenberg3")));

  const auto ab = lower_central_series(catalog("abelian(3)"));
  REQUIRE(ab.terms.size() == 1);
  CHECK(ab.terms[0].dim() == 0);
  CHECK(ab.nilpotency_class == 1u);

  const auto sl2 = lower_central_series(catalog("sl2"));
  CHECK_FALSE(sl2.nilpotency_class.has_value());
  REQUIRE(sl2.terms.size() >= 2);
  CHECK(sl2.terms[0] == Subspace::whole(3));
  CHECK(sl2.terms[1] == Subspace::whole(3));
  CHECK_FALSE(is_two_step_nilpotent(catalog("sl2")));
}

TEST_CASE("killing form examples") {
  const auto k = killing_form(catalog("sl2"));
  CHECK(k.form == Matrix{{0, 4, 0}, {4, 0, 0}, {0, 0, 8}});
  CHECK(k.semisimple);
  CHECK(k.rank == 3);

  const auto ab = killing_form(catalog("abelian(3)"));
  CHECK(ab.form.is_zero());
  CHECK_FALSE(ab.semisimple);

  const auto h3 = killing_form(catalog("heisenberg3"));
  CHECK_FALSE(h3.semisimple);
  CHECK(h3.rank < 3);

  CHECK(killing_form(catalog("sl3")).semisimple);
  CHECK(killing_form(catalog("so3")).semisimple);
  CHECK(killing_form(catalog("sl2_plus_sl2")).semisimple);
  CHECK_FALSE(killing_form(catalog("L22")).semisimple);
}

TEST_CASE("direct sum examples") {
  const LieAlgebra s = direct_sum(catalog("sl2"), catalog("sl2"));
  CHECK(s.dim() == 6);
  CHECK(s.factor_sizes() == std::vector<std::size_t>{3, 3});
  const auto A = structure_matrices(s);
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if ((i < 3) != (j < 3) || (i < 3) != (k < 3)) CHECK(A.mats[k](i, j).is_zero());
  CHECK(s.constants() == catalog("sl2_plus_sl2").constants());

  const LieAlgebra l22 = catalog("L22");
  CHECK(direct_sum(l22, catalog("abelian(0)")) == l22);

  const LieAlgebra five = direct_sum(catalog("abelian(2)"), catalog("abelian(3)"));
  CHECK(five.dim() == 5);
  CHECK(five.constants().empty());

  const LieAlgebra nested = direct_sum(catalog("sl2_plus_sl2"), catalog("so3"));
  CHECK(nested.factor_sizes() == std::vector<std::size_t>{3, 3, 3});
}

TEST_CASE("structure matrix examples") {
  const auto l22 = structure_matrices(catalog("L22"));
  CHECK(l22.mats[0] == Matrix{{0, 1}, {-1, 0}});
  CHECK(l22.mats[1].is_zero());

  const auto ab = structure_matrices(catalog("abelian(3)"));
  for (const auto& m : ab.mats) CHECK(m.is_zero());

  const auto h3 = structure_matrices(catalog("heisenberg3"));
  CHECK(h3.mats[0].is_zero());
  CHECK(h3.mats[1].is_zero());
  CHECK(h3.mats[2] == Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
}

TEST_CASE("catalog examples") {
  const LieAlgebra l22 = catalog("L22");
  CHECK(l22.dim() == 2);
  CHECK(l22.basis_bracket(0, 1) == ints({1, 0}));

  const LieAlgebra sl2 = catalog("sl2");
  CHECK(sl2.basis_names() == std::vector<std::string>{"e", "f", "h"});
  CHECK(sl2.basis_bracket(0, 1) == ints({0, 0, 1}));
  CHECK(sl2.basis_bracket(2, 0) == ints({2, 0, 0}));
  CHECK(sl2.basis_bracket(2, 1) == ints({0, -2, 0}));

  CHECK(catalog("heisenberg3").basis_bracket(0, 1) == ints({0, 0, 1}));
  CHECK(catalog("sl2_plus_sl2").factor_sizes() == std::vector<std::size_t>{3, 3});
  CHECK(catalog("sl3").dim() == 8);
  CHECK(catalog("abelian(5)").dim() == 5);
  CHECK(catalog("twostep(3,2,9)").dim() == 5);
  CHECK(catalog("twostep(3,2,9)") == catalog("twostep(3,2)", 9));
  CHECK_THROWS_AS(catalog("e8"), UnknownName);
  CHECK_THROWS_AS(catalog("abelian(x)"), UnknownName);
}

TEST_CASE("every catalog algebra is valid with skew structure matrices") {
  for (const auto& name : {"abelian(3)", "L22", "heisenberg3", "sl2", "so3", "sl3", "sl2_plus_sl2", "sl3_plus_sl2",
                           "twostep(3,3,1)"}) {
    INFO(name);
    const LieAlgebra alg = catalog(name);
    CHECK_FALSE(validate(alg).has_value());
    const auto A = structure_matrices(alg);
    const std::size_t n = alg.dim();
    for (std::size_t k = 0; k < n; ++k) {
      Matrix neg = A.mats[k];
      neg *= Rational(-1);
      CHECK(A.mats[k].transpose() == neg);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Element read(n);
        for (std::size_t k = 0; k < n; ++k) read[k] = A.mats[k](i, j);
        CHECK(alg.basis_bracket(i, j) == read);
      }
  }
}

TEST_CASE("two-step iff derived algebra is central, semisimple implies complete") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LieAlgebra alg = random_two_step(2 + seed % 3, 1 + seed % 3, seed);
    CHECK_FALSE(validate(alg).has_value());
    CHECK(is_two_step_nilpotent(alg));
    CHECK(is_subspace_of(derived_algebra(alg), center(alg)));
  }
  for (const auto& name : {"sl2", "so3", "sl3", "sl2_plus_sl2", "L22", "heisenberg3", "abelian(2)"}) {
    INFO(name);
    const LieAlgebra alg = catalog(name);
    CHECK(is_two_step_nilpotent(alg) == is_subspace_of(derived_algebra(alg), center(alg)));
    if (killing_form(alg).semisimple) {
      CHECK(center(alg).dim() == 0);
      CHECK(is_complete(alg).complete);
    }
  }
}

TEST_CASE("random two-step algebras are reproducible") {
  CHECK(random_two_step(3, 2, 42) == random_two_step(3, 2, 42));
  CHECK(random_two_step(3, 2, 7).basis_names() == std::vector<std::string>{"x1", "x2", "x3", "z1", "z2"});
}
