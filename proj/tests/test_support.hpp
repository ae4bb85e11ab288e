#ifndef LIEBIDER_TEST_SUPPORT_HPP
#define LIEBIDER_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "liebider/biderivations.hpp"
#include "liebider/matrix.hpp"
#include "liebider/rational.hpp"

namespace test_support {

using liebider::Biderivation;
using liebider::Matrix;
using liebider::Rational;
using liebider::Vector;

inline Rational random_rational(std::mt19937_64& rng, int range = 4) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, int range = 4) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng, range);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range = 4) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, range);
  return m;
}

inline Biderivation random_tuple(std::mt19937_64& rng, std::size_t n) {
  return Biderivation::from_flat(random_vector(rng, n * n * n, 3), n);
}

inline Vector ints(std::initializer_list<std::int64_t> xs) {
  Vector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

}  // namespace test_support

#endif  // LIEBIDER_TEST_SUPPORT_HPP
