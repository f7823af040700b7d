#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orthocurrent/structure.hpp"

namespace testsupport {

using namespace orthocurrent;

inline std::vector<Field> descriptor_fields() {
  return {Field::rationals(),     Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(7),
          Field::rational_functions(2)};
}

inline std::vector<Field> all_fields() {
  auto out = descriptor_fields();
  out.push_back(Field::rational_functions(3));
  out.push_back(Field::parse("Q[sqrt 2]"));
  out.push_back(Field::parse("F3[sqrt 2]"));
  out.push_back(Field::parse("F2(t)[sqrt t]"));
  return out;
}

inline DiagonalEntries random_entries(const Field& f, std::mt19937_64& rng) {
  return {random_nonzero(f, rng), random_nonzero(f, rng), random_nonzero(f, rng), random_nonzero(f, rng)};
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(f, rng);
  return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (!determinant(m).is_zero()) return m;
  }
}

// [n choose k]_q from the product formula, in exact integers.
inline std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned k) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (unsigned e = 0; e < n - i; ++e) a *= q;
    for (unsigned e = 0; e < i + 1; ++e) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

// The twelve brackets written out by hand: {left, right, target, coefficient}.
struct ExpectedBracket {
  std::size_t left, right, target;
  FieldElement value;
};

inline std::vector<ExpectedBracket> expected_table(const DiagonalEntries& e) {
  const auto& a = e[0];
  const auto& b = e[1];
  const auto& c = e[2];
  const FieldElement d = e[0] * e[1] * e[2] * e[3];
  return {{0, 1, 2, b},      {1, 2, 0, c},      {2, 0, 1, a},      {0, 4, 5, b},  {1, 5, 3, c},  {2, 3, 4, a},
          {1, 3, 5, -b},     {2, 4, 3, -c},     {0, 5, 4, -a},     {3, 4, 2, d * b}, {4, 5, 0, d * c}, {5, 3, 1, d * a}};
}

// Independent rebuild of the full 6x6x6 tensor: the listed brackets, their
// negatives, and zero everywhere else.
inline StructureConstants expected_tensor(const Field& f, const DiagonalEntries& e) {
  StructureConstants t(f, 6);
  for (const auto& x : expected_table(e)) {
    t(x.left, x.right, x.target) = x.value;
    t(x.right, x.left, x.target) = -x.value;
  }
  return t;
}

}  // namespace testsupport
