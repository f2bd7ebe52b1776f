#ifndef NILSCHUR_TESTS_SUPPORT_HPP
#define NILSCHUR_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "nilschur/catalog.hpp"
#include "nilschur/exactla.hpp"
#include "nilschur/liealg.hpp"

namespace testsupport {

using nilschur::exactla::Matrix;
using nilschur::exactla::Rational;
using nilschur::exactla::Vector;
using nilschur::liealg::LieAlgebra;

inline Vector vec(std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

inline Vector e(std::size_t n, std::size_t one_based) { return nilschur::exactla::unit_vector(n, one_based - 1); }

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    out.push_back(vec(r));
    cols = r.size();
  }
  return Matrix::from_rows(out, cols);
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> entry(lo, hi);
  std::uniform_int_distribution<int> denom(1, 3);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      Rational q(entry(rng), denom(rng));
      q.canonicalize();
      m(r, c) = q;
    }
  }
  return m;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, n, n);
    if (nilschur::exactla::rank(m) == n) return m;
  }
}

// the named desk-scale corpus
inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 6; ++n) names.push_back("A(" + std::to_string(n) + ")");
  for (int m = 1; m <= 3; ++m) names.push_back("H(" + std::to_string(m) + ")");
  for (int k = 1; k <= 4; ++k) names.push_back("H(1)+A(" + std::to_string(k) + ")");
  for (const char* s : {"L5_7", "L5_8", "L5_9", "L6_26", "L5_8+A(1)", "H(2)+A(1)"}) names.emplace_back(s);
  return names;
}

inline LieAlgebra named(const std::string& spec) { return nilschur::catalog::parse_spec(spec); }

}  // namespace testsupport

#endif  // NILSCHUR_TESTS_SUPPORT_HPP
