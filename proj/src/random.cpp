#include "opsplit/random.hpp"

#include <vector>

namespace opsplit {

Rng make_stream(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                 static_cast<std::uint32_t>(index),
                                 static_cast<std::uint32_t>(index >> 32)};
  for (const char c : tag) key.push_back(static_cast<unsigned char>(c));
  std::seed_seq seq(key.begin(), key.end());
  return Rng(seq);
}

Point random_point(Rng& rng, Index dim, double scale) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Point x(dim);
  for (Index i = 0; i < dim; ++i) x(i) = scale * normal(rng);
  return x;
}

Matrix random_matrix(Rng& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  return m;
}

double random_uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Index random_index(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

}  // namespace opsplit
