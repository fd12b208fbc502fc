#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radon/matrix.hpp"

namespace radon {

struct PartitionSpec {
  size_t r = 1;
  std::vector<size_t> parts;  // weakly decreasing

  PartitionSpec() = default;
  PartitionSpec(size_t r_, std::vector<size_t> parts_);

  size_t n() const;
  size_t N() const { return n() * r; }
  size_t length() const { return parts.size(); }
  // ((n_i, p_i)) with n_1 > ... > n_s
  std::vector<std::pair<size_t, size_t>> multiplicities() const;
  // first factor index of class i
  std::vector<size_t> class_offsets() const;
  // scalar column offset of factor k (in units of r-blocks)
  size_t factor_offset(size_t k) const;
  bool operator==(const PartitionSpec& o) const { return r == o.r && parts == o.parts; }
  bool operator!=(const PartitionSpec& o) const { return !(*this == o); }
  std::string str() const;
};

PartitionSpec parse_partition(const std::string& s, size_t r);

// sigma[k] = image of k, zero based
using Permutation = std::vector<size_t>;

bool is_permutation(const Permutation& s);
Permutation perm_identity(size_t n);
// (s o t)(k) = s(t(k))
Permutation perm_compose(const Permutation& s, const Permutation& t);
Permutation perm_inverse(const Permutation& s);
Permutation transposition(size_t n, size_t a, size_t b);
// cycle notation (a b c ...) : a->b->c->...->a
Permutation cycle(size_t n, const std::vector<size_t>& c);

// P_sigma with (j, k) block = delta_{j, sigma(k)} 1_b
template <class T>
Matrix<T> perm_block_matrix(const Permutation& sigma, size_t block) {
  if (!is_permutation(sigma)) throw std::invalid_argument("not a permutation");
  const size_t p = sigma.size();
  Matrix<T> m(p * block, p * block);
  for (size_t k = 0; k < p; ++k)
    for (size_t t = 0; t < block; ++t) m(sigma[k] * block + t, k * block + t) = ScalarOps<T>::one();
  return m;
}

}  // namespace radon
