#pragma once

#include <random>

#include "radon/normal_form.hpp"
#include "radon/weyl.hpp"

namespace radon {

// Seeded generators of small random exact objects.
class ExactRng {
 public:
  explicit ExactRng(uint64_t seed) : g_(seed) {}
  size_t uniform(size_t lo, size_t hi);  // inclusive
  Rational rational(long maxnum = 5, long maxden = 4);
  Rational nonzero_rational(long maxnum = 5, long maxden = 4);
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

ExactMatrix random_matrix(ExactRng& rng, size_t rows, size_t cols);
ExactMatrix random_invertible(ExactRng& rng, size_t n);
ExactJet random_jet(ExactRng& rng, size_t r, size_t p, bool unipotent);
ExactH random_h(ExactRng& rng, const PartitionSpec& spec, bool unipotent);
Permutation random_perm(ExactRng& rng, size_t n);
MuVector<Rational> random_mu(ExactRng& rng, size_t p);
ExactWeyl random_weyl(ExactRng& rng, const PartitionSpec& spec);
// random z with z_membership ok
ZMatrix random_z(ExactRng& rng, const PartitionSpec& spec);
// r x r x with x, 1 - x invertible
ExactMatrix random_generic_x(ExactRng& rng, size_t r);

}  // namespace radon
