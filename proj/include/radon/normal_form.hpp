#pragma once

#include <string>
#include <vector>

#include "radon/characters.hpp"

namespace radon {

struct ZMatrix {
  PartitionSpec spec;
  ExactMatrix data;  // 2r x nr

  ExactMatrix block(size_t factor, size_t k) const;  // z_k^{(factor)}, 2r x r
  void validate() const;
};

struct MembershipReport {
  bool ok = true;
  std::vector<std::string> failing;  // e.g. "(z0^(0), z1^(0))"
};

MembershipReport z_membership(const ZMatrix& z);

// certified relation: x = g^{-1} z h
struct OrbitWitness {
  ExactMatrix g;
  ExactH h;
};

struct NormalFormResult {
  ZMatrix x;
  ExactMatrix param;  // free r x r block for n = 4, empty for n = 3
  OrbitWitness witness;
};

class NotInZLambda : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool supported_normal_form(const PartitionSpec& spec);
NormalFormResult normal_form(const ZMatrix& z);
// the table representative; param ignored for n = 3
ZMatrix table_normal_form(const PartitionSpec& spec, const ExactMatrix& param);
// true iff x has the table shape; the free block is written to param
bool matches_table(const ZMatrix& x, ExactMatrix& param);

struct SigmaAction {
  ExactMatrix x_new;
  Permutation alpha_perm;  // beta_a = alpha_{alpha_perm[a]}
  Rational det_g;
  OrbitWitness witness;
};

// lambda = (1,1,1,1): normal form of x_bar(x) P_sigma
SigmaAction sigma_action_x(const Permutation& sigma, const ExactMatrix& x);

struct KummerWitness {
  ExactMatrix x_new;
  OrbitWitness witness;
  Rational chi_factor;
};

// lambda = (2,1,1), sigma = (2 3)
KummerWitness kummer_sigma_witness(const ExactMatrix& x);

}  // namespace radon
