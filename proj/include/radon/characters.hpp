#pragma once

#include <string>
#include <vector>

#include "radon/jet.hpp"
#include "radon/partition.hpp"

namespace radon {

template <class T>
struct HLambdaElement {
  PartitionSpec spec;
  std::vector<Jet<T>> factors;  // factor k has p = parts[k]

  static HLambdaElement identity(const PartitionSpec& spec);
  void validate() const;
  bool is_unipotent() const;
};

using ExactH = HLambdaElement<Rational>;
using ComplexH = HLambdaElement<Complex>;

template <class T>
HLambdaElement<T> h_mul(const HLambdaElement<T>& a, const HLambdaElement<T>& b);
template <class T>
HLambdaElement<T> h_inv(const HLambdaElement<T>& a);
// block diagonal N x N matrix
template <class T>
Matrix<T> embed_h(const HLambdaElement<T>& h);
// iota: r x N, factor k contributes (h0, ..., h_{n_k - 1})
template <class T>
Matrix<T> iota(const HLambdaElement<T>& h);
template <class T>
HLambdaElement<T> iota_inv(const Matrix<T>& v, const PartitionSpec& spec);

template <class T>
struct CharacterParamsT {
  PartitionSpec spec;
  std::vector<std::vector<T>> alpha;  // alpha[k] has length parts[k]
  size_t m = 0;

  void validate() const;
};

using CharacterParams = CharacterParamsT<Complex>;
using ExactParams = CharacterParamsT<Rational>;

struct LogCharacterValue {
  Complex value;
  long branch_note = 0;
};

// theta_1 .. theta_{p-1}, read from jet_log
template <class T>
std::vector<Matrix<T>> theta_coeffs(const Jet<T>& h);
template <class T>
Jet<T> underline(const Jet<T>& h);
// (Tr theta_1(h_), ..., Tr theta_{p-1}(h_)) of the unipotent part
template <class T>
std::vector<T> theta_traces(const Jet<T>& h);

template <class T>
LogCharacterValue log_character(const HLambdaElement<T>& h, const CharacterParams& params, long branch = 0);

// exact Tr-theta part: sum_k sum_{i>=1} alpha_i^{(k)} Tr theta_i(h_^{(k)})
Rational log_character_theta_part(const ExactH& h, const ExactParams& params);

struct AssumptionReport {
  bool ok = true;
  std::vector<std::string> violations;
};

AssumptionReport check_assumption(const CharacterParams& params, double tol = 1e-12);

// Xi(h) = (theta_0, ..., theta_{n-1}) concatenated over factors, r x N; h unipotent
ExactMatrix xi_matrix(const ExactH& h);

}  // namespace radon
