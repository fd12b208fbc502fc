#pragma once

#include <string>
#include <vector>

#include "radon/characters.hpp"

namespace radon {

// c = (c_1, ..., c_{p-1}); the substitution T -> c_1 T + ... + c_{p-1} T^{p-1}
template <class T>
struct MuVector {
  size_t p = 1;
  std::vector<T> c;

  static MuVector identity(size_t p);
  bool is_group_element() const { return p <= 1 || !ScalarOps<T>::is_zero(c.at(0)); }
  void validate() const;
  bool operator==(const MuVector& o) const { return p == o.p && c == o.c; }
};

template <class T>
T mu_eval(size_t i, size_t j, const MuVector<T>& c);
// p x p matrix (mu_{i,j}(c))
template <class T>
Matrix<T> mu_matrix(const MuVector<T>& c);
template <class T>
MuVector<T> mu_compose(const MuVector<T>& a, const MuVector<T>& b);
template <class T>
MuVector<T> mu_inverse(const MuVector<T>& a);

template <class T>
struct WeylElement {
  PartitionSpec spec;
  std::vector<std::vector<MuVector<T>>> mus;  // mus[i][k], class i, member k, order n_i
  std::vector<Permutation> sigma;             // sigma[i] in S_{p_i}

  static WeylElement identity(const PartitionSpec& spec);
  void validate() const;
  bool operator==(const WeylElement& o) const { return spec == o.spec && mus == o.mus && sigma == o.sigma; }
};

using ExactWeyl = WeylElement<Rational>;
using ComplexWeyl = WeylElement<Complex>;

template <class T>
Matrix<T> weyl_matrix(const WeylElement<T>& w);
template <class T>
WeylElement<T> weyl_mul(const WeylElement<T>& a, const WeylElement<T>& b);
template <class T>
WeylElement<T> weyl_inverse(const WeylElement<T>& a);
// n x n compression
template <class T>
Matrix<T> rho(const WeylElement<T>& w);

// alpha * transpose(rho(w))
template <class T>
CharacterParamsT<T> act_on_params(const CharacterParamsT<T>& alpha, const WeylElement<T>& w);

struct NormalizeResult {
  CharacterParams beta;
  ComplexWeyl w;
};
NormalizeResult normalize_params(const CharacterParams& alpha);

struct ExactNormalizeResult {
  ExactParams beta;
  ExactWeyl w;
};
// exact variant; throws std::domain_error when a needed root 1/top^{1/(n-1)} is irrational
ExactNormalizeResult normalize_params_exact(const ExactParams& alpha);

bool normalizer_test(const ExactMatrix& x, const PartitionSpec& spec);

class NotNormalizer : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Decomposition {
  ExactH h;
  ExactWeyl w;
};
// x = embed_h(h) * weyl_matrix(w); throws NotNormalizer naming the failed check
Decomposition normalizer_decompose(const ExactMatrix& x, const PartitionSpec& spec);

// membership of a matrix in the H_lambda block-Toeplitz span (Lie algebra pattern)
template <class T>
bool in_h_lambda_span(const Matrix<T>& m, const PartitionSpec& spec);

// h' = iota^{-1}(iota(h) g)
template <class T>
HLambdaElement<T> right_action(const HLambdaElement<T>& h, const WeylElement<T>& w);

}  // namespace radon
