#include "radon/normal_form.hpp"

#include <sstream>

namespace radon {

ExactMatrix ZMatrix::block(size_t factor, size_t k) const {
  const size_t r = spec.r;
  if (k >= spec.parts.at(factor)) throw std::out_of_range("z block index");
  return data.sub(0, (spec.factor_offset(factor) + k) * r, 2 * r, r);
}

void ZMatrix::validate() const {
  if (data.rows() != 2 * spec.r || data.cols() != spec.N()) throw DimensionError("ZMatrix must be 2r x nr");
}

namespace {

ExactMatrix hcat(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows(), a.cols() + b.cols());
  m.set_sub(0, 0, a);
  m.set_sub(0, a.cols(), b);
  return m;
}

// 2r x 2r from r x r blocks
ExactMatrix blocks2(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& d) {
  const size_t r = a.rows();
  ExactMatrix m(2 * r, 2 * r);
  m.set_sub(0, 0, a);
  m.set_sub(0, r, b);
  m.set_sub(r, 0, c);
  m.set_sub(r, r, d);
  return m;
}

ExactMatrix top(const ExactMatrix& col) { return col.sub(0, 0, col.cols(), col.cols()); }
ExactMatrix bot(const ExactMatrix& col) { return col.sub(col.cols(), 0, col.cols(), col.cols()); }

ExactMatrix inv_or_throw(const ExactMatrix& m, const char* what) {
  if (sgn(det(m)) == 0) throw NotInZLambda(std::string("normal_form: singular pivot ") + what);
  return inverse(m);
}

ExactJet jet_of(std::vector<ExactMatrix> c) {
  const size_t r = c.at(0).rows();
  const size_t p = c.size();
  return ExactJet(r, p, std::move(c));
}

}  // namespace

MembershipReport z_membership(const ZMatrix& z) {
  z.validate();
  MembershipReport rep;
  const size_t l = z.spec.length();
  auto check = [&](size_t f1, size_t k1, size_t f2, size_t k2) {
    if (sgn(det(hcat(z.block(f1, k1), z.block(f2, k2)))) == 0) {
      std::ostringstream os;
      os << "(z" << k1 << "^(" << f1 << "), z" << k2 << "^(" << f2 << "))";
      rep.failing.push_back(os.str());
    }
  };
  for (size_t i = 0; i < l; ++i) {
    if (z.spec.parts[i] >= 2) check(i, 0, i, 1);
    for (size_t j = i + 1; j < l; ++j) check(i, 0, j, 0);
  }
  rep.ok = rep.failing.empty();
  return rep;
}

bool supported_normal_form(const PartitionSpec& spec) {
  const auto& p = spec.parts;
  using V = std::vector<size_t>;
  return p == V{1, 1, 1} || p == V{2, 1} || p == V{3} || p == V{1, 1, 1, 1} || p == V{2, 1, 1} ||
         p == V{2, 2} || p == V{3, 1} || p == V{4};
}

ZMatrix table_normal_form(const PartitionSpec& spec, const ExactMatrix& param) {
  if (!supported_normal_form(spec)) throw std::invalid_argument("no normal-form table for " + spec.str());
  const size_t r = spec.r;
  const ExactMatrix I = ExactMatrix::identity(r), O(r, r);
  const bool four = spec.n() == 4;
  if (four && (param.rows() != r || param.cols() != r)) throw DimensionError("normal form parameter must be r x r");
  const ExactMatrix x = four ? param : O;
  std::vector<ExactMatrix> row1, row2;
  using V = std::vector<size_t>;
  const auto& p = spec.parts;
  if (p == V{1, 1, 1}) {
    row1 = {I, O, I};
    row2 = {O, I, -I};
  } else if (p == V{2, 1}) {
    row1 = {I, O, O};
    row2 = {O, I, I};
  } else if (p == V{3}) {
    row1 = {I, O, O};
    row2 = {O, I, O};
  } else if (p == V{1, 1, 1, 1}) {
    row1 = {I, O, I, I};
    row2 = {O, I, -I, -x};
  } else if (p == V{2, 1, 1}) {
    row1 = {I, O, O, I};
    row2 = {O, x, I, -I};
  } else if (p == V{2, 2}) {
    row1 = {I, O, O, -I};
    row2 = {O, x, I, O};
  } else if (p == V{3, 1}) {
    row1 = {I, O, O, O};
    row2 = {O, I, x, I};
  } else {
    row1 = {I, O, O, O};
    row2 = {O, I, O, -x};
  }
  ZMatrix z{spec, ExactMatrix(2 * r, spec.N())};
  for (size_t k = 0; k < row1.size(); ++k) {
    z.data.set_sub(0, k * r, row1[k]);
    z.data.set_sub(r, k * r, row2[k]);
  }
  return z;
}

bool matches_table(const ZMatrix& x, ExactMatrix& param) {
  x.validate();
  if (!supported_normal_form(x.spec)) return false;
  const size_t r = x.spec.r;
  using V = std::vector<size_t>;
  const auto& p = x.spec.parts;
  param = ExactMatrix(r, r);
  if (x.spec.n() == 4) {
    size_t col = 3;
    bool neg = true;
    if (p == V{2, 1, 1} || p == V{2, 2}) {
      col = 1;
      neg = false;
    } else if (p == V{3, 1}) {
      col = 2;
      neg = false;
    }
    param = x.data.sub(r, col * r, r, r);
    if (neg) param = -param;
  }
  return table_normal_form(x.spec, param).data == x.data;
}

NormalFormResult normal_form(const ZMatrix& z) {
  z.validate();
  const PartitionSpec& spec = z.spec;
  if (!supported_normal_form(spec)) throw std::invalid_argument("normal_form: unsupported partition " + spec.str());
  auto mem = z_membership(z);
  if (!mem.ok) throw NotInZLambda("normal_form: z not in Z_lambda, singular " + mem.failing.front());
  const size_t r = spec.r;
  const ExactMatrix I = ExactMatrix::identity(r), O(r, r);
  using V = std::vector<size_t>;
  const auto& parts = spec.parts;
  auto col = [&](size_t k) { return z.data.sub(0, k * r, 2 * r, r); };

  ExactMatrix ginv;
  std::vector<ExactJet> hf;
  if (parts == V{1, 1, 1} || parts == V{1, 1, 1, 1}) {
    ExactMatrix P = inv_or_throw(hcat(col(0), col(1)), "(z0,z1)");
    ExactMatrix w2 = P * col(2);
    ExactMatrix p = top(w2), q = bot(w2);
    ExactMatrix pinv = inv_or_throw(p, "p");
    ExactMatrix d2 = -(q * pinv);
    ExactMatrix d2inv = inv_or_throw(d2, "q");
    ginv = blocks2(I, O, O, d2inv) * P;
    hf = {jet_of({I}), jet_of({d2}), jet_of({pinv})};
    if (parts.size() == 4) {
      ExactMatrix w3 = P * col(3);
      hf.push_back(jet_of({inv_or_throw(top(w3), "s")}));
    }
  } else if (parts == V{2, 1}) {
    ExactMatrix P = inv_or_throw(hcat(col(0), col(1)), "(z0,z1)");
    ExactMatrix w2 = P * col(2);
    ExactMatrix p = top(w2), q = bot(w2);
    ExactMatrix qinv = inv_or_throw(q, "q");
    ginv = blocks2(qinv, O, O, I) * blocks2(I, -(p * qinv), O, qinv) * P;
    hf = {jet_of({q, p}), jet_of({I})};
  } else if (parts == V{3}) {
    ExactMatrix P = inv_or_throw(hcat(col(0), col(1)), "(z0,z1)");
    ExactMatrix w2 = P * col(2);
    ExactMatrix p = top(w2), q = bot(w2);
    ginv = blocks2(I, q, O, I) * P;
    hf = {jet_of({I, -q, -p})};
  } else if (parts == V{2, 1, 1}) {
    ExactMatrix P = inv_or_throw(hcat(col(0), col(2)), "(z0,z2)");
    ExactMatrix w1 = P * col(1), w3 = P * col(3);
    ExactMatrix a = top(w1);
    ExactMatrix s = top(w3), t = bot(w3);
    ExactMatrix sinv = inv_or_throw(s, "s");
    ExactMatrix d2 = -(t * sinv);
    ginv = blocks2(I, O, O, inv_or_throw(d2, "t")) * P;
    hf = {jet_of({I, -a}), jet_of({d2}), jet_of({sinv})};
  } else if (parts == V{2, 2}) {
    ExactMatrix P = inv_or_throw(hcat(col(0), col(2)), "(z0,z2)");
    ExactMatrix w1 = P * col(1), w3 = P * col(3);
    ExactMatrix a = top(w1);
    ExactMatrix s = top(w3), t = bot(w3);
    ExactMatrix d2 = -inv_or_throw(s, "s");
    ginv = blocks2(I, O, O, inverse(d2)) * P;
    hf = {jet_of({I, -a}), jet_of({d2, -(t * d2)})};
  } else if (parts == V{3, 1}) {
    ExactMatrix P = inv_or_throw(hcat(col(0), col(1)), "(z0,z1)");
    ExactMatrix w2 = P * col(2), w3 = P * col(3);
    ExactMatrix p = top(w2), q = bot(w2);
    ExactMatrix s = top(w3), t = bot(w3);
    ExactMatrix tinv = inv_or_throw(t, "t");
    ExactMatrix h1 = s * tinv;
    ginv = blocks2(I, -h1, O, I) * P;
    hf = {jet_of({I, h1, ExactMatrix(-p + h1 * (h1 + q))}), jet_of({tinv})};
  } else {  // (4)
    ExactMatrix P = inv_or_throw(hcat(col(0), col(1)), "(z0,z1)");
    ExactMatrix w2 = P * col(2), w3 = P * col(3);
    ExactMatrix p = top(w2), q = bot(w2);
    ExactMatrix s = top(w3), t = bot(w3);
    ExactMatrix b = t - p - q * q;
    ExactMatrix h3 = p * q - s - q * b;
    ginv = blocks2(I, q, O, I) * P;
    hf = {jet_of({I, -q, -p, h3})};
  }
  ExactH h{spec, hf};
  h.validate();
  ZMatrix x{spec, ginv * z.data * embed_h(h)};
  NormalFormResult res{x, ExactMatrix(), OrbitWitness{inverse(ginv), h}};
  if (!matches_table(x, res.param)) throw std::logic_error("normal_form: reduction did not reach the table shape");
  if (spec.n() == 3) res.param = ExactMatrix();
  return res;
}

SigmaAction sigma_action_x(const Permutation& sigma, const ExactMatrix& x) {
  if (sigma.size() != 4 || !is_permutation(sigma)) throw std::invalid_argument("sigma must be a permutation of 0..3");
  const size_t r = x.rows();
  PartitionSpec spec(r, {1, 1, 1, 1});
  ZMatrix xb = table_normal_form(spec, x);
  ZMatrix z{spec, xb.data * perm_block_matrix<Rational>(sigma, r)};
  NormalFormResult nf = normal_form(z);
  return SigmaAction{nf.param, sigma, det(nf.witness.g), nf.witness};
}

KummerWitness kummer_sigma_witness(const ExactMatrix& x) {
  const size_t r = x.rows();
  PartitionSpec spec(r, {2, 1, 1});
  const ExactMatrix I = ExactMatrix::identity(r), O(r, r);
  ZMatrix xb = table_normal_form(spec, x);
  // column blocks 2 and 3 swapped
  ExactMatrix perm = perm_block_matrix<Rational>(transposition(4, 2, 3), r);
  ExactMatrix g = blocks2(I, I, O, -I);  // g = g^{-1}
  ExactH h{spec, {jet_of({I, ExactMatrix(-x)}), jet_of({I}), jet_of({I})}};
  ExactMatrix lhs = inverse(g) * xb.data * perm * embed_h(h);
  ExactMatrix xn = -x;
  if (lhs != table_normal_form(spec, xn).data) throw std::logic_error("kummer_sigma_witness: witness check failed");
  return KummerWitness{xn, OrbitWitness{g, h}, x.trace()};
}

}  // namespace radon
