#include "radon/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace radon {

PartitionSpec::PartitionSpec(size_t r_, std::vector<size_t> parts_) : r(r_), parts(std::move(parts_)) {
  if (r == 0) throw std::invalid_argument("block size r must be >= 1");
  if (parts.empty()) throw std::invalid_argument("empty partition");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw std::invalid_argument("partition parts must be >= 1");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

size_t PartitionSpec::n() const { return std::accumulate(parts.begin(), parts.end(), size_t{0}); }

std::vector<std::pair<size_t, size_t>> PartitionSpec::multiplicities() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t v : parts) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

std::vector<size_t> PartitionSpec::class_offsets() const {
  std::vector<size_t> off;
  size_t k = 0;
  for (auto [ni, pi] : multiplicities()) {
    off.push_back(k);
    k += pi;
  }
  return off;
}

size_t PartitionSpec::factor_offset(size_t k) const {
  size_t off = 0;
  for (size_t i = 0; i < k; ++i) off += parts.at(i);
  return off;
}

std::string PartitionSpec::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

PartitionSpec parse_partition(const std::string& s, size_t r) {
  std::vector<size_t> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }),
              tok.end());
    if (tok.empty()) continue;
    long v = std::stol(tok);
    if (v <= 0) throw std::invalid_argument("partition parts must be positive");
    parts.push_back(static_cast<size_t>(v));
  }
  return PartitionSpec(r, parts);
}

bool is_permutation(const Permutation& s) {
  std::vector<bool> seen(s.size(), false);
  for (size_t v : s) {
    if (v >= s.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation perm_identity(size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), size_t{0});
  return p;
}

Permutation perm_compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation out(s.size());
  for (size_t k = 0; k < s.size(); ++k) out[k] = s[t[k]];
  return out;
}

Permutation perm_inverse(const Permutation& s) {
  Permutation out(s.size());
  for (size_t k = 0; k < s.size(); ++k) out[s[k]] = k;
  return out;
}

Permutation transposition(size_t n, size_t a, size_t b) {
  Permutation p = perm_identity(n);
  std::swap(p.at(a), p.at(b));
  return p;
}

Permutation cycle(size_t n, const std::vector<size_t>& c) {
  Permutation p = perm_identity(n);
  for (size_t i = 0; i < c.size(); ++i) p.at(c[i]) = c[(i + 1) % c.size()];
  if (!is_permutation(p)) throw std::invalid_argument("bad cycle");
  return p;
}

}  // namespace radon
