#include "schur/gtmod.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace schur {

GTBasis::GTBasis(const Partition& shape_, int d_) : shape(shape_), d(d_), patterns(enumerate_gt(shape_, d_)) {
  for (int i = 0; i < dim(); ++i) index_of.emplace(patterns[i], i);
}

int GTBasis::index(const GTPattern& m) const {
  int i = find(m);
  if (i < 0) throw std::invalid_argument("pattern " + m.str() + " not in GT basis");
  return i;
}

int GTBasis::find(const GTPattern& m) const {
  auto it = index_of.find(m);
  return it == index_of.end() ? -1 : it->second;
}

namespace {

// l_{k,i} = M_{k,i} - i
inline long lv(const GTPattern& m, int k, int i) { return static_cast<long>(m.at(k, i)) - i; }

void check_level(const GTPattern& m, int k) {
  if (k < 2 || k > m.depth()) throw std::out_of_range("GT generator level " + std::to_string(k) + " outside [2, d]");
}

double ratio_root(double num, double den) {
  if (den == 0.0) throw std::logic_error("zero denominator in GT coefficient");
  return std::sqrt(std::abs(num / den));
}

}  // namespace

double gamma_minus(const GTPattern& m, int k, int j) {
  check_level(m, k);
  if (j < 1 || j > k - 1) throw std::out_of_range("gamma_minus: j");
  GTPattern target = m;
  target.at(k - 1, j) -= 1;
  if (!target.valid()) return 0.0;
  const long lj = lv(m, k - 1, j);
  double num = 1.0, den = 1.0;
  for (int i = 1; i <= k; ++i) num *= static_cast<double>(lv(m, k, i) - lj + 1);
  for (int i = 1; i <= k - 2; ++i) num *= static_cast<double>(lv(m, k - 2, i) - lj);
  for (int i = 1; i <= k - 1; ++i) {
    if (i == j) continue;
    const long diff = lv(m, k - 1, i) - lj;
    den *= static_cast<double>(diff) * static_cast<double>(diff + 1);
  }
  return ratio_root(num, den);
}

double gamma_plus(const GTPattern& m, int k, int j) {
  check_level(m, k);
  if (j < 1 || j > k - 1) throw std::out_of_range("gamma_plus: j");
  GTPattern target = m;
  target.at(k - 1, j) += 1;
  if (!target.valid()) return 0.0;
  const long lj = lv(m, k - 1, j);
  double num = 1.0, den = 1.0;
  for (int i = 1; i <= k; ++i) num *= static_cast<double>(lv(m, k, i) - lj);
  for (int i = 1; i <= k - 2; ++i) num *= static_cast<double>(lv(m, k - 2, i) - lj - 1);
  for (int i = 1; i <= k - 1; ++i) {
    if (i == j) continue;
    const long diff = lv(m, k - 1, i) - lj;
    den *= static_cast<double>(diff) * static_cast<double>(diff - 1);
  }
  return ratio_root(num, den);
}

std::vector<PatternTerm> apply_lower(const GTPattern& m, int k) {
  std::vector<PatternTerm> out;
  for (int j = 1; j <= k - 1; ++j) {
    const double g = gamma_minus(m, k, j);
    if (g == 0.0) continue;
    GTPattern t = m;
    t.at(k - 1, j) -= 1;
    out.emplace_back(std::move(t), g);
  }
  return out;
}

std::vector<PatternTerm> apply_raise(const GTPattern& m, int k) {
  std::vector<PatternTerm> out;
  for (int j = 1; j <= k - 1; ++j) {
    const double g = gamma_plus(m, k, j);
    if (g == 0.0) continue;
    GTPattern t = m;
    t.at(k - 1, j) += 1;
    out.emplace_back(std::move(t), g);
  }
  return out;
}

std::vector<PatternTerm> apply_generator(const GTPattern& m, int k, int l) {
  if (k == l) {
    const double w = gt_weight(m)(k);
    if (w == 0.0) return {};
    return {{m, w}};
  }
  if (k == l + 1) return apply_lower(m, k);
  if (l == k + 1) return apply_raise(m, l);
  throw std::invalid_argument("only adjacent and Cartan generators are supported");
}

ComplexMatrix gl_generator(const GTBasis& basis, int k, int l) {
  if (k < 1 || l < 1 || k > basis.d || l > basis.d) throw std::out_of_range("generator index outside [d]");
  ComplexMatrix mat = ComplexMatrix::Zero(basis.dim(), basis.dim());
  for (int c = 0; c < basis.dim(); ++c)
    for (const auto& [target, v] : apply_generator(basis.patterns[c], k, l)) mat(basis.index(target), c) += v;
  return mat;
}

GlGeneratorMatrix gl_diag(const Partition& shape, int d, int k) {
  GTBasis basis(shape, d);
  return {shape, d, k, k, gl_generator(basis, k, k)};
}

GlGeneratorMatrix gl_lower(const Partition& shape, int d, int k) {
  if (k < 2 || k > d) throw std::out_of_range("gl_lower: need 2 <= k <= d");
  GTBasis basis(shape, d);
  return {shape, d, k, k - 1, gl_generator(basis, k, k - 1)};
}

GlGeneratorMatrix gl_raise(const Partition& shape, int d, int k) {
  if (k < 2 || k > d) throw std::out_of_range("gl_raise: need 2 <= k <= d");
  GTBasis basis(shape, d);
  return {shape, d, k - 1, k, gl_generator(basis, k - 1, k)};
}

std::vector<Ditstring> string_gl_action(const Ditstring& x, int k, int l) {
  std::vector<Ditstring> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != l) continue;
    Ditstring y = x;
    y[i] = k;
    out.push_back(std::move(y));
  }
  return out;
}

ComplexMatrix tensor_gl_action(int k, int l, int n, int d) {
  if (k < 1 || l < 1 || k > d || l > d) throw std::out_of_range("generator index outside [d]");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(d);
    require_within_cap(dim, dense_cap(), "tensor_gl_action");
  }
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t c = 0; c < dim; ++c)
    for (const Ditstring& y : string_gl_action(string_at(c, n, d), k, l))
      m(static_cast<Eigen::Index>(string_index(y, d)), static_cast<Eigen::Index>(c)) += 1.0;
  return m;
}

std::vector<std::pair<int, int>> adjacent_generators(int d) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= d; ++k) out.emplace_back(k, k);
  for (int k = 2; k <= d; ++k) out.emplace_back(k, k - 1);
  for (int k = 2; k <= d; ++k) out.emplace_back(k - 1, k);
  return out;
}

}  // namespace schur
