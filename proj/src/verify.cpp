#include "schur/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schur/bch.hpp"
#include "schur/gtmod.hpp"
#include "schur/krovi.hpp"
#include "schur/prepcirc.hpp"
#include "schur/symrep.hpp"

namespace schur {

std::string CheckReport::str() const {
  std::ostringstream os;
  os << (pass ? "PASS " : "FAIL ") << name;
  for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
  os.precision(3);
  os << " dev=" << std::scientific << deviation << " tol=" << tol;
  if (!notes.empty()) os << " [" << notes << ']';
  return os.str();
}

CheckReport make_report(std::string name, std::vector<std::pair<std::string, std::string>> params, double deviation,
                        double tol, std::string notes) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.deviation = deviation;
  r.tol = tol;
  r.pass = std::isfinite(deviation) && deviation >= 0.0 && deviation <= tol;
  r.notes = std::move(notes);
  return r;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

namespace {

RealMatrix kron_real(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int height(const std::vector<int>& w) {
  int h = 0;
  for (std::size_t k = 0; k < w.size(); ++k) h += static_cast<int>(k + 1) * w[k];
  return h;
}

}  // namespace

RepSpace irrep_space(const Partition& shape, int d) {
  RepSpace s;
  s.d = d;
  const GTBasis basis(shape, d);
  for (const GTPattern& m : basis.patterns) s.weights.push_back(gt_weight(m).entries());
  for (auto [k, l] : adjacent_generators(d)) s.action[{k, l}] = gl_generator(basis, k, l).real();
  return s;
}

RepSpace defining_space(int d) {
  RepSpace s;
  s.d = d;
  for (int x = 1; x <= d; ++x) {
    std::vector<int> w(d, 0);
    w[x - 1] = 1;
    s.weights.push_back(w);
  }
  for (auto [k, l] : adjacent_generators(d)) {
    RealMatrix e = RealMatrix::Zero(d, d);
    e(k - 1, l - 1) = 1.0;
    s.action[{k, l}] = e;
  }
  return s;
}

RepSpace tensor_space(const RepSpace& a, const RepSpace& b) {
  if (a.d != b.d) throw std::invalid_argument("tensor_space: different d");
  RepSpace s;
  s.d = a.d;
  for (const auto& wa : a.weights)
    for (const auto& wb : b.weights) {
      std::vector<int> w(wa);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += wb[k];
      s.weights.push_back(std::move(w));
    }
  const RealMatrix ia = RealMatrix::Identity(a.dim(), a.dim());
  const RealMatrix ib = RealMatrix::Identity(b.dim(), b.dim());
  for (const auto& [key, ma] : a.action) s.action[key] = kron_real(ma, ib) + kron_real(ia, b.action.at(key));
  return s;
}

Eigen::VectorXd highest_weight_vector(const RepSpace& space, const std::vector<int>& weight) {
  std::vector<int> idx;
  for (int i = 0; i < space.dim(); ++i)
    if (space.weights[i] == weight) idx.push_back(i);
  if (idx.empty()) throw std::runtime_error("no vectors of weight " + vec_str(weight));
  const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
  RealMatrix gram = RealMatrix::Zero(m, m);
  for (int k = 2; k <= space.d; ++k) {
    const RealMatrix& raise = space.action.at({k - 1, k});
    RealMatrix cols(raise.rows(), m);
    for (Eigen::Index c = 0; c < m; ++c) cols.col(c) = raise.col(idx[c]);
    gram += cols.transpose() * cols;
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram);
  int null_dim = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    if (std::abs(es.eigenvalues()(i)) < 1e-9) ++null_dim;
  if (null_dim != 1)
    throw std::runtime_error("highest-weight space of weight " + vec_str(weight) + " has dimension " +
                             std::to_string(null_dim));
  Eigen::VectorXd v = Eigen::VectorXd::Zero(space.dim());
  for (Eigen::Index c = 0; c < m; ++c) v(idx[c]) = es.eigenvectors()(c, 0);
  v.normalize();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      break;
    }
  return v;
}

RealMatrix embed_irrep(const RepSpace& space, const Partition& shape, const Eigen::VectorXd& top) {
  const int d = space.d;
  const GTBasis target(shape, d);
  std::map<std::vector<int>, std::vector<int>> by_weight;
  for (int p = 0; p < target.dim(); ++p) by_weight[gt_weight(target.patterns[p]).entries()].push_back(p);
  std::vector<std::vector<int>> order;
  for (const auto& [w, ps] : by_weight) order.push_back(w);
  std::stable_sort(order.begin(), order.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) { return height(a) < height(b); });

  std::vector<RealMatrix> lower_target(d + 1);
  for (int k = 2; k <= d; ++k) lower_target[k] = gl_generator(target, k, k - 1).real();

  RealMatrix x = RealMatrix::Zero(space.dim(), target.dim());
  const int hw = target.index(highest_weight_pattern(shape, d));
  x.col(hw) = top;
  std::vector<bool> known(target.dim(), false);
  known[hw] = true;

  for (const auto& w : order) {
    const std::vector<int>& unknown = by_weight.at(w);
    if (unknown.size() == 1 && unknown[0] == hw) continue;
    std::vector<Eigen::VectorXd> coeff_rows;
    std::vector<Eigen::VectorXd> rhs_rows;
    for (int k = 2; k <= d; ++k) {
      if (w[k - 1] < 1) continue;
      std::vector<int> source_w(w);
      ++source_w[k - 2];
      --source_w[k - 1];
      auto it = by_weight.find(source_w);
      if (it == by_weight.end()) continue;
      const RealMatrix& space_lower = space.action.at({k, k - 1});
      for (int nidx : it->second) {
        if (!known[nidx]) throw std::logic_error("embed_irrep: lowering source not yet built");
        Eigen::VectorXd c(unknown.size());
        for (std::size_t u = 0; u < unknown.size(); ++u) c(u) = lower_target[k](unknown[u], nidx);
        if (c.cwiseAbs().maxCoeff() < 1e-14) continue;
        coeff_rows.push_back(c);
        rhs_rows.push_back(space_lower * x.col(nidx));
      }
    }
    const Eigen::Index rows = static_cast<Eigen::Index>(coeff_rows.size());
    RealMatrix c(rows, static_cast<Eigen::Index>(unknown.size()));
    RealMatrix b(rows, space.dim());
    for (Eigen::Index r = 0; r < rows; ++r) {
      c.row(r) = coeff_rows[r].transpose();
      b.row(r) = rhs_rows[r].transpose();
    }
    Eigen::ColPivHouseholderQR<RealMatrix> qr(c);
    if (qr.rank() != static_cast<Eigen::Index>(unknown.size()))
      throw std::runtime_error("embed_irrep: degenerate lowering system at weight " + vec_str(w));
    const RealMatrix sol = qr.solve(b);
    if ((c * sol - b).cwiseAbs().maxCoeff() > 1e-8)
      throw std::runtime_error("embed_irrep: inconsistent lowering system at weight " + vec_str(w));
    for (std::size_t u = 0; u < unknown.size(); ++u) {
      x.col(unknown[u]) = sol.row(static_cast<Eigen::Index>(u)).transpose();
      known[unknown[u]] = true;
    }
  }
  return x;
}

CGBlock cg_block_oracle(const Partition& shape, int d) {
  CGBlock b = empty_cg_block(shape, d);
  const RepSpace pair = tensor_space(irrep_space(shape, d), defining_space(d));
  for (std::size_t c = 0; c < b.channels.size(); ++c) {
    const Partition nu = shape.add_box(b.channels[c]);
    const Eigen::VectorXd top = highest_weight_vector(pair, nu.padded(d));
    const RealMatrix x = embed_irrep(pair, nu, top);
    b.matrix.block(b.offsets[c], 0, x.cols(), x.rows()) = x.transpose().cast<cplx>();
  }
  return b;
}

CheckReport compare_cg_with_oracle(const Partition& shape, int d, double tol) {
  const CGBlock a = cg_transform(shape, d);
  const CGBlock o = cg_block_oracle(shape, d);
  double dev = unitarity_deviation(o.matrix);
  std::string signs;
  for (std::size_t c = 0; c < a.channels.size(); ++c) {
    const Eigen::Index r0 = a.offsets[c], rows = a.targets[c].dim();
    const ComplexMatrix ba = a.matrix.middleRows(r0, rows), bo = o.matrix.middleRows(r0, rows);
    const double s = (ba.real().cwiseProduct(bo.real())).sum() >= 0 ? 1.0 : -1.0;
    dev = std::max(dev, max_abs_diff(ba, bo * s));
    signs += (c ? " " : "") + std::string(s > 0 ? "+" : "-");
  }
  return make_report("cg_oracle", {{"shape", shape.str()}, {"d", std::to_string(d)}}, dev, tol,
                     "channel signs " + signs);
}

namespace {

bool horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i <= outer.length(); ++i)
    if (outer(i + 1) > inner(i)) return false;
  return true;
}

// Reorders a vector on A (x) B (x) C into A (x) C (x) B.
Eigen::VectorXd swap_last_two(const Eigen::VectorXd& v, int da, int db, int dc) {
  Eigen::VectorXd out(v.size());
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int c = 0; c < dc; ++c) out((a * dc + c) * db + b) = v((a * db + b) * dc + c);
  return out;
}

}  // namespace

CheckReport check_fsymbols_against_trees(const Partition& nu, double tol) {
  const int d = std::max(nu.length(), 1);
  const int n = nu.size();
  double dev = 0.0;
  int instances = 0;
  const RepSpace box = defining_space(d);
  for (int k = 1; k <= n; ++k) {
    const Partition row_k1(std::vector<int>{k - 1});
    const Partition row_k(std::vector<int>{k});
    if (row_k.length() > d) continue;
    const RepSpace right = irrep_space(row_k1, d);
    // the fusion (k-1) (x) box -> (k), shared by every base
    const RepSpace rb = tensor_space(right, box);
    const RealMatrix join_rb = embed_irrep(rb, row_k, highest_weight_vector(rb, row_k.padded(d)));
    for (const Partition& base : enumerate_partitions(n - k, d)) {
      if (!horizontal_strip(nu, base)) continue;
      const RepSpace left = irrep_space(base, d);
      const RepSpace lk = tensor_space(left, irrep_space(row_k, d));
      const Eigen::VectorXd h0 = highest_weight_vector(lk, nu.padded(d));
      // base (x) [(k-1) (x) box]
      const Eigen::VectorXd t0 = kron_real(RealMatrix::Identity(left.dim(), left.dim()), join_rb) * h0;

      for (int r : removable_rows(nu)) {
        const Partition mid = nu.remove_box(r);
        double overlap = 0.0;
        if (horizontal_strip(mid, base)) {
          const RepSpace lr = tensor_space(left, right);
          const RealMatrix join_lr = embed_irrep(lr, mid, highest_weight_vector(lr, mid.padded(d)));
          const RepSpace mb = tensor_space(irrep_space(mid, d), box);
          const Eigen::VectorXd h = highest_weight_vector(mb, nu.padded(d));
          const Eigen::VectorXd tr = kron_real(join_lr, RealMatrix::Identity(d, d)) * h;
          overlap = std::abs(t0.dot(tr));
        }
        dev = std::max(dev, std::abs(overlap - f_right(k, base, nu, r)));
        ++instances;
      }

      const Eigen::VectorXd t0_swapped = swap_last_two(t0, left.dim(), right.dim(), d);
      for (int a : addable_rows(base, d)) {
        const Partition grown = base.add_box(a);
        double overlap = 0.0;
        if (horizontal_strip(nu, grown)) {
          const RepSpace lb = tensor_space(left, box);
          const RealMatrix join_lb = embed_irrep(lb, grown, highest_weight_vector(lb, grown.padded(d)));
          const RepSpace gr = tensor_space(irrep_space(grown, d), right);
          const Eigen::VectorXd h = highest_weight_vector(gr, nu.padded(d));
          const Eigen::VectorXd ta = kron_real(join_lb, RealMatrix::Identity(right.dim(), right.dim())) * h;
          overlap = std::abs(t0_swapped.dot(ta));
        }
        dev = std::max(dev, std::abs(overlap - f_left(k, base, nu, a)));
        ++instances;
      }
    }
  }
  return make_report("fsymbol_trees", {{"nu", nu.str()}}, dev, tol, std::to_string(instances) + " channels");
}

CheckReport check_unitarity(const SchurTransform& u, const std::string& label, double tol) {
  return make_report("unitarity", {{"pipeline", label}, {"n", std::to_string(u.n())}, {"d", std::to_string(u.d())}},
                     u.unitarity_deviation(), tol);
}

namespace {

std::map<std::size_t, Eigen::Index> positions(const std::vector<std::size_t>& v) {
  std::map<std::size_t, Eigen::Index> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.emplace(v[i], static_cast<Eigen::Index>(i));
  return out;
}

}  // namespace

CheckReport check_schur_equivariance(const SchurTransform& u, Side side, const std::string& label, double tol) {
  const int n = u.n(), d = u.d();
  const SchurIndex& idx = u.index();
  double dev = 0.0;
  std::vector<std::vector<SchurIndex::Label>> labels;
  std::vector<std::map<std::size_t, Eigen::Index>> colpos;
  for (const WeightBlock& b : u.blocks()) {
    std::vector<SchurIndex::Label> l;
    for (std::size_t r : b.rows) l.push_back(idx.locate(r));
    labels.push_back(std::move(l));
    colpos.push_back(positions(b.cols));
  }
  if (side == Side::Sym) {
    for (int i = 1; i < n; ++i) {
      const Permutation s = Permutation::transposition(n, i, i + 1);
      std::vector<ComplexMatrix> gens;
      for (const Partition& shape : idx.shapes()) gens.push_back(yy_generator(shape, i));
      for (std::size_t bi = 0; bi < u.blocks().size(); ++bi) {
        const WeightBlock& b = u.blocks()[bi];
        const Eigen::Index m = static_cast<Eigen::Index>(b.cols.size());
        ComplexMatrix perm = ComplexMatrix::Zero(m, m);
        for (Eigen::Index c = 0; c < m; ++c)
          perm(colpos[bi].at(string_index(permute_string(s, string_at(b.cols[c], n, d)), d)), c) = 1.0;
        const ComplexMatrix got = b.block * perm * b.block.adjoint();
        for (Eigen::Index r1 = 0; r1 < m; ++r1)
          for (Eigen::Index r2 = 0; r2 < m; ++r2) {
            const auto& a = labels[bi][r1];
            const auto& c = labels[bi][r2];
            cplx want = 0.0;
            if (a.shape == c.shape && a.pattern == c.pattern) want = gens[a.shape](a.tableau, c.tableau);
            dev = std::max(dev, std::abs(got(r1, r2) - want));
          }
      }
    }
  } else {
    for (auto [k, l] : adjacent_generators(d)) {
      std::vector<ComplexMatrix> gens;
      for (int s = 0; s < static_cast<int>(idx.shapes().size()); ++s) gens.push_back(gl_generator(idx.gt(s), k, l));
      for (std::size_t bi = 0; bi < u.blocks().size(); ++bi) {
        const WeightBlock& b = u.blocks()[bi];
        std::vector<int> w = b.weight.entries();
        if (w[l - 1] == 0) continue;
        --w[l - 1];
        ++w[k - 1];
        const int bj = u.block_index(Weight(w));
        const WeightBlock& t = u.blocks()[bj];
        ComplexMatrix phi = ComplexMatrix::Zero(static_cast<Eigen::Index>(t.cols.size()),
                                                static_cast<Eigen::Index>(b.cols.size()));
        for (std::size_t c = 0; c < b.cols.size(); ++c)
          for (const Ditstring& y : string_gl_action(string_at(b.cols[c], n, d), k, l))
            phi(colpos[bj].at(string_index(y, d)), static_cast<Eigen::Index>(c)) += 1.0;
        const ComplexMatrix got = t.block * phi * b.block.adjoint();
        for (Eigen::Index r1 = 0; r1 < got.rows(); ++r1)
          for (Eigen::Index r2 = 0; r2 < got.cols(); ++r2) {
            const auto& a = labels[bj][r1];
            const auto& c = labels[bi][r2];
            cplx want = 0.0;
            if (a.shape == c.shape && a.tableau == c.tableau) want = gens[a.shape](a.pattern, c.pattern);
            dev = std::max(dev, std::abs(got(r1, r2) - want));
          }
      }
    }
  }
  return make_report(side == Side::Sym ? "sym_equivariance" : "gl_equivariance",
                     {{"pipeline", label}, {"n", std::to_string(n)}, {"d", std::to_string(d)}}, dev, tol);
}

CheckReport check_schur_equivariance(const ComplexMatrix& u, int n, int d, Side side, const std::string& label,
                                     double tol) {
  const std::size_t dim = checked_dimension(n, d);
  if (u.rows() != static_cast<Eigen::Index>(dim) || u.cols() != static_cast<Eigen::Index>(dim))
    throw std::invalid_argument("check_schur_equivariance: matrix is not d^n square");
  const SchurIndex& idx = *schur_index(n, d);
  double dev = 0.0;
  if (side == Side::Sym) {
    for (int i = 1; i < n; ++i) {
      const ComplexMatrix p = tensor_perm_action(Permutation::transposition(n, i, i + 1), n, d);
      dev = std::max(dev, max_abs_diff(u * p * u.adjoint(), sym_target(idx, i)));
    }
  } else {
    for (auto [k, l] : adjacent_generators(d))
      dev = std::max(dev, max_abs_diff(u * tensor_gl_action(k, l, n, d) * u.adjoint(), gl_target(idx, k, l)));
  }
  return make_report(side == Side::Sym ? "sym_equivariance" : "gl_equivariance",
                     {{"pipeline", label}, {"n", std::to_string(n)}, {"d", std::to_string(d)}}, dev, tol, "dense");
}

PipelineComparison compare_pipelines(const SchurTransform& a, const SchurTransform& b, const std::string& label,
                                      double tol) {
  if (a.n() != b.n() || a.d() != b.d() || a.blocks().size() != b.blocks().size())
    throw std::invalid_argument("compare_pipelines: transforms have different layouts");
  PipelineComparison out;
  const SchurIndex& idx = a.index();
  double dev = 0.0;
  for (std::size_t bi = 0; bi < a.blocks().size(); ++bi) {
    const WeightBlock& ba = a.blocks()[bi];
    const WeightBlock& bb = b.blocks()[bi];
    const ComplexMatrix prod = ba.block * bb.block.adjoint();
    std::vector<int> sign_of_row;
    for (std::size_t r : ba.rows) {
      const Partition& shape = idx.shapes()[idx.locate(r).shape];
      const Eigen::Index i = static_cast<Eigen::Index>(sign_of_row.size());
      auto it = out.signs.find(shape);
      if (it == out.signs.end()) it = out.signs.emplace(shape, prod(i, i).real() >= 0 ? 1 : -1).first;
      sign_of_row.push_back(it->second);
    }
    for (Eigen::Index r1 = 0; r1 < prod.rows(); ++r1)
      for (Eigen::Index r2 = 0; r2 < prod.cols(); ++r2) {
        const double want = r1 == r2 ? sign_of_row[r1] : 0.0;
        dev = std::max(dev, std::abs(prod(r1, r2) - want));
      }
  }
  std::string notes = "eps";
  for (const auto& [shape, s] : out.signs) notes += " " + shape.str() + (s > 0 ? "=+1" : "=-1");
  out.report = make_report("compare", {{"pipelines", label}, {"n", std::to_string(a.n())}, {"d", std::to_string(a.d())}},
                           dev, tol, notes);
  return out;
}

PipelineComparison compare_pipelines(int n, int d, double tol) {
  return compare_pipelines(schur_unitary_krovi(n, d), schur_unitary_bch(n, d), "krovi/bch", tol);
}

namespace {

GroupAlgebraElement coset_state(const std::vector<Permutation>& group) {
  return GroupAlgebraElement::sum(group).scaled(1.0 / std::sqrt(static_cast<double>(group.size())));
}

std::vector<CheckReport> gor_checks(int n, double tol) {
  const IrrepTable& table = irrep_table(n);
  const std::vector<Permutation> perms = all_permutations(n);
  std::vector<std::vector<RealMatrix>> rep(table.irreps().size());
  for (std::size_t s = 0; s < rep.size(); ++s)
    for (const Permutation& g : perms) rep[s].push_back(irrep_matrix(table.irreps()[s].shape, g).real());
  std::vector<int> inverse_rank;
  for (const Permutation& g : perms) inverse_rank.push_back(static_cast<int>(lex_rank(g.inverse())));
  const double order = static_cast<double>(perms.size());
  std::vector<CheckReport> out;
  for (std::size_t s1 = 0; s1 < rep.size(); ++s1)
    for (std::size_t s2 = 0; s2 < rep.size(); ++s2) {
      const int d1 = table.irreps()[s1].dim(), d2 = table.irreps()[s2].dim();
      double dev = 0.0;
      for (int t1 = 0; t1 < d1; ++t1)
        for (int t2 = 0; t2 < d2; ++t2) {
          RealMatrix acc = RealMatrix::Zero(d1, d2);
          for (std::size_t g = 0; g < perms.size(); ++g)
            acc += rep[s1][g].col(t1) * rep[s2][inverse_rank[g]].row(t2);
          acc /= order;
          RealMatrix want = RealMatrix::Zero(d1, d2);
          if (s1 == s2 && t1 == t2) want = RealMatrix::Identity(d1, d1) / d1;
          dev = std::max(dev, (acc - want).cwiseAbs().maxCoeff());
        }
      out.push_back(make_report("GOR", {{"n", std::to_string(n)}, {"shape", table.irreps()[s1].shape.str()},
                                        {"shape2", table.irreps()[s2].shape.str()}},
                                dev, tol));
    }
  return out;
}

std::vector<CheckReport> twirl_checks(int n, double tol) {
  std::vector<CheckReport> out;
  const ComplexMatrix qft = qft_matrix(n);
  const IrrepTable& table = irrep_table(n);
  for (const Composition& mu : enumerate_compositions(n)) {
    const std::vector<Permutation> group = young_subgroup(mu);
    const ComplexVector y = coset_state(group).to_vector();
    ComplexMatrix lhs = ComplexMatrix::Zero(y.size(), y.size());
    for (const Permutation& t : transversal(mu)) {
      const ComplexVector v = left_regular(t) * y;
      lhs += v * v.adjoint();
    }
    ComplexMatrix rhs = ComplexMatrix::Zero(y.size(), y.size());
    for (const Permutation& h : group) rhs += right_regular(h);
    rhs /= static_cast<double>(group.size());
    ComplexMatrix block_target = ComplexMatrix::Zero(y.size(), y.size());
    Eigen::Index off = 0;
    for (const IrrepData& irrep : table.irreps()) {
      const int dl = irrep.dim();
      block_target.block(off, off, dl * dl, dl * dl) = kron(ComplexMatrix::Identity(dl, dl), young_projector(irrep.shape, mu));
      off += dl * dl;
    }
    const double dev = std::max(max_abs_diff(lhs, rhs), max_abs_diff(qft * lhs * qft.adjoint(), block_target));
    out.push_back(make_report("qft_twirl", {{"n", std::to_string(n)}, {"mu", vec_str(mu.parts())}}, dev, tol));
  }
  return out;
}

struct WeightStep {
  Weight w;
  Weight lowered;  // w^(k)
  int k;
};

std::vector<WeightStep> weight_steps(int n, int d) {
  std::vector<WeightStep> out;
  for (const Weight& w : enumerate_weights(n, d))
    for (int k = 2; k <= d; ++k) {
      if (w(k - 1) < 1) continue;
      std::vector<int> e = w.entries();
      --e[k - 2];
      ++e[k - 1];
      out.push_back({w, Weight(e), k});
    }
  return out;
}

// (prefix_{k-1} - j + 1, prefix_{k-1}) for j = 1..w_{k-1}
std::vector<Permutation> lowering_transpositions(const Weight& w, int k, int n) {
  int prefix = 0;
  for (int i = 1; i <= k - 1; ++i) prefix += w(i);
  std::vector<Permutation> out;
  for (int j = 1; j <= w(k - 1); ++j) {
    const int a = prefix - j + 1;
    out.push_back(a == prefix ? Permutation::identity(n) : Permutation::transposition(n, a, prefix));
  }
  return out;
}

std::vector<CheckReport> subgroup_checks(int n, int d, double tol) {
  std::vector<CheckReport> out;
  for (const WeightStep& st : weight_steps(n, d)) {
    const std::vector<Permutation> h1 = young_subgroup(st.w);
    const std::vector<Permutation> h2 = young_subgroup(st.lowered);
    std::vector<Permutation> k;
    std::set_intersection(h1.begin(), h1.end(), h2.begin(), h2.end(), std::back_inserter(k));
    const std::vector<Permutation> reps = lowering_transpositions(st.w, st.k, n);
    const std::vector<std::pair<std::string, std::string>> params = {
        {"n", std::to_string(n)}, {"w", vec_str(st.w.entries())}, {"k", std::to_string(st.k)}};

    // h1_h2_k
    const GroupAlgebraElement lhs = GroupAlgebraElement::sum(reps) * GroupAlgebraElement::sum(h2);
    const double factor = static_cast<double>(h1.size()) * static_cast<double>(h2.size()) / static_cast<double>(k.size());
    const GroupAlgebraElement rhs = (GroupAlgebraElement::average(h1) * GroupAlgebraElement::average(h2)).scaled(factor);
    out.push_back(make_report("h1_h2_k", params, lhs.distance(rhs), tol));

    // L_R_trick
    GroupAlgebraElement moved(n);
    const GroupAlgebraElement yk = coset_state(h2);
    for (const Permutation& t : reps) moved = moved + GroupAlgebraElement::basis(t) * yk;
    const double scale = std::sqrt(static_cast<double>(st.w(st.k - 1)) * (st.w(st.k) + 1));
    const ComplexVector want = GroupAlgebraElement::average(h2).right_action() * coset_state(h1).to_vector() * scale;
    const double dev = (moved.to_vector() - want).cwiseAbs().maxCoeff();
    out.push_back(make_report("L_R_trick", params, dev, tol));
  }
  return out;
}

RealMatrix v_matrix(const Partition& shape, const Composition& mu, bool perturb) {
  RealMatrix v = cached_v_block(shape, mu)->matrix;
  if (perturb && v.size() > 0) v(0, 0) += 1e-3;
  return v;
}

std::vector<CheckReport> projector_checks(int n, double tol, bool perturb) {
  std::vector<CheckReport> out;
  for (const Partition& shape : enumerate_partitions(n, n))
    for (const Composition& mu : enumerate_compositions(n)) {
      const RealMatrix v = v_matrix(shape, mu, perturb);
      const ComplexMatrix proj = young_projector(shape, mu);
      const ComplexMatrix vv = (v * v.transpose()).cast<cplx>();
      double dev = max_abs_diff(proj, vv);
      const int rank = hermitian_rank(proj);
      const std::int64_t kos = kostka(shape, mu);
      if (rank != kos || v.cols() != kos) dev = std::max(dev, 1.0);
      out.push_back(make_report("Pi_proj", {{"shape", shape.str()}, {"mu", vec_str(mu.parts())}}, dev, tol,
                                "rank " + std::to_string(rank) + " kostka " + std::to_string(kos)));
    }
  return out;
}

std::vector<CheckReport> overlap_checks(int n, int d, double tol, bool perturb) {
  std::vector<CheckReport> out;
  for (const Partition& shape : enumerate_partitions(n, d)) {
    for (const WeightStep& st : weight_steps(n, d)) {
      const std::vector<GTPattern> from = enumerate_gt(shape, st.w);
      const std::vector<GTPattern> to = enumerate_gt(shape, st.lowered);
      if (from.empty() || to.empty()) continue;
      const Composition mu = st.w.split().first;
      const Composition mu2 = st.lowered.split().first;
      const RealMatrix v = v_matrix(shape, mu, perturb);
      const RealMatrix v2 = v_matrix(shape, mu2, perturb);
      const auto vb = cached_v_block(shape, mu);
      const auto vb2 = cached_v_block(shape, mu2);
      const double scale = std::sqrt(static_cast<double>(st.w(st.k - 1)) * (st.w(st.k) + 1));
      double dev = 0.0;
      int zeros = 0;
      for (const GTPattern& m : from) {
        const int c = vb->column(compress_gt(m).first);
        for (const GTPattern& m2 : to) {
          const int c2 = vb2->column(compress_gt(m2).first);
          const double got = scale * v2.col(c2).dot(v.col(c));
          double want = 0.0;
          bool related = false;
          for (int j = 1; j <= st.k - 1 && !related; ++j) {
            GTPattern lowered = m;
            lowered.at(st.k - 1, j) -= 1;
            if (lowered == m2) {
              related = true;
              want = gamma_minus(m, st.k, j);
            }
          }
          if (!related) ++zeros;
          dev = std::max(dev, std::abs(got - want));
        }
      }
      out.push_back(make_report("overlap", {{"shape", shape.str()}, {"w", vec_str(st.w.entries())}, {"k", std::to_string(st.k)}},
                                dev, tol, std::to_string(zeros) + " zero cases"));
    }
  }
  return out;
}

}  // namespace

std::vector<CheckReport> lemma_suite(int n, int d, double tol, bool perturb) {
  if (n < 1 || d < 1) throw std::invalid_argument("lemma_suite: n and d must be positive");
  std::vector<CheckReport> out;
  auto append = [&out](std::vector<CheckReport> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  append(gor_checks(n, tol));
  append(twirl_checks(n, tol));
  append(subgroup_checks(n, d, tol));
  append(projector_checks(n, tol, perturb));
  append(overlap_checks(n, d, tol, perturb));
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return out;
}

namespace {

bool interlaces(const std::vector<int>& upper, const std::vector<int>& lower) {
  if (lower.size() + 1 != upper.size()) return false;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i] || lower[i] < upper[i + 1]) return false;
  return true;
}

void rows_between(const std::vector<int>& upper, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const std::size_t i = cur.size();
  if (i + 1 == upper.size()) {
    out.push_back(cur);
    return;
  }
  for (int v = upper[i + 1]; v <= upper[i]; ++v) {
    cur.push_back(v);
    rows_between(upper, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CheckReport check_rw_padding(int max_size, int max_depth, double tol) {
  double dev = 0.0;
  int count = 0;
  for (int d = 1; d <= max_depth; ++d)
    for (int size = 0; size <= max_size; ++size)
      for (const Partition& shape : enumerate_partitions(size, d)) {
        const std::vector<int> top = shape.padded(d);
        std::vector<int> top_pad = top;
        top_pad.push_back(0);
        for (int i = 1; i <= d; ++i) {
          std::vector<int> out_top = top;
          ++out_top[i - 1];
          if (i > 1 && out_top[i - 1] > out_top[i - 2]) continue;
          std::vector<std::vector<int>> mids;
          std::vector<int> cur;
          rows_between(out_top, cur, mids);
          for (const auto& mid : mids) {
            std::vector<int> mid_pad = mid;
            mid_pad.push_back(0);
            for (int j = 0; j <= d - 1; ++j) {
              std::vector<int> in_mid = mid;
              if (j >= 1) --in_mid[j - 1];
              if (!interlaces(top, in_mid)) continue;
              const double a = rw_entry(top, mid, i, j);
              const double b = rw_entry(top_pad, mid_pad, i, j);
              dev = std::max(dev, std::abs(a - b));
              ++count;
            }
          }
        }
      }
  return make_report("rw_padding", {{"max_size", std::to_string(max_size)}, {"max_depth", std::to_string(max_depth)}},
                     dev, tol, std::to_string(count) + " entries");
}

CheckReport check_cascade_padding(int n, int small_depth, int large_depth, double tol) {
  if (large_depth < small_depth) throw std::invalid_argument("check_cascade_padding: large depth below small depth");
  double dev = 0.0;
  const std::size_t total = checked_dimension(n, small_depth);
  CouplingCache small_cache, large_cache;
  for (std::size_t s = 0; s < total; ++s) {
    const Ditstring x = string_at(s, n, small_depth);
    const CascadeState a = run_cascade(x, small_depth, nullptr, &small_cache);
    const CascadeState b = run_cascade(x, large_depth, nullptr, &large_cache);
    std::set<std::pair<std::vector<int>, GTPattern>> seen;
    for (const auto& [key, amp] : a.amplitudes) {
      auto padded_key = std::make_pair(key.first, pad_gt(key.second, large_depth));
      auto it = b.amplitudes.find(padded_key);
      dev = std::max(dev, std::abs(amp - (it == b.amplitudes.end() ? 0.0 : it->second)));
      seen.insert(std::move(padded_key));
    }
    for (const auto& [key, amp] : b.amplitudes)
      if (!seen.count(key)) dev = std::max(dev, std::abs(amp));
  }
  return make_report("cascade_padding",
                     {{"n", std::to_string(n)}, {"small", std::to_string(small_depth)}, {"large", std::to_string(large_depth)}},
                     dev, tol);
}

CheckReport check_preprocessing(int n, int d, double tol) {
  const std::size_t total = checked_dimension(n, d);
  double dev = 0.0;
  std::string notes;
  for (std::size_t s = 0; s < total; ++s) {
    const Ditstring x = string_at(s, n, d);
    RegisterState st;
    try {
      st = run_preprocessing(x, d);
    } catch (const std::logic_error& e) {
      dev = std::max(dev, 1.0);
      if (notes.empty()) notes = e.what();
      continue;
    }
    const PreprocessResult pr = preprocess(x);
    const GroupAlgebraElement cv = coset_vector(x);
    std::vector<int> want_p = pr.p.values(), want_mu = pr.mu.parts();
    want_p.resize(n, 0);
    want_mu.resize(n, 0);
    if (st.amplitudes.size() != cv.terms().size()) dev = std::max(dev, 1.0);
    for (const auto& [r, amp] : st.amplitudes) {
      const bool clean = r.pos == 0 && r.uniq == 0 && r.step == n &&
                         std::all_of(r.x.begin(), r.x.end(), [](int v) { return v == 0; });
      if (!clean || r.p != want_p || r.mu != want_mu) dev = std::max(dev, 1.0);
      const Permutation sigma = Permutation(r.coset).inverse();
      dev = std::max(dev, std::abs(cv.coefficient(sigma) - amp));
    }
  }
  return make_report("preprocessing", {{"n", std::to_string(n)}, {"d", std::to_string(d)}}, dev, tol, notes);
}

SchurTransform perturbed(const SchurTransform& u) {
  SchurTransform out = u;
  for (WeightBlock& b : out.blocks())
    for (Eigen::Index c = 0; c < b.block.cols(); ++c)
      for (Eigen::Index r = 0; r < b.block.rows(); ++r)
        if (std::abs(b.block(r, c)) > 1e-6) {
          b.block(r, c) *= 1.001;
          return out;
        }
  return out;
}

}  // namespace schur
