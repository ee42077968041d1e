// One line per acceptance criterion; exit status 0 iff all nine pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schur/bch.hpp"
#include "schur/krovi.hpp"
#include "schur/prepcirc.hpp"
#include "schur/verify.hpp"

using namespace schur;

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kSymTol = 1e-10;
constexpr double kGlTol = 1e-9;
constexpr double kLemmaTol = 1e-9;
constexpr double kCompareTol = 1e-10;
constexpr double kOracleTol = 1e-9;
constexpr double kPaddingTol = 1e-10;
constexpr double kPrepTol = 1e-12;
constexpr double kUnitaryBudgetSeconds = 300.0;
constexpr std::size_t kUnitaryMaxDim = 4096;
constexpr int kUnitaryMaxD = 64;
constexpr int kUnitaryMaxNAtOne = 12;
constexpr std::size_t kPrepMaxDim = 256;
constexpr int kPrepMaxNAtOne = 8;  // all-ones string has an n!-term coset state
constexpr int kLemmaMaxN = 5;

const std::vector<std::pair<int, int>> kEquivarianceSet{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// d = 1 admits every n; max_n_at_one caps that line.
std::vector<std::pair<int, int>> sizes_up_to(std::size_t max_dim, int max_d, int max_n_at_one) {
  std::vector<std::pair<int, int>> out;
  for (int d = 1; d <= max_d; ++d)
    for (int n = 1;; ++n) {
      std::size_t dim = 1;
      for (int i = 0; i < n; ++i) dim *= static_cast<std::size_t>(d);
      if (dim > max_dim || (d == 1 && n > max_n_at_one)) break;
      out.emplace_back(n, d);
    }
  return out;
}

SchurTransform build(int method, int n, int d) {
  if (method == 0) return schur_unitary_krovi(n, d);
  if (method == 1) return schur_unitary_bch(n, d);
  return schur_unitary_bch_highdim(n, d);
}

const char* kMethodNames[] = {"krovi", "bch", "bch-highdim"};

Outcome unitarity() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::string where;
  const auto sizes = sizes_up_to(kUnitaryMaxDim, kUnitaryMaxD, kUnitaryMaxNAtOne);
  for (auto [n, d] : sizes)
    for (int m = 0; m < 3; ++m) {
      const double dev = build(m, n, d).unitarity_deviation();
      if (!(dev <= worst)) {
        worst = dev;
        where = std::string(kMethodNames[m]) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
      }
    }
  const double elapsed = seconds_since(t0);
  o.pass = worst <= kUnitaryTol && elapsed <= kUnitaryBudgetSeconds;
  o.detail = std::to_string(sizes.size()) + " sizes x 3 pipelines, max dev " + sci(worst) + " at " + where + ", " +
             std::to_string(static_cast<int>(elapsed)) + " s";
  return o;
}

Outcome equivariance(Side side, double tol) {
  Outcome o;
  double worst = 0.0;
  for (auto [n, d] : kEquivarianceSet)
    for (int m = 0; m < 3; ++m) {
      const CheckReport r = check_schur_equivariance(build(m, n, d), side, kMethodNames[m], tol);
      worst = std::max(worst, r.deviation);
      if (!r.pass) {
        o.pass = false;
        o.detail += r.str() + "; ";
      }
    }
  o.detail += "max dev " + sci(worst) + " over " + std::to_string(kEquivarianceSet.size() * 3) + " transforms";
  return o;
}

Outcome lemmas() {
  Outcome o;
  int total = 0, zero_cases = 0;
  for (int n = 1; n <= kLemmaMaxN; ++n)
    for (const CheckReport& r : lemma_suite(n, 3, kLemmaTol)) {
      ++total;
      if (r.name == "overlap") zero_cases += std::stoi(r.notes);
      if (!r.pass) {
        o.pass = false;
        o.detail += r.str() + "; ";
      }
    }
  const auto control = lemma_suite(3, 3, kLemmaTol, true);
  const auto failed = std::count_if(control.begin(), control.end(), [](const CheckReport& r) { return !r.pass; });
  if (failed == 0) o.pass = false;
  o.detail += std::to_string(total) + " lemma checks for n<=" + std::to_string(kLemmaMaxN) + " (" +
              std::to_string(zero_cases) + " vanishing overlaps)" +
              ", perturbed V fails " + std::to_string(failed) + " checks";
  return o;
}

Outcome comparison() {
  Outcome o;
  double worst = 0.0;
  std::set<int> signs;
  for (auto [n, d] : kEquivarianceSet) {
    const SchurTransform k = schur_unitary_krovi(n, d);
    const SchurTransform b = schur_unitary_bch(n, d);
    const SchurTransform h = schur_unitary_bch_highdim(n, d);
    for (const PipelineComparison& c :
         {compare_pipelines(k, b, "krovi/bch", kCompareTol), compare_pipelines(h, b, "bch-highdim/bch", kCompareTol)}) {
      worst = std::max(worst, c.report.deviation);
      for (const auto& [shape, s] : c.signs) signs.insert(s);
      if (!c.report.pass) {
        o.pass = false;
        o.detail += c.report.str() + "; ";
      }
    }
  }
  std::string seen;
  for (int s : signs) seen += (seen.empty() ? "" : ",") + std::string(s > 0 ? "+1" : "-1");
  o.detail += "max off-scalar dev " + sci(worst) + ", observed signs {" + seen + "}";
  return o;
}

Outcome worked_values() {
  Outcome o;
  std::vector<std::string> bad;
  const GTPattern big({{0}, {2, 0}, {2, 0, 0}, {2, 1, 0, 0}, {3, 2, 0, 0, 0}});
  const auto [small, p] = compress_gt(big);
  if (!(small == GTPattern({{2}, {2, 1}, {3, 2, 0}}) && p.values() == std::vector<int>{2, 4, 5} &&
        decompress_gt(small, p, 5) == big))
    bad.push_back("compression pair");

  const PreprocessResult pr = preprocess({1, 2, 1, 5, 2});
  if (!(pr.p.values() == std::vector<int>{1, 2, 5} && pr.mu.parts() == std::vector<int>{2, 2, 1} &&
        pr.t == Permutation({1, 3, 2, 5, 4})))
    bad.push_back("preprocess (1,2,1,5,2)");

  if (v_entry(Partition({3, 2}), Composition({2, 1, 2}), StandardTableau::from_word({1, 1, 1, 2, 2}), small) != 0.0)
    bad.push_back("v_entry example");

  const CompressedString cs = compress_string({9, 2, 5, 9, 11, 2});
  if (!(cs.e == std::vector<int>{3, 1, 2, 3, 4, 1} && cs.alphabet().values() == std::vector<int>{2, 5, 9, 11}))
    bad.push_back("string encoding");

  int shapes = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& shape : enumerate_partitions(n, n)) {
      ++shapes;
      const VBlock v = v_block(shape, Composition(std::vector<int>(n, 1)));
      const IrrepData& irrep = irrep_table(n).irrep(shape);
      bool ok = v.matrix.rows() == v.matrix.cols();
      for (int s = 0; ok && s < irrep.dim(); ++s)
        for (int c = 0; c < v.kostka(); ++c) {
          bool same = true;
          for (int k = 1; k <= n; ++k) same = same && v.columns[c].level(k) == irrep.basis[s].prefix_shape(k);
          if (v.matrix(s, c) != (same ? 1.0 : 0.0)) ok = false;
        }
      if (!ok) bad.push_back("V identity for " + shape.str());
    }
  o.pass = bad.empty();
  for (const auto& b : bad) o.detail += b + " wrong; ";
  o.detail += "5 worked values, V = I checked on " + std::to_string(shapes) + " shapes";
  return o;
}

Outcome counting() {
  Outcome o;
  for (int n = 0; n <= 6; ++n)
    for (int d = 1; d <= 5; ++d) {
      std::int64_t total = 0, want = 1;
      for (int i = 0; i < n; ++i) want *= d;
      for (const auto& shape : enumerate_partitions(n, d))
        total += static_cast<std::int64_t>(enumerate_syt(shape).size()) *
                 static_cast<std::int64_t>(enumerate_gt(shape, d).size());
      if (total != want) {
        o.pass = false;
        o.detail += "dimension sum n=" + std::to_string(n) + " d=" + std::to_string(d) + "; ";
      }
    }
  for (int n = 0; n <= 7; ++n) {
    std::int64_t total = 0;
    for (const auto& shape : enumerate_partitions(n, std::max(n, 1))) {
      const auto k = static_cast<std::int64_t>(enumerate_syt(shape).size());
      total += k * k;
    }
    if (total != factorial(n)) {
      o.pass = false;
      o.detail += "square sum n=" + std::to_string(n) + "; ";
    }
  }
  o.detail += "dimension sums n<=6 d<=5, square sums n<=7";
  return o;
}

Outcome oracles() {
  Outcome o;
  int blocks = 0;
  double worst = 0.0;
  for (int n = 0; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (const auto& shape : enumerate_partitions(n, d)) {
        const CheckReport r = compare_cg_with_oracle(shape, d, kOracleTol);
        ++blocks;
        worst = std::max(worst, r.deviation);
        if (!r.pass) {
          o.pass = false;
          o.detail += r.str() + "; ";
        }
      }
  for (const CheckReport& r : {check_rw_padding(5, 5, kPaddingTol), check_cascade_padding(4, 2, 4, kPaddingTol),
                               check_cascade_padding(3, 3, 5, kPaddingTol)})
    if (!r.pass) {
      o.pass = false;
      o.detail += r.str() + "; ";
    }
  o.detail += std::to_string(blocks) + " CG blocks, max dev " + sci(worst) + ", padding checks run";
  return o;
}

Outcome circuit() {
  Outcome o;
  const auto sizes = sizes_up_to(kPrepMaxDim, static_cast<int>(kPrepMaxDim), kPrepMaxNAtOne);
  for (auto [n, d] : sizes) {
    const CheckReport r = check_preprocessing(n, d, kPrepTol);
    if (!r.pass) {
      o.pass = false;
      o.detail += r.str() + "; ";
    }
  }
  std::set<std::vector<int>> codes;
  bool roundtrip = true;
  for (const auto& p : all_permutations(5)) {
    const auto digits = encode_perm(p);
    codes.insert(digits);
    roundtrip = roundtrip && decode_perm(digits, 5) == p;
  }
  if (codes.size() != 120 || !roundtrip) {
    o.pass = false;
    o.detail += "encode_perm not bijective on S5; ";
  }
  o.detail += std::to_string(sizes.size()) + " (n,d) sizes with d^n<=256, encode_perm on S5";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "unitarity of all pipelines, d^n <= 4096", unitarity},
      {2, "S_n equivariance", [] { return equivariance(Side::Sym, kSymTol); }},
      {3, "gl_d equivariance", [] { return equivariance(Side::Gl, kGlTol); }},
      {4, "group algebra and V lemmas, negative control fails", lemmas},
      {5, "pipelines agree up to a sign per shape", comparison},
      {6, "worked values", worked_values},
      {7, "counting identities", counting},
      {8, "CG against highest-weight oracle, padding invariance", oracles},
      {9, "preparation circuit semantics", circuit},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d %s: %s [%s] (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
