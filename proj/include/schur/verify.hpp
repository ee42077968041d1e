#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schur/combinat.hpp"
#include "schur/linalg.hpp"
#include "schur/recoupling.hpp"
#include "schur/schur_basis.hpp"

namespace schur {

inline constexpr double kExactTol = 1e-10;
inline constexpr double kChainTol = 1e-9;

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  double deviation = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string notes;

  std::string str() const;
};

// pass iff deviation is finite and <= tol.
CheckReport make_report(std::string name, std::vector<std::pair<std::string, std::string>> params, double deviation,
                        double tol, std::string notes = {});
bool all_pass(const std::vector<CheckReport>& reports);

// A finite-dimensional gl_d module given by its adjacent generator matrices.
struct RepSpace {
  int d = 0;
  std::vector<std::vector<int>> weights;      // weight of each basis vector
  std::map<std::pair<int, int>, RealMatrix> action;  // keys from adjacent_generators(d)

  int dim() const { return static_cast<int>(weights.size()); }
};

RepSpace irrep_space(const Partition& shape, int d);
RepSpace defining_space(int d);
RepSpace tensor_space(const RepSpace& a, const RepSpace& b);
// Unique vector of the given weight killed by every raising generator; sign
// fixed so its first nonzero entry is positive. Throws if not unique.
Eigen::VectorXd highest_weight_vector(const RepSpace& space, const std::vector<int>& weight);
// Columns: image of each GT(shape, d) basis vector, generated from the
// highest-weight vector by lowering.
RealMatrix embed_irrep(const RepSpace& space, const Partition& shape, const Eigen::VectorXd& top);

// Pieri CG built from highest-weight vectors, independent of rw_entry.
CGBlock cg_block_oracle(const Partition& shape, int d);
CheckReport compare_cg_with_oracle(const Partition& shape, int d, double tol = kChainTol);

// |overlap| of fusion-tree vectors in W_base (x) W_(k-1) (x) W_box against
// f_left / f_right, for every base and k with nu/base a horizontal strip.
CheckReport check_fsymbols_against_trees(const Partition& nu, double tol = kChainTol);

CheckReport check_unitarity(const SchurTransform& u, const std::string& label, double tol = kExactTol);

enum class Side { Sym, Gl };
// Blockwise: never forms d^n x d^n matrices.
CheckReport check_schur_equivariance(const SchurTransform& u, Side side, const std::string& label, double tol);
// Dense version for arbitrary square matrices (used for negative controls).
CheckReport check_schur_equivariance(const ComplexMatrix& u, int n, int d, Side side, const std::string& label,
                                     double tol);

struct PipelineComparison {
  CheckReport report;
  std::map<Partition, int> signs;  // observed per-shape sign, +1 or -1
};
// D = A B^dagger must be a signed identity on each shape block.
PipelineComparison compare_pipelines(const SchurTransform& a, const SchurTransform& b, const std::string& label,
                                     double tol = kExactTol);
PipelineComparison compare_pipelines(int n, int d, double tol = kExactTol);

// Group-algebra and V lemmas. perturb adds 1e-3 to one V entry (negative control).
std::vector<CheckReport> lemma_suite(int n, int d, double tol = kChainTol, bool perturb = false);

// rw_entry unchanged when top and mid rows get an extra zero.
CheckReport check_rw_padding(int max_size, int max_depth, double tol = kExactTol);
// Depth-small cascade equals the depth-large one on padded patterns, all strings over [small]^n.
CheckReport check_cascade_padding(int n, int small_depth, int large_depth, double tol = kExactTol);
// Composed preprocessing subroutines against preprocess/coset_vector for all x in [d]^n.
CheckReport check_preprocessing(int n, int d, double tol = kExactTol);

// Copy with one amplitude scaled by 1.001.
SchurTransform perturbed(const SchurTransform& u);

}  // namespace schur
