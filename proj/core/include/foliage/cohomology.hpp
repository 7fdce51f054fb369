#pragma once

#include <string>
#include <vector>

#include "foliage/assembly.hpp"
#include "foliage/config.hpp"

namespace foliage {

struct HarmonicSpace {
  std::string model_id;
  OperatorKind kind = OperatorKind::Delta_B;
  Component component = Component::all();
  int K = 0;
  double tol = 0.0;
  int dim = 0;
  std::vector<BasicForm> basis;
  int K_next = 0;
  int dim_next = 0;
  bool converged = false;
  int rank_nullity_dim = -1;  // -1 where the complex does not apply
  double max_residual = 0.0;  // max |Lap h| relative to the block scale
};

// Kernel of a Hermitian Laplacian built from assembled differentials as
// D^H D + D D^H. Supported kinds: Delta_B, Box_B, Boxbar_B, Delta_d_c and
// Delta_ddbar / Delta_BC (both use the Bott-Chern completion
// Delta_ddbar + del* del + delbar* delbar, whose kernel is finite for every n).
// Delta_B on a bidegree component gives ker Delta_B ∩ Omega^{r,s}.
HarmonicSpace harmonic_space(const FoliationModel& model, OperatorKind kind, const Component& component, int K,
                             double tol, int stability_step = 2);

struct ClassTest {
  bool trivial = false;
  double projection_norm = 0.0;  // harmonic projection
  double residual = 0.0;         // least-squares exactness residual (absolute)
  double relative_residual = 0.0;
  double form_norm = 0.0;
  BasicForm projection;
};

ClassTest alvarez_class_trivial(const FoliationModel& model, int K, const Thresholds& th = {});
ClassTest eta_class_trivial(const FoliationModel& model, int K, const Thresholds& th = {});

// Automorphic means the flow of kappa^# preserves J, measured as [L_{kappa^#}, J] on
// forms with the Lie derivative realized by Cartan's formula. On integrable models
// this is equivalent to {delbar_B, H10⌟} = 0 and that equivalence is checked.
struct AutomorphyTest {
  bool automorphic = false;
  double residual_flow = 0.0;       // [L_{kappa^#}, J], relative to its terms
  double residual_contract = 0.0;   // {delbar_B, H10⌟}, relative to its terms
  double residual_laplacian = 0.0;  // Delta_B - Box_B - Boxbar_B, relative to its terms
  double residual_bidegree = 0.0;   // bidegree-changing part of Delta_B
  bool equivalence_checked = false;
  bool equivalence_holds = true;
  BasicForm probe;                  // {delbar_B, H10⌟} kappa^{1,0}
};

AutomorphyTest automorphic_test(const FoliationModel& model, int K, const Thresholds& th = {});

struct CheckEntry {
  std::string id;
  bool pass = true;
  double value = 0.0;
  std::string note;
};

struct CohomologyReport {
  std::string model_id;
  int K = 0;
  Thresholds thresholds;
  ModelFlags model_flags;
  std::vector<int> betti;                          // h_B^j
  std::vector<std::vector<int>> hodge;             // h^{r,s} = dim ker Boxbar_B
  std::vector<int> ddbar;                          // h_{del delbar}^{j,j}
  std::vector<std::vector<int>> harmonic_types;    // dim ker Delta_B ∩ Omega^{r,s}
  std::vector<int> betti_next;
  std::vector<std::vector<int>> hodge_next;
  std::vector<int> ddbar_next;
  bool converged = true;
  std::vector<std::string> unconverged;
  bool taut = false;
  bool eta_trivial = false;
  bool automorphic = false;
  ClassTest xi;
  ClassTest eta;
  AutomorphyTest automorphy;
  std::vector<CheckEntry> checks;
};

CohomologyReport betti_table(const FoliationModel& model, int K, const Thresholds& th = {});

struct HodgeDiamondReport {
  std::string model_id;
  int K = 0;
  bool qualifies = false;  // Kahler and automorphic
  std::vector<std::vector<int>> harmonic_types;
  std::vector<std::vector<int>> dolbeault;
  std::vector<int> betti;
  bool types_symmetric = false;
  bool dolbeault_symmetric = false;
  bool types_sum_to_betti = false;
  bool dolbeault_sum_to_betti = false;
  bool odd_betti_even = false;
  std::vector<std::string> asymmetries;
};

HodgeDiamondReport hodge_diamond_report(const FoliationModel& model, int K, const Thresholds& th = {});

struct DdcResult {
  bool hypotheses = false;  // Kahler and taut
  bool closed = false;
  bool dc_exact = false;
  bool solvable = false;
  double closed_residual = 0.0;
  double dc_exact_residual = 0.0;
  double residual = 0.0;  // relative |dd_c beta - alpha| / |alpha|
  BasicForm beta;
};

DdcResult ddc_solve(const FoliationModel& model, const BasicForm& alpha, int K, double tol);

// Per-mode blocks of d_B, del_B, delbar_B on the whole fiber.
struct ModeBlocks {
  Eigen::MatrixXcd d, del, delbar;
};
ModeBlocks mode_blocks(const FoliationModel& model, const ModeVector& m);

}  // namespace foliage
