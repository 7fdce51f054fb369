#include "foliage/lefschetz.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <map>

#include "foliage/cohomology.hpp"
#include "foliage/exterior.hpp"

namespace foliage {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

std::vector<int> degree_indices(int n, int d) {
  std::vector<int> out;
  for (const CoframeWord& w : fiber_words(n, Component::degree(d))) out.push_back(int(w.mask()));
  return out;
}

Mat sub(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

int numeric_rank(const Mat& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv[0]);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++r;
  return r;
}

// Fiber matrix of L^k; constant coefficients make the mode irrelevant.
Mat l_power_block(const FoliationModel& model, int k) {
  return fiber_block(
      model,
      [&](const BasicForm& a) {
        BasicForm x = a;
        for (int i = 0; i < k; ++i) x = lefschetz_l(model, x);
        return x;
      },
      ModeVector{});
}

}  // namespace

BasicForm counting_operator(const FoliationModel& model, const BasicForm& a) {
  BasicForm out(a.n(), a.dims());
  for (const auto& [w, f] : a.terms()) out.add(w, f * Complex(double(model.n() - w.degree())));
  return out;
}

Sl2Report sl2_check(const FoliationModel& model, int K) {
  if (!model.flags().hermitian) throw CapabilityError("sl2_check needs the hermitian flag");
  const Component all = Component::all();
  const SparseMatrix L = assemble(model, OperatorKind::L, K, all).matrix;
  const SparseMatrix Lam = assemble(model, OperatorKind::Lambda, K, all).matrix;
  const SparseMatrix A =
      assemble_map(model, "A", [&](const BasicForm& a) { return counting_operator(model, a); }, K, all, all).matrix;
  auto rel = [](const SparseMatrix& d, const SparseMatrix& ref) {
    const double r = ref.norm();
    return r == 0.0 ? d.norm() : d.norm() / r;
  };
  Sl2Report rep;
  rep.K = K;
  rep.lambda_l = rel(SparseMatrix(Lam * L - L * Lam - A), A);
  rep.counting_lambda = rel(SparseMatrix(A * Lam - Lam * A - 2.0 * Lam), Lam);
  rep.counting_l = rel(SparseMatrix(A * L - L * A + 2.0 * L), L);
  return rep;
}

PrimitiveDecomposition primitive_decompose(const FoliationModel& model, const BasicForm& a) {
  if (!model.flags().hermitian) throw CapabilityError("primitive_decompose needs the hermitian flag");
  const int n = model.n();
  PrimitiveDecomposition out;
  out.input = a;
  auto deg = a.pure_degree();
  if (!deg && !a.is_zero()) throw ArgumentError("primitive_decompose: input must have pure degree");
  const int r = deg.value_or(0);
  if (r > 2 * n) throw ArgumentError("primitive_decompose: degree exceeds 2n");
  out.degree = r;
  // L^k is injective on primitive (r-2k)-forms exactly when k >= r - n.
  const int kmin = std::max(0, r - n);
  const int kmax = r / 2;
  const auto rows = degree_indices(n, r);
  const Mat lam = fiber_block(model, [&](const BasicForm& x) { return lambda_dual(model, x); }, ModeVector{});

  // Unknowns: p_k on degree r - 2k. Equations: sum L^k p_k = a, Lambda p_k = 0.
  std::vector<std::vector<int>> cols(kmax + 1);
  std::vector<int> offset(kmax + 2, 0);
  for (int k = 0; k <= kmax; ++k) {
    if (k >= kmin) cols[k] = degree_indices(n, r - 2 * k);
    offset[k + 1] = offset[k] + int(cols[k].size());
  }
  std::vector<std::vector<int>> lam_rows(kmax + 1);
  int eq_rows = int(rows.size());
  std::vector<int> eq_offset(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    eq_offset[k] = eq_rows;
    lam_rows[k] = (k >= kmin && r - 2 * k - 2 >= 0) ? degree_indices(n, r - 2 * k - 2) : std::vector<int>{};
    eq_rows += int(lam_rows[k].size());
  }
  Mat sys = Mat::Zero(eq_rows, offset[kmax + 1]);
  for (int k = kmin; k <= kmax; ++k) {
    sys.block(0, offset[k], rows.size(), cols[k].size()) = sub(l_power_block(model, k), rows, cols[k]);
    if (!lam_rows[k].empty())
      sys.block(eq_offset[k], offset[k], lam_rows[k].size(), cols[k].size()) = sub(lam, lam_rows[k], cols[k]);
  }
  Eigen::ColPivHouseholderQR<Mat> qr(sys);
  qr.setThreshold(1e-12);
  if (qr.rank() != sys.cols())
    throw ConsistencyError("primitive decomposition system is singular (rank " + std::to_string(qr.rank()) + " of " +
                           std::to_string(sys.cols()) + ")");

  std::map<ModeVector, Vec> by_mode;
  for (const auto& [w, f] : a.terms())
    for (const auto& [m, c] : f.terms()) {
      auto& v = by_mode.try_emplace(m, Vec::Zero(eq_rows)).first->second;
      v[std::find(rows.begin(), rows.end(), int(w.mask())) - rows.begin()] = c;
    }
  for (int k = kmin; k <= kmax; ++k) out.components.emplace_back(k, BasicForm(n, model.dims()));
  for (const auto& [m, v] : by_mode) {
    Vec x = qr.solve(v);
    for (int k = kmin; k <= kmax; ++k)
      for (std::size_t j = 0; j < cols[k].size(); ++j)
        out.components[k - kmin].second.add(CoframeWord(n, std::uint32_t(cols[k][j])), m, x[offset[k] + j]);
  }
  BasicForm sum(n, model.dims());
  for (const auto& [k, p] : out.components) {
    BasicForm x = p;
    for (int i = 0; i < k; ++i) x = lefschetz_l(model, x);
    sum += x;
  }
  const double an = norm(a);
  out.residual = an == 0.0 ? norm(sum) : norm(sum - a) / an;
  double prim = 0.0;
  for (const auto& [k, p] : out.components) prim = std::max(prim, norm(lambda_dual(model, p)));
  out.residual = std::max(out.residual, an == 0.0 ? prim : prim / an);
  if (out.residual > 1e-10)
    throw ConsistencyError("primitive decomposition residual " + std::to_string(out.residual) + " exceeds 1e-10");
  return out;
}

LefschetzRank lefschetz_rank(const FoliationModel& model, int r, int k, int K, LefschetzDomain on,
                             const Thresholds& th) {
  const int n = model.n();
  if (r < 0 || k < 0 || r > 2 * n) throw ArgumentError("lefschetz_rank: degree out of range");
  LefschetzRank out;
  const int target = r + 2 * k;
  if (on == LefschetzDomain::forms) {
    if (!model.flags().hermitian) throw CapabilityError("lefschetz_rank needs the hermitian flag");
    const auto cols = degree_indices(n, r);
    const auto rows = target <= 2 * n ? degree_indices(n, target) : std::vector<int>{};
    out.domain_dim = int(cols.size());
    out.codomain_dim = int(rows.size());
    out.rank = rows.empty() ? 0 : numeric_rank(sub(l_power_block(model, k), rows, cols), 1e-12);
  } else {
    if (!model.flags().kahler)
      throw CapabilityError("lefschetz_rank on cohomology needs the kahler flag, absent on " + model.id());
    HarmonicSpace src = harmonic_space(model, OperatorKind::Delta_B, Component::degree(r), K, th.kernel_tol, 0);
    out.domain_dim = src.dim;
    std::vector<BasicForm> dst;
    if (target <= 2 * n)
      dst = harmonic_space(model, OperatorKind::Delta_B, Component::degree(target), K, th.kernel_tol, 0).basis;
    out.codomain_dim = int(dst.size());
    Mat m = Mat::Zero(dst.size(), src.basis.size());
    for (std::size_t j = 0; j < src.basis.size(); ++j) {
      BasicForm x = src.basis[j];
      for (int i = 0; i < k; ++i) x = lefschetz_l(model, x);
      for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = inner_product(x, dst[i]);
    }
    out.rank = numeric_rank(m, th.kernel_tol);
  }
  out.injective = out.rank == out.domain_dim;
  out.surjective = out.rank == out.codomain_dim;
  return out;
}

}  // namespace foliage
