#include "foliage/cohomology.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>

#include "foliage/exterior.hpp"
#include "foliage/parallel.hpp"

namespace foliage {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

std::vector<int> indices(int n, const Component& c) {
  std::vector<int> out;
  for (const CoframeWord& w : fiber_words(n, c)) out.push_back(int(w.mask()));
  return out;
}

Mat sub(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

std::vector<int> all_indices(int n) {
  std::vector<int> out(1 << (2 * n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = int(i);
  return out;
}

int numeric_rank(const Mat& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv.size() ? sv[0] : 0.0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++r;
  return r;
}

// Orthonormal basis of {x : m x = 0}; scale sets the relative cutoff.
Mat null_space(const Mat& m, double tol, double scale) {
  if (m.cols() == 0) return Mat(0, 0);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, scale);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

Mat c_diag(int n, bool inverse) {
  const int size = 1 << (2 * n);
  Mat c = Mat::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    CoframeWord w(n, std::uint32_t(i));
    int k = w.holo_degree() - w.anti_degree();
    c(i, i) = i_pow(inverse ? -k : k);
  }
  return c;
}

bool spectral_kind(OperatorKind k) {
  using K = OperatorKind;
  return k == K::Delta_B || k == K::Box_B || k == K::Boxbar_B || k == K::Delta_d_c || k == K::Delta_ddbar ||
         k == K::Delta_BC;
}

Mat spectral_laplacian(const FoliationModel& model, const ModeBlocks& b, OperatorKind kind) {
  using K = OperatorKind;
  auto lap = [](const Mat& d) -> Mat { return d.adjoint() * d + d * d.adjoint(); };
  switch (kind) {
    case K::Delta_B: return lap(b.d);
    case K::Box_B: return lap(b.del);
    case K::Boxbar_B: return lap(b.delbar);
    case K::Delta_d_c: return lap(c_diag(model.n(), true) * b.d * c_diag(model.n(), false));
    case K::Delta_ddbar:
    case K::Delta_BC: {
      Mat a = b.del * b.delbar;
      return lap(a) + b.del.adjoint() * b.del + b.delbar.adjoint() * b.delbar;
    }
    default: throw ArgumentError("harmonic_space: unsupported Laplacian kind " + to_string(kind));
  }
}

int max_abs(const ModeVector& m) {
  int b = 0;
  for (int x : m) b = std::max(b, std::abs(x));
  return b;
}

struct SpectralCache {
  std::vector<ModeVector> modes;
  std::vector<ModeBlocks> blocks;
};

SpectralCache build_cache(const FoliationModel& model, int K) {
  if (model.structure_bandwidth() > 0)
    throw CapabilityError("spectral kernels need constant structure coefficients; model " + model.id() +
                          " has mode-coupling structure equations");
  SpectralCache c;
  c.modes = truncated_modes(model.dims(), K);
  c.blocks.resize(c.modes.size());
  parallel_for(c.modes.size(), [&](std::size_t i) { c.blocks[i] = mode_blocks(model, c.modes[i]); });
  return c;
}

struct KernelCount {
  int dim = 0;
  int dim_next = 0;
  int rank_nullity = 0;
  bool rank_nullity_applies = true;
  double max_residual = 0.0;
  std::vector<BasicForm> basis;
};

// Rank-nullity count of the relevant complex at one mode, or -1.
int complex_count(const FoliationModel& model, const ModeBlocks& b, OperatorKind kind, const Component& c,
                  double tol) {
  using K = OperatorKind;
  const int n = model.n();
  const auto all = all_indices(n);
  auto cols = indices(n, c);
  if (kind == K::Delta_B || kind == K::Delta_d_c) {
    if (c.kind() != Component::Kind::degree) return -1;
    Mat d = kind == K::Delta_B ? b.d : Mat(c_diag(n, true) * b.d * c_diag(n, false));
    int kern = int(cols.size()) - numeric_rank(sub(d, all, cols), tol);
    int prev = c.deg() > 0 ? numeric_rank(sub(d, cols, indices(n, Component::degree(c.deg() - 1))), tol) : 0;
    return kern - prev;
  }
  if (!model.flags().integrable || c.kind() != Component::Kind::bidegree) return -1;
  const int r = c.r(), s = c.s();
  if (kind == K::Boxbar_B || kind == K::Box_B) {
    const Mat& d = kind == K::Boxbar_B ? b.delbar : b.del;
    int kern = int(cols.size()) - numeric_rank(sub(d, all, cols), tol);
    Component p = kind == K::Boxbar_B ? Component::bidegree(r, s - 1) : Component::bidegree(r - 1, s);
    int prev = (p.r() >= 0 && p.s() >= 0) ? numeric_rank(sub(d, cols, indices(n, p)), tol) : 0;
    return kern - prev;
  }
  if (kind == K::Delta_ddbar || kind == K::Delta_BC) {
    if (r != s) return -1;
    Mat stacked(2 * all.size(), cols.size());
    stacked << sub(b.del, all, cols), sub(b.delbar, all, cols);
    int kern = int(cols.size()) - numeric_rank(stacked, tol);
    int prev = r > 0 ? numeric_rank(sub(Mat(b.del * b.delbar), cols, indices(n, Component::bidegree(r - 1, r - 1))), tol)
                     : 0;
    return kern - prev;
  }
  return -1;
}

KernelCount count_kernel(const FoliationModel& model, const SpectralCache& cache, OperatorKind kind,
                         const Component& c, int K, double tol, bool want_basis) {
  KernelCount out;
  const int n = model.n();
  const auto all = all_indices(n);
  const auto cols = indices(n, c);
  std::vector<int> nullity(cache.modes.size(), 0), rn(cache.modes.size(), 0);
  std::vector<double> resid(cache.modes.size(), 0.0);
  std::vector<std::vector<BasicForm>> forms(cache.modes.size());
  parallel_for(cache.modes.size(), [&](std::size_t i) {
    const Mat lap = spectral_laplacian(model, cache.blocks[i], kind);
    const double scale = lap.size() ? Eigen::JacobiSVD<Mat>(lap).singularValues()[0] : 0.0;
    const Mat block = sub(lap, all, cols);
    const Mat ns = null_space(block, tol, scale);
    nullity[i] = int(ns.cols());
    rn[i] = complex_count(model, cache.blocks[i], kind, c, tol);
    if (ns.cols() > 0) resid[i] = (block * ns).colwise().norm().maxCoeff() / std::max(1.0, scale);
    if (want_basis && max_abs(cache.modes[i]) <= K)
      for (int k = 0; k < ns.cols(); ++k) {
        BasicForm h(n, model.dims());
        for (std::size_t j = 0; j < cols.size(); ++j)
          h.add(CoframeWord(n, std::uint32_t(cols[j])), cache.modes[i], ns(j, k));
        forms[i].push_back(std::move(h));
      }
  });
  for (std::size_t i = 0; i < cache.modes.size(); ++i) {
    const bool inside = max_abs(cache.modes[i]) <= K;
    out.dim_next += nullity[i];
    if (inside) {
      out.dim += nullity[i];
      out.max_residual = std::max(out.max_residual, resid[i]);
      if (rn[i] < 0)
        out.rank_nullity_applies = false;
      else
        out.rank_nullity += rn[i];
      for (auto& f : forms[i]) out.basis.push_back(std::move(f));
    }
  }
  return out;
}

HarmonicSpace make_space(const FoliationModel& model, const SpectralCache& cache, OperatorKind kind,
                         const Component& c, int K, double tol, int step, bool want_basis) {
  if (!spectral_kind(kind)) throw ArgumentError("harmonic_space: unsupported Laplacian kind " + to_string(kind));
  KernelCount kc = count_kernel(model, cache, kind, c, K, tol, want_basis);
  HarmonicSpace hs;
  hs.model_id = model.id();
  hs.kind = kind;
  hs.component = c;
  hs.K = K;
  hs.tol = tol;
  hs.dim = kc.dim;
  hs.basis = std::move(kc.basis);
  hs.K_next = K + step;
  hs.dim_next = kc.dim_next;
  hs.converged = kc.dim == kc.dim_next;
  hs.rank_nullity_dim = kc.rank_nullity_applies ? kc.rank_nullity : -1;
  hs.max_residual = kc.max_residual;
  return hs;
}

double rel(double num, double den) { return num == 0.0 ? 0.0 : num / std::max(den, 1e-300); }

}  // namespace

ModeBlocks mode_blocks(const FoliationModel& model, const ModeVector& m) {
  ModeBlocks b;
  b.d = fiber_block(model, [&](const BasicForm& a) { return d_basic(model, a); }, m);
  b.del = fiber_block(model, [&](const BasicForm& a) { return d_shift(model, a, 1, 0); }, m);
  b.delbar = fiber_block(model, [&](const BasicForm& a) { return d_shift(model, a, 0, 1); }, m);
  return b;
}

HarmonicSpace harmonic_space(const FoliationModel& model, OperatorKind kind, const Component& component, int K,
                             double tol, int stability_step) {
  require_truncation(model, K);
  if (kind != OperatorKind::Delta_B && !model.flags().hermitian)
    throw CapabilityError("harmonic_space: " + to_string(kind) + " needs the hermitian flag");
  SpectralCache cache = build_cache(model, K + stability_step);
  return make_space(model, cache, kind, component, K, tol, stability_step, true);
}

ClassTest alvarez_class_trivial(const FoliationModel& model, int K, const Thresholds& th) {
  require_truncation(model, K);
  const BasicForm& kappa = model.kappa();
  if (norm(d_basic(model, kappa)) > 1e-12 * std::max(1.0, norm(kappa)))
    throw ConsistencyError("mean curvature is not closed on " + model.id());
  HarmonicSpace h1 = harmonic_space(model, OperatorKind::Delta_B, Component::degree(1), K, th.kernel_tol, 0);
  ClassTest out;
  out.form_norm = norm(kappa);
  out.projection = BasicForm(model.n(), model.dims());
  for (const BasicForm& h : h1.basis) out.projection += h * inner_product(kappa, h);
  out.projection_norm = norm(out.projection);

  // Second witness: least squares kappa = d f, mode by mode.
  const int n = model.n();
  const auto rows = indices(n, Component::degree(1));
  const auto cols = indices(n, Component::degree(0));
  std::map<ModeVector, Vec> by_mode;
  for (const auto& [w, f] : kappa.terms())
    for (const auto& [m, c] : f.terms()) {
      auto& v = by_mode.try_emplace(m, Vec::Zero(rows.size())).first->second;
      v[std::find(rows.begin(), rows.end(), int(w.mask())) - rows.begin()] = c;
    }
  double res2 = 0.0;
  for (const auto& [m, v] : by_mode) {
    Mat a = sub(mode_blocks(model, m).d, rows, cols);
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
    cod.setThreshold(th.kernel_tol);
    Vec x = cod.solve(v);
    res2 += (a * x - v).squaredNorm();
  }
  out.residual = std::sqrt(res2);
  out.relative_residual = rel(out.residual, out.form_norm);
  out.trivial = out.projection_norm <= th.class_tol * std::max(1.0, out.form_norm);
  return out;
}

ClassTest eta_class_trivial(const FoliationModel& model, int K, const Thresholds& th) {
  require_truncation(model, K);
  if (!model.flags().hermitian) throw CapabilityError("eta class needs the hermitian flag");
  const int n = model.n();
  const BasicForm eta = d_shift(model, mean_curvature_parts(model).kappa01, 1, 0);
  ClassTest out;
  out.form_norm = norm(eta);
  const auto rows = indices(n, Component::bidegree(1, 1));
  const auto cols = indices(n, Component::degree(0));
  std::map<ModeVector, Vec> by_mode;
  for (const auto& [w, f] : eta.terms())
    for (const auto& [m, c] : f.terms()) {
      auto& v = by_mode.try_emplace(m, Vec::Zero(rows.size())).first->second;
      v[std::find(rows.begin(), rows.end(), int(w.mask())) - rows.begin()] = c;
    }
  double res2 = 0.0;
  for (const auto& [m, v] : by_mode) {
    ModeBlocks b = mode_blocks(model, m);
    Mat a = sub(Mat(b.del * b.delbar), rows, cols);
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
    cod.setThreshold(th.kernel_tol);
    Vec x = cod.solve(v);
    res2 += (a * x - v).squaredNorm();
  }
  out.residual = std::sqrt(res2);
  out.relative_residual = rel(out.residual, out.form_norm);
  out.trivial = out.relative_residual <= th.class_tol;

  HarmonicSpace bc = harmonic_space(model, OperatorKind::Delta_BC, Component::bidegree(1, 1), K, th.kernel_tol, 0);
  out.projection = BasicForm(n, model.dims());
  for (const BasicForm& h : bc.basis) out.projection += h * inner_product(eta, h);
  out.projection_norm = norm(out.projection);
  return out;
}

AutomorphyTest automorphic_test(const FoliationModel& model, int K, const Thresholds& th) {
  require_truncation(model, K);
  if (!model.flags().hermitian) throw CapabilityError("automorphic_test needs the hermitian flag");
  using Kd = OperatorKind;
  const MeanCurvatureParts p = mean_curvature_parts(model);
  auto anti = [&](const BasicForm& a) {
    return apply(model, Kd::delbar_B, contract(p.h10, a)) + contract(p.h10, apply(model, Kd::delbar_B, a));
  };
  // The identities are local, so a sweep over low modes decides them.
  const int Ks = std::min(K, std::max(2, model.bandwidth()));
  const auto basis = truncated_basis(model, Ks, Component::all());
  const VectorField x = VectorField::sharp(model.kappa());
  auto lie = [&](const BasicForm& a) { return d_basic(model, contract(x, a)) + contract(x, d_basic(model, a)); };
  std::vector<std::array<double, 8>> acc(basis.size());
  parallel_for(basis.size(), [&](std::size_t i) {
    const BasicForm e = basis_form(model, basis[i]);
    const BasicForm t1 = apply(model, Kd::delbar_B, contract(p.h10, e));
    const BasicForm t2 = contract(p.h10, apply(model, Kd::delbar_B, e));
    const BasicForm lap = apply(model, Kd::Delta_B, e);
    const BasicForm box = apply(model, Kd::Box_B, e);
    const BasicForm boxbar = apply(model, Kd::Boxbar_B, e);
    const BasicForm same = bidegree_project(lap, basis[i].word.holo_degree(), basis[i].word.anti_degree());
    const BasicForm lj = lie(j_on_forms(e));
    const BasicForm jl = j_on_forms(lie(e));
    auto sq = [](const BasicForm& f) { return std::pow(norm(f), 2); };
    acc[i] = {sq(t1 + t2), std::max(sq(t1), sq(t2)), sq(lap - box - boxbar), std::max({sq(lap), sq(box), sq(boxbar)}),
              sq(lap - same), sq(lap), sq(lj - jl), std::max(sq(lj), sq(jl))};
  });
  std::array<double, 8> s{};
  for (const auto& a : acc)
    for (int k = 0; k < 8; ++k) s[k] += a[k];
  AutomorphyTest out;
  out.residual_contract = rel(std::sqrt(s[0]), std::sqrt(s[1]));
  out.residual_laplacian = rel(std::sqrt(s[2]), std::sqrt(s[3]));
  out.residual_bidegree = rel(std::sqrt(s[4]), std::sqrt(s[5]));
  out.residual_flow = rel(std::sqrt(s[6]), std::sqrt(s[7]));
  out.automorphic = out.residual_flow <= th.class_tol;
  out.probe = anti(p.kappa10);
  if (model.flags().integrable) {
    out.equivalence_checked = true;
    out.equivalence_holds = out.automorphic == (out.residual_contract <= th.class_tol);
    if (model.flags().kahler)
      out.equivalence_holds = out.equivalence_holds && out.automorphic == (out.residual_laplacian <= th.class_tol);
  }
  return out;
}

CohomologyReport betti_table(const FoliationModel& model, int K, const Thresholds& th) {
  require_truncation(model, K);
  using Kd = OperatorKind;
  const int n = model.n();
  const int step = th.stability_step;
  SpectralCache cache = build_cache(model, K + step);
  CohomologyReport rep;
  rep.model_id = model.id();
  rep.K = K;
  rep.thresholds = th;
  rep.model_flags = model.flags();

  auto record = [&](const HarmonicSpace& hs, const std::string& label) {
    if (!hs.converged) {
      rep.converged = false;
      rep.unconverged.push_back(label + ": " + std::to_string(hs.dim) + " at K=" + std::to_string(hs.K) + " vs " +
                                std::to_string(hs.dim_next) + " at K=" + std::to_string(hs.K_next));
    }
    if (hs.rank_nullity_dim >= 0)
      rep.checks.push_back({"rank_nullity " + label, hs.rank_nullity_dim == hs.dim, double(hs.rank_nullity_dim),
                            "harmonic " + std::to_string(hs.dim)});
  };

  rep.betti.assign(2 * n + 1, 0);
  rep.betti_next.assign(2 * n + 1, 0);
  for (int j = 0; j <= 2 * n; ++j) {
    HarmonicSpace hs = make_space(model, cache, Kd::Delta_B, Component::degree(j), K, th.kernel_tol, step, false);
    rep.betti[j] = hs.dim;
    rep.betti_next[j] = hs.dim_next;
    record(hs, "h_B^" + std::to_string(j));
  }
  rep.hodge.assign(n + 1, std::vector<int>(n + 1, 0));
  rep.hodge_next = rep.hodge;
  rep.harmonic_types = rep.hodge;
  for (int r = 0; r <= n; ++r)
    for (int s = 0; s <= n; ++s) {
      const std::string rs = std::to_string(r) + "," + std::to_string(s);
      HarmonicSpace hs = make_space(model, cache, Kd::Boxbar_B, Component::bidegree(r, s), K, th.kernel_tol, step, false);
      rep.hodge[r][s] = hs.dim;
      rep.hodge_next[r][s] = hs.dim_next;
      record(hs, "h^" + rs);
      HarmonicSpace ht = make_space(model, cache, Kd::Delta_B, Component::bidegree(r, s), K, th.kernel_tol, step, false);
      rep.harmonic_types[r][s] = ht.dim;
      record(ht, "ker Delta_B ∩ Omega^" + rs);
    }
  rep.ddbar.assign(n + 1, 0);
  rep.ddbar_next.assign(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    HarmonicSpace hs = make_space(model, cache, Kd::Delta_BC, Component::bidegree(j, j), K, th.kernel_tol, step, false);
    rep.ddbar[j] = hs.dim;
    rep.ddbar_next[j] = hs.dim_next;
    record(hs, "h_ddbar^" + std::to_string(j) + "," + std::to_string(j));
  }

  if (model.flags().kahler)
    for (int r = 0; r <= n; ++r)
      for (int s = 0; s <= n; ++s) {
        const bool ok = rep.harmonic_types[r][s] <= rep.hodge[r][s];
        rep.checks.push_back({"kahler_inequality " + std::to_string(r) + "," + std::to_string(s), ok,
                              double(rep.harmonic_types[r][s]), "dim H^{r,s} = " + std::to_string(rep.hodge[r][s])});
        if (!ok) throw ConsistencyError("harmonic (r,s) forms exceed Dolbeault dimension on Kahler model " + model.id());
      }
  for (int j = 0; j <= 2 * n; ++j) {
    int sum = 0;
    for (int r = 0; r <= n; ++r)
      if (j - r >= 0 && j - r <= n) sum += rep.hodge[r][j - r];
    rep.checks.push_back({"dolbeault_degree_sum " + std::to_string(j), sum == rep.betti[j], double(sum),
                          "informational; h_B^" + std::to_string(j) + " = " + std::to_string(rep.betti[j])});
  }

  rep.xi = alvarez_class_trivial(model, K, th);
  rep.taut = rep.xi.trivial;
  rep.checks.push_back({"xi_witnesses_agree",
                        std::abs(rep.xi.projection_norm - rep.xi.residual) <= 1e-8 * std::max(1.0, rep.xi.form_norm),
                        std::abs(rep.xi.projection_norm - rep.xi.residual), "projection vs exactness residual"});
  rep.eta = eta_class_trivial(model, K, th);
  rep.eta_trivial = rep.eta.trivial;
  if (model.flags().integrable)
    rep.checks.push_back({"eta_witnesses_agree",
                          std::abs(rep.eta.projection_norm - rep.eta.residual) <= 1e-8 * std::max(1.0, rep.eta.form_norm),
                          std::abs(rep.eta.projection_norm - rep.eta.residual), "least squares vs Bott-Chern projection"});
  rep.automorphy = automorphic_test(model, K, th);
  rep.automorphic = rep.automorphy.automorphic;
  if (rep.automorphy.equivalence_checked)
    rep.checks.push_back({"automorphy_equivalence", rep.automorphy.equivalence_holds, rep.automorphy.residual_laplacian,
                          "contraction residual vs Laplacian residual"});
  return rep;
}

HodgeDiamondReport hodge_diamond_report(const FoliationModel& model, int K, const Thresholds& th) {
  CohomologyReport rep = betti_table(model, K, th);
  const int n = model.n();
  HodgeDiamondReport d;
  d.model_id = model.id();
  d.K = K;
  d.qualifies = model.flags().kahler && rep.automorphic;
  d.harmonic_types = rep.harmonic_types;
  d.dolbeault = rep.hodge;
  d.betti = rep.betti;
  d.types_symmetric = d.dolbeault_symmetric = true;
  for (int r = 0; r <= n; ++r)
    for (int s = 0; s <= n; ++s) {
      if (d.harmonic_types[r][s] != d.harmonic_types[s][r]) d.types_symmetric = false;
      if (d.dolbeault[r][s] != d.dolbeault[s][r]) {
        d.dolbeault_symmetric = false;
        if (r < s)
          d.asymmetries.push_back("h^{" + std::to_string(r) + "," + std::to_string(s) + "}=" +
                                  std::to_string(d.dolbeault[r][s]) + " != h^{" + std::to_string(s) + "," +
                                  std::to_string(r) + "}=" + std::to_string(d.dolbeault[s][r]));
      }
    }
  d.types_sum_to_betti = d.dolbeault_sum_to_betti = true;
  for (int j = 0; j <= 2 * n; ++j) {
    int st = 0, sd = 0;
    for (int r = 0; r <= n; ++r)
      if (j - r >= 0 && j - r <= n) {
        st += d.harmonic_types[r][j - r];
        sd += d.dolbeault[r][j - r];
      }
    if (st != d.betti[j]) d.types_sum_to_betti = false;
    if (sd != d.betti[j]) d.dolbeault_sum_to_betti = false;
  }
  d.odd_betti_even = true;
  for (int j = 1; j <= 2 * n; j += 2)
    if (d.betti[j] % 2) d.odd_betti_even = false;
  if (d.qualifies && !(d.types_symmetric && d.types_sum_to_betti && d.odd_betti_even))
    throw ConsistencyError("Hodge diamond assertions fail on Kahler automorphic model " + model.id());
  return d;
}

DdcResult ddc_solve(const FoliationModel& model, const BasicForm& alpha, int K, double tol) {
  require_truncation(model, K);
  if (!model.flags().hermitian) throw CapabilityError("ddc_solve needs the hermitian flag");
  auto deg = alpha.pure_degree();
  if (!deg) throw ArgumentError("ddc_solve: alpha must have pure degree");
  if (alpha.bandwidth() > K) throw TruncationError("ddc_solve: alpha has modes beyond K");
  const int n = model.n();
  const int k = *deg;
  DdcResult out;
  out.hypotheses = model.flags().kahler && model.flags().taut_candidate;
  out.beta = BasicForm(n, model.dims());
  const double an = norm(alpha);
  if (an == 0.0) {
    out.closed = out.dc_exact = out.solvable = true;
    return out;
  }
  const auto rows = indices(n, Component::degree(k));
  const auto all = all_indices(n);
  const auto prev1 = k >= 1 ? indices(n, Component::degree(k - 1)) : std::vector<int>{};
  const auto prev2 = k >= 2 ? indices(n, Component::degree(k - 2)) : std::vector<int>{};
  std::map<ModeVector, Vec> by_mode;
  for (const auto& [w, f] : alpha.terms())
    for (const auto& [m, c] : f.terms()) {
      auto& v = by_mode.try_emplace(m, Vec::Zero(rows.size())).first->second;
      v[std::find(rows.begin(), rows.end(), int(w.mask())) - rows.begin()] = c;
    }
  const Mat ci = c_diag(n, true), cf = c_diag(n, false);
  double closed2 = 0.0, exact2 = 0.0, res2 = 0.0, dscale = 1.0;
  for (const auto& [m, v] : by_mode) {
    ModeBlocks b = mode_blocks(model, m);
    const Mat dc = ci * b.d * cf;
    Mat dfull = sub(b.d, all, rows);
    if (dfull.size()) dscale = std::max(dscale, Eigen::JacobiSVD<Mat>(dfull).singularValues()[0]);
    closed2 += (dfull * v).squaredNorm();
    if (!prev1.empty()) {
      Mat a = sub(dc, rows, prev1);
      Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
      cod.setThreshold(1e-12);
      exact2 += (a * cod.solve(v) - v).squaredNorm();
    } else {
      exact2 += v.squaredNorm();
    }
    if (!prev2.empty()) {
      Mat a = sub(Mat(b.d * dc), rows, prev2);
      Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
      cod.setThreshold(1e-12);
      Vec x = cod.solve(v);
      res2 += (a * x - v).squaredNorm();
      for (std::size_t j = 0; j < prev2.size(); ++j) out.beta.add(CoframeWord(n, std::uint32_t(prev2[j])), m, x[j]);
    } else {
      res2 += v.squaredNorm();
    }
  }
  out.closed_residual = std::sqrt(closed2) / (an * dscale);
  out.dc_exact_residual = std::sqrt(exact2) / an;
  out.residual = std::sqrt(res2) / an;
  out.closed = out.closed_residual <= tol;
  out.dc_exact = out.dc_exact_residual <= tol;
  out.solvable = out.closed && out.residual <= tol;
  return out;
}

}  // namespace foliage
