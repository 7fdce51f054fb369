#include "foliage/foliation_model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "foliage/exterior.hpp"

namespace foliage {

namespace {

constexpr double kStructureTol = 1e-12;

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names{"carriere", "product_j1", "product_j2", "taut_torus"};
  return names;
}

std::string to_string(ModelName name) { return model_names().at(static_cast<int>(name)); }

ModelName parse_model_name(const std::string& s) {
  const auto& names = model_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return static_cast<ModelName>(i);
  throw ArgumentError("unknown model '" + s + "'; valid models: " + join(names));
}

double hyperbolic_log_eigenvalue(const std::array<double, 4>& A) {
  std::vector<std::string> violated;
  for (double x : A)
    if (x != std::round(x)) {
      violated.push_back("entries must be integers");
      break;
    }
  const double det = A[0] * A[3] - A[1] * A[2];
  const double trace = A[0] + A[3];
  if (det != 1.0) violated.push_back("det A must be 1 (got " + std::to_string(det) + ")");
  if (!(trace > 2.0)) violated.push_back("trace A must exceed 2 (got " + std::to_string(trace) + ")");
  if (!violated.empty()) throw ValidationError("invalid matrix A: " + join(violated));
  Eigen::Matrix2d m;
  m << A[0], A[1], A[2], A[3];
  Eigen::EigenSolver<Eigen::Matrix2d> es(m);
  double lambda = std::max(es.eigenvalues()[0].real(), es.eigenvalues()[1].real());
  return std::log(lambda);
}

BasicForm FoliationModel::real_form(const std::vector<std::pair<int, double>>& terms) const {
  BasicForm out(n_, dims_);
  for (const auto& [g, c] : terms) out += real_generators_.at(g) * Complex(c);
  return out;
}

int FoliationModel::structure_bandwidth() const {
  int b = 0;
  for (const auto& f : generator_d_) b = std::max(b, f.bandwidth());
  return b;
}

int FoliationModel::bandwidth() const { return std::max(structure_bandwidth(), kappa_.bandwidth()); }

BasicForm d_basic(const FoliationModel& model, const BasicForm& a) {
  if (a.n() != model.n() || a.dims() != model.dims())
    throw ModelMismatchError("form does not belong to model " + model.id());
  BasicForm out(a.n(), a.dims());
  for (const auto& [w, f] : a.terms()) {
    const BasicForm word = BasicForm::word(a.n(), a.dims(), w);
    for (int j = 0; j < model.dims(); ++j) {
      FourierScalar df = f.differentiate(j);
      if (df.is_zero()) continue;
      out += df * wedge(model.coord_differential(j), word);
    }
    const BasicForm& dw = model.word_differential(w.mask());
    if (!dw.is_zero()) out += f * dw;
  }
  return out;
}

FoliationModel FoliationModel::from_spec(const ModelSpec& spec) {
  FoliationModel m;
  m.id_ = spec.id;
  m.n_ = spec.n;
  m.dims_ = static_cast<int>(spec.coord_names.size());
  m.coord_names_ = spec.coord_names;
  m.generator_names_ = spec.generator_names;
  m.j_action_ = spec.j_action;
  const int n = m.n_;
  const int q = 2 * n;
  if (n < 1 || n > kMaxHalfCodim) throw ValidationError("half-codimension out of range");
  if (static_cast<int>(spec.generator_names.size()) != q || static_cast<int>(spec.j_action.size()) != q ||
      static_cast<int>(spec.structure.size()) != q)
    throw ValidationError("model " + spec.id + ": generator tables must have 2n entries");
  if (static_cast<int>(spec.coord_du.size()) != m.dims_) throw ValidationError("coordinate table size mismatch");

  for (int g = 0; g < q; ++g) {
    const JEntry& j1 = spec.j_action[g];
    if (j1.target < 0 || j1.target >= q || (j1.sign != 1 && j1.sign != -1))
      throw ValidationError("J table entry out of range");
    const JEntry& j2 = spec.j_action[j1.target];
    if (j2.target != g || j1.sign * j2.sign != -1)
      throw ValidationError("J must square to -1 on generator " + spec.generator_names[g]);
  }

  // Pair generators into (theta^a, J theta^a) in table order.
  m.real_generators_.assign(q, BasicForm(n, m.dims_));
  std::vector<bool> assigned(q, false);
  std::vector<int> theta_gen, jtheta_gen, jsign;
  int a = 0;
  for (int g = 0; g < q; ++g) {
    if (assigned[g]) continue;
    ++a;
    const JEntry& j = spec.j_action[g];
    assigned[g] = assigned[j.target] = true;
    m.real_generators_[g] = theta(n, m.dims_, a);
    m.real_generators_[j.target] = j_theta(n, m.dims_, a) * Complex(j.sign);
    theta_gen.push_back(g);
    jtheta_gen.push_back(j.target);
    jsign.push_back(j.sign);
  }

  for (const auto& du : spec.coord_du) m.coord_du_.push_back(m.real_form(du));

  std::vector<BasicForm> real_d(q, BasicForm(n, m.dims_));
  for (int g = 0; g < q; ++g)
    for (const RealTerm& t : spec.structure[g]) {
      if (t.coeff.dims() != m.dims_) throw ValidationError("structure coefficient has wrong coordinate count");
      real_d[g] += t.coeff * wedge(m.real_generators_.at(t.i), m.real_generators_.at(t.j));
    }
  m.generator_d_.assign(q, BasicForm(n, m.dims_));
  const double r = std::numbers::sqrt2 / 2.0;
  for (int b = 0; b < n; ++b) {
    const BasicForm& dth = real_d[theta_gen[b]];
    BasicForm djth = real_d[jtheta_gen[b]] * Complex(jsign[b]);
    m.generator_d_[b] = (dth + djth * Complex(0.0, 1.0)) * Complex(r);
    m.generator_d_[n + b] = (dth - djth * Complex(0.0, 1.0)) * Complex(r);
  }

  m.word_d_.assign(std::size_t(1) << q, BasicForm(n, m.dims_));
  for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
    BasicForm sum(n, m.dims_);
    int pos = 0;
    for (int g = 0; g < q; ++g) {
      if (!(mask & (1u << g))) continue;
      std::uint32_t before = mask & ((1u << g) - 1u);
      std::uint32_t after = mask & ~((1u << (g + 1)) - 1u);
      BasicForm term = wedge(BasicForm::word(n, m.dims_, CoframeWord(n, before)),
                             wedge(m.generator_d_[g], BasicForm::word(n, m.dims_, CoframeWord(n, after))));
      sum += term * Complex((pos & 1) ? -1.0 : 1.0);
      ++pos;
    }
    m.word_d_[mask] = std::move(sum);
  }

  m.kahler_form_ = BasicForm(n, m.dims_);
  for (int b = 0; b < n; ++b)
    m.kahler_form_ -= wedge(theta(n, m.dims_, b + 1), j_theta(n, m.dims_, b + 1));

  m.kappa_ = m.real_form(spec.kappa);
  m.deformation_ = FourierScalar(m.dims_);
  m.finalize();
  return m;
}

void FoliationModel::finalize() {
  const int n = n_;
  for (int j = 0; j < dims_; ++j)
    if (norm(d_basic(*this, coord_du_[j])) > kStructureTol)
      throw ValidationError("model " + id_ + ": coordinate differential d" + coord_names_[j] + " is not closed");
  for (int g = 0; g < 2 * n; ++g)
    if (norm(d_basic(*this, generator_d_[g])) > kStructureTol)
      throw ValidationError("model " + id_ + ": structure equations violate d^2 = 0");
  if (norm(kappa_ - kappa_.conjugate()) > kStructureTol * std::max(1.0, norm(kappa_)))
    throw ValidationError("model " + id_ + ": mean curvature is not real");
  if (norm(d_basic(*this, kappa_)) > kStructureTol * std::max(1.0, norm(kappa_)))
    throw ValidationError("model " + id_ + ": mean curvature is not closed");

  nijenhuis_ = 0.0;
  for (int b = 0; b < n; ++b) {
    nijenhuis_ = std::max(nijenhuis_, norm(bidegree_project(generator_d_[b], 0, 2)));
    nijenhuis_ = std::max(nijenhuis_, norm(bidegree_project(generator_d_[n + b], 2, 0)));
  }
  flags_.hermitian = true;
  flags_.integrable = nijenhuis_ <= kStructureTol;
  flags_.kahler = flags_.integrable && norm(d_basic(*this, kahler_form_)) <= kStructureTol;
  flags_.taut_candidate = kappa_.is_zero();
}

FoliationModel build_model(ModelName name, const CarriereParams& params) {
  ModelSpec s;
  auto cst = [](int dims, double c) { return FourierScalar::constant(dims, c); };
  double ell = 0.0;
  switch (name) {
    case ModelName::carriere: {
      ell = hyperbolic_log_eigenvalue(params.A);
      s.id = "carriere";
      s.n = 1;
      s.coord_names = {"t"};
      s.generator_names = {"S*", "T*"};
      s.coord_du = {{{1, 1.0}}};
      s.structure = {{RealTerm{1, 0, cst(1, ell)}}, {}};
      s.j_action = {{1, 1}, {0, -1}};
      s.kappa = {{1, ell}};
      break;
    }
    case ModelName::product_j1:
    case ModelName::product_j2: {
      ell = hyperbolic_log_eigenvalue(params.A);
      const bool j1 = name == ModelName::product_j1;
      s.id = j1 ? "product_j1" : "product_j2";
      s.n = 2;
      s.coord_names = {"t1", "t2"};
      s.generator_names = {"S1*", "T1*", "S2*", "T2*"};
      s.coord_du = {{{1, 1.0}}, {{3, 1.0}}};
      s.structure = {{RealTerm{1, 0, cst(2, ell)}}, {}, {RealTerm{3, 2, cst(2, ell)}}, {}};
      if (j1)
        s.j_action = {{1, 1}, {0, -1}, {3, 1}, {2, -1}};
      else
        s.j_action = {{2, 1}, {3, 1}, {0, -1}, {1, -1}};
      s.kappa = {{1, ell}, {3, ell}};
      break;
    }
    case ModelName::taut_torus: {
      s.id = "taut_torus";
      s.n = 1;
      s.coord_names = {"x", "y"};
      s.generator_names = {"X*", "Y*"};
      s.coord_du = {{{0, 1.0}}, {{1, 1.0}}};
      s.structure = {{}, {}};
      s.j_action = {{1, 1}, {0, -1}};
      s.kappa = {};
      break;
    }
  }
  FoliationModel m = FoliationModel::from_spec(s);
  m.log_lambda_ = ell;
  return m;
}

MeanCurvatureParts mean_curvature_parts(const FoliationModel& model) {
  MeanCurvatureParts p;
  p.kappa10 = BasicForm(model.n(), model.dims());
  for (const auto& [w, f] : model.kappa().terms())
    if (w.holo_degree() == 1) p.kappa10.add(w, f);
  p.kappa01 = p.kappa10.conjugate();
  p.h10 = VectorField::sharp(p.kappa01);
  p.h01 = p.h10.conjugate();
  return p;
}

FoliationModel deform_leafwise(const FoliationModel& model, const FourierScalar& f) {
  if (f.dims() != model.dims()) throw ModelMismatchError("deformation has the wrong coordinate count");
  if (!f.is_real(1e-12 * std::max(1.0, f.l2_norm())))
    throw ArgumentError("deformation must be real-valued (coefficients conjugate-symmetric)");
  FoliationModel m = model;
  m.deformation_ += f;
  m.kappa_ += d_basic(model, BasicForm::scalar(model.n(), f));
  m.finalize();
  return m;
}

}  // namespace foliage
