#pragma once

#include <array>
#include <string>
#include <vector>

#include "foliage/basic_form.hpp"

namespace foliage {

enum class ModelName { carriere, product_j1, product_j2, taut_torus };

std::string to_string(ModelName name);
ModelName parse_model_name(const std::string& s);
const std::vector<std::string>& model_names();

struct CarriereParams {
  std::array<double, 4> A{2, 1, 1, 1};  // row-major [[a, b], [c, d]]
};

struct ModelFlags {
  bool hermitian = false;
  bool integrable = false;
  bool kahler = false;
  bool taut_candidate = false;  // kappa_B vanishes identically for this metric
};

// J on real generators: J(g) = sign * target.
struct JEntry {
  int target = 0;
  int sign = 1;
};

// A real coframe term coeff * g_i ^ g_j in the structure equations.
struct RealTerm {
  int i = 0;
  int j = 0;
  FourierScalar coeff;
};

// Everything that defines a model before validation.
struct ModelSpec {
  std::string id;
  int n = 1;
  std::vector<std::string> coord_names;
  std::vector<std::string> generator_names;                // 2n real generators
  std::vector<std::vector<std::pair<int, double>>> coord_du;  // du_j = sum c * g
  std::vector<std::vector<RealTerm>> structure;             // d(g) per generator
  std::vector<JEntry> j_action;
  std::vector<std::pair<int, double>> kappa;                // kappa_B = sum c * g
};

class FoliationModel {
 public:
  static FoliationModel from_spec(const ModelSpec& spec);

  const std::string& id() const { return id_; }
  int n() const { return n_; }
  int dims() const { return dims_; }
  const ModelFlags& flags() const { return flags_; }
  const std::vector<std::string>& coord_names() const { return coord_names_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::vector<JEntry>& j_action() const { return j_action_; }

  const BasicForm& coord_differential(int j) const { return coord_du_.at(j); }
  // Real generator g as a complex 1-form.
  const BasicForm& real_generator(int g) const { return real_generators_.at(g); }
  // d of the complex coframe generator g (same indexing as CoframeWord bits).
  const BasicForm& generator_differential(int g) const { return generator_d_.at(g); }
  // d of a coframe word with unit coefficient.
  const BasicForm& word_differential(std::uint32_t mask) const { return word_d_.at(mask); }
  const BasicForm& kappa() const { return kappa_; }
  const BasicForm& kahler_form() const { return kahler_form_; }
  const FourierScalar& deformation() const { return deformation_; }
  double log_lambda() const { return log_lambda_; }
  // Largest mode radius among structure and mean-curvature coefficients.
  int bandwidth() const;
  // Largest mode radius among structure coefficients alone.
  int structure_bandwidth() const;
  // Max norm of the (r-1, s+2) parts of d on the coframe generators.
  double nijenhuis_residual() const { return nijenhuis_; }

  // Writes a real-generator combination as a complex form.
  BasicForm real_form(const std::vector<std::pair<int, double>>& terms) const;

 private:
  friend FoliationModel deform_leafwise(const FoliationModel& model, const FourierScalar& f);
  friend FoliationModel build_model(ModelName name, const CarriereParams& params);

  void finalize();

  std::string id_;
  int n_ = 0;
  int dims_ = 0;
  std::vector<std::string> coord_names_;
  std::vector<std::string> generator_names_;
  std::vector<JEntry> j_action_;
  std::vector<BasicForm> coord_du_;
  std::vector<BasicForm> real_generators_;
  std::vector<BasicForm> generator_d_;
  std::vector<BasicForm> word_d_;
  BasicForm kappa_;
  BasicForm kahler_form_;
  FourierScalar deformation_;
  double log_lambda_ = 0.0;
  double nijenhuis_ = 0.0;
  ModelFlags flags_;
};

struct MeanCurvatureParts {
  BasicForm kappa10;
  BasicForm kappa01;
  VectorField h10;  // (kappa^{0,1})^#, a (1,0) field
  VectorField h01;  // conjugate of h10
};

FoliationModel build_model(ModelName name, const CarriereParams& params = {});
MeanCurvatureParts mean_curvature_parts(const FoliationModel& model);
FoliationModel deform_leafwise(const FoliationModel& model, const FourierScalar& f);

// Leibniz d_B on basic forms.
BasicForm d_basic(const FoliationModel& model, const BasicForm& a);

// log of the expanding eigenvalue of an admissible SL2(Z) matrix.
double hyperbolic_log_eigenvalue(const std::array<double, 4>& A);

}  // namespace foliage
