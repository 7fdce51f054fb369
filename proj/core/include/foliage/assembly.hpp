#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "foliage/operators.hpp"

namespace foliage {

class Component {
 public:
  enum class Kind { all, degree, bidegree };

  static Component all() { return Component(Kind::all, -1, -1, -1); }
  static Component degree(int d) { return Component(Kind::degree, d, -1, -1); }
  static Component bidegree(int r, int s) { return Component(Kind::bidegree, r + s, r, s); }
  // "all", "2", or "1,1".
  static Component parse(const std::string& s);

  Kind kind() const { return kind_; }
  int deg() const { return degree_; }
  int r() const { return r_; }
  int s() const { return s_; }
  bool contains(const CoframeWord& w) const;
  std::string to_string() const;
  bool operator==(const Component&) const = default;

 private:
  Component(Kind k, int d, int r, int s) : kind_(k), degree_(d), r_(r), s_(s) {}
  Kind kind_;
  int degree_, r_, s_;
};

// Codomain component for an operator kind applied to `domain`.
Component codomain_for(OperatorKind kind, const Component& domain);

struct BasisElement {
  CoframeWord word;
  ModeVector mode{};
  bool operator==(const BasisElement&) const = default;
};

using SparseMatrix = Eigen::SparseMatrix<Complex>;
using FormMap = std::function<BasicForm(const BasicForm&)>;

// Modes with |m_j| <= K, lexicographic.
std::vector<ModeVector> truncated_modes(int dims, int K);
// Mode-major, words by mask within a mode.
std::vector<BasisElement> truncated_basis(const FoliationModel& model, int K, const Component& c);
// All words of the fiber in mask order, optionally restricted to a component.
std::vector<CoframeWord> fiber_words(int n, const Component& c = Component::all());
BasicForm basis_form(const FoliationModel& model, const BasisElement& e, Complex c = 1.0);

// Throws TruncationError when K is below the model bandwidth.
void require_truncation(const FoliationModel& model, int K);

struct AssembledOperator {
  std::string tag;
  std::string model_id;
  int K = 0;
  int dims = 0;
  Component domain_component = Component::all();
  Component codomain_component = Component::all();
  std::vector<BasisElement> domain;
  std::vector<BasisElement> codomain;
  SparseMatrix matrix;
  // Columns whose exact image leaves the truncation (entries there are dropped).
  std::vector<int> overflow_columns;

  bool exact() const { return overflow_columns.empty(); }
  Eigen::VectorXcd to_domain_vector(const BasicForm& a) const;
  BasicForm from_codomain_vector(const FoliationModel& model, const Eigen::VectorXcd& v) const;
};

AssembledOperator assemble(const FoliationModel& model, OperatorKind kind, int K, const Component& domain);
AssembledOperator assemble_map(const FoliationModel& model, const std::string& tag, const FormMap& map, int K,
                               const Component& domain, const Component& codomain);
AssembledOperator laplacian(const FoliationModel& model, OperatorKind kind, int K, const Component& component);
// a o b; bases must chain.
AssembledOperator compose(const AssembledOperator& a, const AssembledOperator& b);

// Dense block of a mode-preserving map on the whole fiber at mode m (rows and
// columns indexed by word mask). Throws CapabilityError if the map couples modes.
Eigen::MatrixXcd fiber_block(const FoliationModel& model, const FormMap& map, const ModeVector& m);

void export_matrix_market(const AssembledOperator& op, std::ostream& os);

}  // namespace foliage
