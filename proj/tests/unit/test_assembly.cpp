#include <gtest/gtest.h>

#include <sstream>

#include "foliage/assembly.hpp"
#include "test_util.hpp"

using namespace foliage;
using foliage::test::kPi;
using foliage::test::mode;
using foliage::test::random_dense_form;
using foliage::test::rel_diff;

namespace {

double rel_matrix(const SparseMatrix& a, const SparseMatrix& b) {
  return SparseMatrix(a - b).norm() / std::max(1.0, std::max(a.norm(), b.norm()));
}

}  // namespace

TEST(Component, ParseAndPrint) {
  EXPECT_EQ(Component::parse("all"), Component::all());
  EXPECT_EQ(Component::parse("2"), Component::degree(2));
  EXPECT_EQ(Component::parse("1,1"), Component::bidegree(1, 1));
  EXPECT_THROW(Component::parse("x"), ArgumentError);
  EXPECT_THROW(Component::parse("1,"), ArgumentError);
}

TEST(TruncatedBasis, ModeMajorOrdering) {
  EXPECT_EQ(truncated_modes(1, 2).size(), 5u);
  EXPECT_EQ(truncated_modes(2, 2).size(), 25u);
  const FoliationModel m = build_model(ModelName::carriere);
  const auto basis = truncated_basis(m, 1, Component::degree(1));
  ASSERT_EQ(basis.size(), 6u);
  EXPECT_EQ(basis[0].mode, mode(-1));
  EXPECT_EQ(basis[1].mode, mode(-1));
  EXPECT_LT(basis[0].word, basis[1].word);
}

TEST(Assemble, CarriereDBlockOnFunctions) {
  const FoliationModel m = build_model(ModelName::carriere);
  const AssembledOperator op = assemble(m, OperatorKind::d_B, 4, Component::degree(0));
  EXPECT_TRUE(op.exact());
  ASSERT_EQ(op.domain.size(), 9u);
  ASSERT_EQ(op.codomain.size(), 18u);
  for (int col = 0; col < 9; ++col) {
    const int k = op.domain[col].mode[0];
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(9);
    e[col] = 1.0;
    const Eigen::VectorXcd image = op.matrix * e;
    const BasicForm got = op.from_codomain_vector(m, image);
    const BasicForm expected = FourierScalar::mode(1, mode(k), Complex(0, 2 * kPi * k)) * m.real_generator(1);
    EXPECT_LE(rel_diff(got, expected), 1e-14) << k;
    // T* = (omega - conj omega)/(i sqrt2), so the omega entry is 2 pi k / sqrt2.
    EXPECT_NEAR(std::abs(image.cwiseAbs().maxCoeff() - 2 * kPi * std::abs(k) / std::sqrt(2.0)), 0.0, 1e-12);
  }
}

TEST(Assemble, MatchesPointwiseOperatorOnEveryBasisElement) {
  for (ModelName name : {ModelName::carriere, ModelName::product_j2}) {
    const FoliationModel m = build_model(name);
    for (OperatorKind kind : {OperatorKind::d_B, OperatorKind::delta_B, OperatorKind::Lambda, OperatorKind::d_c}) {
      const AssembledOperator op = assemble(m, kind, 1, Component::all());
      for (std::size_t col = 0; col < op.domain.size(); ++col) {
        const BasicForm x = basis_form(m, op.domain[col]);
        const Eigen::VectorXcd v = op.matrix * op.to_domain_vector(x);
        EXPECT_LE(rel_diff(op.from_codomain_vector(m, v), apply(m, kind, x)), 1e-14) << to_string(kind);
      }
    }
  }
}

TEST(Assemble, TautTorusScalarLaplacian) {
  const FoliationModel m = build_model(ModelName::taut_torus);
  const AssembledOperator lap = laplacian(m, OperatorKind::Delta_B, 3, Component::degree(0));
  const Eigen::MatrixXcd dense = Eigen::MatrixXcd(lap.matrix);
  for (std::size_t i = 0; i < lap.domain.size(); ++i) {
    const ModeVector k = lap.domain[i].mode;
    const double expected = 4 * kPi * kPi * (k[0] * k[0] + k[1] * k[1]);
    for (std::size_t j = 0; j < lap.domain.size(); ++j)
      EXPECT_NEAR(std::abs(dense(i, j) - Complex(i == j ? expected : 0.0)), 0.0, 1e-10 * std::max(1.0, expected));
  }
}

TEST(Assemble, CodifferentialsAreConjugateTransposes) {
  const std::vector<std::pair<OperatorKind, OperatorKind>> pairs = {
      {OperatorKind::d_B, OperatorKind::delta_B},
      {OperatorKind::del_B, OperatorKind::del_B_star},
      {OperatorKind::delbar_B, OperatorKind::delbar_B_star},
      {OperatorKind::L, OperatorKind::Lambda},
      {OperatorKind::d_c, OperatorKind::d_c_star}};
  for (ModelName name : {ModelName::carriere, ModelName::product_j1, ModelName::taut_torus}) {
    const FoliationModel m = build_model(name);
    for (const auto& [d, dstar] : pairs) {
      const SparseMatrix a = assemble(m, d, 2, Component::all()).matrix;
      const SparseMatrix b = assemble(m, dstar, 2, Component::all()).matrix;
      EXPECT_LE(rel_matrix(b, SparseMatrix(a.adjoint())), 1e-13) << m.id() << " " << to_string(d);
    }
  }
}

TEST(Laplacian, HermitianPositiveSemidefinite) {
  const FoliationModel m = build_model(ModelName::carriere);
  for (OperatorKind kind : {OperatorKind::Delta_B, OperatorKind::Box_B, OperatorKind::Boxbar_B, OperatorKind::Delta_d_c}) {
    const Eigen::MatrixXcd a = Eigen::MatrixXcd(laplacian(m, kind, 2, Component::all()).matrix);
    EXPECT_LE((a - a.adjoint()).norm(), 1e-12 * a.norm()) << to_string(kind);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10 * a.norm()) << to_string(kind);
  }
}

TEST(Laplacian, TautTorusKahlerRelations) {
  const FoliationModel m = build_model(ModelName::taut_torus);
  const SparseMatrix d = laplacian(m, OperatorKind::Delta_B, 3, Component::all()).matrix;
  const SparseMatrix box = laplacian(m, OperatorKind::Box_B, 3, Component::all()).matrix;
  const SparseMatrix boxbar = laplacian(m, OperatorKind::Boxbar_B, 3, Component::all()).matrix;
  EXPECT_LE(rel_matrix(d, 2.0 * box), 1e-13);
  EXPECT_LE(rel_matrix(d, 2.0 * boxbar), 1e-13);
}

TEST(Laplacian, CarriereDeltaBIsDeltaTPlusLieDerivative) {
  std::mt19937_64 rng(41);
  const FoliationModel m = build_model(ModelName::carriere);
  const VectorField k = VectorField::sharp(m.kappa());
  for (int t = 0; t < 5; ++t) {
    const BasicForm a = random_dense_form(1, 1, 2, rng);
    const BasicForm lie = contract(k, d_basic(m, a)) + d_basic(m, contract(k, a));
    EXPECT_LE(rel_diff(apply(m, OperatorKind::Delta_B, a), apply(m, OperatorKind::Delta_T, a) + lie), 1e-13);
  }
}

TEST(Assemble, TruncationBelowBandwidthThrows) {
  const FoliationModel m = build_model(ModelName::carriere);
  const FourierScalar f = FourierScalar::mode(1, mode(2), 0.3) + FourierScalar::mode(1, mode(-2), 0.3);
  const FoliationModel d = deform_leafwise(m, f);
  EXPECT_EQ(d.bandwidth(), 2);
  EXPECT_THROW(assemble(d, OperatorKind::delta_B, 1, Component::all()), TruncationError);
  EXPECT_NO_THROW(assemble(d, OperatorKind::delta_B, 2, Component::all()));
}

TEST(Assemble, DeformedOperatorsFlagOverflowColumns) {
  const FoliationModel m = build_model(ModelName::carriere);
  const FourierScalar f = FourierScalar::mode(1, mode(1), 0.3) + FourierScalar::mode(1, mode(-1), 0.3);
  const AssembledOperator op = assemble(deform_leafwise(m, f), OperatorKind::delta_B, 3, Component::degree(1));
  EXPECT_FALSE(op.exact());
  EXPECT_TRUE(assemble(m, OperatorKind::delta_B, 3, Component::degree(1)).exact());
}

TEST(Compose, RequiresChainingBases) {
  const FoliationModel m = build_model(ModelName::carriere);
  const AssembledOperator d0 = assemble(m, OperatorKind::d_B, 2, Component::degree(0));
  const AssembledOperator d1 = assemble(m, OperatorKind::d_B, 2, Component::degree(1));
  EXPECT_LE(compose(d1, d0).matrix.norm(), 1e-12);
  EXPECT_THROW(compose(d0, d0), ModelMismatchError);
}

TEST(Laplacian, RejectsNonLaplacianKinds) {
  EXPECT_THROW(laplacian(build_model(ModelName::carriere), OperatorKind::d_B, 2, Component::all()), ArgumentError);
}

TEST(ExportMatrixMarket, HeaderSizeLineAndEntries) {
  const FoliationModel m = build_model(ModelName::carriere);
  const AssembledOperator op = assemble(m, OperatorKind::d_B, 1, Component::degree(0));
  std::ostringstream os;
  export_matrix_market(op, os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "%%foliage-operator matrix coordinate complex general");
  while (std::getline(in, line) && line[0] == '%') {
  }
  long rows = 0, cols = 0, nnz = 0;
  std::istringstream(line) >> rows >> cols >> nnz;
  EXPECT_EQ(rows, 6);
  EXPECT_EQ(cols, 3);
  long entries = 0;
  while (std::getline(in, line)) ++entries;
  EXPECT_EQ(entries, nnz);
}
