#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "foliage/model_config.hpp"
#include "test_util.hpp"

using namespace foliage;
using foliage::test::mode;

TEST(ModelConfig, ParsesFullDescription) {
  const ModelConfig c = parse_model_config(
      R"({"name": "carriere", "A": [3, 2, 1, 1], "deformation": [{"mode": [1], "re": 0.5, "im": 0.1},
          {"mode": [-1], "re": 0.5, "im": -0.1}]})");
  EXPECT_EQ(c.name, ModelName::carriere);
  EXPECT_EQ(c.params.A, (std::array<double, 4>{3, 2, 1, 1}));
  ASSERT_EQ(c.deformation.size(), 2u);
  const FoliationModel m = realize(c);
  EXPECT_NEAR(m.log_lambda(), hyperbolic_log_eigenvalue({3, 2, 1, 1}), 1e-14);
  EXPECT_EQ(m.deformation().coefficient(mode(1)), Complex(0.5, 0.1));
}

TEST(ModelConfig, NameOnlyUsesDefaults) {
  const ModelConfig c = parse_model_config(R"({"name": "taut_torus"})");
  EXPECT_EQ(c.name, ModelName::taut_torus);
  EXPECT_TRUE(c.deformation.empty());
  EXPECT_EQ(realize(c).id(), "taut_torus");
}

TEST(ModelConfig, ErrorsAreArgumentErrors) {
  EXPECT_THROW(parse_model_config("{"), ArgumentError);
  EXPECT_THROW(parse_model_config(R"({"name": "sphere"})"), ArgumentError);
  EXPECT_THROW(parse_model_config(R"({"name": "carriere", "A": [1, 2]})"), ArgumentError);
  EXPECT_THROW(load_model_config("/nonexistent/model.json"), ArgumentError);
  const ModelConfig bad = parse_model_config(R"({"name": "carriere", "deformation": [{"mode": [1, 1], "re": 1}]})");
  EXPECT_THROW(realize(bad), ArgumentError);
}

TEST(ModelConfig, LoadsFromFile) {
  const std::string path = ::testing::TempDir() + "foliage_model.json";
  std::ofstream(path) << R"({"name": "product_j1"})";
  EXPECT_EQ(load_model_config(path).name, ModelName::product_j1);
  std::remove(path.c_str());
}

TEST(DeformationSpec, ParsesTerms) {
  const auto terms = parse_deformation_spec("1:0.5:0;-1:0.5:0");
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[1].mode, (std::vector<int>{-1}));
  EXPECT_EQ(terms[1].re, 0.5);
  const FourierScalar f = deformation_scalar(terms, 1);
  EXPECT_TRUE(f.is_real());
  EXPECT_EQ(f.size(), 2u);
  const auto two = parse_deformation_spec("1,-2:0.25:0.5");
  EXPECT_EQ(two[0].mode, (std::vector<int>{1, -2}));
  EXPECT_EQ(two[0].im, 0.5);
  EXPECT_TRUE(parse_deformation_spec("").empty());
  EXPECT_THROW(parse_deformation_spec("1:0.5"), ArgumentError);
  EXPECT_THROW(parse_deformation_spec("a:0.5:0"), ArgumentError);
}

TEST(MatrixSpec, ParsesFourEntries) {
  EXPECT_EQ(parse_matrix_spec("2,1,1,1").A, (std::array<double, 4>{2, 1, 1, 1}));
  EXPECT_THROW(parse_matrix_spec("2,1,1"), ArgumentError);
  EXPECT_THROW(parse_matrix_spec("2,x,1,1"), ArgumentError);
}
