#pragma once

#include <string>
#include <vector>

#include "foliage/foliation_model.hpp"

namespace foliage {

struct DeformationTerm {
  std::vector<int> mode;
  double re = 0.0;
  double im = 0.0;
};

// JSON model description: {"name": ..., "A": [a, b, c, d], "deformation": [{"mode": [...], "re": x, "im": y}]}.
struct ModelConfig {
  ModelName name = ModelName::carriere;
  CarriereParams params;
  std::vector<DeformationTerm> deformation;
};

ModelConfig parse_model_config(const std::string& text);
ModelConfig load_model_config(const std::string& path);
FoliationModel realize(const ModelConfig& config);

FourierScalar deformation_scalar(const std::vector<DeformationTerm>& terms, int dims);
// "m1[,m2]:re:im;..." e.g. "1:0.5:0;-1:0.5:0" for cos(2 pi t).
std::vector<DeformationTerm> parse_deformation_spec(const std::string& spec);
// "a,b,c,d".
CarriereParams parse_matrix_spec(const std::string& spec);

}  // namespace foliage
