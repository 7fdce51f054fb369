#pragma once

#include <utility>
#include <vector>

#include "foliage/assembly.hpp"
#include "foliage/config.hpp"

namespace foliage {

// Multiplies the degree-r part by (n - r).
BasicForm counting_operator(const FoliationModel& model, const BasicForm& a);

struct Sl2Report {
  int K = 0;
  double lambda_l;         // |[Lambda, L] - A| / |A|
  double counting_lambda;  // |[A, Lambda] - 2 Lambda| / |Lambda|
  double counting_l;       // |[A, L] + 2 L| / |L|
  bool pass(double tol) const { return lambda_l <= tol && counting_lambda <= tol && counting_l <= tol; }
};

Sl2Report sl2_check(const FoliationModel& model, int K);

struct PrimitiveDecomposition {
  BasicForm input;
  int degree = 0;
  std::vector<std::pair<int, BasicForm>> components;  // (k, p_k), deg p_k = degree - 2k
  double residual = 0.0;
};

PrimitiveDecomposition primitive_decompose(const FoliationModel& model, const BasicForm& a);

enum class LefschetzDomain { forms, cohomology };

struct LefschetzRank {
  int rank = 0;
  int domain_dim = 0;
  int codomain_dim = 0;
  bool injective = false;
  bool surjective = false;
};

LefschetzRank lefschetz_rank(const FoliationModel& model, int r, int k, int K, LefschetzDomain on,
                             const Thresholds& th = {});

}  // namespace foliage
