#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliage/foliation_model.hpp"

namespace foliage {

enum class OperatorKind {
  d_B, d_T, del_B, delbar_B, del_T, delbar_T,
  delta_B, delta_T, del_B_star, delbar_B_star, del_T_star, delbar_T_star,
  L, Lambda, J, C, C_inv, d_c, d_c_star,
  eps_kappa, eps_kappa10, eps_kappa01, h10_contract, h01_contract, kappa_sharp_contract,
  Delta_B, Delta_T, Box_B, Boxbar_B, Delta_del_Q, Delta_delbar_Q, Delta_ddbar, Delta_d_c,
  Delta_BC,
};

struct OperatorInfo {
  OperatorKind kind;
  const char* name;
  const char* definition;
  int degree_shift;
  std::optional<std::pair<int, int>> bidegree_shift;  // nullopt: mixes bidegrees
  bool laplacian;
};

const std::vector<OperatorInfo>& operator_table();
const OperatorInfo& info(OperatorKind kind);
std::string to_string(OperatorKind kind);
OperatorKind parse_operator_kind(const std::string& s);
std::string operator_names();

BasicForm apply(const FoliationModel& model, OperatorKind kind, const BasicForm& a);

BasicForm differential(const FoliationModel& model, const BasicForm& a, OperatorKind kind);
BasicForm codifferential(const FoliationModel& model, const BasicForm& a, OperatorKind kind);
BasicForm lefschetz_l(const FoliationModel& model, const BasicForm& a);
BasicForm lambda_dual(const FoliationModel& model, const BasicForm& a);
BasicForm d_c_op(const FoliationModel& model, const BasicForm& a, bool adjoint = false);

// d_B followed by the bidegree filter (dr, ds): (1,0) gives del_B, (0,1) delbar_B,
// (-1,2) and (2,-1) the non-integrable parts.
BasicForm d_shift(const FoliationModel& model, const BasicForm& a, int dr, int ds);

}  // namespace foliage
