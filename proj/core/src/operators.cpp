#include "foliage/operators.hpp"

#include "foliage/exterior.hpp"

namespace foliage {

namespace {

using K = OperatorKind;

const std::vector<OperatorInfo> kTable = {
    {K::d_B, "d_B", "Leibniz from coordinate differentials and structure equations", 1, std::nullopt, false},
    {K::d_T, "d_T", "d_B - eps(kappa_B)", 1, std::nullopt, false},
    {K::del_B, "del_B", "Pi^{r+1,s} d_B", 1, std::pair{1, 0}, false},
    {K::delbar_B, "delbar_B", "Pi^{r,s+1} d_B", 1, std::pair{0, 1}, false},
    {K::del_T, "del_T", "del_B - eps(kappa^{1,0})", 1, std::pair{1, 0}, false},
    {K::delbar_T, "delbar_T", "delbar_B - eps(kappa^{0,1})", 1, std::pair{0, 1}, false},
    {K::delta_B, "delta_B", "-*bar d_T *bar", -1, std::nullopt, false},
    {K::delta_T, "delta_T", "-*bar d_B *bar", -1, std::nullopt, false},
    {K::del_B_star, "del_B_star", "-S del_T S, S = *bar o conj", -1, std::pair{-1, 0}, false},
    {K::delbar_B_star, "delbar_B_star", "-S delbar_T S", -1, std::pair{0, -1}, false},
    {K::del_T_star, "del_T_star", "-S del_B S", -1, std::pair{-1, 0}, false},
    {K::delbar_T_star, "delbar_T_star", "-S delbar_B S", -1, std::pair{0, -1}, false},
    {K::L, "L", "omega ^", 2, std::pair{1, 1}, false},
    {K::Lambda, "Lambda", "omega ⌟", -2, std::pair{-1, -1}, false},
    {K::J, "J", "i(s-r) on (r,s)", 0, std::pair{0, 0}, false},
    {K::C, "C", "i^{r-s} on (r,s)", 0, std::pair{0, 0}, false},
    {K::C_inv, "C_inv", "i^{s-r} on (r,s)", 0, std::pair{0, 0}, false},
    {K::d_c, "d_c", "C^{-1} d_B C", 1, std::nullopt, false},
    {K::d_c_star, "d_c_star", "C^{-1} delta_B C", -1, std::nullopt, false},
    {K::eps_kappa, "eps_kappa", "kappa_B ^", 1, std::nullopt, false},
    {K::eps_kappa10, "eps_kappa10", "kappa^{1,0} ^", 1, std::pair{1, 0}, false},
    {K::eps_kappa01, "eps_kappa01", "kappa^{0,1} ^", 1, std::pair{0, 1}, false},
    {K::h10_contract, "H10_contract", "H^{1,0} ⌟, H^{1,0} = (kappa^{0,1})^#", -1, std::pair{-1, 0}, false},
    {K::h01_contract, "H01_contract", "H^{0,1} ⌟", -1, std::pair{0, -1}, false},
    {K::kappa_sharp_contract, "kappa_sharp_contract", "kappa_B^# ⌟", -1, std::nullopt, false},
    {K::Delta_B, "Delta_B", "delta_B d_B + d_B delta_B", 0, std::nullopt, true},
    {K::Delta_T, "Delta_T", "delta_T d_B + d_B delta_T", 0, std::nullopt, true},
    {K::Box_B, "Box_B", "del_B* del_B + del_B del_B*", 0, std::pair{0, 0}, true},
    {K::Boxbar_B, "Boxbar_B", "delbar_B* delbar_B + delbar_B delbar_B*", 0, std::pair{0, 0}, true},
    {K::Delta_del_Q, "Delta_del_Q", "del_T* del_B + del_B del_T*", 0, std::pair{0, 0}, true},
    {K::Delta_delbar_Q, "Delta_delbar_Q", "delbar_T* delbar_B + delbar_B delbar_T*", 0, std::pair{0, 0}, true},
    {K::Delta_ddbar, "Delta_ddbar", "(del delbar)* del delbar + del delbar (del delbar)*", 0, std::pair{0, 0}, true},
    {K::Delta_d_c, "Delta_d_c", "d_c d_c* + d_c* d_c", 0, std::nullopt, true},
    {K::Delta_BC, "Delta_BC", "Delta_ddbar + del* del + delbar* delbar", 0, std::pair{0, 0}, true},
};

BasicForm minus_s_conj(const FoliationModel& model, OperatorKind inner, const BasicForm& a) {
  return -conjugate_star(apply(model, inner, conjugate_star(a)));
}

}  // namespace

const std::vector<OperatorInfo>& operator_table() { return kTable; }

const OperatorInfo& info(OperatorKind kind) { return kTable.at(static_cast<int>(kind)); }

std::string to_string(OperatorKind kind) { return info(kind).name; }

std::string operator_names() {
  std::string s;
  for (const auto& e : kTable) s += (s.empty() ? "" : ", ") + std::string(e.name);
  return s;
}

OperatorKind parse_operator_kind(const std::string& s) {
  for (const auto& e : kTable)
    if (s == e.name) return e.kind;
  throw ArgumentError("unknown operator kind '" + s + "'; valid kinds: " + operator_names());
}

BasicForm d_shift(const FoliationModel& model, const BasicForm& a, int dr, int ds) {
  BasicForm out(a.n(), a.dims());
  for (const auto& [w, f] : a.terms()) {
    BasicForm piece = d_basic(model, BasicForm::word(a.n(), w, f));
    for (const auto& [u, g] : piece.terms())
      if (u.holo_degree() == w.holo_degree() + dr && u.anti_degree() == w.anti_degree() + ds) out.add(u, g);
  }
  return out;
}

BasicForm differential(const FoliationModel& model, const BasicForm& a, OperatorKind kind) {
  switch (kind) {
    case K::d_B: return d_basic(model, a);
    case K::d_T: return d_basic(model, a) - wedge(model.kappa(), a);
    case K::del_B: return d_shift(model, a, 1, 0);
    case K::delbar_B: return d_shift(model, a, 0, 1);
    case K::del_T: return d_shift(model, a, 1, 0) - wedge(mean_curvature_parts(model).kappa10, a);
    case K::delbar_T: return d_shift(model, a, 0, 1) - wedge(mean_curvature_parts(model).kappa01, a);
    default: throw ArgumentError("differential: " + to_string(kind) + " is not a differential kind");
  }
}

BasicForm codifferential(const FoliationModel& model, const BasicForm& a, OperatorKind kind) {
  switch (kind) {
    case K::delta_B: return -hodge_star(differential(model, hodge_star(a), K::d_T));
    case K::delta_T: return -hodge_star(differential(model, hodge_star(a), K::d_B));
    case K::del_B_star: return minus_s_conj(model, K::del_T, a);
    case K::delbar_B_star: return minus_s_conj(model, K::delbar_T, a);
    case K::del_T_star: return minus_s_conj(model, K::del_B, a);
    case K::delbar_T_star: return minus_s_conj(model, K::delbar_B, a);
    default: throw ArgumentError("codifferential: " + to_string(kind) + " is not a codifferential kind");
  }
}

BasicForm lefschetz_l(const FoliationModel& model, const BasicForm& a) { return wedge(model.kahler_form(), a); }

BasicForm lambda_dual(const FoliationModel& model, const BasicForm& a) {
  return form_contract(model.kahler_form(), a);
}

BasicForm d_c_op(const FoliationModel& model, const BasicForm& a, bool adjoint) {
  BasicForm ca = c_weil(a);
  BasicForm inner = adjoint ? codifferential(model, ca, K::delta_B) : d_basic(model, ca);
  return c_weil(inner, true);
}

BasicForm apply(const FoliationModel& model, OperatorKind kind, const BasicForm& a) {
  auto ap = [&](OperatorKind k, const BasicForm& x) { return apply(model, k, x); };
  switch (kind) {
    case K::d_B:
    case K::d_T:
    case K::del_B:
    case K::delbar_B:
    case K::del_T:
    case K::delbar_T: return differential(model, a, kind);
    case K::delta_B:
    case K::delta_T:
    case K::del_B_star:
    case K::delbar_B_star:
    case K::del_T_star:
    case K::delbar_T_star: return codifferential(model, a, kind);
    case K::L: return lefschetz_l(model, a);
    case K::Lambda: return lambda_dual(model, a);
    case K::J: return j_on_forms(a);
    case K::C: return c_weil(a);
    case K::C_inv: return c_weil(a, true);
    case K::d_c: return d_c_op(model, a, false);
    case K::d_c_star: return d_c_op(model, a, true);
    case K::eps_kappa: return wedge(model.kappa(), a);
    case K::eps_kappa10: return wedge(mean_curvature_parts(model).kappa10, a);
    case K::eps_kappa01: return wedge(mean_curvature_parts(model).kappa01, a);
    case K::h10_contract: return contract(mean_curvature_parts(model).h10, a);
    case K::h01_contract: return contract(mean_curvature_parts(model).h01, a);
    case K::kappa_sharp_contract: return contract(VectorField::sharp(model.kappa()), a);
    case K::Delta_B: return ap(K::delta_B, ap(K::d_B, a)) + ap(K::d_B, ap(K::delta_B, a));
    case K::Delta_T: return ap(K::delta_T, ap(K::d_B, a)) + ap(K::d_B, ap(K::delta_T, a));
    case K::Box_B: return ap(K::del_B_star, ap(K::del_B, a)) + ap(K::del_B, ap(K::del_B_star, a));
    case K::Boxbar_B: return ap(K::delbar_B_star, ap(K::delbar_B, a)) + ap(K::delbar_B, ap(K::delbar_B_star, a));
    case K::Delta_del_Q: return ap(K::del_T_star, ap(K::del_B, a)) + ap(K::del_B, ap(K::del_T_star, a));
    case K::Delta_delbar_Q:
      return ap(K::delbar_T_star, ap(K::delbar_B, a)) + ap(K::delbar_B, ap(K::delbar_T_star, a));
    case K::Delta_ddbar: {
      auto ddbar = [&](const BasicForm& x) { return ap(K::del_B, ap(K::delbar_B, x)); };
      auto ddbar_star = [&](const BasicForm& x) { return ap(K::delbar_B_star, ap(K::del_B_star, x)); };
      return ddbar_star(ddbar(a)) + ddbar(ddbar_star(a));
    }
    case K::Delta_d_c: return ap(K::d_c, ap(K::d_c_star, a)) + ap(K::d_c_star, ap(K::d_c, a));
    case K::Delta_BC:
      return ap(K::Delta_ddbar, a) + ap(K::del_B_star, ap(K::del_B, a)) +
             ap(K::delbar_B_star, ap(K::delbar_B, a));
  }
  throw ArgumentError("apply: unknown operator kind");
}

}  // namespace foliage
