#include "foliage/exterior.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace foliage {

namespace {

void check_same(const BasicForm& a, const BasicForm& b) {
  if (a.n() != b.n()) throw ModelMismatchError("forms have different half-codimension");
  if (a.dims() != b.dims()) throw ModelMismatchError("forms have different coordinate counts");
}

// iota_g applied to every word of a, coefficients scaled by f.
void add_contraction(BasicForm& out, int g, const FourierScalar& f, const BasicForm& a) {
  if (f.is_zero()) return;
  for (const auto& [w, c] : a.terms()) {
    if (!w.contains(g)) continue;
    CoframeWord rest(w.n(), w.mask() & ~(1u << g));
    out.add(rest, (f * c) * Complex(removal_sign(w.mask(), g)));
  }
}

}  // namespace

BasicForm wedge(const BasicForm& a, const BasicForm& b) {
  check_same(a, b);
  BasicForm out(a.n(), a.dims());
  for (const auto& [wa, fa] : a.terms())
    for (const auto& [wb, fb] : b.terms()) {
      int sign = wedge_sign(wa.mask(), wb.mask());
      if (sign == 0) continue;
      out.add(CoframeWord(a.n(), wa.mask() | wb.mask()), (fa * fb) * Complex(sign));
    }
  return out;
}

BasicForm contract(const VectorField& v, const BasicForm& a) {
  if (v.n() != a.n() || v.dims() != a.dims()) throw ModelMismatchError("field and form shapes differ");
  BasicForm out(a.n(), a.dims());
  for (int g = 0; g < 2 * a.n(); ++g) add_contraction(out, g, v.component(g), a);
  return out;
}

BasicForm contract(const BasicForm& v, const BasicForm& a) {
  check_same(v, a);
  if (v.pure_degree().value_or(1) != 1) throw ArgumentError("contract: field argument must have pure degree 1");
  return contract(VectorField::frame_dual(v), a);
}

BasicForm form_contract(const BasicForm& beta, const BasicForm& a) {
  check_same(beta, a);
  const int n = a.n();
  BasicForm out(n, a.dims());
  for (const auto& [wb, fb] : beta.terms()) {
    BasicForm cur = a;
    for (int g = 0; g < 2 * n; ++g) {
      if (!wb.contains(g)) continue;
      BasicForm next(n, a.dims());
      add_contraction(next, conjugate_generator(n, g), FourierScalar::constant(a.dims(), 1.0), cur);
      cur = std::move(next);
    }
    out += fb * cur;
  }
  return out;
}

BasicForm bidegree_project(const BasicForm& a, int r, int s) {
  BasicForm out(a.n(), a.dims());
  for (const auto& [w, f] : a.terms())
    if (w.holo_degree() == r && w.anti_degree() == s) out.add(w, f);
  return out;
}

BasicForm j_on_forms(const BasicForm& a) {
  BasicForm out(a.n(), a.dims());
  for (const auto& [w, f] : a.terms())
    out.add(w, f * Complex(0.0, double(w.anti_degree() - w.holo_degree())));
  return out;
}

BasicForm c_weil(const BasicForm& a, bool inverse) {
  BasicForm out(a.n(), a.dims());
  for (const auto& [w, f] : a.terms()) {
    int k = w.holo_degree() - w.anti_degree();
    out.add(w, f * i_pow(inverse ? -k : k));
  }
  return out;
}

BasicForm volume_form(int n, int dims) {
  std::uint32_t mask = 0;
  int sign = 1;
  for (int a = 0; a < n; ++a)
    for (int g : {a, n + a}) {
      sign *= wedge_sign(mask, 1u << g);
      mask |= 1u << g;
    }
  return BasicForm::word(n, dims, CoframeWord(n, mask), i_pow(n) * double(sign));
}

BasicForm hodge_star(const BasicForm& a) {
  const int n = a.n();
  const CoframeWord full = CoframeWord::full(n);
  const Complex nu = volume_form(n, a.dims()).coefficient(full, ModeVector{});
  BasicForm out(n, a.dims());
  for (const auto& [x, f] : a.terms()) {
    // conj(x) = sigma * w; star(x) = sigma * c * comp(w) with w ^ c comp(w) = nu.
    BasicForm xb = BasicForm::word(n, a.dims(), x).conjugate();
    const auto& [w, sig] = *xb.terms().begin();
    const Complex sigma = sig.coefficient(ModeVector{});
    const std::uint32_t comp = full.mask() & ~w.mask();
    const Complex c = nu * double(wedge_sign(w.mask(), comp));
    out.add(CoframeWord(n, comp), f * (sigma * c));
  }
  return out;
}

BasicForm conjugate_star(const BasicForm& a) { return hodge_star(a.conjugate()); }

Complex inner_product(const BasicForm& a, const BasicForm& b) {
  check_same(a, b);
  Complex s{};
  for (const auto& [w, fa] : a.terms()) {
    auto it = b.terms().find(w);
    if (it == b.terms().end()) continue;
    for (const auto& [m, ca] : fa.terms()) s += ca * std::conj(it->second.coefficient(m));
  }
  return s;
}

double norm(const BasicForm& a) {
  double s = 0.0;
  for (const auto& [w, f] : a.terms()) s += f.l2_norm_squared();
  return std::sqrt(s);
}

BasicForm theta(int n, int dims, int a) {
  return (BasicForm::holo(n, dims, a) + BasicForm::antiholo(n, dims, a)) * Complex(std::numbers::sqrt2 / 2.0);
}

BasicForm j_theta(int n, int dims, int a) {
  return (BasicForm::holo(n, dims, a) - BasicForm::antiholo(n, dims, a)) * Complex(0.0, -std::numbers::sqrt2 / 2.0);
}

BasicForm j_on_forms_frame_sum(const BasicForm& phi) {
  const int n = phi.n();
  const int dims = phi.dims();
  const double r = std::numbers::sqrt2 / 2.0;
  BasicForm out(n, dims);
  for (int a = 1; a <= n; ++a) {
    VectorField e(n, dims), je(n, dims);
    e.set_component(a - 1, FourierScalar::constant(dims, r));
    e.set_component(n + a - 1, FourierScalar::constant(dims, r));
    je.set_component(a - 1, FourierScalar::constant(dims, Complex(0.0, r)));
    je.set_component(n + a - 1, FourierScalar::constant(dims, Complex(0.0, -r)));
    // Dual coframe of (E_a, J E_a) is (theta^a, J theta^a); J(J theta^a) = -theta^a.
    out += wedge(j_theta(n, dims, a), contract(e, phi));
    out -= wedge(theta(n, dims, a), contract(je, phi));
  }
  return out;
}

}  // namespace foliage
