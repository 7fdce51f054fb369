#include "foliage/basic_form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace foliage {

BasicForm BasicForm::scalar(int n, const FourierScalar& f) {
  BasicForm out(n, f.dims());
  out.add(CoframeWord::unit(n), f);
  return out;
}

BasicForm BasicForm::constant(int n, int dims, Complex c) {
  return scalar(n, FourierScalar::constant(dims, c));
}

BasicForm BasicForm::word(int n, int dims, const CoframeWord& w, Complex c) {
  BasicForm out(n, dims);
  out.add(w, FourierScalar::constant(dims, c));
  return out;
}

BasicForm BasicForm::word(int n, const CoframeWord& w, const FourierScalar& f) {
  BasicForm out(n, f.dims());
  out.add(w, f);
  return out;
}

BasicForm BasicForm::holo(int n, int dims, int a) {
  return word(n, dims, CoframeWord::from_indices(n, {a}, {}));
}

BasicForm BasicForm::antiholo(int n, int dims, int a) {
  return word(n, dims, CoframeWord::from_indices(n, {}, {a}));
}

FourierScalar BasicForm::coefficient(const CoframeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FourierScalar(dims_) : it->second;
}

Complex BasicForm::coefficient(const CoframeWord& w, const ModeVector& m) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Complex{} : it->second.coefficient(m);
}

void BasicForm::add(const CoframeWord& w, const FourierScalar& f) {
  if (w.n() != n_) throw ModelMismatchError("BasicForm: word has a different half-codimension");
  if (f.dims() != dims_) throw ModelMismatchError("BasicForm: coefficient has a different coordinate count");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void BasicForm::add(const CoframeWord& w, const ModeVector& m, Complex c) {
  if (c == Complex{}) return;
  FourierScalar f(dims_);
  f.add_term(m, c);
  add(w, f);
}

BasicForm BasicForm::conjugate() const {
  BasicForm out(n_, dims_);
  for (const auto& [w, f] : terms_) {
    std::uint32_t mask = 0;
    int sign = 1;
    for (int g = 0; g < 2 * n_; ++g) {
      if (!w.contains(g)) continue;
      std::uint32_t bit = 1u << conjugate_generator(n_, g);
      sign *= wedge_sign(mask, bit);
      mask |= bit;
    }
    out.add(CoframeWord(n_, mask), f.conjugate() * Complex(sign));
  }
  return out;
}

BasicForm BasicForm::degree_part(int degree) const {
  BasicForm out(n_, dims_);
  for (const auto& [w, f] : terms_)
    if (w.degree() == degree) out.terms_.emplace(w, f);
  return out;
}

std::optional<int> BasicForm::pure_degree() const {
  std::optional<int> d;
  for (const auto& [w, f] : terms_) {
    if (d && *d != w.degree()) return std::nullopt;
    d = w.degree();
  }
  return d;
}

std::vector<int> BasicForm::degrees() const {
  std::vector<int> out;
  for (const auto& [w, f] : terms_) out.push_back(w.degree());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int BasicForm::bandwidth() const {
  int b = 0;
  for (const auto& [w, f] : terms_) b = std::max(b, f.bandwidth());
  return b;
}

BasicForm BasicForm::pruned(double tol) const {
  BasicForm out(n_, dims_);
  for (const auto& [w, f] : terms_)
    for (const auto& [m, c] : f.terms())
      if (std::abs(c) > tol) out.add(w, m, c);
  return out;
}

std::size_t BasicForm::term_count() const {
  std::size_t k = 0;
  for (const auto& [w, f] : terms_) k += f.size();
  return k;
}

void BasicForm::check(const BasicForm& o) const {
  if (n_ != o.n_) throw ModelMismatchError("BasicForm: half-codimensions differ");
  if (dims_ != o.dims_) throw ModelMismatchError("BasicForm: coordinate counts differ");
}

BasicForm& BasicForm::operator+=(const BasicForm& o) {
  check(o);
  for (const auto& [w, f] : o.terms_) add(w, f);
  return *this;
}

BasicForm& BasicForm::operator-=(const BasicForm& o) {
  check(o);
  for (const auto& [w, f] : o.terms_) add(w, -f);
  return *this;
}

BasicForm& BasicForm::operator*=(Complex c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

BasicForm operator*(const FourierScalar& f, const BasicForm& a) {
  BasicForm out(a.n(), a.dims());
  for (const auto& [w, g] : a.terms()) out.add(w, f * g);
  return out;
}

VectorField::VectorField(int n, int dims) : n_(n), dims_(dims), comps_(2 * n, FourierScalar(dims)) {}

VectorField VectorField::frame_dual(const BasicForm& one_form) {
  if (one_form.pure_degree().value_or(1) != 1) throw ArgumentError("contraction field must be a pure degree-1 form");
  VectorField v(one_form.n(), one_form.dims());
  for (const auto& [w, f] : one_form.terms()) {
    int g = std::countr_zero(w.mask());
    v.comps_[g] += f;
  }
  return v;
}

VectorField VectorField::sharp(const BasicForm& one_form) {
  if (one_form.pure_degree().value_or(1) != 1) throw ArgumentError("sharp needs a pure degree-1 form");
  VectorField v(one_form.n(), one_form.dims());
  for (const auto& [w, f] : one_form.terms()) {
    int g = std::countr_zero(w.mask());
    v.comps_[conjugate_generator(v.n_, g)] += f;
  }
  return v;
}

bool VectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const FourierScalar& f) { return f.is_zero(); });
}

BasicForm VectorField::flat() const {
  BasicForm out(n_, dims_);
  for (int g = 0; g < 2 * n_; ++g)
    out.add(CoframeWord(n_, 1u << conjugate_generator(n_, g)), comps_[g]);
  return out;
}

VectorField VectorField::conjugate() const {
  VectorField out(n_, dims_);
  for (int g = 0; g < 2 * n_; ++g) out.comps_[conjugate_generator(n_, g)] = comps_[g].conjugate();
  return out;
}

VectorField VectorField::apply_j() const {
  VectorField out(n_, dims_);
  for (int g = 0; g < 2 * n_; ++g) out.comps_[g] = comps_[g] * Complex(0.0, g < n_ ? 1.0 : -1.0);
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (n_ != o.n_ || dims_ != o.dims_) throw ModelMismatchError("VectorField: shapes differ");
  for (int g = 0; g < 2 * n_; ++g) comps_[g] += o.comps_[g];
  return *this;
}

VectorField& VectorField::operator*=(Complex c) {
  for (auto& f : comps_) f *= c;
  return *this;
}

}  // namespace foliage
