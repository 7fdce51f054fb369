#include "foliage/fourier_scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace foliage {

std::string mode_to_string(const ModeVector& m, int dims) {
  std::ostringstream os;
  os << '(';
  for (int j = 0; j < dims; ++j) {
    if (j) os << ',';
    os << m[j];
  }
  os << ')';
  return os.str();
}

FourierScalar::FourierScalar(int dims) : dims_(dims) {
  if (dims < 0 || dims > kMaxCoords) throw ArgumentError("FourierScalar: unsupported coordinate count");
}

FourierScalar FourierScalar::constant(int dims, Complex c) {
  FourierScalar f(dims);
  f.add_term(ModeVector{}, c);
  return f;
}

FourierScalar FourierScalar::mode(int dims, const ModeVector& m, Complex c) {
  FourierScalar f(dims);
  for (int j = dims; j < kMaxCoords; ++j)
    if (m[j] != 0) throw ArgumentError("FourierScalar: mode has entries past the coordinate count");
  f.add_term(m, c);
  return f;
}

Complex FourierScalar::coefficient(const ModeVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex{} : it->second;
}

void FourierScalar::add_term(const ModeVector& m, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

FourierScalar FourierScalar::differentiate(int axis) const {
  if (axis < 0 || axis >= dims_) throw ArgumentError("FourierScalar::differentiate: axis out of range");
  FourierScalar out(dims_);
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  for (const auto& [m, c] : terms_) out.add_term(m, c * (two_pi_i * double(m[axis])));
  return out;
}

FourierScalar FourierScalar::conjugate() const {
  FourierScalar out(dims_);
  for (const auto& [m, c] : terms_) {
    ModeVector neg{};
    for (int j = 0; j < kMaxCoords; ++j) neg[j] = -m[j];
    out.add_term(neg, std::conj(c));
  }
  return out;
}

bool FourierScalar::is_real(double tol) const {
  for (const auto& [m, c] : terms_) {
    ModeVector neg{};
    for (int j = 0; j < kMaxCoords; ++j) neg[j] = -m[j];
    if (std::abs(c - std::conj(coefficient(neg))) > tol) return false;
  }
  return true;
}

bool FourierScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ModeVector{});
}

int FourierScalar::bandwidth() const {
  int b = 0;
  for (const auto& [m, c] : terms_)
    for (int j = 0; j < dims_; ++j) b = std::max(b, std::abs(m[j]));
  return b;
}

double FourierScalar::l2_norm_squared() const {
  double s = 0.0;
  for (const auto& [m, c] : terms_) s += std::norm(c);
  return s;
}

double FourierScalar::l2_norm() const { return std::sqrt(l2_norm_squared()); }

Complex FourierScalar::evaluate(std::span<const double> u) const {
  if (static_cast<int>(u.size()) < dims_) throw ArgumentError("FourierScalar::evaluate: too few coordinates");
  Complex s{};
  for (const auto& [m, c] : terms_) {
    double phase = 0.0;
    for (int j = 0; j < dims_; ++j) phase += m[j] * u[j];
    s += c * std::polar(1.0, 2.0 * std::numbers::pi * phase);
  }
  return s;
}

void FourierScalar::check_dims(const FourierScalar& o) const {
  if (dims_ != o.dims_) throw ModelMismatchError("FourierScalar: coordinate counts differ");
}

FourierScalar& FourierScalar::operator+=(const FourierScalar& o) {
  check_dims(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FourierScalar& FourierScalar::operator-=(const FourierScalar& o) {
  check_dims(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FourierScalar& FourierScalar::operator*=(Complex c) {
  if (c == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second == Complex{})
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

FourierScalar operator*(const FourierScalar& a, const FourierScalar& b) {
  a.check_dims(b);
  FourierScalar out(a.dims_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      ModeVector m{};
      for (int j = 0; j < kMaxCoords; ++j) m[j] = ma[j] + mb[j];
      out.add_term(m, ca * cb);
    }
  return out;
}

}  // namespace foliage
