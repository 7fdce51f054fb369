#pragma once

#include <map>
#include <span>

#include "foliage/types.hpp"

namespace foliage {

// Trigonometric polynomial in `dims` angular coordinates of period 1:
// f(u) = sum_m c_m exp(2 pi i m.u). Arithmetic is exact in the mode set.
class FourierScalar {
 public:
  using Terms = std::map<ModeVector, Complex>;

  FourierScalar() = default;
  explicit FourierScalar(int dims);

  static FourierScalar constant(int dims, Complex c);
  static FourierScalar mode(int dims, const ModeVector& m, Complex c = 1.0);

  int dims() const { return dims_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Complex coefficient(const ModeVector& m) const;
  void add_term(const ModeVector& m, Complex c);

  FourierScalar differentiate(int axis) const;
  FourierScalar conjugate() const;
  bool is_real(double tol = 0.0) const;
  bool is_constant() const;
  int bandwidth() const;
  double l2_norm_squared() const;
  double l2_norm() const;
  Complex evaluate(std::span<const double> u) const;

  FourierScalar& operator+=(const FourierScalar& o);
  FourierScalar& operator-=(const FourierScalar& o);
  FourierScalar& operator*=(Complex c);

  friend FourierScalar operator+(FourierScalar a, const FourierScalar& b) { return a += b; }
  friend FourierScalar operator-(FourierScalar a, const FourierScalar& b) { return a -= b; }
  friend FourierScalar operator*(FourierScalar a, Complex c) { return a *= c; }
  friend FourierScalar operator*(Complex c, FourierScalar a) { return a *= c; }
  friend FourierScalar operator*(const FourierScalar& a, const FourierScalar& b);
  FourierScalar operator-() const { return *this * Complex(-1.0); }

  bool operator==(const FourierScalar& o) const = default;

 private:
  void check_dims(const FourierScalar& o) const;

  int dims_ = 0;
  Terms terms_;
};

}  // namespace foliage
