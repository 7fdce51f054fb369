#pragma once

#include <map>
#include <optional>
#include <vector>

#include "foliage/coframe_word.hpp"
#include "foliage/fourier_scalar.hpp"

namespace foliage {

class BasicForm {
 public:
  using Terms = std::map<CoframeWord, FourierScalar>;

  BasicForm() = default;
  BasicForm(int n, int dims) : n_(n), dims_(dims) {}

  static BasicForm scalar(int n, const FourierScalar& f);
  static BasicForm constant(int n, int dims, Complex c);
  static BasicForm word(int n, int dims, const CoframeWord& w, Complex c = 1.0);
  static BasicForm word(int n, const CoframeWord& w, const FourierScalar& f);
  // omega^a and its conjugate, a 1-based.
  static BasicForm holo(int n, int dims, int a);
  static BasicForm antiholo(int n, int dims, int a);

  int n() const { return n_; }
  int dims() const { return dims_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FourierScalar coefficient(const CoframeWord& w) const;
  Complex coefficient(const CoframeWord& w, const ModeVector& m) const;
  void add(const CoframeWord& w, const FourierScalar& f);
  void add(const CoframeWord& w, const ModeVector& m, Complex c);

  BasicForm conjugate() const;
  BasicForm degree_part(int degree) const;
  std::optional<int> pure_degree() const;
  std::vector<int> degrees() const;
  int bandwidth() const;
  // Drops coefficients with |c| <= tol.
  BasicForm pruned(double tol) const;
  std::size_t term_count() const;

  BasicForm& operator+=(const BasicForm& o);
  BasicForm& operator-=(const BasicForm& o);
  BasicForm& operator*=(Complex c);

  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  friend BasicForm operator*(BasicForm a, Complex c) { return a *= c; }
  friend BasicForm operator*(Complex c, BasicForm a) { return a *= c; }
  friend BasicForm operator*(const FourierScalar& f, const BasicForm& a);
  BasicForm operator-() const { return *this * Complex(-1.0); }

  bool operator==(const BasicForm& o) const = default;

 private:
  void check(const BasicForm& o) const;

  int n_ = 0;
  int dims_ = 0;
  Terms terms_;
};

// Complex vector field in the frame dual to the coframe: component g multiplies
// the frame vector that contracts generator g (V_a for g = a-1, conj V_a for g = n+a-1).
class VectorField {
 public:
  VectorField() = default;
  VectorField(int n, int dims);

  // omega^a -> V_a: the frame-dual reading.
  static VectorField frame_dual(const BasicForm& one_form);
  // Metric dual with the complex-bilinear metric: omega^a -> conj V_a.
  static VectorField sharp(const BasicForm& one_form);

  int n() const { return n_; }
  int dims() const { return dims_; }
  const FourierScalar& component(int g) const { return comps_.at(g); }
  void set_component(int g, const FourierScalar& f) { comps_.at(g) = f; }
  bool is_zero() const;

  BasicForm flat() const;
  VectorField conjugate() const;
  // Complex J on vectors: i on V_a, -i on conj V_a.
  VectorField apply_j() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator*=(Complex c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator*(Complex c, VectorField a) { return a *= c; }

 private:
  int n_ = 0;
  int dims_ = 0;
  std::vector<FourierScalar> comps_;
};

}  // namespace foliage
