#include "foliage/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "foliage/assembly.hpp"
#include "foliage/cohomology.hpp"
#include "foliage/exterior.hpp"
#include "foliage/lefschetz.hpp"
#include "foliage/operators.hpp"
#include "foliage/parallel.hpp"
#include "foliage/random_forms.hpp"

namespace foliage {

namespace {

using Kd = OperatorKind;

constexpr std::size_t kSweepBasisLimit = 400;

// Applies operators while tracking the largest norm seen, which scales the residual.
class Eval {
 public:
  explicit Eval(const FoliationModel& m) : m_(m) {}

  BasicForm ap(Kd k, const BasicForm& x) { return track(apply(m_, k, x), x); }
  BasicForm track(const BasicForm& y) {
    scale_ = std::max(scale_, norm(y));
    return y;
  }
  BasicForm track(const BasicForm& y, const BasicForm& x) {
    scale_ = std::max({scale_, norm(x), norm(y)});
    return y;
  }
  double residual(const BasicForm& r) const {
    const double s = norm(r);
    return s == 0.0 ? 0.0 : s / std::max(scale_, 1e-300);
  }

 private:
  const FoliationModel& m_;
  double scale_ = 0.0;
};

struct Ctx {
  const FoliationModel& m;
  MeanCurvatureParts parts;
  BasicForm df;  // differential of the leafwise deformation
  std::vector<VectorField> frame;  // constant frame fields V_a and conj V_a

  int n() const { return m.n(); }
  int dims() const { return m.dims(); }
};

using TrialFn = std::function<double(const Ctx&, const BasicForm& phi, const BasicForm& psi, const VectorField& x)>;
using MatrixFn = std::function<double(const Ctx&, int Ks)>;

struct Def {
  Def(std::string id_, StructureLevel level_, bool integrable, std::string statement_, TrialFn trial_,
      MatrixFn matrix_ = {})
      : id(std::move(id_)),
        level(level_),
        needs_integrable(integrable),
        statement(std::move(statement_)),
        trial(std::move(trial_)),
        matrix(std::move(matrix_)) {}

  std::string id;
  StructureLevel level;
  bool needs_integrable;
  std::string statement;
  TrialFn trial;        // evaluated on random forms and on the basis sweep
  MatrixFn matrix;      // assembled check, when the identity is a statement about adjoints
  bool form_level = false;  // no input form
  bool real_input = false;
};

double pair_residual(Complex lhs, Complex rhs, double scale) {
  const double d = std::abs(lhs - rhs);
  return d == 0.0 ? 0.0 : d / std::max(scale, 1e-300);
}

// |<X phi, psi> - <phi, Y psi>| relative to the sizes involved.
double adjoint_pair(const std::function<BasicForm(const BasicForm&)>& x,
                    const std::function<BasicForm(const BasicForm&)>& y, const BasicForm& phi, const BasicForm& psi) {
  const BasicForm xp = x(phi);
  const BasicForm yq = y(psi);
  const double scale = norm(xp) * norm(psi) + norm(phi) * norm(yq);
  return pair_residual(inner_product(xp, psi), inner_product(phi, yq), scale);
}

// ||Y - X^H|| / max(||X||, ||Y||) for assembled maps on the truncated basis.
double adjoint_matrix(const Ctx& c, const FormMap& x, const FormMap& y, int Ks) {
  const Component all = Component::all();
  AssembledOperator ax = assemble_map(c.m, "X", x, Ks, all, all);
  AssembledOperator ay = assemble_map(c.m, "Y", y, Ks, all, all);
  SparseMatrix diff = ay.matrix - SparseMatrix(ax.matrix.adjoint());
  const double scale = std::max(ax.matrix.norm(), ay.matrix.norm());
  const double d = diff.norm();
  return d == 0.0 ? 0.0 : d / std::max(scale, 1e-300);
}

BasicForm corr_contract(const BasicForm& one_form, const BasicForm& a) {
  return contract(VectorField::sharp(one_form), a);
}

BasicForm commutator(Eval& e, Kd a, Kd b, const BasicForm& phi) { return e.ap(a, e.ap(b, phi)) - e.ap(b, e.ap(a, phi)); }

BasicForm anticommutator(Eval& e, Kd a, Kd b, const BasicForm& phi) {
  return e.ap(a, e.ap(b, phi)) + e.ap(b, e.ap(a, phi));
}

// {D, v⌟} phi for a vector field v.
BasicForm anti_contract(Eval& e, Kd d, const VectorField& v, const BasicForm& phi) {
  return e.ap(d, e.track(contract(v, phi))) + e.track(contract(v, e.ap(d, phi)));
}

double worst(std::initializer_list<double> v) { return *std::max_element(v.begin(), v.end()); }

std::vector<Def> definitions() {
  std::vector<Def> d;
  using L = StructureLevel;

  d.push_back({"I1", L::riemannian, false, "d_B^2 = 0 and d_T^2 = 0",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m);
                 return worst({e1.residual(e1.ap(Kd::d_B, e1.ap(Kd::d_B, phi))),
                               e2.residual(e2.ap(Kd::d_T, e2.ap(Kd::d_T, phi)))});
               }});

  d.push_back({"I2", L::riemannian, false, "delta_B = delta_T + kappa^# ⌟",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e(c.m);
                 return e.residual(e.ap(Kd::delta_B, phi) - e.ap(Kd::delta_T, phi) -
                                   e.ap(Kd::kappa_sharp_contract, phi));
               }});

  d.push_back(
      {"I3", L::riemannian, false, "delta_B, delta_T are the adjoints of d_B, d_T (deformation term (df)^# ⌟)",
       [](const Ctx& c, const BasicForm& phi, const BasicForm& psi, const VectorField&) {
         auto yb = [&](const BasicForm& a) { return apply(c.m, Kd::delta_B, a) - corr_contract(c.df, a); };
         auto yt = [&](const BasicForm& a) { return apply(c.m, Kd::delta_T, a) - corr_contract(c.df, a); };
         return worst({adjoint_pair([&](const BasicForm& a) { return apply(c.m, Kd::d_B, a); }, yb, phi, psi),
                       adjoint_pair([&](const BasicForm& a) { return apply(c.m, Kd::d_T, a); }, yt, phi, psi)});
       },
       [](const Ctx& c, int Ks) {
         FormMap yb = [&](const BasicForm& a) { return apply(c.m, Kd::delta_B, a) - corr_contract(c.df, a); };
         FormMap yt = [&](const BasicForm& a) { return apply(c.m, Kd::delta_T, a) - corr_contract(c.df, a); };
         return worst({adjoint_matrix(c, [&](const BasicForm& a) { return apply(c.m, Kd::d_B, a); }, yb, Ks),
                       adjoint_matrix(c, [&](const BasicForm& a) { return apply(c.m, Kd::d_T, a); }, yt, Ks)});
       }});

  d.push_back({"I4", L::riemannian, false, "d_T(1) = -kappa_B, d_B kappa_B = 0, delta_B^2 = delta_T^2 = 0",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m), e3(c.m), e4(c.m);
                 const BasicForm one = BasicForm::constant(c.n(), c.dims(), 1.0);
                 return worst({e1.residual(e1.ap(Kd::d_T, one) + e1.track(c.m.kappa())),
                               e2.residual(e2.ap(Kd::d_B, c.m.kappa())),
                               e3.residual(e3.ap(Kd::delta_B, e3.ap(Kd::delta_B, phi))),
                               e4.residual(e4.ap(Kd::delta_T, e4.ap(Kd::delta_T, phi)))});
               }});

  d.push_back({"I5", L::riemannian, false, "Delta_B = Delta_T + kappa^#⌟ d_B + d_B kappa^#⌟",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e(c.m);
                 return e.residual(e.ap(Kd::Delta_B, phi) - e.ap(Kd::Delta_T, phi) -
                                   anticommutator(e, Kd::kappa_sharp_contract, Kd::d_B, phi));
               }});

  d.push_back({"I6", L::hermitian, true, "d_B = del_B + delbar_B and d_T = del_T + delbar_T",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m);
                 return worst({e1.residual(e1.ap(Kd::d_B, phi) - e1.ap(Kd::del_B, phi) - e1.ap(Kd::delbar_B, phi)),
                               e2.residual(e2.ap(Kd::d_T, phi) - e2.ap(Kd::del_T, phi) - e2.ap(Kd::delbar_T, phi))});
               }});

  d.push_back({"I7", L::hermitian, true, "del_B^2 = delbar_B^2 = {del_B, delbar_B} = 0 and del_T^2 = 0",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m), e3(c.m), e4(c.m);
                 return worst({e1.residual(e1.ap(Kd::del_B, e1.ap(Kd::del_B, phi))),
                               e2.residual(e2.ap(Kd::delbar_B, e2.ap(Kd::delbar_B, phi))),
                               e3.residual(anticommutator(e3, Kd::del_B, Kd::delbar_B, phi)),
                               e4.residual(e4.ap(Kd::del_T, e4.ap(Kd::del_T, phi)))});
               }});

  d.push_back({"I8", L::hermitian, false, "del_B^* = del_T^* + H10⌟ and delbar_B^* = delbar_T^* + H01⌟",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m);
                 return worst({e1.residual(e1.ap(Kd::del_B_star, phi) - e1.ap(Kd::del_T_star, phi) -
                                           e1.ap(Kd::h10_contract, phi)),
                               e2.residual(e2.ap(Kd::delbar_B_star, phi) - e2.ap(Kd::delbar_T_star, phi) -
                                           e2.ap(Kd::h01_contract, phi))});
               }});

  d.push_back(
      {"I9", L::hermitian, false,
       "del_B^*, delbar_B^* are the adjoints of del_B, delbar_B (deformation terms (delbar f)^#⌟, (del f)^#⌟)",
       [](const Ctx& c, const BasicForm& phi, const BasicForm& psi, const VectorField&) {
         const BasicForm df10 = bidegree_project(c.df, 1, 0), df01 = bidegree_project(c.df, 0, 1);
         auto y1 = [&](const BasicForm& a) { return apply(c.m, Kd::del_B_star, a) - corr_contract(df01, a); };
         auto y2 = [&](const BasicForm& a) { return apply(c.m, Kd::delbar_B_star, a) - corr_contract(df10, a); };
         return worst({adjoint_pair([&](const BasicForm& a) { return apply(c.m, Kd::del_B, a); }, y1, phi, psi),
                       adjoint_pair([&](const BasicForm& a) { return apply(c.m, Kd::delbar_B, a); }, y2, phi,
                                    psi)});
       },
       [](const Ctx& c, int Ks) {
         const BasicForm df10 = bidegree_project(c.df, 1, 0), df01 = bidegree_project(c.df, 0, 1);
         FormMap y1 = [&](const BasicForm& a) { return apply(c.m, Kd::del_B_star, a) - corr_contract(df01, a); };
         FormMap y2 = [&](const BasicForm& a) { return apply(c.m, Kd::delbar_B_star, a) - corr_contract(df10, a); };
         return worst({adjoint_matrix(c, [&](const BasicForm& a) { return apply(c.m, Kd::del_B, a); }, y1, Ks),
                       adjoint_matrix(c, [&](const BasicForm& a) { return apply(c.m, Kd::delbar_B, a); }, y2, Ks)});
       }});

  Def i10{"I10", L::hermitian, true,
          "del_B kappa^{1,0} = delbar_B kappa^{0,1} = del_T kappa^{1,0} = 0, del_B kappa^{0,1} imaginary",
          [](const Ctx& c, const BasicForm&, const BasicForm&, const VectorField&) {
            Eval e1(c.m), e2(c.m), e3(c.m), e4(c.m);
            const BasicForm eta = e4.ap(Kd::del_B, c.parts.kappa01);
            return worst({e1.residual(e1.ap(Kd::del_B, c.parts.kappa10)),
                          e2.residual(e2.ap(Kd::delbar_B, c.parts.kappa01)),
                          e3.residual(e3.ap(Kd::del_T, c.parts.kappa10)), e4.residual(eta + eta.conjugate())});
          }};
  i10.form_level = true;
  d.push_back(i10);

  Def i11{"I11", L::hermitian, true, "delbar_B (del_B kappa^{0,1}) = 0",
          [](const Ctx& c, const BasicForm&, const BasicForm&, const VectorField&) {
            Eval e(c.m);
            return e.residual(e.ap(Kd::delbar_B, e.ap(Kd::del_B, c.parts.kappa01)));
          }};
  i11.form_level = true;
  d.push_back(i11);

  d.push_back({"I12", L::hermitian, false,
               "Box_B = Delta_del^Q + {del_B, H10⌟} and Boxbar_B = Delta_delbar^Q + {delbar_B, H01⌟}",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m);
                 return worst({e1.residual(e1.ap(Kd::Box_B, phi) - e1.ap(Kd::Delta_del_Q, phi) -
                                           anti_contract(e1, Kd::del_B, c.parts.h10, phi)),
                               e2.residual(e2.ap(Kd::Boxbar_B, phi) - e2.ap(Kd::Delta_delbar_Q, phi) -
                                           anti_contract(e2, Kd::delbar_B, c.parts.h01, phi))});
               }});

  d.push_back({"I13", L::hermitian, false, "[Lambda, L] = A, [A, L] = -2L, [A, Lambda] = 2 Lambda with A = sum (n-r) P_r",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m), e3(c.m);
                 auto A = [&](Eval& e, const BasicForm& x) { return e.track(counting_operator(c.m, x), x); };
                 const BasicForm r1 = commutator(e1, Kd::Lambda, Kd::L, phi) - A(e1, phi);
                 const BasicForm r2 = A(e2, e2.ap(Kd::L, phi)) - e2.ap(Kd::L, A(e2, phi)) + 2.0 * e2.ap(Kd::L, phi);
                 const BasicForm r3 =
                     A(e3, e3.ap(Kd::Lambda, phi)) - e3.ap(Kd::Lambda, A(e3, phi)) - 2.0 * e3.ap(Kd::Lambda, phi);
                 return worst({e1.residual(r1), e2.residual(r2), e3.residual(r3)});
               }});

  d.push_back(
      {"I14", L::hermitian, false,
       "<L phi, psi> = <phi, Lambda psi>, Lambda = (-1)^j *L* on j-forms, [L,J] = [Lambda,J] = 0, "
       "[L, X⌟] = eps(J X^b), [Lambda, eps(X^b)] = -(JX)⌟",
       [](const Ctx& c, const BasicForm& phi, const BasicForm& psi, const VectorField& x) {
         std::vector<double> r;
         r.push_back(adjoint_pair([&](const BasicForm& a) { return lefschetz_l(c.m, a); },
                                  [&](const BasicForm& a) { return lambda_dual(c.m, a); }, phi, psi));
         {
           Eval e(c.m);
           BasicForm rhs(c.n(), c.dims());
           for (int j : phi.degrees()) {
             const BasicForm pj = phi.degree_part(j);
             rhs += (j % 2 ? -1.0 : 1.0) * e.track(hodge_star(e.ap(Kd::L, e.track(hodge_star(pj)))));
           }
           r.push_back(e.residual(e.ap(Kd::Lambda, phi) - rhs));
         }
         {
           Eval e1(c.m), e2(c.m);
           r.push_back(e1.residual(commutator(e1, Kd::L, Kd::J, phi)));
           r.push_back(e2.residual(commutator(e2, Kd::Lambda, Kd::J, phi)));
         }
         std::vector<VectorField> fields = c.frame;
         fields.push_back(x);
         for (const VectorField& v : fields) {
           Eval e1(c.m), e2(c.m);
           const BasicForm xf = v.flat();
           const BasicForm jxf = j_on_forms(xf);
           const BasicForm lx = e1.ap(Kd::L, e1.track(contract(v, phi))) - e1.track(contract(v, e1.ap(Kd::L, phi)));
           r.push_back(e1.residual(lx - e1.track(wedge(jxf, phi))));
           const BasicForm le = e2.ap(Kd::Lambda, e2.track(wedge(xf, phi))) - e2.track(wedge(xf, e2.ap(Kd::Lambda, phi)));
           r.push_back(e2.residual(le + e2.track(contract(v.apply_j(), phi))));
         }
         return *std::max_element(r.begin(), r.end());
       }});

  d.push_back({"I15", L::kahler, false, "[L, d_B] = [Lambda, delta_B] = 0 and [L, d_T] = [Lambda, delta_T] = 0",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m), e3(c.m), e4(c.m);
                 return worst({e1.residual(commutator(e1, Kd::L, Kd::d_B, phi)),
                               e2.residual(commutator(e2, Kd::Lambda, Kd::delta_B, phi)),
                               e3.residual(commutator(e3, Kd::L, Kd::d_T, phi)),
                               e4.residual(commutator(e4, Kd::Lambda, Kd::delta_T, phi))});
               }});

  d.push_back({"I16", L::kahler, false,
               "[Lambda, del_B] = -i delbar_T^*, [L, del_B^*] = -i delbar_T and the conjugate relations",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 const Complex i(0, 1);
                 Eval e1(c.m), e2(c.m), e3(c.m), e4(c.m);
                 return worst({e1.residual(commutator(e1, Kd::Lambda, Kd::del_B, phi) + i * e1.ap(Kd::delbar_T_star, phi)),
                               e2.residual(commutator(e2, Kd::L, Kd::del_B_star, phi) + i * e2.ap(Kd::delbar_T, phi)),
                               e3.residual(commutator(e3, Kd::Lambda, Kd::delbar_B, phi) - i * e3.ap(Kd::del_T_star, phi)),
                               e4.residual(commutator(e4, Kd::L, Kd::delbar_B_star, phi) - i * e4.ap(Kd::del_T, phi))});
               }});

  d.push_back({"I17", L::kahler, false, "[Boxbar_B, L] = [Box_B, L] = i eps(delbar_B kappa^{1,0})",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 const Complex i(0, 1);
                 const BasicForm k = apply(c.m, Kd::delbar_B, c.parts.kappa10);
                 Eval e1(c.m), e2(c.m);
                 return worst({e1.residual(commutator(e1, Kd::Boxbar_B, Kd::L, phi) - i * e1.track(wedge(k, phi))),
                               e2.residual(commutator(e2, Kd::Box_B, Kd::L, phi) - i * e2.track(wedge(k, phi)))});
               }});

  d.push_back({"I18", L::kahler, false, "Delta_B = Box_B + Boxbar_B + {del_B, H01⌟} + {delbar_B, H10⌟}",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e(c.m);
                 return e.residual(e.ap(Kd::Delta_B, phi) - e.ap(Kd::Box_B, phi) - e.ap(Kd::Boxbar_B, phi) -
                                   anti_contract(e, Kd::del_B, c.parts.h01, phi) -
                                   anti_contract(e, Kd::delbar_B, c.parts.h10, phi));
               }});

  Def i19{"I19", L::kahler, false,
          "d_c = i(delbar_B - del_B) = C^{-1} d_B C, d_c^* = i(del_B^* - delbar_B^*), d_B d_c = 2i del_B delbar_B "
          "= -d_c d_B, d_c real, d_c^* adjoint of d_c",
          [](const Ctx& c, const BasicForm& phi, const BasicForm& psi, const VectorField&) {
            const Complex i(0, 1);
            std::vector<double> r;
            {
              Eval e(c.m);
              r.push_back(e.residual(e.ap(Kd::d_c, phi) - i * (e.ap(Kd::delbar_B, phi) - e.ap(Kd::del_B, phi))));
            }
            {
              Eval e(c.m);
              r.push_back(e.residual(e.ap(Kd::d_c, phi) - e.ap(Kd::C_inv, e.ap(Kd::d_B, e.ap(Kd::C, phi)))));
            }
            {
              Eval e(c.m);
              r.push_back(e.residual(e.ap(Kd::d_c_star, phi) -
                                     i * (e.ap(Kd::del_B_star, phi) - e.ap(Kd::delbar_B_star, phi))));
            }
            {
              Eval e(c.m);
              const BasicForm ddc = e.ap(Kd::d_B, e.ap(Kd::d_c, phi));
              r.push_back(e.residual(ddc - 2.0 * i * e.ap(Kd::del_B, e.ap(Kd::delbar_B, phi))));
              r.push_back(e.residual(ddc + e.ap(Kd::d_c, e.ap(Kd::d_B, phi))));
            }
            {
              Eval e(c.m);
              const BasicForm re = e.track((phi + phi.conjugate()) * Complex(0.5));
              const BasicForm out = e.ap(Kd::d_c, re);
              r.push_back(e.residual(out - out.conjugate()));
            }
            auto y = [&](const BasicForm& a) {
              return apply(c.m, Kd::d_c_star, a) - c_weil(corr_contract(c.df, c_weil(a)), true);
            };
            r.push_back(adjoint_pair([&](const BasicForm& a) { return apply(c.m, Kd::d_c, a); }, y, phi, psi));
            return *std::max_element(r.begin(), r.end());
          },
          [](const Ctx& c, int Ks) {
            FormMap y = [&](const BasicForm& a) {
              return apply(c.m, Kd::d_c_star, a) - c_weil(corr_contract(c.df, c_weil(a)), true);
            };
            return adjoint_matrix(c, [&](const BasicForm& a) { return apply(c.m, Kd::d_c, a); }, y, Ks);
          }};
  d.push_back(i19);

  d.push_back({"I20", L::kahler_automorphic, false,
               "{delbar_B, H10⌟} = 0, Delta_B = Box_B + Boxbar_B, Delta_B preserves bidegree",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m), e3(c.m);
                 const BasicForm lap = e3.ap(Kd::Delta_B, phi);
                 BasicForm off = lap;
                 for (int r = 0; r <= c.n(); ++r)
                   for (int s = 0; s <= c.n(); ++s)
                     off -= bidegree_project(e3.ap(Kd::Delta_B, bidegree_project(phi, r, s)), r, s);
                 return worst({e1.residual(anti_contract(e1, Kd::delbar_B, c.parts.h10, phi)),
                               e2.residual(e2.ap(Kd::Delta_B, phi) - e2.ap(Kd::Box_B, phi) - e2.ap(Kd::Boxbar_B, phi)),
                               e3.residual(off)});
               }});

  d.push_back({"I21", L::taut, false, "delta_B d_c + d_c delta_B = 0",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e(c.m);
                 return e.residual(anticommutator(e, Kd::delta_B, Kd::d_c, phi));
               }});

  d.push_back({"I22", L::taut, false, "Delta_{d_c} = Delta_B = C^{-1} Delta_B C",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m);
                 return worst({e1.residual(e1.ap(Kd::Delta_d_c, phi) - e1.ap(Kd::Delta_B, phi)),
                               e2.residual(e2.ap(Kd::Delta_B, phi) -
                                           e2.ap(Kd::C_inv, e2.ap(Kd::Delta_B, e2.ap(Kd::C, phi))))});
               }});

  d.push_back({"I23", L::taut, false, "Delta_B = 2 Box_B = 2 Boxbar_B",
               [](const Ctx& c, const BasicForm& phi, const BasicForm&, const VectorField&) {
                 Eval e1(c.m), e2(c.m);
                 return worst({e1.residual(e1.ap(Kd::Delta_B, phi) - 2.0 * e1.ap(Kd::Box_B, phi)),
                               e2.residual(e2.ap(Kd::Delta_B, phi) - 2.0 * e2.ap(Kd::Boxbar_B, phi))});
               }});
  return d;
}

int id_number(const std::string& id) { return std::stoi(id.substr(1)); }

bool selected(const std::string& filter, const Def& def) {
  if (filter == "all" || filter.empty()) return true;
  for (StructureLevel l : {StructureLevel::riemannian, StructureLevel::hermitian, StructureLevel::kahler,
                           StructureLevel::kahler_automorphic, StructureLevel::taut})
    if (filter == to_string(l)) return def.level == l;
  std::stringstream ss(filter);
  std::string item;
  while (std::getline(ss, item, ','))
    if (item == def.id) return true;
  return false;
}

void validate_filter(const std::string& filter, const std::vector<Def>& defs) {
  if (filter == "all" || filter.empty()) return;
  for (StructureLevel l : {StructureLevel::riemannian, StructureLevel::hermitian, StructureLevel::kahler,
                           StructureLevel::kahler_automorphic, StructureLevel::taut})
    if (filter == to_string(l)) return;
  std::stringstream ss(filter);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool known = std::any_of(defs.begin(), defs.end(), [&](const Def& d) { return d.id == item; });
    if (!known)
      throw ArgumentError("unknown identity filter '" + item +
                          "'; use all, riemannian, hermitian, kahler, kahler_automorphic, taut or ids I1..I23");
  }
}

// Largest K' <= K whose full truncated basis stays below the sweep limit.
int sweep_truncation(const FoliationModel& m, int K) {
  int best = 0;
  for (int k = 0; k <= K; ++k) {
    std::size_t size = std::size_t(1) << (2 * m.n());
    for (int j = 0; j < m.dims(); ++j) size *= std::size_t(2 * k + 1);
    if (size <= kSweepBasisLimit) best = k;
  }
  return std::max(best, std::min(K, m.bandwidth()));
}

}  // namespace

std::string to_string(StructureLevel level) {
  switch (level) {
    case StructureLevel::riemannian: return "riemannian";
    case StructureLevel::hermitian: return "hermitian";
    case StructureLevel::kahler: return "kahler";
    case StructureLevel::kahler_automorphic: return "kahler_automorphic";
    case StructureLevel::taut: return "taut";
  }
  return "?";
}

StructureLevel parse_structure_level(const std::string& s) {
  for (StructureLevel l : {StructureLevel::riemannian, StructureLevel::hermitian, StructureLevel::kahler,
                           StructureLevel::kahler_automorphic, StructureLevel::taut})
    if (s == to_string(l)) return l;
  throw ArgumentError("unknown structure level '" + s + "'; valid: riemannian, hermitian, kahler, kahler_automorphic, taut");
}

bool IdentitySuiteResult::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const IdentityEntry& e) { return !e.applicable || e.pass; });
}

std::vector<IdentityEntry> identity_catalogue() {
  std::vector<IdentityEntry> out;
  for (const Def& d : definitions()) {
    IdentityEntry e;
    e.id = d.id;
    e.level = d.level;
    e.statement = d.statement;
    out.push_back(e);
  }
  return out;
}

IdentitySuiteResult run_identities(const FoliationModel& model, const std::string& filter, int K, std::uint64_t seed,
                                   int trials, const Thresholds& th) {
  require_truncation(model, K);
  if (trials < 0) throw ArgumentError("trials must be non-negative");
  const std::vector<Def> defs = definitions();
  validate_filter(filter, defs);

  IdentitySuiteResult res;
  res.model_id = model.id();
  res.K = K;
  res.seed = seed;
  res.trials = trials;
  res.filter = filter.empty() ? "all" : filter;
  res.thresholds = th;

  const ModelFlags& fl = model.flags();
  const bool kappa_zero = model.kappa().pruned(0.0).is_zero();
  bool automorphy_known = false;
  AutomorphyTest automorphy;

  std::vector<const Def*> chosen;
  for (const Def& d : defs)
    if (selected(res.filter, d)) chosen.push_back(&d);

  Ctx ctx{model, {}, BasicForm(model.n(), model.dims()), {}};
  if (fl.hermitian) ctx.parts = mean_curvature_parts(model);
  ctx.df = d_basic(model, BasicForm::scalar(model.n(), model.deformation()));
  for (int g = 0; g < 2 * model.n(); ++g) {
    VectorField v(model.n(), model.dims());
    v.set_component(g, FourierScalar::constant(model.dims(), 1.0));
    ctx.frame.push_back(v);
  }

  std::vector<IdentityEntry> entries(chosen.size());
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    const Def& d = *chosen[k];
    IdentityEntry& e = entries[k];
    e.id = d.id;
    e.level = d.level;
    e.statement = d.statement;
    e.applicable = true;
    if (d.level != StructureLevel::riemannian && !fl.hermitian) {
      e.applicable = false;
      e.skip_reason = "model has no transverse complex structure";
    } else if (d.needs_integrable && !fl.integrable) {
      std::ostringstream os;
      os << "transverse J not integrable (Nijenhuis residual " << model.nijenhuis_residual() << ")";
      e.applicable = false;
      e.skip_reason = os.str();
    } else if ((d.level == StructureLevel::kahler || d.level == StructureLevel::kahler_automorphic ||
                d.level == StructureLevel::taut) &&
               !fl.kahler) {
      e.applicable = false;
      e.skip_reason = "model not Kahler (transverse 2-form not closed)";
    } else if (d.level == StructureLevel::kahler_automorphic) {
      if (!automorphy_known) {
        automorphy = automorphic_test(model, K, th);
        automorphy_known = true;
      }
      if (!automorphy.automorphic) {
        std::ostringstream os;
        os << "mean curvature not automorphic ([L_{kappa^#}, J] relative residual " << automorphy.residual_flow
           << ")";
        e.applicable = false;
        e.skip_reason = os.str();
      }
    } else if (d.level == StructureLevel::taut && !kappa_zero) {
      e.applicable = false;
      e.skip_reason = "basic mean curvature not identically zero";
    }
  }

  // One task per (identity, trial) plus one per identity for the sweep.
  struct Task {
    std::size_t entry;
    int trial;  // -1: basis sweep
  };
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    if (!entries[k].applicable) continue;
    if (chosen[k]->form_level) {
      tasks.push_back({k, 0});
      continue;
    }
    for (int t = 0; t < trials; ++t) tasks.push_back({k, t});
    tasks.push_back({k, -1});
  }
  const int Ks = sweep_truncation(model, K);
  std::vector<double> out(tasks.size(), 0.0);

  parallel_for(tasks.size(), [&](std::size_t ti) {
    const Task& task = tasks[ti];
    const Def& d = *chosen[task.entry];
    const std::uint64_t base = mix_seed(seed, std::uint64_t(id_number(d.id)));
    RandomFormSpec fx{mix_seed(base, 1000003), 0, {}, 1.0, true};
    const VectorField x = random_field(model, fx);
    if (d.form_level) {
      const BasicForm zero(model.n(), model.dims());
      out[ti] = d.trial(ctx, zero, zero, x);
      return;
    }
    if (task.trial >= 0) {
      RandomFormSpec sp{mix_seed(base, 2 * std::uint64_t(task.trial)), K, {}, 1.0, d.real_input};
      RandomFormSpec sq{mix_seed(base, 2 * std::uint64_t(task.trial) + 1), K, {}, 1.0, d.real_input};
      RandomFormSpec sx{mix_seed(base, 2 * std::uint64_t(task.trial) + 500009), 1, {}, 1.0, false};
      out[ti] = d.trial(ctx, random_form(model, sp), random_form(model, sq), random_field(model, sx));
      return;
    }
    if (d.matrix) {
      out[ti] = d.matrix(ctx, Ks);
      return;
    }
    double r = 0.0;
    for (const BasisElement& b : truncated_basis(model, Ks, Component::all())) {
      const BasicForm e = basis_form(model, b);
      r = std::max(r, d.trial(ctx, e, e, x));
    }
    out[ti] = r;
  });

  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    IdentityEntry& e = entries[tasks[ti].entry];
    if (tasks[ti].trial < 0) {
      e.matrix_residual = std::max(e.matrix_residual, out[ti]);
      e.sweep_K = Ks;
    } else {
      e.trial_residual = std::max(e.trial_residual, out[ti]);
      e.trials += 1;
    }
  }
  for (IdentityEntry& e : entries) {
    e.max_residual = std::max(e.trial_residual, e.matrix_residual);
    e.pass = e.applicable && e.max_residual <= th.identity_tol;
  }
  std::sort(entries.begin(), entries.end(),
            [](const IdentityEntry& a, const IdentityEntry& b) { return id_number(a.id) < id_number(b.id); });
  res.entries = std::move(entries);
  return res;
}

}  // namespace foliage
