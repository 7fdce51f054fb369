#pragma once

#include "foliage/basic_form.hpp"

namespace foliage {

BasicForm wedge(const BasicForm& a, const BasicForm& b);

// Interior product by a vector field (graded derivation of degree -1).
BasicForm contract(const VectorField& v, const BasicForm& a);
// Interior product by the frame-dual field of a degree-1 form.
BasicForm contract(const BasicForm& v, const BasicForm& a);
// beta ⌟ a with (b1 ^ b2 ^ ...)⌟ = ... b2^#⌟ b1^#⌟ (sharp is complex-bilinear).
BasicForm form_contract(const BasicForm& beta, const BasicForm& a);

BasicForm bidegree_project(const BasicForm& a, int r, int s);
BasicForm j_on_forms(const BasicForm& a);
BasicForm c_weil(const BasicForm& a, bool inverse = false);

// Unit-norm volume word i^n omega^1 ^ conj omega^1 ^ ... ^ omega^n ^ conj omega^n.
BasicForm volume_form(int n, int dims);
// Complex-linear star, (r,s) -> (n-s, n-r), fixed by phi ^ star(conj psi) = <phi,psi> nu.
BasicForm hodge_star(const BasicForm& a);
// Conjugate-linear star: star(conj a).
BasicForm conjugate_star(const BasicForm& a);

Complex inner_product(const BasicForm& a, const BasicForm& b);
double norm(const BasicForm& a);

// Real coframe elements theta^a = (omega^a + conj omega^a)/sqrt2 and
// J theta^a = (omega^a - conj omega^a)/(i sqrt2), a 1-based.
BasicForm theta(int n, int dims, int a);
BasicForm j_theta(int n, int dims, int a);

// J phi = sum_a J theta^a ^ E_a⌟phi over the real orthonormal frame.
// Slow; kept as an independent check of j_on_forms.
BasicForm j_on_forms_frame_sum(const BasicForm& a);

}  // namespace foliage
