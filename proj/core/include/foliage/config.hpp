#pragma once

namespace foliage {

struct Thresholds {
  double kernel_tol = 1e-8;    // relative singular-value cutoff for kernels and ranks
  double identity_tol = 1e-10; // identity residual threshold
  double class_tol = 1e-8;     // class triviality and automorphy decisions
  int stability_step = 2;      // dims must agree at K and K + step
};

}  // namespace foliage
