#pragma once

#include "freespec/poly.hpp"

namespace freespec {

/// Jacobi polynomial P_n^{(1,0)}(x), normalized so that P_n^{(1,0)}(1) = n + 1.
Poly jacobi_p10(unsigned n);

/// Generalized Laguerre polynomial L_n^{(1)}(x), with L_n^{(1)}(0) = n + 1.
Poly laguerre_l1(unsigned n);

}  // namespace freespec
