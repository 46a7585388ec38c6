#pragma once

#include <vector>

#include "hnewton/types.hpp"

namespace hnewton {

// coefficient lists in ascending degree: p[k] multiplies z^k
using poly = std::vector<cplx>;

cplx polyval(const poly& p, cplx z);
poly polyder(const poly& p);
poly polyadd(const poly& p, const poly& q);
poly polymul(const poly& p, const poly& q);
poly polyscale(const poly& p, cplx s);

// drop trailing (highest-degree) zero coefficients; keeps at least one entry
poly polytrim(poly p);

// exact binomial coefficient, n small enough that this never overflows here
unsigned long long binomial(int n, int k);

}  // namespace hnewton
