#pragma once

#include <functional>
#include <vector>

#include "gig/tensor.h"

namespace gig {

// Max over coordinates of |analytic - central difference| / max(1, |analytic|)
// for a scalar function of one tensor. `x` is copied into a fresh leaf, so the
// caller's tensor is left untouched.
double finite_difference_check(const std::function<Tensor(const Tensor&)>& f, const Tensor& x,
                               double step = 1e-5);

// Same check against parameters captured by `loss`. Each parameter is
// perturbed in place and restored; grads are cleared before and after.
double finite_difference_check(const std::function<Tensor()>& loss, std::vector<Tensor> params,
                               double step = 1e-5);

}  // namespace gig
