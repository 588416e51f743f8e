#include "gig/gradcheck.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gig {

double finite_difference_check(const std::function<Tensor(const Tensor&)>& f, const Tensor& x,
                               double step) {
    Tensor leaf = Tensor::from(x.shape(), std::vector<double>(x.data().begin(), x.data().end()), true);
    return finite_difference_check([&] { return f(leaf); }, {leaf}, step);
}

double finite_difference_check(const std::function<Tensor()>& loss, std::vector<Tensor> params,
                               double step) {
    for (auto& p : params) p.zero_grad();
    loss().backward();
    double worst = 0.0;
    for (auto& p : params) {
        const auto analytic = p.grad();
        auto values = p.mutable_data();
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double saved = values[i];
            values[i] = saved + step;
            const double up = loss().item();
            values[i] = saved - step;
            const double down = loss().item();
            values[i] = saved;
            const double numeric = (up - down) / (2.0 * step);
            const double err = std::abs(analytic[i] - numeric) / std::max(1.0, std::abs(analytic[i]));
            if (std::isnan(err)) return std::numeric_limits<double>::quiet_NaN();
            worst = std::max(worst, err);
        }
    }
    for (auto& p : params) p.zero_grad();
    return worst;
}

}  // namespace gig
