#include "rackcast/linalg.hpp"

#include <cmath>

namespace rackcast::linalg {

bool cholesky_solve(std::vector<double> a, std::size_t n, std::vector<double> b,
                    std::vector<double>& x) {
    // A = L Lᵀ, lower triangle stored in place.
    for (std::size_t j = 0; j < n; ++j) {
        double d = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
        if (!(d > 0.0)) return false;
        d = std::sqrt(d);
        a[j * n + j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = s / d;
        }
    }
    // Forward then backward substitution.
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= a[i * n + k] * b[k];
        b[i] = s / a[i * n + i];
    }
    x.assign(n, 0.0);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= a[k * n + ii] * x[k];
        x[ii] = s / a[ii * n + ii];
    }
    return true;
}

void ridge_normal_equations(const std::vector<std::vector<double>>& x,
                            const std::vector<double>& y, double lambda,
                            std::vector<double>& gram, std::vector<double>& rhs) {
    const std::size_t n = x.size();
    const std::size_t p = n ? x[0].size() : 0;
    const std::size_t m = p + 1; // leading intercept column
    gram.assign(m * m, 0.0);
    rhs.assign(m, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& row = x[r];
        gram[0] += 1.0;
        rhs[0] += y[r];
        for (std::size_t i = 0; i < p; ++i) {
            gram[(i + 1) * m] += row[i];
            rhs[i + 1] += row[i] * y[r];
            for (std::size_t j = 0; j <= i; ++j)
                gram[(i + 1) * m + (j + 1)] += row[i] * row[j];
        }
    }
    // Mirror the lower triangle and add the ridge.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < i; ++j) gram[j * m + i] = gram[i * m + j];
        gram[i * m + i] += lambda;
    }
}

} // namespace rackcast::linalg
