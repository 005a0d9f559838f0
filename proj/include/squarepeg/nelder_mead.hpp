#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace squarepeg {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

/// Standard Nelder-Mead simplex descent. `scale` gives the per-coordinate
/// initial simplex extent. Stops on max_iters, on simplex collapse, or as
/// soon as the best value drops below `target`.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x0, const std::vector<double>& scale,
                                    int max_iters = 400, double target = -1e300,
                                    double spread_tol = 1e-15) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += scale[i];

    NelderMeadResult res;
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        vals[i] = f(pts[i]);
        ++res.evaluations;
    }

    std::vector<std::size_t> order(n + 1);
    auto sort_order = [&] {
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    };

    for (int iter = 0; iter < max_iters; ++iter) {
        sort_order();
        const std::size_t best = order[0], worst = order[n], second = order[n - 1];
        if (vals[best] <= target) break;
        if (vals[worst] - vals[best] < spread_tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / n;
        }
        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k)
                p[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
            return p;
        };

        auto refl = blend(-1.0);
        const double frefl = f(refl);
        ++res.evaluations;
        if (frefl < vals[best]) {
            auto exp_p = blend(-2.0);
            const double fexp = f(exp_p);
            ++res.evaluations;
            if (fexp < frefl) {
                pts[worst] = exp_p;
                vals[worst] = fexp;
            } else {
                pts[worst] = refl;
                vals[worst] = frefl;
            }
        } else if (frefl < vals[second]) {
            pts[worst] = refl;
            vals[worst] = frefl;
        } else {
            auto con = blend(frefl < vals[worst] ? -0.5 : 0.5);
            const double fcon = f(con);
            ++res.evaluations;
            if (fcon < std::min(frefl, vals[worst])) {
                pts[worst] = con;
                vals[worst] = fcon;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < n; ++k)
                        pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
                    vals[i] = f(pts[i]);
                    ++res.evaluations;
                }
            }
        }
    }
    sort_order();
    res.x = pts[order[0]];
    res.value = vals[order[0]];
    return res;
}

}  // namespace squarepeg
