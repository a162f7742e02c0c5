#pragma once

#include <algorithm>
#include <vector>

#include "msim/poincare.hpp"

namespace msim::detail {

// The deepest rows sit around 1e-11, below the evaluator's default Cauchy
// tolerance, so the limit proxy is computed more tightly.
inline constexpr double kProxyTol = 1e-13;

template <class Dynamical, class Parametric>
std::vector<LemmaRow> lemma_rows(PoincareEvaluator ev, double radius, int grid, int k_from,
                                 int k_to, Dynamical&& dyn_k, Parametric&& par_k) {
    ev.tol = std::min(ev.tol, kProxyTol);
    const auto pts = disk_grid(radius, grid);
    std::vector<Complex> limit;
    limit.reserve(pts.size());
    for (Complex w : pts) limit.push_back(phi(ev, w));

    std::vector<LemmaRow> rows;
    for (int k = k_from; k <= k_to; ++k) {
        LemmaRow row;
        row.k = k;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Complex dyn = dyn_k(k, pts[i]);
            const Complex par = par_k(k, pts[i]);
            row.sup_phik_phi = std::max(row.sup_phik_phi, std::abs(dyn - limit[i]));
            row.sup_Phik_phi = std::max(row.sup_Phik_phi, std::abs(par - limit[i]));
            row.sup_Phik_phik = std::max(row.sup_Phik_phik, std::abs(par - dyn));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace msim::detail
