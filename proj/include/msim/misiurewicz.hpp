#pragma once

#include "msim/complex.hpp"

namespace msim {

/// A certified Misiurewicz parameter of the quadratic family: the critical
/// value c0 lands after l steps on a repelling cycle of period p.
struct MisiurewiczData {
    Complex c0{};
    int l = 1;
    int p = 1;
    Complex a0{};       // f_{c0}^l(c0)
    Complex lambda0{};  // (f_{c0}^p)'(a0)
    double residual = 0.0;  // |f^{l+p}(c0) - f^l(c0)|
};

struct NewtonOptions {
    double tol = 1e-13;
    int max_iter = 100;
    /// Residual below which a smaller (l', p') counts as satisfying the relation.
    double minimality_tol = 1e-8;
};

struct SearchOptions {
    int l_max = 12;
    int p_max = 8;
    /// A root further than this from the seed is not accepted as "the" parameter.
    double max_seed_distance = 1e-6;
    NewtonOptions newton{};
};

/// |f_c^{l+p}(c) - f_c^l(c)|.
double relation_residual(Complex c, int l, int p);

/// Newton on F(c) = f_c^{l+p}(c) - f_c^l(c) from `seed`, then certification.
/// Throws Error{NoConvergence | NotMinimal | NotRepelling}.
MisiurewiczData solve_misiurewicz(int l, int p, Complex seed, const NewtonOptions& opts = {});

/// Scans (l, p) in lexicographic order over the search grid and returns the
/// first certified root within `max_seed_distance` of the seed.
MisiurewiczData certify_near(Complex seed, const SearchOptions& opts = {});

/// Newton continuation of a period-p point of f_c from a_seed.
/// Throws NoConvergence, or BasinJump when the root moved more than step_bound.
Complex track_periodic_point(Complex c, Complex a_seed, int p, double tol = 1e-13,
                             double step_bound = 1e-2);

/// (f_c^p)'(a).
Complex multiplier(Complex c, Complex a, int p);

}  // namespace msim
