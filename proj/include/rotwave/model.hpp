#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rotwave/grid.hpp"
#include "rotwave/se2.hpp"

namespace rotwave {

// Pointwise reaction kinetics with two analytic derivatives.
// jac is row-major N x N; hess is N x N x N with H[(i*N + j)*N + k] = d2 f_i / du_j du_k.
struct Kinetics {
    std::function<void(const double* u, double* f)> f;
    std::function<void(const double* u, double* jac)> jac;
    std::function<void(const double* u, double* hess)> hess;
};

struct ReactionModel {
    std::string name;
    int ncomp = 1;
    std::vector<double> diffusion;  // diagonal of D, positive
    std::vector<double> u_inf;      // asymptotic state before the shift; working fields use 0
    Kinetics kin;
    std::optional<Field> forcing;   // manufactured g, constant in u

    // Working-range clamp radius: |u|^2 is smoothly saturated at clamp_s
    // inside the registry kinetics so derivatives stay bounded.
    double clamp_s = 0.0;
};

// f(u) + g evaluated pointwise on a field.
Field reaction(const ReactionModel& m, const Field& u);
// f'(base) w pointwise.
Field jacobian_apply(const ReactionModel& m, const Field& base, const Field& w);
// All N*N Jacobian entries per node, as an N*N-component field (row-major).
Field jacobian_field(const ReactionModel& m, const Field& base);

// Verifies f/jac/hess consistency by finite differences and that f'(u_inf)
// has eigenvalues with negative real part. Throws ConfigError on failure.
void check_model(const ReactionModel& m);

// Registry model (a): scalar cubic u - u^3 shifted so the asymptotic state is
// stable: f(u) = -2u - 3u^2 - u^3, u_inf = 0.
ReactionModel make_cubic(double diffusivity = 1.0);

// Registry model (b): two-component lambda-omega system with cubic-quintic
// amplitude terms, f(u) = mu(s) u + nu(s) J u, s = |u|^2 smoothly clamped,
//   mu(s) = -m0 + m1 s - m2 s^2,   nu(s) = nu1 s + nu2 s^2,
// J the quarter-turn matrix. Supports a localized rotating wave.
struct SpinnerParams {
    double d = 0.2;    // shared diagonal diffusivity
    double m0 = 0.5;
    double m1 = 2.0;
    double m2 = 1.0;
    double nu1 = 1.0;
    double nu2 = -1.0;
    double clamp_s = 9.0;
};
ReactionModel make_spinner(const SpinnerParams& p = {});

// Rotating-wave profile of the spinner model: solves the radial boundary-value
// problem for the m=1 vortex ansatz by Newton (seeded from a built-in coarse
// profile), then samples it on the grid. Returns the field and the frequency.
struct RadialProfile {
    std::vector<double> r;        // cell-centered radii
    std::vector<double> re, im;   // complex amplitude C(r), u = Re(C e^{i psi}), ...
    double omega = 0.0;
};
RadialProfile solve_spinner_radial(const SpinnerParams& p, double r_max = 16.0, int nr = 1024);
Field spinner_wave_on_grid(const RadialProfile& prof, const Grid& g);

// Attaches a manufactured forcing g := -(D lap u_m + omega dpsi u_m + f(u_m))
// so that (u_m, omega) solves the discrete profile equation exactly. g is
// constant in u, so the linearization is unchanged.
ReactionModel make_manufactured(const ReactionModel& m, const Field& u_m, double omega);

// Empirical ratio ||f(T_g u + w) - f(T_g u) - f'(u) w|| / ((||w|| + |g|) ||w||).
// Returns 0 when ||w|| = 0.
double taylor_remainder_bound(const ReactionModel& m, const Field& base, const Field& w,
                              const GroupElement& gamma);

} // namespace rotwave
