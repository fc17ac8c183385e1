#pragma once
#include <array>
#include <cmath>

#include "rotwave/grid.hpp"

namespace rotwave {

inline double reduce_angle(double theta) {
    const double two_pi = 2.0 * M_PI;
    double t = std::fmod(theta, two_pi);
    if (t < 0) t += two_pi;
    return t;
}

// Chart point (theta, b1, b2) of SE(2); theta stored reduced mod 2*pi.
struct GroupElement {
    double theta = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;

    GroupElement() = default;
    GroupElement(double th, double x, double y) : theta(reduce_angle(th)), b1(x), b2(y) {}
    static GroupElement identity() { return {}; }
};

GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

// Isometric action (T_g f)(y) = f(R_{-theta}(y - b)) by bicubic interpolation.
// Samples outside the grid take `fill` (the asymptotic constant, 0 after the
// u_inf shift) in decay-clamped mode and wrap in periodic mode.
Field act(const GroupElement& g, const Field& f, double fill = 0.0);

struct ActDerivatives {
    Field dtheta, db1, db2;
};

// Derivatives of gamma -> T_gamma f at gamma = g, computed by differentiating
// f on the grid first and then acting:
//   d/dtheta = -T_g(dpsi f)
//   d/db_i   = -(T_g grad f)^T R_{-theta} e_i
ActDerivatives act_derivatives(const GroupElement& g, const Field& f, double fill = 0.0);

// Same, reusing precomputed grid derivatives of f.
ActDerivatives act_derivatives_pre(const GroupElement& g, const Field& f1,
                                   const Field& f2, const Field& fpsi, double fill = 0.0);

// T_g((grad f)^T R_{-theta+pi/2} b): the extra term in
// dpsi(T_g f) = T_g(dpsi f) + correction.
Field noncomm_correction(const GroupElement& g, const Field& f);
Field noncomm_correction_pre(const GroupElement& g, const Field& f1, const Field& f2);

// T_g dpsi T_{-g} = dpsi + b1 d/dy2 - b2 d/dy1 (rotational derivative about (-b1,-b2)).
Field rot_derivative_shifted(const GroupElement& g, const Field& f);

} // namespace rotwave
