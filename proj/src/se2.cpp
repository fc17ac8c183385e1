#include "rotwave/se2.hpp"

namespace rotwave {

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    const double c = std::cos(g1.theta), s = std::sin(g1.theta);
    return GroupElement(g1.theta + g2.theta,
                        c * g2.b1 - s * g2.b2 + g1.b1,
                        s * g2.b1 + c * g2.b2 + g1.b2);
}

GroupElement inverse(const GroupElement& g) {
    const double c = std::cos(g.theta), s = std::sin(g.theta);
    // R_{-theta} applied to -b
    return GroupElement(-g.theta, -(c * g.b1 + s * g.b2), -(-s * g.b1 + c * g.b2));
}

namespace {

// Keys' cubic convolution kernel weights for fractional offset t in [0,1),
// acting on samples at -1,0,1,2.
inline void cubic_weights(double t, double w[4]) {
    const double t2 = t * t, t3 = t2 * t;
    w[0] = 0.5 * (-t3 + 2 * t2 - t);
    w[1] = 0.5 * (3 * t3 - 5 * t2 + 2);
    w[2] = 0.5 * (-3 * t3 + 4 * t2 + t);
    w[3] = 0.5 * (t3 - t2);
}

} // namespace

Field act(const GroupElement& g, const Field& f, double fill) {
    const Grid& gr = *f.grid;
    const int n = gr.n;
    const bool periodic = (gr.boundary == BoundaryMode::Periodic);
    Field out(gr, f.ncomp);
    const double c = std::cos(g.theta), s = std::sin(g.theta);
    const double inv_h = 1.0 / gr.h;

    for (int j = 0; j < n; ++j) {
        const double y2 = gr.coord(j) - g.b2;
        for (int i = 0; i < n; ++i) {
            const double y1 = gr.coord(i) - g.b1;
            // R_{-theta} (y - b)
            const double x1 = c * y1 + s * y2;
            const double x2 = -s * y1 + c * y2;
            const double u = (x1 + gr.half_width) * inv_h;
            const double v = (x2 + gr.half_width) * inv_h;
            const int iu = (int)std::floor(u);
            const int iv = (int)std::floor(v);
            double wu[4], wv[4];
            cubic_weights(u - iu, wu);
            cubic_weights(v - iv, wv);
            for (int comp = 0; comp < f.ncomp; ++comp) {
                double acc = 0.0;
                for (int b = 0; b < 4; ++b) {
                    const int jj = iv - 1 + b;
                    double row = 0.0;
                    if (periodic) {
                        const int jw = ((jj % n) + n) % n;
                        for (int a = 0; a < 4; ++a) {
                            const int iw = (((iu - 1 + a) % n) + n) % n;
                            row += wu[a] * f.at(comp, iw, jw);
                        }
                    } else if (jj < 0 || jj >= n) {
                        row = fill;
                    } else {
                        for (int a = 0; a < 4; ++a) {
                            const int ii = iu - 1 + a;
                            row += wu[a] * ((ii < 0 || ii >= n) ? fill : f.at(comp, ii, jj));
                        }
                    }
                    acc += wv[b] * row;
                }
                out.at(comp, i, j) = acc;
            }
        }
    }
    return out;
}

ActDerivatives act_derivatives(const GroupElement& g, const Field& f, double fill) {
    Field f1 = partial(f, Axis::Y1);
    Field f2 = partial(f, Axis::Y2);
    Field fpsi = d_psi(f);
    return act_derivatives_pre(g, f1, f2, fpsi, fill);
}

ActDerivatives act_derivatives_pre(const GroupElement& g, const Field& f1,
                                   const Field& f2, const Field& fpsi, double fill) {
    const double c = std::cos(g.theta), s = std::sin(g.theta);
    Field t1 = act(g, f1, fill);
    Field t2 = act(g, f2, fill);
    ActDerivatives d;
    d.dtheta = act(g, fpsi, fill);
    d.dtheta *= -1.0;
    // d/db_i = -(T_g grad f)^T R_{-theta} e_i ; R_{-theta} e1 = (c,-s), e2 = (s,c)
    d.db1 = lin_comb(-c, t1, s, t2);
    d.db2 = lin_comb(-s, t1, -c, t2);
    return d;
}

Field noncomm_correction(const GroupElement& g, const Field& f) {
    return noncomm_correction_pre(g, partial(f, Axis::Y1), partial(f, Axis::Y2));
}

Field noncomm_correction_pre(const GroupElement& g, const Field& f1, const Field& f2) {
    // R_{-theta+pi/2} b, a constant vector
    const double a = -g.theta + M_PI / 2;
    const double c = std::cos(a), s = std::sin(a);
    const double r1 = c * g.b1 - s * g.b2;
    const double r2 = s * g.b1 + c * g.b2;
    Field dir = lin_comb(r1, f1, r2, f2);
    return act(g, dir);
}

Field rot_derivative_shifted(const GroupElement& g, const Field& f) {
    Field r = d_psi(f);
    add_scaled(r, g.b1, partial(f, Axis::Y2));
    add_scaled(r, -g.b2, partial(f, Axis::Y1));
    return r;
}

} // namespace rotwave
