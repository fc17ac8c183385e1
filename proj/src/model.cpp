#include "rotwave/model.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>

namespace rotwave {

Field reaction(const ReactionModel& m, const Field& u) {
    if (!u.finite()) throw std::invalid_argument("reaction: non-finite input field");
    const int N = m.ncomp;
    const int plane = u.grid->size();
    Field r(*u.grid, N);
    std::vector<double> uu(N), ff(N);
    for (int k = 0; k < plane; ++k) {
        for (int c = 0; c < N; ++c) uu[c] = u.v[(size_t)c * plane + k];
        m.kin.f(uu.data(), ff.data());
        for (int c = 0; c < N; ++c) r.v[(size_t)c * plane + k] = ff[c];
    }
    if (m.forcing) r += *m.forcing;
    return r;
}

Field jacobian_apply(const ReactionModel& m, const Field& base, const Field& w) {
    check_compatible(base, w);
    const int N = m.ncomp;
    const int plane = base.grid->size();
    Field r(*base.grid, N);
    std::vector<double> uu(N), J(N * N);
    for (int k = 0; k < plane; ++k) {
        for (int c = 0; c < N; ++c) uu[c] = base.v[(size_t)c * plane + k];
        m.kin.jac(uu.data(), J.data());
        for (int i = 0; i < N; ++i) {
            double acc = 0.0;
            for (int j = 0; j < N; ++j) acc += J[i * N + j] * w.v[(size_t)j * plane + k];
            r.v[(size_t)i * plane + k] = acc;
        }
    }
    return r;
}

Field jacobian_field(const ReactionModel& m, const Field& base) {
    const int N = m.ncomp;
    const int plane = base.grid->size();
    Field r(*base.grid, N * N);
    std::vector<double> uu(N), J(N * N);
    for (int k = 0; k < plane; ++k) {
        for (int c = 0; c < N; ++c) uu[c] = base.v[(size_t)c * plane + k];
        m.kin.jac(uu.data(), J.data());
        for (int e = 0; e < N * N; ++e) r.v[(size_t)e * plane + k] = J[e];
    }
    return r;
}

namespace {

void fd_consistency(const ReactionModel& m) {
    const int N = m.ncomp;
    std::vector<double> u(N), f0(N), f1(N), J(N * N), H(N * N * N);
    // a few probe points in the working range
    for (int probe = 0; probe < 5; ++probe) {
        for (int c = 0; c < N; ++c) u[c] = 0.3 * (probe + 1) * ((c % 2) ? -0.7 : 1.0);
        m.kin.f(u.data(), f0.data());
        m.kin.jac(u.data(), J.data());
        m.kin.hess(u.data(), H.data());
        const double d = 1e-5;
        for (int j = 0; j < N; ++j) {
            std::vector<double> up(u), um(u);
            up[j] += d;
            um[j] -= d;
            std::vector<double> fp(N), fm(N), Jp(N * N), Jm(N * N);
            m.kin.f(up.data(), fp.data());
            m.kin.f(um.data(), fm.data());
            m.kin.jac(up.data(), Jp.data());
            m.kin.jac(um.data(), Jm.data());
            for (int i = 0; i < N; ++i) {
                const double fd = (fp[i] - fm[i]) / (2 * d);
                if (std::abs(fd - J[i * N + j]) > 1e-6 * (1 + std::abs(fd)))
                    throw ConfigError("model " + m.name + ": jac inconsistent with f");
                for (int k = 0; k < N; ++k) {
                    const double hd = (Jp[i * N + k] - Jm[i * N + k]) / (2 * d);
                    if (std::abs(hd - H[(i * N + j) * N + k]) > 1e-5 * (1 + std::abs(hd)))
                        throw ConfigError("model " + m.name + ": hess inconsistent with jac");
                }
            }
        }
    }
}

} // namespace

void check_model(const ReactionModel& m) {
    const int N = m.ncomp;
    if ((int)m.diffusion.size() != N) throw ConfigError("diffusion size != ncomp");
    for (double d : m.diffusion)
        if (d <= 0) throw ConfigError("diffusion entries must be positive");
    // f(u_inf) = 0 in shifted coordinates
    std::vector<double> zero(N, 0.0), f0(N);
    m.kin.f(zero.data(), f0.data());
    for (double x : f0)
        if (std::abs(x) > 1e-12) throw ConfigError("model " + m.name + ": f(u_inf) != 0");
    // symmetric part of f'(u_inf) negative definite
    std::vector<double> J(N * N);
    m.kin.jac(zero.data(), J.data());
    if (N == 1) {
        if (J[0] >= 0) throw ConfigError("f'(u_inf) not negative definite");
    } else if (N == 2) {
        const double a = J[0], bc = 0.5 * (J[1] + J[2]), d = J[3];
        const double tr = a + d, det = a * d - bc * bc;
        if (!(tr < 0 && det > 0)) throw ConfigError("f'(u_inf) not negative definite");
    } else {
        throw ConfigError("check_model: only N<=2 registry models supported");
    }
    fd_consistency(m);
}

ReactionModel make_cubic(double diffusivity) {
    ReactionModel m;
    m.name = "cubic";
    m.ncomp = 1;
    m.diffusion = {diffusivity};
    m.u_inf = {1.0}; // unshifted stable state of u - u^3; fields are shifted by it
    m.kin.f = [](const double* u, double* f) {
        f[0] = -2.0 * u[0] - 3.0 * u[0] * u[0] - u[0] * u[0] * u[0];
    };
    m.kin.jac = [](const double* u, double* J) {
        J[0] = -2.0 - 6.0 * u[0] - 3.0 * u[0] * u[0];
    };
    m.kin.hess = [](const double* u, double* H) { H[0] = -6.0 - 6.0 * u[0]; };
    check_model(m);
    return m;
}

ReactionModel make_spinner(const SpinnerParams& p) {
    ReactionModel m;
    m.name = "spinner";
    m.ncomp = 2;
    m.diffusion = {p.d, p.d};
    m.u_inf = {0.0, 0.0};
    m.clamp_s = p.clamp_s;
    const double m0 = p.m0, m1 = p.m1, m2 = p.m2, n1 = p.nu1, n2 = p.nu2, cs = p.clamp_s;

    auto clamp = [cs](double sr, double& s, double& s1, double& s2) {
        // s = cs * tanh(sr / cs); s1 = ds/dsr; s2 = d2s/dsr2
        const double t = std::tanh(sr / cs);
        const double sech2 = 1.0 - t * t;
        s = cs * t;
        s1 = sech2;
        s2 = -2.0 * sech2 * t / cs;
    };

    m.kin.f = [=](const double* u, double* f) {
        double s, s1, s2;
        clamp(u[0] * u[0] + u[1] * u[1], s, s1, s2);
        const double mu = -m0 + m1 * s - m2 * s * s;
        const double nu = n1 * s + n2 * s * s;
        f[0] = mu * u[0] - nu * u[1];
        f[1] = nu * u[0] + mu * u[1];
    };
    m.kin.jac = [=](const double* u, double* J) {
        double s, s1, s2;
        clamp(u[0] * u[0] + u[1] * u[1], s, s1, s2);
        const double mu = -m0 + m1 * s - m2 * s * s;
        const double nu = n1 * s + n2 * s * s;
        const double mup = (m1 - 2 * m2 * s) * s1; // d mu / d s_raw
        const double nup = (n1 + 2 * n2 * s) * s1;
        const double g1 = mup * u[0] - nup * u[1]; // d f / d s_raw, components
        const double g2 = nup * u[0] + mup * u[1];
        J[0] = mu + g1 * 2 * u[0];
        J[1] = -nu + g1 * 2 * u[1];
        J[2] = nu + g2 * 2 * u[0];
        J[3] = mu + g2 * 2 * u[1];
    };
    m.kin.hess = [=](const double* u, double* H) {
        const double sr = u[0] * u[0] + u[1] * u[1];
        double s, s1, s2;
        clamp(sr, s, s1, s2);
        const double mus = m1 - 2 * m2 * s;   // d mu / d s
        const double nus = n1 + 2 * n2 * s;
        const double muss = -2 * m2, nuss = 2 * n2;
        // chain to raw variable q = s_raw: dmu/dq = mus*s1; d2mu/dq2 = muss*s1^2 + mus*s2
        const double mu1 = mus * s1, nu1d = nus * s1;
        const double mu2 = muss * s1 * s1 + mus * s2;
        const double nu2d = nuss * s1 * s1 + nus * s2;
        const double q_k[2] = {2 * u[0], 2 * u[1]}; // dq/du_k
        // f_i = mu u_i_part...: write f = A(q) u with A = mu I + nu J
        // d2 f_i / du_k du_l = A'_{i k} q_l + A'_{i l} q_k + (A'' u)_i q_k q_l + (A' u)_i * 2 delta_kl
        const double Apu[2] = {mu1 * u[0] - nu1d * u[1], nu1d * u[0] + mu1 * u[1]};
        const double Appu[2] = {mu2 * u[0] - nu2d * u[1], nu2d * u[0] + mu2 * u[1]};
        const double Ap[2][2] = {{mu1, -nu1d}, {nu1d, mu1}};
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    double v = Ap[i][k] * q_k[l] + Ap[i][l] * q_k[k] + Appu[i] * q_k[k] * q_k[l];
                    if (k == l) v += Apu[i] * 2.0;
                    H[(i * 2 + k) * 2 + l] = v;
                }
    };
    check_model(m);
    return m;
}

// ---------------------------------------------------------------------------
// Radial m=1 vortex profile of the spinner model.
// ---------------------------------------------------------------------------

namespace {

// Coarse seed for the default spinner parameters: complex radial amplitude
// C(r) at equally spaced radii (generated offline by evolving the radial
// equation to its attractor). Gauge: Im C = 0 at the amplitude peak.
#include "spinner_seed.inc"

} // namespace

RadialProfile solve_spinner_radial(const SpinnerParams& p, double r_max, int nr) {
    ReactionModel m = make_spinner(p);
    const double dr = r_max / nr;
    using SpMat = Eigen::SparseMatrix<double>;
    using Trip = Eigen::Triplet<double>;

    std::vector<double> r(nr);
    for (int i = 0; i < nr; ++i) r[i] = (i + 0.5) * dr;

    // seed by interpolating the built-in table
    Eigen::VectorXd P(nr), Q(nr);
    for (int i = 0; i < nr; ++i) {
        const double x = r[i] / kSeedDr;
        const int i0 = (int)std::floor(x);
        if (i0 + 1 >= kSeedLen) {
            P[i] = 0;
            Q[i] = 0;
            continue;
        }
        const double t = x - i0;
        P[i] = (1 - t) * kSeedRe[i0] + t * kSeedRe[i0 + 1];
        Q[i] = (1 - t) * kSeedIm[i0] + t * kSeedIm[i0 + 1];
    }
    double om = kSeedOmega;

    // radial m=1 operator C'' + C'/r - C/r^2, ghost C_{-1} = -C_0, Dirichlet at r_max
    SpMat Lm(nr, nr);
    {
        std::vector<Trip> t;
        for (int i = 0; i < nr; ++i) {
            double main = -2.0 / (dr * dr) - 1.0 / (r[i] * r[i]);
            if (i == 0) main = -3.0 / (dr * dr) - 1.0 / (r[0] * r[0]) + 1.0 / (2 * dr * r[0]);
            t.emplace_back(i, i, main);
            if (i > 0) t.emplace_back(i, i - 1, 1.0 / (dr * dr) - 1.0 / (2 * dr * r[i]));
            if (i + 1 < nr) t.emplace_back(i, i + 1, 1.0 / (dr * dr) + 1.0 / (2 * dr * r[i]));
        }
        Lm.setFromTriplets(t.begin(), t.end());
    }

    int peak = 0;
    for (int i = 1; i < nr; ++i)
        if (P[i] * P[i] + Q[i] * Q[i] > P[peak] * P[peak] + Q[peak] * Q[peak]) peak = i;

    const int n2 = 2 * nr;
    Eigen::VectorXd F(n2 + 1), dx;
    SpMat Jb(n2 + 1, n2 + 1);
    double resid = 1e300;
    for (int it = 0; it < 80; ++it) {
        Eigen::VectorXd LmP = Lm * P, LmQ = Lm * Q;
        std::vector<Trip> t;
        double uu[2], ff[2], JJ[4];
        for (int i = 0; i < nr; ++i) {
            uu[0] = P[i];
            uu[1] = Q[i];
            m.kin.f(uu, ff);
            m.kin.jac(uu, JJ);
            F[i] = p.d * LmP[i] - om * Q[i] + ff[0];
            F[nr + i] = p.d * LmQ[i] + om * P[i] + ff[1];
            t.emplace_back(i, i, JJ[0]);
            t.emplace_back(i, nr + i, JJ[1] - om);
            t.emplace_back(nr + i, i, JJ[2] + om);
            t.emplace_back(nr + i, nr + i, JJ[3]);
            t.emplace_back(i, n2, -Q[i]);       // dF/d om
            t.emplace_back(nr + i, n2, P[i]);
        }
        for (int k = 0; k < Lm.outerSize(); ++k)
            for (SpMat::InnerIterator jt(Lm, k); jt; ++jt) {
                t.emplace_back(jt.row(), jt.col(), p.d * jt.value());
                t.emplace_back(nr + jt.row(), nr + jt.col(), p.d * jt.value());
            }
        t.emplace_back(n2, nr + peak, 1.0); // gauge Im C(peak) = 0
        F[n2] = Q[peak];
        resid = std::sqrt(F.squaredNorm() * dr);
        if (resid < 1e-12) break;
        Jb.setZero();
        Jb.setFromTriplets(t.begin(), t.end());
        Eigen::SparseLU<SpMat> lu(Jb);
        if (lu.info() != Eigen::Success) throw SingularJacobian("radial profile jacobian");
        dx = lu.solve(-F);
        P += dx.head(nr);
        Q += dx.segment(nr, nr);
        om += dx[n2];
    }
    if (resid >= 1e-10)
        throw NoConvergence("spinner radial profile newton stalled, resid=" + std::to_string(resid));

    RadialProfile out;
    out.r = r;
    out.re.assign(P.data(), P.data() + nr);
    out.im.assign(Q.data(), Q.data() + nr);
    out.omega = om;
    return out;
}

namespace {
// Catmull-Rom interpolation of a cell-centered radial table with even
// extension through r=0; f here is C(r)/r which is smooth and even.
double radial_interp(const std::vector<double>& tab, double dr, double rr) {
    const double x = rr / dr - 0.5;
    const int n = (int)tab.size();
    int i0 = (int)std::floor(x);
    const double t = x - i0;
    double w[4];
    {
        const double t2 = t * t, t3 = t2 * t;
        w[0] = 0.5 * (-t3 + 2 * t2 - t);
        w[1] = 0.5 * (3 * t3 - 5 * t2 + 2);
        w[2] = 0.5 * (-3 * t3 + 4 * t2 + t);
        w[3] = 0.5 * (t3 - t2);
    }
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
        int idx = i0 - 1 + k;
        if (idx < 0) idx = -idx - 1; // even extension across r=0
        acc += w[k] * ((idx < n) ? tab[idx] : 0.0);
    }
    return acc;
}
} // namespace

Field spinner_wave_on_grid(const RadialProfile& prof, const Grid& g) {
    const int nr = (int)prof.r.size();
    const double dr = prof.r[1] - prof.r[0];
    std::vector<double> ptab(nr), qtab(nr);
    for (int i = 0; i < nr; ++i) {
        ptab[i] = prof.re[i] / prof.r[i];
        qtab[i] = prof.im[i] / prof.r[i];
    }
    Field u(g, 2);
    for (int j = 0; j < g.n; ++j) {
        const double y2 = g.coord(j);
        for (int i = 0; i < g.n; ++i) {
            const double y1 = g.coord(i);
            const double rr = std::hypot(y1, y2);
            const double pp = radial_interp(ptab, dr, rr);
            const double qq = radial_interp(qtab, dr, rr);
            u.at(0, i, j) = y1 * pp - y2 * qq;
            u.at(1, i, j) = y2 * pp + y1 * qq;
        }
    }
    return u;
}

ReactionModel make_manufactured(const ReactionModel& m, const Field& u_m, double omega) {
    ReactionModel out = m;
    out.forcing.reset(); // drop any previous forcing before evaluating the bare reaction
    Field g = laplacian(u_m);
    const int plane = u_m.grid->size();
    for (int c = 0; c < m.ncomp; ++c)
        for (int k = 0; k < plane; ++k) g.v[(size_t)c * plane + k] *= m.diffusion[c];
    add_scaled(g, omega, d_psi(u_m));
    g += reaction(out, u_m);
    g *= -1.0;
    out.forcing = std::move(g);
    out.name = m.name + "+manufactured";
    return out;
}

double taylor_remainder_bound(const ReactionModel& m, const Field& base, const Field& w,
                              const GroupElement& gamma) {
    const double wn = norm(w);
    if (wn == 0.0) return 0.0;
    Field tb = act(gamma, base);
    Field upw = tb;
    upw += w;
    Field lhs = reaction(m, upw);
    lhs -= reaction(m, tb);
    lhs -= jacobian_apply(m, base, w);
    double ang = gamma.theta;
    if (ang > M_PI) ang -= 2 * M_PI;
    const double gn = std::sqrt(ang * ang + gamma.b1 * gamma.b1 + gamma.b2 * gamma.b2);
    return norm(lhs) / ((wn + gn) * wn);
}

} // namespace rotwave
