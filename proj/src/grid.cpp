#include "rotwave/grid.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace rotwave {

Field& Field::operator+=(const Field& o) {
    check_compatible(*this, o);
    for (size_t k = 0; k < v.size(); ++k) v[k] += o.v[k];
    return *this;
}
Field& Field::operator-=(const Field& o) {
    check_compatible(*this, o);
    for (size_t k = 0; k < v.size(); ++k) v[k] -= o.v[k];
    return *this;
}
Field& Field::operator*=(double a) {
    for (double& x : v) x *= a;
    return *this;
}
bool Field::finite() const {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

Field lin_comb(double a, const Field& x, double b, const Field& y) {
    check_compatible(x, y);
    Field r(*x.grid, x.ncomp);
    for (size_t k = 0; k < r.v.size(); ++k) r.v[k] = a * x.v[k] + b * y.v[k];
    return r;
}
void add_scaled(Field& x, double a, const Field& y) {
    check_compatible(x, y);
    for (size_t k = 0; k < x.v.size(); ++k) x.v[k] += a * y.v[k];
}

namespace {

// 4th-order first-derivative rows near a decay-clamped edge (offsets from the
// edge node), interior is the standard centered 5-point stencil.
constexpr double D1_EDGE0[5] = {-25.0 / 12, 48.0 / 12, -36.0 / 12, 16.0 / 12, -3.0 / 12};
constexpr double D1_EDGE1[5] = {-3.0 / 12, -10.0 / 12, 18.0 / 12, -6.0 / 12, 1.0 / 12};
constexpr double D1_CENT[5] = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};

// 4th-order second-derivative rows (6-point one-sided at the edge).
constexpr double D2_EDGE0[6] = {45.0 / 12, -154.0 / 12, 214.0 / 12, -156.0 / 12, 61.0 / 12, -10.0 / 12};
constexpr double D2_EDGE1[6] = {10.0 / 12, -15.0 / 12, -4.0 / 12, 14.0 / 12, -6.0 / 12, 1.0 / 12};
constexpr double D2_CENT[5] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};

// Applies a 1D derivative along direction `axis` for one component plane.
// src/dst point at the start of a component plane (n*n values).
// Decay-clamped mode uses one-sided stencils at the first/last two nodes
// (left rows as tabulated, right rows mirrored; first derivatives flip sign).
template <bool second>
void apply_d1d(const double* src, double* dst, int n, double h, Axis axis,
               BoundaryMode mode) {
    const double s = second ? 1.0 / (h * h) : 1.0 / h;
    const int stride = (axis == Axis::Y1) ? 1 : n;
    const int line_stride = (axis == Axis::Y1) ? n : 1;
    const double* cent = second ? D2_CENT : D1_CENT;
    const int width = second ? 6 : 5;

    for (int l = 0; l < n; ++l) {
        const double* p = src + (size_t)l * line_stride;
        double* q = dst + (size_t)l * line_stride;
        auto val = [&](int i) { return p[(size_t)i * stride]; };

        if (mode == BoundaryMode::Periodic) {
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int k = -2; k <= 2; ++k) acc += cent[k + 2] * val((i + k + n) % n);
                q[(size_t)i * stride] = acc * s;
            }
            continue;
        }
        for (int i = 2; i <= n - 3; ++i) {
            double acc = 0.0;
            for (int k = -2; k <= 2; ++k) acc += cent[k + 2] * val(i + k);
            q[(size_t)i * stride] = acc * s;
        }
        const double* e0 = second ? D2_EDGE0 : D1_EDGE0;
        const double* e1 = second ? D2_EDGE1 : D1_EDGE1;
        const double flip = second ? 1.0 : -1.0;
        double a0 = 0, a1 = 0, b0 = 0, b1 = 0;
        for (int k = 0; k < width; ++k) {
            a0 += e0[k] * val(k);
            a1 += e1[k] * val(k);
            b0 += e0[k] * val(n - 1 - k);
            b1 += e1[k] * val(n - 1 - k);
        }
        q[0] = a0 * s;
        q[(size_t)1 * stride] = a1 * s;
        q[(size_t)(n - 1) * stride] = flip * b0 * s;
        q[(size_t)(n - 2) * stride] = flip * b1 * s;
    }
}

} // namespace

Field partial(const Field& f, Axis axis) {
    const Grid& g = *f.grid;
    Field r(g, f.ncomp);
    const int plane = g.size();
    for (int c = 0; c < f.ncomp; ++c)
        apply_d1d<false>(f.v.data() + (size_t)c * plane, r.v.data() + (size_t)c * plane,
                         g.n, g.h, axis, g.boundary);
    return r;
}

Field d_psi(const Field& f) {
    const Grid& g = *f.grid;
    Field fy1 = partial(f, Axis::Y1);
    Field fy2 = partial(f, Axis::Y2);
    Field r(g, f.ncomp);
    for (int c = 0; c < f.ncomp; ++c)
        for (int j = 0; j < g.n; ++j) {
            const double y2 = g.coord(j);
            for (int i = 0; i < g.n; ++i) {
                const double y1 = g.coord(i);
                r.at(c, i, j) = y1 * fy2.at(c, i, j) - y2 * fy1.at(c, i, j);
            }
        }
    return r;
}

Field laplacian(const Field& f) {
    const Grid& g = *f.grid;
    Field r(g, f.ncomp);
    Field tmp(g, f.ncomp);
    const int plane = g.size();
    for (int c = 0; c < f.ncomp; ++c) {
        apply_d1d<true>(f.v.data() + (size_t)c * plane, r.v.data() + (size_t)c * plane,
                        g.n, g.h, Axis::Y1, g.boundary);
        apply_d1d<true>(f.v.data() + (size_t)c * plane, tmp.v.data() + (size_t)c * plane,
                        g.n, g.h, Axis::Y2, g.boundary);
    }
    for (size_t k = 0; k < r.v.size(); ++k) r.v[k] += tmp.v[k];
    return r;
}

namespace {
// trapezoid weight along one axis
inline double wt(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

double l2_pairing(const Field& a, const Field& b) {
    const Grid& g = *a.grid;
    const int n = g.n;
    double total = 0.0;
    for (int c = 0; c < a.ncomp; ++c)
        for (int j = 0; j < n; ++j) {
            const double wj = wt(j, n);
            double row = 0.0;
            const double* pa = &a.v[((size_t)c * n + j) * n];
            const double* pb = &b.v[((size_t)c * n + j) * n];
            row += 0.5 * pa[0] * pb[0];
            for (int i = 1; i < n - 1; ++i) row += pa[i] * pb[i];
            row += 0.5 * pa[n - 1] * pb[n - 1];
            total += wj * row;
        }
    return total * g.h * g.h;
}
} // namespace

double inner_product(const Field& a, const Field& b, PairingMode mode) {
    check_compatible(a, b);
    double s = l2_pairing(a, b);
    if (mode == PairingMode::H2) {
        Field a1 = partial(a, Axis::Y1), a2 = partial(a, Axis::Y2);
        Field b1 = partial(b, Axis::Y1), b2 = partial(b, Axis::Y2);
        s += l2_pairing(a1, b1) + l2_pairing(a2, b2);
        s += l2_pairing(partial(a1, Axis::Y1), partial(b1, Axis::Y1));
        s += l2_pairing(partial(a1, Axis::Y2), partial(b1, Axis::Y2));
        s += l2_pairing(partial(a2, Axis::Y1), partial(b2, Axis::Y1));
        s += l2_pairing(partial(a2, Axis::Y2), partial(b2, Axis::Y2));
    }
    return s;
}

double norm(const Field& f, PairingMode mode) {
    return std::sqrt(std::max(0.0, inner_product(f, f, mode)));
}

namespace {
void put_u32(std::ofstream& os, uint32_t x) { os.write(reinterpret_cast<const char*>(&x), 4); }
void put_f64(std::ofstream& os, double x) { os.write(reinterpret_cast<const char*>(&x), 8); }
uint32_t get_u32(std::ifstream& is) {
    uint32_t x = 0;
    is.read(reinterpret_cast<char*>(&x), 4);
    return x;
}
double get_f64(std::ifstream& is) {
    double x = 0;
    is.read(reinterpret_cast<char*>(&x), 8);
    return x;
}
} // namespace

void write_field(const std::string& path, const Field& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    os.write("RWF1", 4);
    put_u32(os, (uint32_t)f.grid->n);
    put_f64(os, f.grid->half_width);
    put_u32(os, (uint32_t)f.ncomp);
    os.write(reinterpret_cast<const char*>(f.v.data()), (std::streamsize)(f.v.size() * 8));
    if (!os) throw std::runtime_error("write failed: " + path);
}

Field read_field(const std::string& path, const Grid& expected) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (std::memcmp(magic, "RWF1", 4) != 0) throw std::runtime_error("bad magic in " + path);
    uint32_t n = get_u32(is);
    double L = get_f64(is);
    uint32_t N = get_u32(is);
    if ((int)n != expected.n || L != expected.half_width)
        throw GridMismatch("field file grid does not match: " + path);
    Field f(expected, (int)N);
    is.read(reinterpret_cast<char*>(f.v.data()), (std::streamsize)(f.v.size() * 8));
    if (!is) throw std::runtime_error("short read: " + path);
    return f;
}

void write_field_csv(const std::string& path, const Field& f) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw std::runtime_error("cannot open " + path);
    std::fprintf(fp, "y1,y2");
    for (int c = 0; c < f.ncomp; ++c) std::fprintf(fp, ",c%d", c);
    std::fprintf(fp, "\n");
    const Grid& g = *f.grid;
    for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i) {
            std::fprintf(fp, "%.17g,%.17g", g.coord(i), g.coord(j));
            for (int c = 0; c < f.ncomp; ++c) std::fprintf(fp, ",%.17g", f.at(c, i, j));
            std::fprintf(fp, "\n");
        }
    std::fclose(fp);
}

} // namespace rotwave
