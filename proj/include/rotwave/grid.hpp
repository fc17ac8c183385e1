#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "rotwave/errors.hpp"

namespace rotwave {

enum class BoundaryMode { DecayClamped, Periodic };

// Square grid on [-L,L]^2, centered at the origin, n points per axis.
struct Grid {
    double half_width = 8.0;
    int n = 64;
    BoundaryMode boundary = BoundaryMode::DecayClamped;
    double h = 0.0;

    Grid() { init(); }
    Grid(double L, int n_, BoundaryMode mode = BoundaryMode::DecayClamped)
        : half_width(L), n(n_), boundary(mode) { init(); }

    double coord(int i) const { return -half_width + h * i; }
    int size() const { return n * n; }
    bool same_as(const Grid& o) const {
        return n == o.n && half_width == o.half_width && boundary == o.boundary;
    }

  private:
    void init() {
        if (n < 16) throw ConfigError("grid needs n >= 16");
        if (half_width <= 0) throw ConfigError("grid half_width must be > 0");
        h = 2.0 * half_width / (n - 1);
    }
};

// N-component real function sampled on a grid. Storage is component-major:
// value(c, i, j) at index (c*n + j)*n + i, with i the y1 index.
struct Field {
    const Grid* grid = nullptr;
    int ncomp = 0;
    std::vector<double> v;

    Field() = default;
    Field(const Grid& g, int nc) : grid(&g), ncomp(nc), v((size_t)nc * g.size(), 0.0) {}

    double& at(int c, int i, int j) { return v[((size_t)c * grid->n + j) * grid->n + i]; }
    double at(int c, int i, int j) const { return v[((size_t)c * grid->n + j) * grid->n + i]; }
    size_t size() const { return v.size(); }

    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(double a);
    bool finite() const;
};

inline void check_compatible(const Field& a, const Field& b) {
    if (!a.grid || !b.grid || !a.grid->same_as(*b.grid) || a.ncomp != b.ncomp)
        throw GridMismatch("fields live on different grids or component counts");
}

enum class Axis { Y1, Y2 };
enum class PairingMode { L2, H2 };

// Centered 4th-order first derivative; one-sided at the boundary in
// decay-clamped mode, wrap-around in periodic mode.
Field partial(const Field& f, Axis axis);

// Tangential (rotational) derivative y1 d/dy2 - y2 d/dy1.
Field d_psi(const Field& f);

// 4th-order 9-point Laplacian (per-axis second differences).
Field laplacian(const Field& f);

double inner_product(const Field& a, const Field& b, PairingMode mode = PairingMode::L2);
double norm(const Field& f, PairingMode mode = PairingMode::L2);

// axpy-style helpers
Field lin_comb(double a, const Field& x, double b, const Field& y);
void add_scaled(Field& x, double a, const Field& y); // x += a*y

// Binary field format: magic "RWF1", u32 n, f64 L, u32 N, then N*n*n float64
// samples component-major, little-endian.
void write_field(const std::string& path, const Field& f);
Field read_field(const std::string& path, const Grid& expected);
// CSV export with columns y1,y2,c0..c{N-1}.
void write_field_csv(const std::string& path, const Field& f);

} // namespace rotwave
