#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

/// Rectangular grid [0,Lx] x [0,Ly] with nx x ny cells and Dirichlet
/// boundary. Nodes are (nx+1) x (ny+1); node (i,j) sits at (i hx, j hy).
struct Mesh {
  int nx = 0, ny = 0;
  double Lx = 0.0, Ly = 0.0;

  Mesh(int nx, int ny, double Lx, double Ly);

  double hx() const { return Lx / nx; }
  double hy() const { return Ly / ny; }
  double diam() const;
  /// d = 2 diam(domain), the Poincare constant.
  double poincare_d() const { return 2.0 * diam(); }

  int num_nodes() const { return (nx + 1) * (ny + 1); }
  int num_cells() const { return nx * ny; }
  int node_index(int i, int j) const { return j * (nx + 1) + i; }
  bool is_boundary(int i, int j) const {
    return i == 0 || j == 0 || i == nx || j == ny;
  }
  double node_x(int i) const { return Lx * i / nx; }
  double node_y(int j) const { return Ly * j / ny; }
  /// Dual-cell area of the node: hx hy times 1 (interior), 1/2 (edge),
  /// 1/4 (corner).
  double node_weight(int i, int j) const;

  bool operator==(const Mesh&) const = default;
};

/// Nodal scalar field on a mesh. Dirichlet fields keep exact zeros on the
/// boundary ring.
class Field {
 public:
  explicit Field(const Mesh& mesh, bool dirichlet = true);

  static Field from_function(const Mesh& mesh,
                             const std::function<double(double, double)>& fn,
                             bool dirichlet = true);

  const Mesh& mesh() const { return mesh_; }
  bool dirichlet() const { return dirichlet_; }

  double& at(int i, int j) { return v_[mesh_.node_index(i, j)]; }
  double at(int i, int j) const { return v_[mesh_.node_index(i, j)]; }
  std::span<const double> values() const { return v_; }
  std::span<double> values() { return v_; }

  void enforce_dirichlet();
  bool finite() const;

  double inf_norm() const;
  Field& operator*=(double a);
  Field& operator+=(const Field& other);
  /// *this += a * x
  Field& axpy(double a, const Field& x);

 private:
  Mesh mesh_;
  bool dirichlet_;
  std::vector<double> v_;
};

Field operator*(double a, const Field& u);
Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);

double max_abs_diff(const Field& a, const Field& b);
/// sqrt( sum (a-b)^2 hx hy ), the grid L2 distance.
double l2_distance(const Field& a, const Field& b);
double l2_norm(const Field& a);

/// sin(pi x / Lx) sin(pi y / Ly): the canonical positive bump.
Field sin_bump(const Mesh& mesh);

/// Random Dirichlet field from a low-mode sine expansion:
/// sum_{i,j<=k_max} c_ij sin(i pi x/Lx) sin(j pi y/Ly) with c_ij uniform in
/// [-1,1] scaled by (i^2+j^2)^-1. Smooth, coherent samples; deterministic in
/// the rng state.
Field random_low_mode_field(const Mesh& mesh, std::mt19937_64& rng, int k_max = 4);

/// Random Dirichlet field from interior uniform noise followed by `passes`
/// five-point smoothing sweeps.
Field smooth_noise_field(const Mesh& mesh, std::mt19937_64& rng, int passes = 2);

/// Uniform double in [-1, 1) from the top 53 bits; portable across platforms.
double uniform_pm1(std::mt19937_64& rng);

/// CSV dump with header "x,y,u", row-major by node (y outer, x inner).
void write_csv(const Field& u, std::ostream& os);
void write_csv(const Field& u, const std::filesystem::path& path);

}  // namespace orlicz
