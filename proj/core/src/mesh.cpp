#include "orlicz/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>

namespace orlicz {

Mesh::Mesh(int nx_, int ny_, double Lx_, double Ly_)
    : nx(nx_), ny(ny_), Lx(Lx_), Ly(Ly_) {
  if (nx < 1 || ny < 1) throw ConfigError("mesh needs nx, ny >= 1");
  if (!(Lx > 0.0) || !(Ly > 0.0)) throw ConfigError("mesh needs Lx, Ly > 0");
}

double Mesh::diam() const { return std::hypot(Lx, Ly); }

double Mesh::node_weight(int i, int j) const {
  const double wx = (i == 0 || i == nx) ? 0.5 : 1.0;
  const double wy = (j == 0 || j == ny) ? 0.5 : 1.0;
  return wx * wy * hx() * hy();
}

Field::Field(const Mesh& mesh, bool dirichlet)
    : mesh_(mesh), dirichlet_(dirichlet), v_(mesh.num_nodes(), 0.0) {}

Field Field::from_function(const Mesh& mesh,
                           const std::function<double(double, double)>& fn,
                           bool dirichlet) {
  Field u(mesh, dirichlet);
  for (int j = 0; j <= mesh.ny; ++j)
    for (int i = 0; i <= mesh.nx; ++i)
      u.at(i, j) = fn(mesh.node_x(i), mesh.node_y(j));
  if (dirichlet) u.enforce_dirichlet();
  return u;
}

void Field::enforce_dirichlet() {
  for (int i = 0; i <= mesh_.nx; ++i) {
    at(i, 0) = 0.0;
    at(i, mesh_.ny) = 0.0;
  }
  for (int j = 0; j <= mesh_.ny; ++j) {
    at(0, j) = 0.0;
    at(mesh_.nx, j) = 0.0;
  }
}

bool Field::finite() const {
  for (double x : v_)
    if (!std::isfinite(x)) return false;
  return true;
}

double Field::inf_norm() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

Field& Field::operator*=(double a) {
  for (double& x : v_) x *= a;
  return *this;
}

Field& Field::operator+=(const Field& other) {
  if (!(mesh_ == other.mesh_)) throw ConfigError("field shape mismatch");
  for (size_t k = 0; k < v_.size(); ++k) v_[k] += other.v_[k];
  return *this;
}

Field& Field::axpy(double a, const Field& x) {
  if (!(mesh_ == x.mesh_)) throw ConfigError("field shape mismatch");
  for (size_t k = 0; k < v_.size(); ++k) v_[k] += a * x.v_[k];
  return *this;
}

Field operator*(double a, const Field& u) {
  Field out = u;
  out *= a;
  return out;
}

Field operator+(const Field& a, const Field& b) {
  Field out = a;
  out += b;
  return out;
}

Field operator-(const Field& a, const Field& b) {
  Field out = a;
  out.axpy(-1.0, b);
  return out;
}

double max_abs_diff(const Field& a, const Field& b) {
  if (!(a.mesh() == b.mesh())) throw ConfigError("field shape mismatch");
  double m = 0.0;
  const auto va = a.values(), vb = b.values();
  for (size_t k = 0; k < va.size(); ++k) m = std::max(m, std::abs(va[k] - vb[k]));
  return m;
}

double l2_distance(const Field& a, const Field& b) {
  if (!(a.mesh() == b.mesh())) throw ConfigError("field shape mismatch");
  double acc = 0.0;
  const auto va = a.values(), vb = b.values();
  for (size_t k = 0; k < va.size(); ++k) {
    const double d = va[k] - vb[k];
    acc += d * d;
  }
  return std::sqrt(acc * a.mesh().hx() * a.mesh().hy());
}

double l2_norm(const Field& a) {
  double acc = 0.0;
  for (double x : a.values()) acc += x * x;
  return std::sqrt(acc * a.mesh().hx() * a.mesh().hy());
}

Field sin_bump(const Mesh& mesh) {
  using std::numbers::pi;
  return Field::from_function(mesh, [&mesh](double x, double y) {
    return std::sin(pi * x / mesh.Lx) * std::sin(pi * y / mesh.Ly);
  });
}

double uniform_pm1(std::mt19937_64& rng) {
  // top 53 bits -> [0,1), affine to [-1,1)
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

Field random_low_mode_field(const Mesh& mesh, std::mt19937_64& rng, int k_max) {
  using std::numbers::pi;
  Field u(mesh);
  for (int mi = 1; mi <= k_max; ++mi) {
    for (int mj = 1; mj <= k_max; ++mj) {
      const double c = uniform_pm1(rng) / (mi * mi + mj * mj);
      for (int j = 1; j < mesh.ny; ++j)
        for (int i = 1; i < mesh.nx; ++i)
          u.at(i, j) += c * std::sin(mi * pi * i / mesh.nx) *
                        std::sin(mj * pi * j / mesh.ny);
    }
  }
  return u;
}

Field smooth_noise_field(const Mesh& mesh, std::mt19937_64& rng, int passes) {
  Field u(mesh);
  for (int j = 1; j < mesh.ny; ++j)
    for (int i = 1; i < mesh.nx; ++i) u.at(i, j) = uniform_pm1(rng);
  for (int p = 0; p < passes; ++p) {
    Field w = u;
    for (int j = 1; j < mesh.ny; ++j)
      for (int i = 1; i < mesh.nx; ++i)
        w.at(i, j) = (u.at(i, j) + u.at(i - 1, j) + u.at(i + 1, j) +
                      u.at(i, j - 1) + u.at(i, j + 1)) / 5.0;
    u = w;
  }
  return u;
}

void write_csv(const Field& u, std::ostream& os) {
  os << "x,y,u\n";
  char buf[96];
  const Mesh& m = u.mesh();
  for (int j = 0; j <= m.ny; ++j) {
    for (int i = 0; i <= m.nx; ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", m.node_x(i),
                    m.node_y(j), u.at(i, j));
      os << buf;
    }
  }
}

void write_csv(const Field& u, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open " + path.string() + " for writing");
  write_csv(u, os);
}

}  // namespace orlicz
