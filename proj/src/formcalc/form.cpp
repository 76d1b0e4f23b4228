#include "cobord/formcalc/form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "cobord/error.hpp"
#include "cobord/formcalc/parallel.hpp"

namespace cobord::formcalc {

namespace {

constexpr double pi = std::numbers::pi;

int parity_sign(int swaps) { return swaps % 2 == 0 ? 1 : -1; }

// Sign of dx_a ^ dx_b relative to dx_{a|b} in increasing order.
int merge_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask r = a; r; r &= r - 1) {
    const int i = std::countr_zero(r);
    swaps += std::popcount(b & ((Mask{1} << i) - 1));
  }
  return parity_sign(swaps);
}

std::vector<double> spectral_matrix(int n) {
  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (i == k) continue;
      const double s = ((i - k) % 2 == 0) ? 1.0 : -1.0;
      const double arg = pi * (i - k) / n;
      const double v = n % 2 == 0 ? s / std::tan(arg) : s / std::sin(arg);
      d[static_cast<std::size_t>(i) * n + k] = pi * v;
    }
  }
  return d;
}

// Derivative along factor j of one scalar field laid out on the mesh.
void differentiate(const Mesh& mesh, int j, const double* in, double* out, double scale) {
  const Factor& f = mesh.factor(j);
  const std::size_t stride = mesh.stride(j);
  const int s = f.samples();
  const std::size_t outer = mesh.points() / (stride * static_cast<std::size_t>(s));
  const std::size_t lines = outer * stride;
  std::vector<double> dm;
  if (f.kind == FactorKind::circle) dm = spectral_matrix(s);
  const double inv12h = 1.0 / (12.0 * f.spacing());
  parallel_for(lines, [&](std::size_t b, std::size_t e) {
    std::vector<double> line(static_cast<std::size_t>(s)), der(static_cast<std::size_t>(s));
    for (std::size_t l = b; l < e; ++l) {
      const std::size_t base = (l / stride) * stride * s + l % stride;
      for (int i = 0; i < s; ++i) line[i] = in[base + i * stride];
      if (f.kind == FactorKind::circle) {
        for (int i = 0; i < s; ++i) {
          double acc = 0;
          const double* row = dm.data() + static_cast<std::size_t>(i) * s;
          for (int k = 0; k < s; ++k) acc += row[k] * line[k];
          der[i] = acc;
        }
      } else {
        const int n = s - 1;
        const auto& g = line;
        der[0] = (-25 * g[0] + 48 * g[1] - 36 * g[2] + 16 * g[3] - 3 * g[4]) * inv12h;
        der[1] = (-3 * g[0] - 10 * g[1] + 18 * g[2] - 6 * g[3] + g[4]) * inv12h;
        for (int i = 2; i <= n - 2; ++i) der[i] = (-g[i + 2] + 8 * g[i + 1] - 8 * g[i - 1] + g[i - 2]) * inv12h;
        der[n - 1] = -(-3 * g[n] - 10 * g[n - 1] + 18 * g[n - 2] - 6 * g[n - 3] + g[n - 4]) * inv12h;
        der[n] = -(-25 * g[n] + 48 * g[n - 1] - 36 * g[n - 2] + 16 * g[n - 3] - 3 * g[n - 4]) * inv12h;
      }
      for (int i = 0; i < s; ++i) out[base + i * stride] += scale * der[i];
    }
  });
}

bool block_nonzero(const std::vector<double>& v, std::size_t c, std::size_t points) {
  const double* p = v.data() + c * points;
  return std::any_of(p, p + points, [](double x) { return x != 0.0; });
}

void require_circles(const Mesh& m, int first, int last, const char* what) {
  for (int i = first; i < last; ++i) {
    if (m.factor(i).kind != FactorKind::circle) throw DomainError(std::string(what) + " requires circle factors");
  }
}

std::vector<Period> raw_periods(const SampledForm& a) {
  const Mesh& mesh = *a.mesh();
  if (mesh.has_interval()) throw DomainError("periods are defined on torus meshes only");
  const std::size_t nc = a.coeffs()->dim(), np = mesh.points();
  std::vector<Period> out;
  for (Mask c = 0; c < (Mask{1} << mesh.dim()); ++c) {
    Period per{c, std::vector<double>(nc, 0.0)};
    if (const auto* v = a.component(c)) {
      std::size_t count = 0;
      std::vector<double> sum(nc, 0.0);
      for (std::size_t p = 0; p < np; ++p) {
        bool on = true;
        for (int i = 0; i < mesh.dim() && on; ++i) {
          if (!(c >> i & 1) && (p / mesh.stride(i)) % static_cast<std::size_t>(mesh.factor(i).samples()) != 0) on = false;
        }
        if (!on) continue;
        ++count;
        for (std::size_t k = 0; k < nc; ++k) sum[k] += (*v)[k * np + p];
      }
      for (std::size_t k = 0; k < nc; ++k) per.value[k] = sum[k] / static_cast<double>(count);
    }
    out.push_back(std::move(per));
  }
  return out;
}

}  // namespace

int mask_degree(Mask m) { return std::popcount(m); }

std::vector<int> mask_factors(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Mask mask_of(const std::vector<int>& factors) {
  Mask m = 0;
  for (int f : factors) {
    if (f < 0 || f >= Mesh::max_dim) throw DomainError("factor index out of range");
    m |= Mask{1} << f;
  }
  return m;
}

SampledForm::SampledForm(MeshPtr mesh, CoeffPtr coeffs) : mesh_(std::move(mesh)), coeffs_(std::move(coeffs)) {
  if (!mesh_ || !coeffs_) throw DomainError("form needs a mesh and a coefficient space");
}

SampledForm SampledForm::constant(MeshPtr mesh, CoeffPtr coeffs, const std::vector<double>& value) {
  if (value.size() != coeffs->dim()) throw DomainError("constant has the wrong coefficient length");
  SampledForm f(std::move(mesh), std::move(coeffs));
  auto& v = f.component_mut(0);
  const std::size_t np = f.mesh_->points();
  for (std::size_t c = 0; c < value.size(); ++c) std::fill_n(v.begin() + static_cast<std::ptrdiff_t>(c * np), np, value[c]);
  return f;
}

SampledForm SampledForm::one(MeshPtr mesh, CoeffPtr coeffs) {
  std::vector<double> v(coeffs->dim(), 0.0);
  v[coeffs->unit()] = 1.0;
  return constant(std::move(mesh), std::move(coeffs), v);
}

SampledForm SampledForm::from_function(MeshPtr mesh, CoeffPtr coeffs, Mask mask,
                                       const std::function<double(const std::vector<double>&)>& f,
                                       std::size_t coefficient) {
  if (coefficient >= coeffs->dim()) throw DomainError("coefficient index out of range");
  if (mask >> mesh->dim()) throw DomainError("mask refers to a missing factor");
  SampledForm out(std::move(mesh), std::move(coeffs));
  auto& v = out.component_mut(mask);
  const Mesh& m = *out.mesh_;
  std::vector<double> x(static_cast<std::size_t>(m.dim()));
  for (std::size_t p = 0; p < m.points(); ++p) {
    for (int i = 0; i < m.dim(); ++i) x[static_cast<std::size_t>(i)] = m.coordinate(p, i);
    v[coefficient * m.points() + p] = f(x);
  }
  return out;
}

const std::vector<double>* SampledForm::component(Mask m) const {
  auto it = comps_.find(m);
  return it == comps_.end() ? nullptr : &it->second;
}

std::vector<double>& SampledForm::component_mut(Mask m) {
  auto it = comps_.find(m);
  if (it == comps_.end()) it = comps_.emplace(m, std::vector<double>(coeffs_->dim() * mesh_->points(), 0.0)).first;
  return it->second;
}

double SampledForm::value(Mask m, std::size_t coefficient, std::size_t point) const {
  const auto* v = component(m);
  return v ? (*v)[coefficient * mesh_->points() + point] : 0.0;
}

SampledForm SampledForm::degree_part(int k) const {
  SampledForm out(mesh_, coeffs_);
  for (const auto& [m, v] : comps_) {
    if (mask_degree(m) == k) out.comps_.emplace(m, v);
  }
  return out;
}

std::optional<int> SampledForm::total_degree(double tol) const {
  const std::size_t np = mesh_->points();
  std::optional<int> deg;
  for (const auto& [m, v] : comps_) {
    for (std::size_t c = 0; c < coeffs_->dim(); ++c) {
      const double* p = v.data() + c * np;
      if (std::none_of(p, p + np, [tol](double x) { return std::abs(x) > tol; })) continue;
      const int d = mask_degree(m) + coeffs_->degree(c);
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  return deg;
}

SampledForm SampledForm::operator-() const {
  SampledForm out = *this;
  out *= -1.0;
  return out;
}

void SampledForm::check_compatible(const SampledForm& b) const {
  if (!same_mesh(mesh_, b.mesh_)) throw MismatchError("forms live on different meshes");
  if (!same_coefficients(coeffs_, b.coeffs_)) throw MismatchError("forms have different coefficient spaces");
}

SampledForm& SampledForm::operator+=(const SampledForm& b) {
  check_compatible(b);
  for (const auto& [m, v] : b.comps_) {
    auto& t = component_mut(m);
    for (std::size_t i = 0; i < v.size(); ++i) t[i] += v[i];
  }
  return *this;
}

SampledForm& SampledForm::operator-=(const SampledForm& b) {
  check_compatible(b);
  for (const auto& [m, v] : b.comps_) {
    auto& t = component_mut(m);
    for (std::size_t i = 0; i < v.size(); ++i) t[i] -= v[i];
  }
  return *this;
}

SampledForm& SampledForm::operator*=(double s) {
  for (auto& [m, v] : comps_) {
    for (auto& x : v) x *= s;
  }
  return *this;
}

SampledForm operator+(SampledForm a, const SampledForm& b) { return a += b; }
SampledForm operator-(SampledForm a, const SampledForm& b) { return a -= b; }
SampledForm operator*(double s, SampledForm a) { return a *= s; }

double max_abs(const SampledForm& a) {
  double r = 0;
  for (const auto& [m, v] : a.components()) {
    for (double x : v) r = std::max(r, std::abs(x));
  }
  return r;
}

SampledForm wedge(const SampledForm& a, const SampledForm& b) {
  a.check_compatible(b);
  const auto& cs = *a.coeffs();
  const std::size_t nc = cs.dim(), np = a.mesh()->points();
  SampledForm out(a.mesh(), a.coeffs());
  for (const auto& [ma, va] : a.components()) {
    std::vector<std::size_t> ca;
    for (std::size_t c = 0; c < nc; ++c) {
      if (block_nonzero(va, c, np)) ca.push_back(c);
    }
    for (const auto& [mb, vb] : b.components()) {
      if (ma & mb) continue;
      const double sign = merge_sign(ma, mb);
      auto& t = out.component_mut(ma | mb);
      for (std::size_t j = 0; j < nc; ++j) {
        if (!block_nonzero(vb, j, np)) continue;
        for (std::size_t i : ca) {
          const int k = cs.product(i, j);
          if (k < 0) continue;
          const double* x = va.data() + i * np;
          const double* y = vb.data() + j * np;
          double* z = t.data() + static_cast<std::size_t>(k) * np;
          parallel_for(np, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t p = lo; p < hi; ++p) z[p] += sign * x[p] * y[p];
          });
        }
      }
    }
  }
  return out;
}

SampledForm exterior_d(const SampledForm& a) {
  const Mesh& mesh = *a.mesh();
  const std::size_t nc = a.coeffs()->dim(), np = mesh.points();
  SampledForm out(a.mesh(), a.coeffs());
  for (const auto& [m, v] : a.components()) {
    for (int j = 0; j < mesh.dim(); ++j) {
      const Mask bit = Mask{1} << j;
      if (m & bit) continue;
      const double sign = parity_sign(std::popcount(m & (bit - 1)));
      auto& t = out.component_mut(m | bit);
      for (std::size_t c = 0; c < nc; ++c) {
        if (!block_nonzero(v, c, np)) continue;
        differentiate(mesh, j, v.data() + c * np, t.data() + c * np, sign);
      }
    }
  }
  return out;
}

SampledForm lift(const SampledForm& real_form, const CoeffPtr& coeffs, const std::vector<double>& coefficient) {
  if (real_form.coeffs()->dim() != 1) throw DomainError("lift expects a real-valued form");
  if (coefficient.size() != coeffs->dim()) throw DomainError("lift coefficient has the wrong length");
  const std::size_t np = real_form.mesh()->points();
  SampledForm out(real_form.mesh(), coeffs);
  for (const auto& [m, v] : real_form.components()) {
    auto& t = out.component_mut(m);
    for (std::size_t c = 0; c < coefficient.size(); ++c) {
      if (coefficient[c] == 0) continue;
      for (std::size_t p = 0; p < np; ++p) t[c * np + p] = coefficient[c] * v[p];
    }
  }
  return out;
}

SampledForm multiply_function(const SampledForm& a, const std::vector<double>& f) {
  const std::size_t np = a.mesh()->points();
  if (f.size() != np) throw MismatchError("function sampled on another mesh");
  SampledForm out = a;
  for (const auto& [m, v] : a.components()) {
    auto& t = out.component_mut(m);
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i] * f[i % np];
  }
  return out;
}

SampledForm fiber_integrate(const SampledForm& a, int fiber_factors) {
  const Mesh& mesh = *a.mesh();
  if (fiber_factors < 0 || fiber_factors > mesh.dim()) throw DomainError("fiber larger than the mesh");
  const int base_dim = mesh.dim() - fiber_factors;
  require_circles(mesh, base_dim, mesh.dim(), "fiber integration");
  const Mask fiber = ((Mask{1} << mesh.dim()) - 1) & ~((Mask{1} << base_dim) - 1);
  auto base = sub_mesh(mesh, 0, base_dim);
  const std::size_t fiber_points = mesh.points() / base->points();
  const std::size_t nc = a.coeffs()->dim(), np = mesh.points(), nb = base->points();
  SampledForm out(base, a.coeffs());
  for (const auto& [m, v] : a.components()) {
    if ((m & fiber) != fiber) continue;
    auto& t = out.component_mut(m & ~fiber);
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t q = 0; q < nb; ++q) {
        const double* p = v.data() + c * np + q * fiber_points;
        double s = 0;
        for (std::size_t i = 0; i < fiber_points; ++i) s += p[i];
        t[c * nb + q] = s / static_cast<double>(fiber_points);
      }
    }
  }
  return out;
}

SampledForm fiber_integrate_interval(const SampledForm& a) {
  const Mesh& mesh = *a.mesh();
  if (mesh.dim() == 0 || mesh.factor(0).kind != FactorKind::interval) {
    throw DomainError("interval integration needs the interval as factor 0");
  }
  const int n = mesh.factor(0).n;
  const double h = mesh.factor(0).spacing();
  auto base = sub_mesh(mesh, 1, mesh.dim());
  const std::size_t nc = a.coeffs()->dim(), np = mesh.points(), nb = base->points();
  SampledForm out(base, a.coeffs());
  for (const auto& [m, v] : a.components()) {
    if (!(m & 1)) continue;
    auto& t = out.component_mut(m >> 1);
    for (std::size_t c = 0; c < nc; ++c) {
      for (int i = 0; i <= n; ++i) {
        const double w = h / 3.0 * (i == 0 || i == n ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0));
        const double* p = v.data() + c * np + static_cast<std::size_t>(i) * nb;
        double* q = t.data() + c * nb;
        for (std::size_t k = 0; k < nb; ++k) q[k] += w * p[k];
      }
    }
  }
  return out;
}

SampledForm restrict_interval(const SampledForm& a, int sample) {
  const Mesh& mesh = *a.mesh();
  if (mesh.dim() == 0 || mesh.factor(0).kind != FactorKind::interval) {
    throw DomainError("restriction needs the interval as factor 0");
  }
  if (sample < 0 || sample > mesh.factor(0).n) throw DomainError("interval sample out of range");
  auto base = sub_mesh(mesh, 1, mesh.dim());
  const std::size_t nc = a.coeffs()->dim(), np = mesh.points(), nb = base->points();
  SampledForm out(base, a.coeffs());
  for (const auto& [m, v] : a.components()) {
    if (m & 1) continue;
    auto& t = out.component_mut(m >> 1);
    for (std::size_t c = 0; c < nc; ++c) {
      std::copy_n(v.data() + c * np + static_cast<std::size_t>(sample) * nb, nb, t.data() + c * nb);
    }
  }
  return out;
}

void CoordinateMap::validate() const {
  if (!source || !target) throw DomainError("coordinate map needs both meshes");
  if (static_cast<int>(factor_of.size()) != target->dim()) throw DomainError("coordinate map has the wrong arity");
  for (std::size_t j = 0; j < factor_of.size(); ++j) {
    const int s = factor_of[j];
    if (s < 0 || s >= source->dim()) throw DomainError("coordinate map refers to a missing source factor");
    if (!source->factor(s).same_grid(target->factor(static_cast<int>(j)))) {
      throw MismatchError("coordinate map joins factors on different grids");
    }
  }
}

CoordinateMap projection(MeshPtr source, int first, int count) {
  CoordinateMap f{source, sub_mesh(*source, first, first + count), {}};
  for (int j = 0; j < count; ++j) f.factor_of.push_back(first + j);
  return f;
}

SampledForm pullback(const SampledForm& a, const CoordinateMap& f) {
  f.validate();
  if (!same_mesh(a.mesh(), f.target)) throw MismatchError("form does not live on the map target");
  const Mesh& src = *f.source;
  const Mesh& tgt = *f.target;
  const std::size_t ns = src.points(), nt = tgt.points(), nc = a.coeffs()->dim();
  std::vector<std::size_t> where(ns);
  for (std::size_t p = 0; p < ns; ++p) {
    const auto idx = src.multi_index(p);
    std::size_t q = 0;
    for (int j = 0; j < tgt.dim(); ++j) q += static_cast<std::size_t>(idx[static_cast<std::size_t>(f.factor_of[static_cast<std::size_t>(j)])]) * tgt.stride(j);
    where[p] = q;
  }
  SampledForm out(f.source, a.coeffs());
  for (const auto& [m, v] : a.components()) {
    std::vector<int> img;
    for (int j : mask_factors(m)) img.push_back(f.factor_of[static_cast<std::size_t>(j)]);
    int swaps = 0;
    bool collision = false;
    for (std::size_t i = 0; i < img.size(); ++i) {
      for (std::size_t k = i + 1; k < img.size(); ++k) {
        if (img[i] == img[k]) collision = true;
        if (img[i] > img[k]) ++swaps;
      }
    }
    if (collision) continue;
    const double sign = parity_sign(swaps);
    auto& t = out.component_mut(mask_of(img));
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t p = 0; p < ns; ++p) t[c * ns + p] += sign * v[c * nt + where[p]];
    }
  }
  return out;
}

SampledForm cylinder_pullback(const SampledForm& a, const MeshPtr& cylinder) {
  CoordinateMap f{cylinder, a.mesh(), {}};
  for (int j = 0; j < a.mesh()->dim(); ++j) f.factor_of.push_back(j + 1);
  if (cylinder->dim() != a.mesh()->dim() + 1 || cylinder->factor(0).kind != FactorKind::interval) {
    throw DomainError("cylinder mesh must be [0,1] times the base mesh");
  }
  return pullback(a, f);
}

std::vector<Period> periods(const SampledForm& a, double closed_tol) {
  const double r = max_abs(exterior_d(a));
  if (r > closed_tol) throw DomainError("form is not closed within tolerance (|d a| = " + std::to_string(r) + ")");
  return raw_periods(a);
}

ExactComparison compare_mod_exact(const SampledForm& a, const SampledForm& b) {
  const SampledForm diff = a - b;
  ExactComparison r;
  r.closed_residual = max_abs(exterior_d(diff));
  for (const auto& per : raw_periods(diff)) {
    for (double x : per.value) r.period_residual = std::max(r.period_residual, std::abs(x));
  }
  return r;
}

SampledForm random_form(MeshPtr mesh, CoeffPtr coeffs, const std::vector<Mask>& masks,
                        const std::vector<std::size_t>& coefficients, std::mt19937_64& rng, int max_mode) {
  constexpr int rank = 3;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Mesh& m = *mesh;
  const std::size_t np = m.points();
  SampledForm out(mesh, coeffs);
  for (Mask mask : masks) {
    if (mask >> m.dim()) throw DomainError("mask refers to a missing factor");
    auto& t = out.component_mut(mask);
    for (std::size_t c : coefficients) {
      if (c >= coeffs->dim()) throw DomainError("coefficient index out of range");
      for (int r = 0; r < rank; ++r) {
        std::vector<std::vector<double>> tables;
        for (int i = 0; i < m.dim(); ++i) {
          const Factor& f = m.factor(i);
          std::vector<double> g(static_cast<std::size_t>(f.samples()));
          if (f.kind == FactorKind::circle) {
            const double a0 = u(rng);
            std::vector<double> ak, bk;
            for (int k = 1; k <= max_mode; ++k) {
              ak.push_back(u(rng));
              bk.push_back(u(rng));
            }
            for (int s = 0; s < f.samples(); ++s) {
              double x = a0;
              for (int k = 1; k <= max_mode; ++k) {
                const double th = 2 * pi * k * f.coordinate(s);
                x += ak[k - 1] * std::cos(th) + bk[k - 1] * std::sin(th);
              }
              g[static_cast<std::size_t>(s)] = x;
            }
          } else {
            const double c0 = u(rng), c1 = u(rng), c2 = u(rng);
            for (int s = 0; s < f.samples(); ++s) {
              const double x = f.coordinate(s);
              g[static_cast<std::size_t>(s)] = c0 + c1 * x + c2 * x * x;
            }
          }
          tables.push_back(std::move(g));
        }
        for (std::size_t p = 0; p < np; ++p) {
          double x = 1;
          for (int i = 0; i < m.dim(); ++i) {
            x *= tables[static_cast<std::size_t>(i)][(p / m.stride(i)) % static_cast<std::size_t>(m.factor(i).samples())];
          }
          t[c * np + p] += x;
        }
      }
    }
  }
  return out;
}

nlohmann::json mesh_to_json(const Mesh& m) {
  auto factors = nlohmann::json::array();
  for (const auto& f : m.factors()) {
    factors.push_back({{"kind", f.kind == FactorKind::circle ? "circle" : "interval"}, {"n", f.n}, {"name", f.name}});
  }
  return {{"factors", factors}};
}

MeshPtr mesh_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array()) throw ParseError("mesh needs a 'factors' array");
  for (const auto& [k, v] : j.items()) {
    if (k != "factors") throw ParseError("unknown mesh key '" + k + "'");
  }
  std::vector<Factor> fs;
  for (const auto& f : j["factors"]) {
    if (!f.is_object()) throw ParseError("mesh factor must be an object");
    Factor x;
    for (const auto& [k, v] : f.items()) {
      if (k == "kind") {
        const auto s = v.get<std::string>();
        if (s == "circle") x.kind = FactorKind::circle;
        else if (s == "interval") x.kind = FactorKind::interval;
        else throw ParseError("unknown factor kind '" + s + "'");
      } else if (k == "n") {
        if (!v.is_number_integer()) throw ParseError("factor 'n' must be an integer");
        x.n = v.get<int>();
      } else if (k == "name") {
        x.name = v.get<std::string>();
      } else {
        throw ParseError("unknown factor key '" + k + "'");
      }
    }
    fs.push_back(std::move(x));
  }
  return Mesh::make(std::move(fs));
}

nlohmann::json form_to_json(const SampledForm& a) {
  const auto& cs = *a.coeffs();
  const std::size_t np = a.mesh()->points();
  auto basis = nlohmann::json::array();
  for (std::size_t c = 0; c < cs.dim(); ++c) basis.push_back(cs.basis_name(c));
  auto comps = nlohmann::json::array();
  for (const auto& [m, v] : a.components()) {
    auto values = nlohmann::json::array();
    for (std::size_t c = 0; c < cs.dim(); ++c) {
      values.push_back(std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(c * np),
                                           v.begin() + static_cast<std::ptrdiff_t>((c + 1) * np)));
    }
    comps.push_back({{"factors", mask_factors(m)}, {"values", values}});
  }
  return {{"mesh", mesh_to_json(*a.mesh())}, {"coefficients", basis}, {"components", comps}};
}

}  // namespace cobord::formcalc
