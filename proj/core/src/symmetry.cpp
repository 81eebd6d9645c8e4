#include "brl/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "brl/errors.hpp"

namespace brl {

namespace {

using Rot = std::array<std::array<double, 4>, 4>;

Rot identity_rot() {
  Rot r{};
  for (std::size_t i = 0; i < 4; ++i) r[i][i] = 1.0;
  return r;
}

Rot multiply(const Rot& a, const Rot& b) {
  Rot r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t l = 0; l < 4; ++l) r[i][j] += a[i][l] * b[l][j];
  return r;
}

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
  SymmetryElement out;
  out.rotation = multiply(a.rotation, b.rotation);
  out.perm.resize(b.perm.size());
  for (std::size_t i = 0; i < b.perm.size(); ++i) out.perm[i] = a.perm[b.perm[i]];
  return out;
}

bool same(const SymmetryElement& a, const SymmetryElement& b) {
  if (a.perm != b.perm) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (std::abs(a.rotation[i][j] - b.rotation[i][j]) > 1e-9) return false;
  return true;
}

}  // namespace

Vec4 SymmetryElement::apply(const Vec4& v) const {
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += rotation[i][j] * v[j];
  return out;
}

Vec4 SymmetryElement::apply_transpose(const Vec4& v) const {
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += rotation[j][i] * v[j];
  return out;
}

SymmetryGroup SymmetryGroup::generate(const std::vector<SymmetryElement>& generators,
                                      std::size_t max_order) {
  if (generators.empty()) throw DomainError("symmetry group needs at least one generator");
  const std::size_t k = generators.front().perm.size();
  for (const auto& g : generators) {
    if (g.perm.size() != k) throw DomainError("generators act on different point counts");
    std::vector<bool> seen(k, false);
    for (std::size_t p : g.perm) {
      if (p >= k || seen[p]) throw DomainError("generator permutation is not a bijection");
      seen[p] = true;
    }
  }

  SymmetryGroup group;
  group.points_ = k;
  SymmetryElement id;
  id.rotation = identity_rot();
  id.perm.resize(k);
  for (std::size_t i = 0; i < k; ++i) id.perm[i] = i;
  group.elements_.push_back(id);

  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (const auto& g : generators) {
      SymmetryElement cand = compose(g, group.elements_[head]);
      bool known = false;
      for (const auto& e : group.elements_)
        if (same(e, cand)) {
          known = true;
          break;
        }
      if (!known) {
        if (group.elements_.size() >= max_order)
          throw DomainError("symmetry generators do not close to a finite group");
        group.elements_.push_back(std::move(cand));
      }
    }
  }
  return group;
}

SymmetryGroup SymmetryGroup::ring(std::size_t k) {
  if (k == 0) throw DomainError("ring symmetry needs at least one point");
  const double angle = 2.0 * std::numbers::pi / static_cast<double>(k);
  std::vector<SymmetryElement> gens;

  SymmetryElement rot;
  rot.rotation = identity_rot();
  rot.rotation[0][0] = std::cos(angle);
  rot.rotation[0][1] = -std::sin(angle);
  rot.rotation[1][0] = std::sin(angle);
  rot.rotation[1][1] = std::cos(angle);
  rot.perm.resize(k);
  for (std::size_t j = 0; j < k; ++j) rot.perm[j] = (j + 1) % k;
  gens.push_back(rot);

  SymmetryElement flip;
  flip.rotation = identity_rot();
  flip.rotation[1][1] = -1.0;
  flip.perm.resize(k);
  for (std::size_t j = 0; j < k; ++j) flip.perm[j] = (k - j) % k;
  gens.push_back(flip);

  for (std::size_t axis : {std::size_t{2}, std::size_t{3}}) {
    SymmetryElement refl;
    refl.rotation = identity_rot();
    refl.rotation[axis][axis] = -1.0;
    refl.perm.resize(k);
    for (std::size_t j = 0; j < k; ++j) refl.perm[j] = j;
    gens.push_back(refl);
  }
  return generate(gens);
}

std::vector<Vec4> SymmetryGroup::project(const std::vector<Vec4>& v) const {
  if (v.size() != points_) throw DomainError("symmetry projection: point count mismatch");
  std::vector<Vec4> out(points_);
  for (const auto& g : elements_)
    for (std::size_t i = 0; i < points_; ++i) out[i] += g.apply_transpose(v[g.perm[i]]);
  const double inv = 1.0 / static_cast<double>(elements_.size());
  for (auto& p : out) p *= inv;
  return out;
}

std::vector<std::vector<double>> SymmetryGroup::invariant_basis(double tol) const {
  std::vector<std::vector<double>> basis;
  const std::size_t n = 4 * points_;
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::vector<Vec4> unit(points_);
    unit[idx / 4][idx % 4] = 1.0;
    const std::vector<Vec4> proj = project(unit);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < points_; ++i)
      for (std::size_t a = 0; a < 4; ++a) v[4 * i + a] = proj[i][a];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        double c = 0.0;
        for (std::size_t t = 0; t < n; ++t) c += b[t] * v[t];
        for (std::size_t t = 0; t < n; ++t) v[t] -= c * b[t];
      }
    double nn = 0.0;
    for (double x : v) nn += x * x;
    nn = std::sqrt(nn);
    if (nn > tol) {
      for (double& x : v) x /= nn;
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

}  // namespace brl
