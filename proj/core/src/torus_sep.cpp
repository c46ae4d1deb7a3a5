// Copyright 2026 The tropgal Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropgal/torus_sep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropgal {

namespace {

void check_points(const std::vector<TorusPoint>& points) {
  if (points.empty()) throw std::invalid_argument("point set: empty");
  const std::size_t n = points[0].coords.size();
  if (n == 0) throw std::invalid_argument("point set: zero-dimensional");
  std::set<std::vector<Rational>> seen;
  for (const auto& p : points) {
    if (p.coords.size() != n) throw std::invalid_argument("point set: mixed dimensions");
    if (!seen.insert(p.coords).second) throw std::invalid_argument("point set: duplicate point");
  }
}

GroupTable build_table(std::vector<std::vector<int>>& perms) {
  // close under composition and inversion, then order canonically
  std::set<std::vector<int>> have(perms.begin(), perms.end());
  const std::size_t n = perms.empty() ? 0 : perms[0].size();
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  have.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(have.begin(), have.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        std::vector<int> ab(n);
        for (std::size_t i = 0; i < n; ++i) ab[i] = a[b[i]];
        if (have.insert(ab).second) grew = true;
        if (have.size() > 40320) {
          throw std::invalid_argument("point set action: group closure too large");
        }
      }
    }
  }
  perms.assign(have.begin(), have.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  GroupTable t;
  t.mul.assign(perms.size(), std::vector<int>(perms.size(), -1));
  t.inv.assign(perms.size(), -1);
  t.id = index.at(id);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    std::vector<int> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perms[a][i]] = static_cast<int>(i);
    t.inv[a] = index.at(inv);
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> ab(n);
      for (std::size_t i = 0; i < n; ++i) ab[i] = perms[a][perms[b][i]];
      t.mul[a][b] = index.at(ab);
    }
  }
  return t;
}

}  // namespace

PointSetAction PointSetAction::from_point_perms(std::vector<TorusPoint> points,
                                                std::vector<std::vector<int>> perms) {
  check_points(points);
  for (const auto& p : perms) {
    if (p.size() != points.size()) throw std::invalid_argument("point permutation: wrong size");
    std::vector<bool> hit(points.size(), false);
    for (int img : p) {
      if (img < 0 || img >= static_cast<int>(points.size()) || hit[img]) {
        throw std::invalid_argument("point permutation: not a permutation of V");
      }
      hit[img] = true;
    }
  }
  PointSetAction a;
  a.points_ = std::move(points);
  a.perms_ = std::move(perms);
  a.table_ = build_table(a.perms_);
  return a;
}

PointSetAction PointSetAction::from_coordinate_perms(
    std::vector<TorusPoint> points, const std::vector<std::vector<int>>& coord_perms) {
  check_points(points);
  const std::size_t n = points[0].coords.size();
  std::map<std::vector<Rational>, int> index;
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i].coords] = static_cast<int>(i);

  std::vector<std::vector<int>> point_perms;
  for (const auto& cp : coord_perms) {
    if (cp.size() != n) throw std::invalid_argument("coordinate permutation: wrong dimension");
    std::vector<int> perm(points.size(), -1);
    for (std::size_t i = 0; i < points.size(); ++i) {
      // coordinate slot j of the image holds the coordinate from slot cp⁻¹(j)
      std::vector<Rational> img(n);
      for (std::size_t j = 0; j < n; ++j) img[cp[j]] = points[i].coords[j];
      auto it = index.find(img);
      if (it == index.end()) {
        throw std::invalid_argument("coordinate permutation does not preserve the point set");
      }
      perm[i] = it->second;
    }
    point_perms.push_back(std::move(perm));
  }
  return from_point_perms(std::move(points), std::move(point_perms));
}

TropScalar separator_value(const TorusPoint& v, const TorusPoint& u) {
  if (v.coords.size() != u.coords.size()) {
    throw std::invalid_argument("separator_value: dimension mismatch");
  }
  Rational sum(0);
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    // tropical |.|: max(u_i - v_i, v_i - u_i); coordinates combine by ⊙
    const Rational diff = u.coords[i] - v.coords[i];
    sum += std::max(diff, Rational(-diff));
  }
  return TropScalar(Rational(-sum));
}

std::vector<TropScalar> subgroup_separator(const PointSetAction& a, const Subgroup& h, int v) {
  if (v < 0 || v >= static_cast<int>(a.points().size())) {
    throw std::invalid_argument("subgroup_separator: v not in V");
  }
  std::vector<TropScalar> table;
  table.reserve(a.points().size());
  for (std::size_t u = 0; u < a.points().size(); ++u) {
    TropScalar best = TropScalar::zero();
    for (int g : h) {
      best = trop_add(best, separator_value(a.points()[a.apply(g, v)],
                                            a.points()[static_cast<int>(u)]));
    }
    table.push_back(best);
  }
  return table;
}

Subgroup separator_stabilizer(const PointSetAction& a, const Subgroup& h, int v) {
  for (int g = 0; g < a.size(); ++g) {
    if (g != a.table().id && a.apply(g, v) == v) {
      throw std::domain_error("separator_stabilizer: the stabilizer of v must be trivial");
    }
  }
  const std::vector<TropScalar> f = subgroup_separator(a, h, v);
  Subgroup out;
  for (int g = 0; g < a.size(); ++g) {
    const int ginv = a.table().inv[g];
    bool fixes = true;
    for (std::size_t u = 0; u < a.points().size() && fixes; ++u) {
      fixes = f[a.apply(ginv, static_cast<int>(u))] == f[u];
    }
    if (fixes) out.push_back(g);
  }
  if (out != h) {
    throw std::logic_error("separator_stabilizer: stabilizer is not H (free basepoint violated?)");
  }
  return out;
}

}  // namespace tropgal
