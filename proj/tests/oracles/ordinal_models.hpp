#pragma once

#include "oracles.hpp"
#include "sobczyk/fragmentation.hpp"

namespace oracle {

struct OrdinalModel {
  std::vector<OrdinalPoint> points;
  std::function<Embedding(const OrdinalPoint&)> phi;
  std::function<std::vector<std::vector<OrdinalPoint>>(const OrdinalPoint&)> neighborhoods;
};

/// [0,ω] truncated to 0..n−1 and ω, with φ(k) = e_k and φ(ω) = 0.
inline OrdinalModel omega_model(std::uint64_t n = 100) {
  OrdinalModel m;
  for (std::uint64_t k = 0; k < n; ++k) m.points.push_back({0, 0, k});
  m.points.push_back({0, 1, 0});
  m.phi = [](const OrdinalPoint& p) {
    Embedding e;
    if (p.b == 0) e[{p.c}] = 1;
    return e;
  };
  m.neighborhoods = [n](const OrdinalPoint& p) {
    std::vector<std::vector<OrdinalPoint>> out;
    if (p.rank() == 0) return std::vector<std::vector<OrdinalPoint>>{{p}};
    for (std::uint64_t cut = 0; cut + 2 < n; ++cut) {
      std::vector<OrdinalPoint> u{p};
      for (std::uint64_t k = cut + 1; k < n; ++k) u.push_back({0, 0, k});
      out.push_back(std::move(u));
    }
    return out;
  };
  return m;
}

/// [0,ω²] truncated to ω·a+b with a, b < side, plus ω². Successors and 0
/// map to e_(a,b) + f_(a+1), ω·a to f_a, ω² to 0.
inline OrdinalModel omega_squared_model(std::uint64_t side = 10) {
  OrdinalModel m;
  for (std::uint64_t a = 0; a < side; ++a) {
    for (std::uint64_t b = 0; b < side; ++b) m.points.push_back({0, a, b});
  }
  m.points.push_back({1, 0, 0});
  m.phi = [](const OrdinalPoint& p) {
    Embedding e;
    if (p.rank() == 0) {
      e[{0, p.b, p.c}] = 1;
      e[{1, p.b + 1}] = 1;
    } else if (p.rank() == 1) {
      e[{1, p.b}] = 1;
    }
    return e;
  };
  const auto points = m.points;
  m.neighborhoods = [side, points](const OrdinalPoint& p) {
    std::vector<std::vector<OrdinalPoint>> out;
    if (p.rank() == 0) return std::vector<std::vector<OrdinalPoint>>{{p}};
    if (p.rank() == 1) {
      for (std::uint64_t cut = 0; cut + 2 < side; ++cut) {
        std::vector<OrdinalPoint> u{p};
        for (std::uint64_t c = cut + 1; c < side; ++c) u.push_back({0, p.b - 1, c});
        out.push_back(std::move(u));
      }
      return out;
    }
    for (std::uint64_t cut = 0; cut + 2 < side; ++cut) {
      std::vector<OrdinalPoint> u;
      for (const auto& q : points) {
        if (q.a == 1 || q.b > cut) u.push_back(q);
      }
      out.push_back(std::move(u));
    }
    return out;
  };
  return m;
}

inline sobczyk::PointId to_point(const OrdinalPoint& p) { return sobczyk::PointId::ordinal(p.a, p.b, p.c); }

/// Number of model points on which some level of the library hierarchy and
/// the truncated one disagree, plus the stage difference.
inline std::size_t hierarchy_disagreements(const sobczyk::Hierarchy& h, const OrdinalModel& m,
                                           const Rational& delta) {
  const auto ref = truncated_hierarchy(m.points, m.phi, m.neighborhoods, delta, 32);
  std::size_t bad = h.levels.size() == ref.size() ? 0 : 1;
  const std::size_t levels = std::min(h.levels.size(), ref.size());
  for (std::size_t k = 0; k < levels; ++k) {
    for (const auto& p : m.points) {
      if (h.levels[k].contains(to_point(p)) != (ref[k].count(p) == 1)) ++bad;
    }
  }
  return bad;
}

}  // namespace oracle
