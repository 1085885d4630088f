#pragma once

// Brute-force reference implementations. They share only the data types
// with the library and recompute everything from definitions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sobczyk/measure.hpp"

namespace oracle {

using sobczyk::Rational;
using Vec = std::vector<Rational>;

inline Rational absq(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Unique solution of the square system, if the matrix is invertible.
inline std::optional<Vec> solve_square(std::vector<Vec> a, Vec b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// max ψ·x over {x : |row·x| ≤ 1 for every row} by enumerating the
/// vertices of the polytope (the rows span, so it is bounded).
inline Rational dual_norm_by_vertices(const std::vector<Vec>& rows, const Vec& psi) {
  const std::size_t d = psi.size();
  Rational best = 0;
  bool found = false;
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
    if (depth == d) {
      for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << d); ++signs) {
        std::vector<Vec> a;
        Vec b;
        for (std::size_t i = 0; i < d; ++i) {
          a.push_back(rows[pick[i]]);
          b.push_back((signs >> i) & 1 ? Rational(-1) : Rational(1));
        }
        auto x = solve_square(a, b);
        if (!x) continue;
        bool feasible = true;
        for (const auto& row : rows) {
          Rational v = 0;
          for (std::size_t j = 0; j < d; ++j) v += row[j] * (*x)[j];
          if (absq(v) > 1) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        Rational value = 0;
        for (std::size_t j = 0; j < d; ++j) value += psi[j] * (*x)[j];
        if (!found || value > best) best = value;
        found = true;
      }
      return;
    }
    for (std::size_t i = from; i < rows.size(); ++i) {
      pick[depth] = i;
      choose(depth + 1, i + 1);
    }
  };
  choose(0, 0);
  return best;
}

/// Dual-norm constraint rows of span{h_j} on a finite line: one row per point.
inline std::vector<Vec> rows_on_points(const std::vector<sobczyk::TestFunction>& basis,
                                       const std::vector<sobczyk::PointId>& points) {
  std::vector<Vec> rows;
  for (const auto& p : points) {
    Vec row;
    for (const auto& h : basis) row.push_back(h.eval(p));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Measures on a finite line as weight vectors indexed by point.
using Atoms = std::map<std::uint64_t, Rational>;

inline Atoms atoms_of(const sobczyk::SignedMeasure& mu) {
  Atoms out;
  for (const auto& [p, w] : mu.atoms()) out[p.index()] = w;
  return out;
}

inline Rational prefix_mass(const Atoms& mu, std::uint64_t t) {
  Rational s = 0;
  for (const auto& [p, w] : mu) {
    if (p <= t) s += w;
  }
  return s;
}

inline void add_atom(Atoms& mu, std::uint64_t p, const Rational& w) {
  mu[p] += w;
  if (mu[p] == 0) mu.erase(p);
}

/// μ̃ on FiniteLine(n) for cuts P (containing n−1), straight from the formula.
inline Atoms tilde(const Atoms& mu, const std::vector<std::uint64_t>& cuts, std::uint64_t n) {
  Atoms out = mu;
  for (auto b : cuts) {
    const Rational m = prefix_mass(mu, b);
    add_atom(out, b, -m);
    if (b != n - 1) add_atom(out, b + 1, m);
  }
  return out;
}

/// Skeleton onto a finite H ⊆ [lo, hi] of a finite line: each atom goes
/// to the least member of H at or above it, or to max H.
inline Atoms skeleton(const Atoms& mu, const std::set<std::uint64_t>& h) {
  Atoms out;
  for (const auto& [p, w] : mu) {
    auto it = h.lower_bound(p);
    add_atom(out, it == h.end() ? *h.rbegin() : *it, w);
  }
  return out;
}

/// Truncated model of an ordinal segment below ω³ with its coordinate map.
/// Points are (A, B, C) triples; φ is a finite map key → weight.
struct OrdinalPoint {
  std::uint64_t a = 0, b = 0, c = 0;
  auto operator<=>(const OrdinalPoint&) const = default;
  int rank() const { return c > 0 || (a == 0 && b == 0) ? 0 : (b > 0 ? 1 : 2); }
};

using Embedding = std::map<std::vector<std::uint64_t>, Rational>;

inline Rational l1_distance(const Embedding& x, const Embedding& y) {
  Rational d = 0;
  for (const auto& [k, w] : x) {
    auto it = y.find(k);
    d += absq(it == y.end() ? w : Rational(w - it->second));
  }
  for (const auto& [k, w] : y) {
    if (!x.count(k)) d += absq(w);
  }
  return d;
}

/// Levels H₀ ⊇ H₁ ⊇ … of the δ-oscillation hierarchy on a finite model.
/// `neighborhoods(p)` lists the basic neighborhoods of p used for the test;
/// p survives a stage when every listed neighborhood meets the current
/// level in a set of φ-diameter ≥ δ.
inline std::vector<std::set<OrdinalPoint>> truncated_hierarchy(
    const std::vector<OrdinalPoint>& points, const std::function<Embedding(const OrdinalPoint&)>& phi,
    const std::function<std::vector<std::vector<OrdinalPoint>>(const OrdinalPoint&)>& neighborhoods,
    const Rational& delta, std::size_t max_stage) {
  std::map<OrdinalPoint, Embedding> emb;
  for (const auto& p : points) emb[p] = phi(p);
  std::vector<std::set<OrdinalPoint>> levels{std::set<OrdinalPoint>(points.begin(), points.end())};
  while (!levels.back().empty() && levels.size() <= max_stage) {
    const auto& cur = levels.back();
    std::set<OrdinalPoint> next;
    for (const auto& p : cur) {
      bool survives = true;
      for (const auto& u : neighborhoods(p)) {
        std::vector<OrdinalPoint> in;
        for (const auto& q : u) {
          if (cur.count(q)) in.push_back(q);
        }
        Rational diam = 0;
        for (std::size_t i = 0; i < in.size(); ++i) {
          for (std::size_t j = i + 1; j < in.size(); ++j) diam = std::max(diam, l1_distance(emb[in[i]], emb[in[j]]));
        }
        if (diam < delta) {
          survives = false;
          break;
        }
      }
      if (survives) next.insert(p);
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace oracle
