#include "sobczyk/function_space.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>

#include "sobczyk/error.hpp"

namespace sobczyk {

TestFunction pullback(const QuotientMap& q, const TestFunction& f) {
  if (!(f.line() == q.target())) {
    throw LineMismatch("function on " + f.line().describe() + ", quotient target " + q.target().describe());
  }
  if (f.kind() == TestFunction::Kind::PiecewiseLinear) {
    if (q.kind() == QuotientMap::Kind::Cuts) throw Unsupported("piecewise-linear pullback along a cut quotient");
    return f.with_line(q.source());
  }
  std::vector<PointId> cuts;
  cuts.reserve(f.cuts().size());
  for (const auto& c : f.cuts()) cuts.push_back(q.fiber_max(c));
  return TestFunction::step(q.source(), std::move(cuts), f.values());
}

// ---------------------------------------------------------------------------
// CoefficientPattern

namespace {

Rational power(const Rational& base, std::uint64_t k) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

CoefficientPattern CoefficientPattern::constant(std::vector<Rational> prefix, Rational c) {
  CoefficientPattern p;
  p.tail_ = Tail::Constant;
  p.prefix_ = std::move(prefix);
  p.c_ = std::move(c);
  p.ratio_ = 1;
  return p;
}

CoefficientPattern CoefficientPattern::geometric(std::vector<Rational> prefix, Rational c, Rational ratio) {
  if (!(abs(ratio) < 1)) throw PreconditionError("geometric tail needs |ratio| < 1");
  CoefficientPattern p;
  p.tail_ = Tail::Geometric;
  p.prefix_ = std::move(prefix);
  p.c_ = std::move(c);
  p.ratio_ = std::move(ratio);
  return p;
}

Rational CoefficientPattern::at(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  if (tail_ == Tail::Constant || n >= kFarCoordinate) return limit();
  Rational out = c_ * power(ratio_, n - prefix_.size());
  return out;
}

Rational CoefficientPattern::limit() const { return tail_ == Tail::Constant ? c_ : Rational(0); }

Rational CoefficientPattern::sup_abs() const {
  Rational best = abs(c_);
  for (const auto& v : prefix_) best = max(best, abs(v));
  return best;
}

bool CoefficientPattern::is_zero() const {
  return c_ == 0 && std::all_of(prefix_.begin(), prefix_.end(), [](const Rational& v) { return v == 0; });
}

std::string CoordKey::to_string() const {
  switch (layer) {
    case 0:
      return "e0(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    case 1:
      return "e1(" + std::to_string(a) + "," + std::to_string(b) + ")";
    default:
      return "e2(" + std::to_string(a) + ")";
  }
}

// ---------------------------------------------------------------------------
// DualVector

DualVector DualVector::finite(lp::Vector coords) {
  DualVector v;
  v.kind_ = Kind::Finite;
  v.coords_ = std::move(coords);
  for (auto& c : v.coords_) c.canonicalize();
  return v;
}

DualVector DualVector::l1(std::map<CoordKey, Rational> entries) {
  DualVector v;
  v.kind_ = Kind::L1;
  for (auto& [k, w] : entries) {
    if (w != 0) v.entries_.emplace(k, w);
  }
  return v;
}

DualVector DualVector::zero_like(const DualVector& v) {
  if (v.kind_ == Kind::L1) return l1({});
  return finite(lp::Vector(v.coords_.size(), Rational(0)));
}

void DualVector::require_compatible(const DualVector& other) const {
  if (kind_ != other.kind_ || (kind_ == Kind::Finite && coords_.size() != other.coords_.size())) {
    throw PreconditionError("incompatible dual vectors");
  }
}

DualVector& DualVector::operator+=(const DualVector& other) {
  require_compatible(other);
  if (kind_ == Kind::Finite) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
  }
  for (const auto& [k, w] : other.entries_) {
    auto [it, inserted] = entries_.try_emplace(k, w);
    if (inserted) continue;
    it->second += w;
    if (it->second == 0) entries_.erase(it);
  }
  return *this;
}

DualVector& DualVector::operator-=(const DualVector& other) {
  DualVector neg = other;
  neg *= Rational(-1);
  return *this += neg;
}

DualVector& DualVector::operator*=(const Rational& c) {
  if (kind_ == Kind::Finite) {
    for (auto& v : coords_) v *= c;
    return *this;
  }
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, w] : entries_) w *= c;
  return *this;
}

std::string DualVector::to_string() const {
  std::string out;
  if (kind_ == Kind::Finite) {
    out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i > 0) out += ",";
      out += sobczyk::to_string(coords_[i]);
    }
    return out + ")";
  }
  if (entries_.empty()) return "0";
  for (const auto& [k, w] : entries_) {
    if (!out.empty()) out += " + ";
    out += sobczyk::to_string(w) + "*" + k.to_string();
  }
  return out;
}

bool operator==(const DualVector& a, const DualVector& b) {
  return a.kind_ == b.kind_ && a.coords_ == b.coords_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------
// OperatorR

OperatorR OperatorR::finite_basis(const LineDescriptor& line, std::vector<TestFunction> g, lp::Matrix matrix) {
  if (g.empty()) throw PreconditionError("finite basis needs at least one generator");
  for (const auto& f : g) {
    if (!(f.line() == line)) throw LineMismatch("generator on " + f.line().describe() + ", expected " + line.describe());
  }
  if (matrix.empty()) {
    matrix.assign(g.size(), lp::Vector(g.size(), Rational(0)));
    for (std::size_t i = 0; i < g.size(); ++i) matrix[i][i] = 1;
  }
  if (matrix.size() != g.size() || matrix.front().empty()) throw PreconditionError("basis matrix has wrong shape");
  for (const auto& row : matrix) {
    if (row.size() != matrix.front().size()) throw PreconditionError("basis matrix is ragged");
  }

  OperatorR r(line);
  r.kind_ = Kind::FiniteBasis;
  r.g_ = std::move(g);
  r.matrix_ = std::move(matrix);

  std::vector<PointId> points;
  const auto cuts = r.refinement_cuts();
  std::optional<PointId> prev;
  for (const auto& c : cuts) {
    points.push_back(interval_min(line, ClopenInterval{prev, c}));
    points.push_back(c);
    prev = c;
  }
  for (const auto& f : r.g_) {
    if (f.kind() == TestFunction::Kind::PiecewiseLinear) {
      for (auto& b : f.breakpoints()) points.push_back(std::move(b));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  r.reps_ = std::move(points);

  for (const auto& t : r.reps_) r.rows_.push_back(phi(r, t).coords());
  std::sort(r.rows_.begin(), r.rows_.end());
  r.rows_.erase(std::unique(r.rows_.begin(), r.rows_.end()), r.rows_.end());
  if (lp::rank(r.rows_) != r.dimension()) throw PreconditionError("basis functions are linearly dependent");
  return r;
}

OperatorR OperatorR::coordinate(const LineDescriptor& line, CoordinatePatterns patterns) {
  if (line.kind() != LineDescriptor::Kind::Finite && line.kind() != LineDescriptor::Kind::Ordinal) {
    throw Unsupported("coordinate embedding needs a finite or ordinal line, got " + line.describe());
  }
  OperatorR r(line);
  r.kind_ = Kind::Coordinate;
  r.patterns_ = std::move(patterns);
  return r;
}

Rational OperatorR::basis_value(std::size_t j, const PointId& t) const {
  if (kind_ != Kind::FiniteBasis) throw PreconditionError("basis_value needs a finite basis");
  Rational sum = 0;
  for (std::size_t i = 0; i < g_.size(); ++i) {
    if (matrix_[i][j] != 0) sum += matrix_[i][j] * g_[i].eval(t);
  }
  return sum;
}

bool OperatorR::is_locally_constant() const {
  return kind_ == Kind::FiniteBasis && std::all_of(g_.begin(), g_.end(), [](const TestFunction& f) {
           return f.kind() == TestFunction::Kind::Step;
         });
}

std::vector<PointId> OperatorR::refinement_cuts() const {
  std::vector<PointId> cuts{line_.max()};
  for (const auto& f : g_) {
    if (f.kind() != TestFunction::Kind::Step) continue;
    for (std::size_t i = 0; i + 1 < f.cuts().size(); ++i) {
      if (f.values()[i] != f.values()[i + 1]) cuts.push_back(f.cuts()[i]);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

bool operator==(const OperatorR& a, const OperatorR& b) {
  return a.kind_ == b.kind_ && a.line_ == b.line_ && a.g_ == b.g_ && a.matrix_ == b.matrix_ &&
         a.patterns_ == b.patterns_;
}

// ---------------------------------------------------------------------------
// φ and norms

namespace {

struct Term {
  CoordKey key;
  Rational weight;
};

using Terms = std::array<std::optional<Term>, 3>;

Terms coordinate_terms(const OperatorR& r, const PointId& p) {
  r.line().require(p);
  const auto& pat = r.patterns();
  Terms out;
  auto put = [&](int layer, CoordKey key, Rational w) {
    if (w != 0) out[static_cast<std::size_t>(layer)] = Term{key, std::move(w)};
  };
  if (r.line().kind() == LineDescriptor::Kind::Finite) {
    put(0, index_key(p.index()), pat.units.at(p.index()));
    return out;
  }
  const OrdinalCnf& c = p.cnf();
  const int rank = c.rank();
  if (rank == 0) put(0, CoordKey{0, c.omega2, c.omega, c.units}, pat.units.at(c.units));
  if (rank <= 1) {
    const std::uint64_t b = rank == 1 ? c.omega : c.omega + 1;
    put(1, CoordKey{1, c.omega2, b, 0}, pat.omega.at(b));
  }
  const std::uint64_t a = rank == 2 ? c.omega2 : c.omega2 + 1;
  put(2, CoordKey{2, a, 0, 0}, pat.omega2.at(a));
  return out;
}

Rational terms_distance(const Terms& x, const Terms& y) {
  Rational d = 0;
  for (std::size_t l = 0; l < 3; ++l) {
    if (x[l] && y[l] && x[l]->key == y[l]->key) {
      d += abs(x[l]->weight - y[l]->weight);
      continue;
    }
    if (x[l]) d += abs(x[l]->weight);
    if (y[l]) d += abs(y[l]->weight);
  }
  return d;
}

Rational terms_norm(const Terms& x) {
  Rational n = 0;
  for (const auto& t : x) {
    if (t) n += abs(t->weight);
  }
  return n;
}

constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

/// lo..max(lo, prefix)+2 clipped to hi, plus hi when finite.
std::vector<std::uint64_t> coordinate_candidates(std::uint64_t lo, std::uint64_t hi, std::size_t prefix) {
  std::vector<std::uint64_t> out;
  const std::uint64_t top = std::min<std::uint64_t>(hi, std::max<std::uint64_t>(lo, prefix) + 2);
  for (std::uint64_t v = lo; v <= top; ++v) out.push_back(v);
  if (hi != kUnbounded && hi > top) out.push_back(hi);
  return out;
}

std::vector<PointId> coordinate_extremal(const OperatorR& r, const ClosedSet& s) {
  const auto& pat = r.patterns();
  std::vector<PointId> out;
  for (const auto& comp : s.components()) {
    if (r.line().kind() == LineDescriptor::Kind::Finite) {
      for (auto v : coordinate_candidates(comp.lo.index(), comp.hi.index(), pat.units.prefix().size())) {
        out.push_back(PointId::finite(v));
      }
      continue;
    }
    const OrdinalCnf& lo = comp.lo.cnf();
    const OrdinalCnf& hi = comp.hi.cnf();
    for (std::uint64_t a = lo.omega2; a <= hi.omega2; ++a) {
      const std::uint64_t b_lo = a == lo.omega2 ? lo.omega : 0;
      const std::uint64_t b_hi = a == hi.omega2 ? hi.omega : kUnbounded;
      for (auto b : coordinate_candidates(b_lo, b_hi, pat.omega.prefix().size() + 1)) {
        const std::uint64_t c_lo = a == lo.omega2 && b == lo.omega ? lo.units : 0;
        const std::uint64_t c_hi = a == hi.omega2 && b == hi.omega ? hi.units : kUnbounded;
        for (auto c : coordinate_candidates(c_lo, c_hi, pat.units.prefix().size())) {
          const OrdinalCnf p{a, b, c};
          if (p < lo || hi < p || p.rank() < comp.min_rank) continue;
          out.push_back(PointId::ordinal(p));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

DualVector phi(const OperatorR& r, const PointId& p) {
  r.line().require(p);
  if (r.kind() == OperatorR::Kind::FiniteBasis) {
    lp::Vector v(r.dimension());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = r.basis_value(j, p);
    return DualVector::finite(std::move(v));
  }
  std::map<CoordKey, Rational> entries;
  for (auto& t : coordinate_terms(r, p)) {
    if (t) entries.emplace(t->key, std::move(t->weight));
  }
  return DualVector::l1(std::move(entries));
}

Rational dual_norm(const OperatorR& r, const DualVector& psi) {
  if (psi.kind() == DualVector::Kind::L1) {
    if (r.kind() != OperatorR::Kind::Coordinate) throw PreconditionError("l1 vector against a finite-basis operator");
    Rational sum = 0;
    for (const auto& [k, w] : psi.entries()) sum += abs(w);
    return sum;
  }
  if (r.kind() != OperatorR::Kind::FiniteBasis || psi.coords().size() != r.dimension()) {
    throw PreconditionError("functional does not match the operator's basis");
  }
  if (std::all_of(psi.coords().begin(), psi.coords().end(), [](const Rational& v) { return v == 0; })) return 0;
  auto rep = lp::min_l1_combination(r.constraint_rows(), psi.coords());
  if (!rep) throw PostconditionError("dual norm LP infeasible: constraint rows do not span X*");
  return rep->norm;
}

DualVector r_star(const OperatorR& r, const SignedMeasure& mu) {
  if (!(mu.line() == r.line())) throw LineMismatch("measure and operator live on different lines");
  DualVector out = r.kind() == OperatorR::Kind::FiniteBasis ? DualVector::finite(lp::Vector(r.dimension(), Rational(0)))
                                                            : DualVector::l1({});
  for (const auto& [p, w] : mu.atoms()) out += w * phi(r, p);
  return out;
}

Rational phi_distance(const OperatorR& r, const PointId& p, const PointId& q) {
  if (r.kind() == OperatorR::Kind::Coordinate) return terms_distance(coordinate_terms(r, p), coordinate_terms(r, q));
  return dual_norm(r, phi(r, p) - phi(r, q));
}

std::vector<PointId> extremal_candidates(const OperatorR& r, const ClosedSet& s) {
  if (!(s.line() == r.line())) throw LineMismatch("closed set and operator live on different lines");
  if (r.kind() == OperatorR::Kind::Coordinate) return coordinate_extremal(r, s);
  std::vector<PointId> out;
  if (r.is_locally_constant()) {
    std::optional<PointId> prev;
    for (const auto& c : r.refinement_cuts()) {
      const ClosedSet part = s.intersect(ClopenInterval{prev, c});
      if (!part.is_empty()) out.push_back(part.min());
      prev = c;
    }
    return out;
  }
  for (const auto& comp : s.components()) {
    out.push_back(comp.lo);
    out.push_back(comp.hi);
  }
  for (const auto& t : r.representatives()) {
    if (s.contains(t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational diam_phi(const OperatorR& r, const ClosedSet& s) {
  if (s.is_empty()) return 0;
  const auto points = extremal_candidates(r, s);
  Rational best = 0;
  if (r.kind() == OperatorR::Kind::Coordinate) {
    std::vector<Terms> terms;
    terms.reserve(points.size());
    for (const auto& p : points) terms.push_back(coordinate_terms(r, p));
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) best = max(best, terms_distance(terms[i], terms[j]));
    }
    return best;
  }
  std::vector<lp::Vector> images;
  for (const auto& p : points) images.push_back(phi(r, p).coords());
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      best = max(best, dual_norm(r, DualVector::finite(images[i]) - DualVector::finite(images[j])));
    }
  }
  return best;
}

Rational operator_norm(const OperatorR& r) {
  Rational best = 0;
  if (r.kind() == OperatorR::Kind::Coordinate) {
    for (const auto& p : coordinate_extremal(r, ClosedSet::whole(r.line()))) {
      best = max(best, terms_norm(coordinate_terms(r, p)));
    }
    return best;
  }
  for (const auto& row : r.constraint_rows()) best = max(best, dual_norm(r, DualVector::finite(row)));
  return best;
}

Rational eval_element(const OperatorR& r, const lp::Vector& x, const PointId& t) {
  if (r.kind() != OperatorR::Kind::FiniteBasis || x.size() != r.dimension()) {
    throw PreconditionError("eval_element needs X-coordinates of a finite basis");
  }
  Rational sum = 0;
  for (std::size_t j = 0; j < x.size(); ++j) sum += x[j] * r.basis_value(j, t);
  return sum;
}

}  // namespace sobczyk
