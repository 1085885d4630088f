#include "sobczyk/decomposition.hpp"

#include <algorithm>
#include <map>

#include "sobczyk/error.hpp"

namespace sobczyk {

SignedMeasure tilde_mu(const LineDescriptor& line, const ClopenPartition& p, const SignedMeasure& mu) {
  if (!(mu.line() == line)) throw LineMismatch("tilde: measure on " + mu.line().describe());
  SignedMeasure out = mu;
  Rational correction = 0;
  const PointId top = line.max();
  for (const auto& b : p.cuts()) {
    const Rational m = cumulative(mu, b);
    if (m == 0) continue;
    correction += abs(m);
    out.add(b, Rational(-m));
    if (b == top) continue;
    const auto next = line.successor(b);
    if (!next) throw PostconditionError("cut " + b.to_string() + " has no successor");
    out.add(*next, m);
  }

  for (const auto& cell : p.cells()) {
    if (out.mass_of(cell) != 0) throw PostconditionError("tilde: nonzero mass on cell " + cell.to_string());
  }
  std::vector<PointId> probes = mu.support();
  for (const auto& q : out.support()) probes.push_back(q);
  probes.push_back(line.min());
  for (const auto& t : probes) {
    if (p.has_cut(t)) continue;
    if (cumulative(out, t) != cumulative(mu, t)) {
      throw PostconditionError("tilde: cumulative changed at " + t.to_string());
    }
  }
  if (total_variation(out) > total_variation(mu) + 2 * correction) throw PostconditionError("tilde: norm bound fails");
  return out;
}

SignedMeasure skeleton(const ClopenInterval& interval, const ClosedSet& h, const SignedMeasure& mu) {
  const LineDescriptor& line = mu.line();
  if (!(h.line() == line)) throw LineMismatch("skeleton: closed set on another line");
  validate_interval(line, interval);
  for (const auto& p : mu.support()) {
    if (!interval_contains(line, interval, p)) {
      throw PreconditionError("skeleton: atom " + p.to_string() + " outside " + interval.to_string());
    }
  }
  SignedMeasure out(line);
  if (h.is_empty()) {
    if (mu.total_mass() != 0) throw PreconditionError("skeleton: empty H needs mu(I) = 0");
    return out;
  }
  if (!interval_contains(line, interval, h.min()) || !interval_contains(line, interval, h.max())) {
    throw PreconditionError("skeleton: H is not inside " + interval.to_string());
  }
  const PointId top = h.max();
  for (const auto& [p, w] : mu.atoms()) {
    if (h.contains(p)) {
      out.add(p, w);
    } else if (auto up = h.first_at_or_above(p)) {
      out.add(*up, w);
    } else {
      out.add(top, w);
    }
  }

  for (const auto& p : out.support()) {
    if (!h.contains(p)) throw PostconditionError("skeleton: atom off H at " + p.to_string());
  }
  if (out.total_mass() != mu.total_mass()) throw PostconditionError("skeleton: total mass changed");
  if (total_variation(out) > total_variation(mu)) throw PostconditionError("skeleton: norm increased");
  std::vector<PointId> probes = out.support();
  for (const auto& p : mu.support()) {
    if (h.contains(p)) probes.push_back(p);
    if (auto up = h.first_at_or_above(p)) probes.push_back(*up);
  }
  for (const auto& t : probes) {
    if (t == top) continue;
    if (cumulative(out, t) != cumulative(mu, t)) {
      throw PostconditionError("skeleton: cumulative changed at " + t.to_string());
    }
  }
  return out;
}

std::vector<std::size_t> choose_schedule(const MeasureSequence& seq,
                                         const std::function<ClopenPartition(std::size_t)>& partitions,
                                         const Rational& epsp) {
  if (epsp <= 0) throw PreconditionError("epsp must be positive");
  std::vector<std::size_t> schedule;
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= seq.horizon(); ++k) {
    const std::size_t n = std::max(prev + 1, seq.decay_index(partitions(k).cuts(), epsp));
    if (n > seq.horizon()) {
      if (k == 1 && seq.certificate() == MeasureSequence::Certificate::HorizonOnly) {
        throw ScheduleNotFound("no admissible n_1 within horizon " + std::to_string(seq.horizon()));
      }
      break;
    }
    schedule.push_back(n);
    prev = n;
  }
  return schedule;
}

Rational DecompositionConfig::delta() const {
  Rational d = 2 * eps / (1 + epsp);
  return d;
}

namespace {

using CellKey = std::pair<std::optional<PointId>, PointId>;

struct CellData {
  std::size_t alpha = 0;
  ClosedSet h;
};

class CellCache {
 public:
  explicit CellCache(const Hierarchy& h) : h_(h) {}

  const CellData& get(const ClopenInterval& cell) {
    CellKey key{cell.lo, cell.hi};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const std::size_t alpha = alpha_of_interval(h_, cell);
    return cache_.emplace(key, CellData{alpha, h_.levels[alpha].intersect(cell)}).first->second;
  }

 private:
  const Hierarchy& h_;
  std::map<CellKey, CellData> cache_;
};

void require_desk_line(const LineDescriptor& line) {
  if (line.kind() != LineDescriptor::Kind::Finite && line.kind() != LineDescriptor::Kind::Ordinal) {
    throw PreconditionError("decompose needs a finite or ordinal line, got " + line.describe());
  }
}

}  // namespace

DecompositionResult decompose(const OperatorR& r, const MeasureSequence& seq, const DecompositionConfig& cfg) {
  const LineDescriptor& line = r.line();
  require_desk_line(line);
  if (!(seq.line() == line)) throw LineMismatch("sequence and operator live on different lines");
  if (cfg.eps <= 0 || cfg.epsp <= 0) throw PreconditionError("eps and epsp must be positive");
  if (seq.bound() > 1) throw PreconditionError("decompose needs sup |mu_n| <= 1; scale first");

  DecompositionResult result{{}, {}, {}, {}, {}, compute_hierarchy(r, cfg.delta(), cfg.max_stage), seq.horizon()};
  std::vector<ClopenPartition> all_partitions;
  auto partition = [&](std::size_t k) {
    while (all_partitions.size() < k) all_partitions.push_back(refine_partitions(line, all_partitions.size() + 1));
    return all_partitions[k - 1];
  };
  result.schedule = choose_schedule(seq, partition, cfg.epsp);
  for (std::size_t k = 1; k <= result.schedule.size(); ++k) result.partitions.push_back(partition(k));

  CellCache cells(result.hierarchy);
  for (const auto& p : result.partitions) {
    for (const auto& cell : p.cells()) {
      const CellData& data = cells.get(cell);
      if (!data.h.is_empty()) result.exceptional.push_back(data.h.max());
    }
  }
  std::sort(result.exceptional.begin(), result.exceptional.end());
  result.exceptional.erase(std::unique(result.exceptional.begin(), result.exceptional.end()),
                           result.exceptional.end());

  std::size_t k = 0;
  for (std::size_t n = 1; n <= seq.horizon(); ++n) {
    while (k < result.schedule.size() && result.schedule[k] <= n) ++k;
    SignedMeasure mu = seq.at(n);
    if (k == 0) {
      result.mu_prime.push_back(mu);
      result.nu.push_back(SignedMeasure(line));
      continue;
    }
    const ClopenPartition& p = result.partitions[k - 1];
    const SignedMeasure tilde = tilde_mu(line, p, mu);
    SignedMeasure nu(line);
    for (const auto& cell : p.cells()) {
      const SignedMeasure part = tilde.restrict(cell);
      if (part.is_zero()) continue;
      nu += skeleton(cell, cells.get(cell).h, part);
    }
    result.mu_prime.push_back(mu - nu);
    result.nu.push_back(std::move(nu));
  }
  return result;
}

std::optional<std::size_t> k0_of(const Hierarchy& h, const std::vector<ClopenPartition>& partitions, const PointId& t) {
  const std::size_t beta = level_of(h, t);
  for (std::size_t k = 1; k <= partitions.size(); ++k) {
    const ClopenInterval cell = partitions[k - 1].cell_of(h.r.line(), t);
    if (diam_phi(h.r, h.levels[beta].intersect(cell)) < h.delta) return k;
  }
  return std::nullopt;
}

std::vector<Check> verify_decomposition(const OperatorR& r, const MeasureSequence& seq, const DecompositionConfig& cfg,
                                        const DecompositionResult& result, const std::vector<PointId>& sample) {
  const LineDescriptor& line = r.line();
  std::vector<Check> checks;
  auto add = [&](std::string name, Rational lhs, Rational rhs, bool pass, std::string detail = {}) {
    checks.push_back(Check{std::move(name), std::move(lhs), std::move(rhs), pass, std::move(detail)});
  };

  const Hierarchy h = compute_hierarchy(r, cfg.delta(), cfg.max_stage);
  add("hierarchy_match", Rational(h.levels.size()), Rational(result.hierarchy.levels.size()),
      h.levels == result.hierarchy.levels);

  std::vector<ClopenPartition> partitions;
  for (std::size_t k = 1; k <= result.schedule.size(); ++k) partitions.push_back(refine_partitions(line, k));
  bool schedule_ok = partitions == result.partitions;
  std::size_t schedule_bad = 0;
  for (std::size_t k = 0; k < result.schedule.size(); ++k) {
    if (k > 0 && result.schedule[k] <= result.schedule[k - 1]) ++schedule_bad;
    for (std::size_t n = result.schedule[k]; n <= result.horizon; ++n) {
      if (2 * cut_mass(seq.at(n), partitions[k].cuts()) > cfg.epsp) ++schedule_bad;
    }
  }
  schedule_ok = schedule_ok && schedule_bad == 0;
  add("schedule", Rational(schedule_bad), 0, schedule_ok);

  std::size_t split_bad = 0;
  Rational nu_max = 0;
  Rational mu_prime_max = 0;
  Rational nu_r_max = 0;
  for (std::size_t n = 1; n <= result.horizon; ++n) {
    const SignedMeasure& mp = result.mu_prime[n - 1];
    const SignedMeasure& nu = result.nu[n - 1];
    if (!(mp + nu == seq.at(n))) ++split_bad;
    nu_max = max(nu_max, total_variation(nu));
    mu_prime_max = max(mu_prime_max, total_variation(mp));
    nu_r_max = max(nu_r_max, dual_norm(r, r_star(r, nu)));
  }
  add("a_split", Rational(split_bad), 0, split_bad == 0);
  add("b_nu_norm", nu_max, 1 + cfg.epsp, nu_max <= 1 + cfg.epsp);
  add("b_mu_prime_norm", mu_prime_max, 2 + cfg.epsp, mu_prime_max <= 2 + cfg.epsp);
  add("c_nu_dual_norm", nu_r_max, cfg.eps, nu_r_max <= cfg.eps);

  std::size_t d_bad = 0;
  std::size_t d_checked = 0;
  std::size_t decay_bad = 0;
  for (const auto& t : sample) {
    line.require(t);
    if (!std::binary_search(result.exceptional.begin(), result.exceptional.end(), t)) {
      if (auto k0 = k0_of(h, partitions, t)) {
        for (std::size_t n = result.schedule[*k0 - 1]; n <= result.horizon; ++n) {
          ++d_checked;
          if (cumulative(result.mu_prime[n - 1], t) != 0) ++d_bad;
        }
      }
    }
    for (std::size_t k = 1; k <= partitions.size(); ++k) {
      if (!partitions[k - 1].has_cut(t)) continue;
      for (std::size_t n = result.schedule[k - 1]; n <= result.horizon; ++n) {
        if (cumulative(result.nu[n - 1], t) != 0) ++decay_bad;
      }
      break;
    }
  }
  add("d_cumulative_zero", Rational(d_bad), 0, d_bad == 0, std::to_string(d_checked) + " (t,n) pairs");
  add("nu_decay", Rational(decay_bad), 0, decay_bad == 0);
  return checks;
}

Verdict check_criterion(const QuotientMap& q, const MeasureSequence& seq, const std::vector<PointId>& sample) {
  if (!(seq.line() == q.target())) throw LineMismatch("sequence must live on the quotient target");
  for (const auto& t : sample) {
    if (!q.is_multi(t)) throw PreconditionError("sample point " + t.to_string() + " has a singleton fiber");
  }
  Verdict v;
  switch (seq.kind()) {
    case MeasureSequence::Kind::ExplicitList:
      v.kind = Verdict::Kind::Extendable;
      v.reason = "zero tail: cumulative values vanish after the list";
      return v;
    case MeasureSequence::Kind::Scaled:
      v.kind = Verdict::Kind::Extendable;
      v.reason = "geometric decay: cumulative values are ratio^n times a constant";
      return v;
    case MeasureSequence::Kind::Harmonic:
      v.kind = Verdict::Kind::Extendable;
      v.reason = "harmonic decay: cumulative values are a constant over n";
      return v;
    case MeasureSequence::Kind::Alternating:
      v.kind = Verdict::Kind::Unknown;
      v.reason = "no weak*-null certificate";
      return v;
    case MeasureSequence::Kind::IntervalSweep:
      break;
  }
  // Every t < 1 lies in one dyadic interval [a_n, b_n[ per level, where the
  // cumulative value is 1.
  for (const auto& t : sample) {
    const Rational& x = t.x();
    if (x >= 1) continue;
    v.kind = Verdict::Kind::NotExtendable;
    v.witness = t;
    for (std::size_t n = 1; n <= seq.horizon(); ++n) {
      if (cumulative(seq.at(n), t) == seq.factor()) ++v.hits;
    }
    v.reason = "cumulative value at " + t.to_string() + " equals 1 once per dyadic level";
    return v;
  }
  v.kind = Verdict::Kind::Extendable;
  v.reason = "cumulative value at 1 is the total mass 0";
  return v;
}

SignedMeasure lift_measure(const QuotientMap& q, const SignedMeasure& mu) {
  if (!(mu.line() == q.target())) throw LineMismatch("measure must live on the quotient target");
  SignedMeasure out(q.source());
  for (const auto& [t, w] : mu.atoms()) out.add(q.fiber_max(t), w);
  return out;
}

MeasureSequence extend_through_quotient(const QuotientMap& q, const MeasureSequence& seq, const Verdict& verdict) {
  if (verdict.kind != Verdict::Kind::Extendable) throw PreconditionError("extension needs an Extendable verdict");
  return seq.map_linear(q.source(), [&](const SignedMeasure& mu) { return lift_measure(q, mu); });
}

MeasureSequence sobczyk_extend(const OperatorR& r, const std::vector<DualVector>& functionals, std::size_t horizon) {
  if (r.kind() != OperatorR::Kind::FiniteBasis) throw PreconditionError("sobczyk_extend needs a finite basis");
  const LineDescriptor& line = r.line();
  std::vector<lp::Vector> columns;
  for (const auto& t : r.representatives()) columns.push_back(phi(r, t).coords());
  std::vector<SignedMeasure> out;
  for (const auto& psi : functionals) {
    if (psi.kind() != DualVector::Kind::Finite || psi.coords().size() != r.dimension()) {
      throw PreconditionError("functional does not match the basis");
    }
    SignedMeasure mu(line);
    auto rep = lp::min_l1_combination_lex(columns, psi.coords());
    if (!rep) throw PostconditionError("extension LP infeasible");
    for (std::size_t i = 0; i < columns.size(); ++i) mu.add(r.representatives()[i], rep->weights[i]);
    if (total_variation(mu) != dual_norm(r, psi)) throw PostconditionError("extension is not norm-preserving");
    if (!(r_star(r, mu) == psi)) throw PostconditionError("extension does not restrict to the functional");
    out.push_back(std::move(mu));
  }
  return MeasureSequence::explicit_list(line, std::move(out), horizon);
}

}  // namespace sobczyk
