#include "sobczyk/pipeline.hpp"

#include <algorithm>

#include "sobczyk/error.hpp"

namespace sobczyk {

namespace {

std::vector<PointId> jump_cuts(const TestFunction& f) {
  std::vector<PointId> out;
  for (std::size_t i = 0; i + 1 < f.cuts().size(); ++i) {
    if (f.values()[i] != f.values()[i + 1]) out.push_back(f.cuts()[i]);
  }
  return out;
}

Rational h_value(const SubspaceData& x, std::size_t j, const PointId& p) {
  Rational sum = 0;
  for (std::size_t i = 0; i < x.generators.size(); ++i) {
    if (x.matrix[i][j] != 0) sum += x.matrix[i][j] * x.generators[i].eval(p);
  }
  return sum;
}

}  // namespace

PipelineResult full_pipeline(const LineDescriptor& k, const SubspaceData& x_in, const std::vector<DualVector>& t0,
                             const DecompositionConfig& cfg, std::size_t horizon) {
  if (x_in.generators.empty()) throw PreconditionError("pipeline needs at least one generator");
  PipelineReport report;
  SubspaceData x = x_in;
  if (x.matrix.empty()) {
    x.matrix.assign(x.generators.size(), lp::Vector(x.generators.size(), Rational(0)));
    for (std::size_t i = 0; i < x.generators.size(); ++i) x.matrix[i][i] = 1;
  }
  for (const auto& g : x.generators) {
    if (g.kind() != TestFunction::Kind::Step) throw Unsupported("pipeline subspaces must be spanned by step functions");
    if (!(g.line() == k)) throw LineMismatch("generator on " + g.line().describe() + ", expected " + k.describe());
  }

  LineDescriptor work = k;
  if (!k.is_zero_dimensional()) {
    auto [doubled, pi] = lex_double(k);
    for (auto& g : x.generators) g = pullback(pi, g);
    work = doubled;
    report.doubled = true;
  }

  std::vector<PointId> cuts;
  for (const auto& g : x.generators) {
    for (auto& c : jump_cuts(g)) cuts.push_back(std::move(c));
  }
  const QuotientMap q = build_quotient(work, cuts);
  const LineDescriptor& l = q.target();
  report.quotient_size = l.size();

  std::vector<TestFunction> on_l;
  for (const auto& g : x.generators) {
    std::vector<PointId> lc;
    for (const auto& c : g.cuts()) lc.push_back(q.apply(c));
    std::vector<Rational> values;
    // Cuts inside one class carry equal values on both sides; keep the last.
    std::vector<PointId> merged;
    for (std::size_t i = 0; i < lc.size(); ++i) {
      if (i + 1 < lc.size() && lc[i] == lc[i + 1]) continue;
      merged.push_back(lc[i]);
      values.push_back(g.values()[i]);
    }
    on_l.push_back(TestFunction::step(l, std::move(merged), std::move(values)));
  }
  const OperatorR r = OperatorR::finite_basis(l, on_l, x.matrix);

  Rational norm_t0 = 0;
  for (const auto& psi : t0) norm_t0 = max(norm_t0, dual_norm(r, psi));
  report.norm_t0 = norm_t0;

  const std::size_t n_max = horizon == 0 ? t0.size() + 1 : horizon;
  report.horizon = n_max;
  const MeasureSequence t = sobczyk_extend(r, t0, n_max);
  const Rational s = t.bound();
  report.norm_t = s;
  report.scale = s;

  std::vector<SignedMeasure> mu_prime;
  std::vector<SignedMeasure> nu;
  std::vector<Check> decomposition_checks;
  if (s == 0) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      mu_prime.push_back(SignedMeasure(l));
      nu.push_back(SignedMeasure(l));
    }
  } else {
    const MeasureSequence unit = t.scaled_by(1 / s);
    const DecompositionResult dec = decompose(r, unit, cfg);
    decomposition_checks = verify_decomposition(r, unit, cfg, dec, all_points(l));
    report.schedule = dec.schedule;
    for (std::size_t n = 1; n <= n_max; ++n) {
      mu_prime.push_back(s * dec.mu_prime[n - 1]);
      nu.push_back(s * dec.nu[n - 1]);
    }
  }

  PipelineResult result;
  Rational norm_hard = 0;
  Rational norm_s = 0;
  Rational norm_s_r = 0;
  Rational norm_tprime = 0;
  std::size_t identity_bad = 0;
  std::size_t restriction_bad = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    SignedMeasure hard = lift_measure(q, mu_prime[n - 1]);
    SignedMeasure tp = hard + lift_measure(q, nu[n - 1]);
    norm_hard = max(norm_hard, total_variation(hard));
    norm_s = max(norm_s, total_variation(nu[n - 1]));
    norm_s_r = max(norm_s_r, dual_norm(r, r_star(r, nu[n - 1])));
    norm_tprime = max(norm_tprime, total_variation(tp));

    const SignedMeasure mu = t.at(n);
    for (const auto& c : all_points(l)) {
      if (cumulative(mu, c) != cumulative(hard, q.fiber_max(c)) + cumulative(nu[n - 1], c)) ++identity_bad;
    }
    for (std::size_t j = 0; j < r.dimension(); ++j) {
      Rational pairing = 0;
      for (const auto& [p, w] : tp.atoms()) pairing += w * h_value(x, j, p);
      const Rational expected = n <= t0.size() ? t0[n - 1].coords()[j] : Rational(0);
      if (pairing != expected) ++restriction_bad;
    }
    result.hard.push_back(std::move(hard));
    result.tprime.push_back(std::move(tp));
  }
  report.norm_hard = norm_hard;
  report.norm_s = norm_s;
  report.norm_s_r = norm_s_r;
  report.norm_tprime = norm_tprime;
  report.ratio = norm_t0 == 0 ? Rational(0) : Rational(norm_tprime / norm_t0);

  auto add = [&](std::string name, Rational lhs, Rational rhs, bool pass) {
    report.checks.push_back(Check{std::move(name), std::move(lhs), std::move(rhs), pass, {}});
  };
  add("sobczyk_norm", s, 2 * norm_t0, s <= 2 * norm_t0);
  add("hard_norm", norm_hard, (4 + cfg.epsp) * s, norm_hard <= (4 + cfg.epsp) * s);
  add("s_norm", norm_s, (1 + cfg.epsp) * s, norm_s <= (1 + cfg.epsp) * s);
  add("s_r_norm", norm_s_r, cfg.eps * s, norm_s_r <= cfg.eps * s);
  add("operator_identity", Rational(identity_bad), 0, identity_bad == 0);
  add("restriction_exact", Rational(restriction_bad), 0, restriction_bad == 0);
  add("ratio", report.ratio, 8 + cfg.eps, report.ratio <= 8 + cfg.eps);
  for (auto& c : decomposition_checks) {
    c.name = "decompose." + c.name;
    report.checks.push_back(std::move(c));
  }
  report.holds = std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
  result.report = std::move(report);
  return result;
}

}  // namespace sobczyk
