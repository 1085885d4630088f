#include "sobczyk/sequence.hpp"

#include <algorithm>

#include "sobczyk/error.hpp"

namespace sobczyk {

Rational cut_mass(const SignedMeasure& mu, const std::vector<PointId>& cuts) {
  Rational sum = 0;
  for (const auto& b : cuts) sum += abs(cumulative(mu, b));
  return sum;
}

std::pair<Rational, Rational> sweep_interval(std::size_t n) {
  if (n == 0) throw PreconditionError("sequence indices start at 1");
  std::size_t level = 1;
  std::size_t before = 0;
  while (n > before + (std::size_t{1} << level)) {
    before += std::size_t{1} << level;
    ++level;
  }
  const std::size_t j = n - 1 - before;
  const Rational width(1, static_cast<unsigned long>(std::size_t{1} << level));
  Rational a = width * static_cast<unsigned long>(j);
  Rational b = width * static_cast<unsigned long>(j + 1);
  return {a, b};
}

MeasureSequence sweep_sequence(std::size_t depth) { return MeasureSequence::interval_sweep(depth); }

MeasureSequence MeasureSequence::explicit_list(const LineDescriptor& line, std::vector<SignedMeasure> list,
                                               std::size_t horizon) {
  for (const auto& mu : list) {
    if (!(mu.line() == line)) throw LineMismatch("sequence term on " + mu.line().describe());
  }
  MeasureSequence s(line);
  s.kind_ = Kind::ExplicitList;
  s.horizon_ = horizon == 0 ? list.size() + 1 : horizon;
  s.table_ = std::move(list);
  return s;
}

MeasureSequence MeasureSequence::scaled(SignedMeasure base, Rational ratio, std::size_t horizon) {
  if (!(abs(ratio) < 1)) throw PreconditionError("scaled sequence needs |ratio| < 1");
  if (horizon == 0) throw PreconditionError("horizon must be positive");
  MeasureSequence s(base.line());
  s.kind_ = Kind::Scaled;
  s.table_.push_back(std::move(base));
  s.ratio_ = std::move(ratio);
  s.horizon_ = horizon;
  return s;
}

MeasureSequence MeasureSequence::harmonic(SignedMeasure base, std::size_t horizon) {
  if (horizon == 0) throw PreconditionError("horizon must be positive");
  MeasureSequence s(base.line());
  s.kind_ = Kind::Harmonic;
  s.table_.push_back(std::move(base));
  s.horizon_ = horizon;
  return s;
}

MeasureSequence MeasureSequence::interval_sweep(std::size_t depth) {
  if (depth == 0 || depth > 30) throw PreconditionError("sweep depth must lie in [1, 30]");
  MeasureSequence s(LineDescriptor::unit_interval());
  s.kind_ = Kind::IntervalSweep;
  s.depth_ = depth;
  s.horizon_ = (std::size_t{1} << (depth + 1)) - 2;
  return s;
}

MeasureSequence MeasureSequence::alternating(const LineDescriptor& line, std::vector<SignedMeasure> table,
                                             std::size_t horizon) {
  if (table.empty()) throw PreconditionError("alternating sequence needs a nonempty table");
  if (horizon == 0) throw PreconditionError("horizon must be positive");
  for (const auto& mu : table) {
    if (!(mu.line() == line)) throw LineMismatch("sequence term on " + mu.line().describe());
  }
  MeasureSequence s(line);
  s.kind_ = Kind::Alternating;
  s.table_ = std::move(table);
  s.horizon_ = horizon;
  return s;
}

MeasureSequence::Certificate MeasureSequence::certificate() const {
  return kind_ == Kind::Alternating ? Certificate::HorizonOnly : Certificate::Analytic;
}

SignedMeasure MeasureSequence::at(std::size_t n) const {
  if (n == 0) throw PreconditionError("sequence indices start at 1");
  SignedMeasure out(line_);
  switch (kind_) {
    case Kind::ExplicitList:
      if (n <= table_.size()) out = table_[n - 1];
      break;
    case Kind::Scaled: {
      Rational c = 1;
      for (std::size_t i = 0; i < n && c != 0; ++i) c *= ratio_;
      out = c * table_.front();
      break;
    }
    case Kind::Harmonic:
      out = Rational(1, static_cast<unsigned long>(n)) * table_.front();
      break;
    case Kind::IntervalSweep: {
      const auto [a, b] = sweep_interval(n);
      out.add(PointId::rational(a), 1);
      out.add(PointId::rational(b), -1);
      break;
    }
    case Kind::Alternating:
      out = table_[(n - 1) % table_.size()];
      break;
  }
  out *= factor_;
  return out;
}

Rational MeasureSequence::bound() const {
  Rational best = 0;
  switch (kind_) {
    case Kind::ExplicitList:
    case Kind::Alternating:
      for (const auto& mu : table_) best = max(best, total_variation(mu));
      break;
    case Kind::Scaled:
      best = abs(ratio_) * total_variation(table_.front());
      break;
    case Kind::Harmonic:
      best = total_variation(table_.front());
      break;
    case Kind::IntervalSweep:
      best = 2;
      break;
  }
  Rational out = best * abs(factor_);
  return out;
}

MeasureSequence MeasureSequence::with_horizon(std::size_t horizon) const {
  if (horizon == 0) throw PreconditionError("horizon must be positive");
  MeasureSequence s = *this;
  s.horizon_ = horizon;
  return s;
}

MeasureSequence MeasureSequence::scaled_by(const Rational& c) const {
  MeasureSequence s = *this;
  s.factor_ *= c;
  return s;
}

MeasureSequence MeasureSequence::map_linear(const LineDescriptor& line,
                                            const std::function<SignedMeasure(const SignedMeasure&)>& t) const {
  MeasureSequence s(line);
  s.horizon_ = horizon_;
  if (kind_ == Kind::IntervalSweep) {
    s.kind_ = Kind::ExplicitList;
    for (std::size_t n = 1; n <= horizon_; ++n) s.table_.push_back(t(at(n)));
    return s;
  }
  s.kind_ = kind_;
  s.ratio_ = ratio_;
  s.factor_ = factor_;
  s.depth_ = depth_;
  for (const auto& mu : table_) {
    s.table_.push_back(t(mu));
    if (!(s.table_.back().line() == line)) throw LineMismatch("mapped term lives on another line");
  }
  return s;
}

std::size_t MeasureSequence::decay_index(const std::vector<PointId>& cuts, const Rational& eps) const {
  auto excess = [&](const SignedMeasure& mu) { return 2 * cut_mass(mu, cuts) > eps; };
  switch (kind_) {
    case Kind::ExplicitList: {
      std::size_t n0 = 1;
      for (std::size_t n = 1; n <= table_.size(); ++n) {
        if (excess(at(n))) n0 = n + 1;
      }
      return n0;
    }
    case Kind::Scaled: {
      const Rational q = 2 * cut_mass(factor_ * table_.front(), cuts);
      const Rational r = abs(ratio_);
      Rational value = q * r;
      std::size_t n = 1;
      while (value > eps) {
        value *= r;
        ++n;
      }
      return n;
    }
    case Kind::Harmonic: {
      const Rational q = 2 * cut_mass(factor_ * table_.front(), cuts);
      const Rational ratio = q / eps;
      mpz_class ceil_value;
      mpz_cdiv_q(ceil_value.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
      return std::max<std::size_t>(1, ceil_value.get_ui());
    }
    case Kind::IntervalSweep:
    case Kind::Alternating: {
      std::size_t n0 = 1;
      for (std::size_t n = 1; n <= horizon_; ++n) {
        if (excess(at(n))) n0 = n + 1;
      }
      return n0;
    }
  }
  throw Error("unreachable");
}

}  // namespace sobczyk
