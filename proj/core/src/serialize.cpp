#include "sobczyk/serialize.hpp"

#include "sobczyk/error.hpp"

namespace sobczyk::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t natural(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ParseError("expected a natural number, got " + j.dump());
  }
  return j.get<std::uint64_t>();
}

int bit_from_json(const Json& j) {
  const auto b = natural(j);
  if (b > 1) throw ParseError("bit must be 0 or 1");
  return static_cast<int>(b);
}

const std::string& text(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a string, got " + j.dump());
  return j.get_ref<const std::string&>();
}

const Json& array(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  return j;
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(text(j));
}

Json to_json(const LineDescriptor& line) {
  switch (line.kind()) {
    case LineDescriptor::Kind::Finite: {
      Json j{{"kind", "finite"}, {"size", line.size()}};
      if (!line.labels().empty()) j["labels"] = line.labels();
      return j;
    }
    case LineDescriptor::Kind::Ordinal: {
      const auto& b = line.bound();
      return Json{{"kind", "ordinal"}, {"bound", {b.omega2, b.omega, b.units}}};
    }
    case LineDescriptor::Kind::LexDouble:
      return Json{{"kind", "lexdouble"}, {"inner", to_json(line.inner())}};
    case LineDescriptor::Kind::UnitInterval:
      return Json{{"kind", "interval"}};
    case LineDescriptor::Kind::DoubleArrow: {
      Json q = Json::array();
      for (const auto& x : line.q_set()) q.push_back(rational_to_json(x));
      return Json{{"kind", "doublearrow"}, {"Q", q}};
    }
  }
  throw Error("unreachable");
}

LineDescriptor line_from_json(const Json& j) {
  const std::string& kind = text(field(j, "kind"));
  try {
    if (kind == "finite") {
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return LineDescriptor::finite(natural(field(j, "size")), std::move(labels));
    }
    if (kind == "ordinal") {
      const Json& b = array(field(j, "bound"));
      if (b.size() != 3) throw ParseError("ordinal bound needs three coefficients");
      return LineDescriptor::ordinal(OrdinalCnf{natural(b[0]), natural(b[1]), natural(b[2])});
    }
    if (kind == "lexdouble") return LineDescriptor::lex_double(line_from_json(field(j, "inner")));
    if (kind == "interval") return LineDescriptor::unit_interval();
    if (kind == "doublearrow") {
      std::vector<Rational> q;
      for (const auto& x : array(field(j, "Q"))) q.push_back(rational_from_json(x));
      return LineDescriptor::double_arrow(std::move(q));
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown line kind \"" + kind + "\"");
}

Json to_json(const PointId& p) {
  switch (p.kind()) {
    case PointId::Kind::Finite:
      return Json{{"finite", p.index()}};
    case PointId::Kind::Ordinal: {
      const auto& c = p.cnf();
      return Json{{"ordinal", {c.omega2, c.omega, c.units}}};
    }
    case PointId::Kind::Pair:
      return Json{{"pair", {{"base", to_json(p.base())}, {"bit", p.bit()}}}};
    case PointId::Kind::Rational:
      return Json{{"rational", rational_to_json(p.x())}};
    case PointId::Kind::Doubled:
      return Json{{"doubled", {{"x", rational_to_json(p.x())}, {"bit", p.bit()}}}};
  }
  throw Error("unreachable");
}

PointId point_from_json(const Json& j, const LineDescriptor& line) {
  if (!j.is_object() || j.size() != 1) throw ParseError("point must be a one-key object, got " + j.dump());
  const auto& [key, value] = *j.items().begin();
  std::optional<PointId> p;
  if (key == "finite") {
    p = PointId::finite(natural(value));
  } else if (key == "ordinal") {
    const Json& c = array(value);
    if (c.size() != 3) throw ParseError("ordinal point needs three coefficients");
    p = PointId::ordinal(natural(c[0]), natural(c[1]), natural(c[2]));
  } else if (key == "pair") {
    if (line.kind() != LineDescriptor::Kind::LexDouble) throw ParseError("pair point on " + line.describe());
    p = PointId::pair(point_from_json(field(value, "base"), line.inner()), bit_from_json(field(value, "bit")));
  } else if (key == "rational") {
    p = PointId::rational(rational_from_json(value));
  } else if (key == "doubled") {
    p = PointId::doubled(rational_from_json(field(value, "x")), bit_from_json(field(value, "bit")));
  } else {
    throw ParseError("unknown point kind \"" + key + "\"");
  }
  if (!line.contains(*p)) throw ParseError("point " + p->to_string() + " is not on " + line.describe());
  return *p;
}

Json to_json(const ClopenInterval& interval) {
  Json j{{"hi", to_json(interval.hi)}};
  j["lo"] = interval.lo ? to_json(*interval.lo) : Json(nullptr);
  return j;
}

ClopenInterval interval_from_json(const Json& j, const LineDescriptor& line) {
  ClopenInterval out{std::nullopt, point_from_json(field(j, "hi"), line)};
  if (j.contains("lo") && !j.at("lo").is_null()) out.lo = point_from_json(j.at("lo"), line);
  try {
    validate_interval(line, out);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return out;
}

Json atoms_to_json(const SignedMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& [p, w] : mu.atoms()) atoms.push_back(Json{{"point", to_json(p)}, {"weight", rational_to_json(w)}});
  return atoms;
}

SignedMeasure atoms_from_json(const Json& j, const LineDescriptor& line) {
  SignedMeasure mu(line);
  for (const auto& a : array(j)) mu.add(point_from_json(field(a, "point"), line), rational_from_json(field(a, "weight")));
  return mu;
}

Json to_json(const SignedMeasure& mu) { return Json{{"line", to_json(mu.line())}, {"atoms", atoms_to_json(mu)}}; }

SignedMeasure measure_from_json(const Json& j) {
  const LineDescriptor line = line_from_json(field(j, "line"));
  return atoms_from_json(field(j, "atoms"), line);
}

Json to_json(const TestFunction& f) {
  if (f.kind() == TestFunction::Kind::Step) {
    Json cuts = Json::array();
    Json values = Json::array();
    for (const auto& c : f.cuts()) cuts.push_back(to_json(c));
    for (const auto& v : f.values()) values.push_back(rational_to_json(v));
    return Json{{"kind", "step"}, {"cuts", cuts}, {"values", values}};
  }
  Json nodes = Json::array();
  for (const auto& n : f.nodes()) nodes.push_back(Json::array({rational_to_json(n.x), rational_to_json(n.value)}));
  return Json{{"kind", "pl"}, {"nodes", nodes}};
}

TestFunction function_from_json(const Json& j, const LineDescriptor& line) {
  const std::string& kind = text(field(j, "kind"));
  try {
    if (kind == "step") {
      std::vector<PointId> cuts;
      std::vector<Rational> values;
      for (const auto& c : array(field(j, "cuts"))) cuts.push_back(point_from_json(c, line));
      for (const auto& v : array(field(j, "values"))) values.push_back(rational_from_json(v));
      return TestFunction::step(line, std::move(cuts), std::move(values));
    }
    if (kind == "pl") {
      std::vector<PlNode> nodes;
      for (const auto& n : array(field(j, "nodes"))) {
        if (!n.is_array() || n.size() != 2) throw ParseError("pl node must be [x, value]");
        nodes.push_back(PlNode{rational_from_json(n[0]), rational_from_json(n[1])});
      }
      return TestFunction::piecewise_linear(line, std::move(nodes));
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const Unsupported& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown function kind \"" + kind + "\"");
}

Json to_json(const CoefficientPattern& p) {
  Json prefix = Json::array();
  for (const auto& v : p.prefix()) prefix.push_back(rational_to_json(v));
  Json j{{"prefix", prefix}, {"c", rational_to_json(p.tail_value())}};
  if (p.tail() == CoefficientPattern::Tail::Constant) {
    j["tail"] = "constant";
  } else {
    j["tail"] = "geometric";
    j["ratio"] = rational_to_json(p.ratio());
  }
  return j;
}

CoefficientPattern pattern_from_json(const Json& j) {
  std::vector<Rational> prefix;
  if (j.contains("prefix")) {
    for (const auto& v : array(j.at("prefix"))) prefix.push_back(rational_from_json(v));
  }
  const Rational c = rational_from_json(field(j, "c"));
  const std::string tail = j.contains("tail") ? text(j.at("tail")) : std::string("constant");
  if (tail == "constant") return CoefficientPattern::constant(std::move(prefix), c);
  if (tail == "geometric") {
    try {
      return CoefficientPattern::geometric(std::move(prefix), c, rational_from_json(field(j, "ratio")));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown tail \"" + tail + "\"");
}

Json to_json(const OperatorR& r) {
  if (r.kind() == OperatorR::Kind::FiniteBasis) {
    Json gens = Json::array();
    for (const auto& g : r.generators()) gens.push_back(to_json(g));
    Json matrix = Json::array();
    for (const auto& row : r.matrix()) {
      Json jr = Json::array();
      for (const auto& v : row) jr.push_back(rational_to_json(v));
      matrix.push_back(jr);
    }
    return Json{{"kind", "finitebasis"}, {"line", to_json(r.line())}, {"generators", gens}, {"matrix", matrix}};
  }
  const auto& p = r.patterns();
  return Json{{"kind", "coordinate"},
              {"line", to_json(r.line())},
              {"patterns", {{"units", to_json(p.units)}, {"omega", to_json(p.omega)}, {"omega2", to_json(p.omega2)}}}};
}

OperatorR operator_from_json(const Json& j) {
  const std::string& kind = text(field(j, "kind"));
  const LineDescriptor line = line_from_json(field(j, "line"));
  try {
    if (kind == "finitebasis") {
      std::vector<TestFunction> gens;
      for (const auto& g : array(field(j, "generators"))) gens.push_back(function_from_json(g, line));
      lp::Matrix matrix;
      if (j.contains("matrix")) {
        for (const auto& row : array(j.at("matrix"))) {
          lp::Vector v;
          for (const auto& x : array(row)) v.push_back(rational_from_json(x));
          matrix.push_back(std::move(v));
        }
      }
      return OperatorR::finite_basis(line, std::move(gens), std::move(matrix));
    }
    if (kind == "coordinate") {
      CoordinatePatterns p;
      const Json& pj = field(j, "patterns");
      if (pj.contains("units")) p.units = pattern_from_json(pj.at("units"));
      if (pj.contains("omega")) p.omega = pattern_from_json(pj.at("omega"));
      if (pj.contains("omega2")) p.omega2 = pattern_from_json(pj.at("omega2"));
      return OperatorR::coordinate(line, std::move(p));
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const Unsupported& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown operator kind \"" + kind + "\"");
}

Json to_json(const DualVector& v) {
  if (v.kind() == DualVector::Kind::Finite) {
    Json coords = Json::array();
    for (const auto& c : v.coords()) coords.push_back(rational_to_json(c));
    return Json{{"coords", coords}};
  }
  Json entries = Json::array();
  for (const auto& [k, w] : v.entries()) {
    entries.push_back(Json{{"key", {k.layer, k.a, k.b, k.c}}, {"weight", rational_to_json(w)}});
  }
  return Json{{"entries", entries}};
}

DualVector dual_from_json(const Json& j) {
  if (j.contains("coords")) {
    lp::Vector coords;
    for (const auto& c : array(j.at("coords"))) coords.push_back(rational_from_json(c));
    return DualVector::finite(std::move(coords));
  }
  std::map<CoordKey, Rational> entries;
  for (const auto& e : array(field(j, "entries"))) {
    const Json& k = array(field(e, "key"));
    if (k.size() != 4) throw ParseError("coordinate key needs four entries");
    const CoordKey key{static_cast<int>(natural(k[0])), natural(k[1]), natural(k[2]), natural(k[3])};
    entries[key] += rational_from_json(field(e, "weight"));
  }
  return DualVector::l1(std::move(entries));
}

Json to_json(const ClosedSet& s) {
  Json out = Json::array();
  for (const auto& c : s.components()) {
    out.push_back(Json{{"lo", to_json(c.lo)}, {"hi", to_json(c.hi)}, {"min_rank", c.min_rank}});
  }
  return out;
}

Json to_json(const Hierarchy& h) {
  Json levels = Json::array();
  for (const auto& level : h.levels) levels.push_back(to_json(level));
  return Json{{"delta", rational_to_json(h.delta)}, {"stage", h.stage()}, {"levels", levels}};
}

Json to_json(const MeasureSequence& seq) {
  Json j{{"line", to_json(seq.line())}, {"horizon", seq.horizon()}, {"factor", rational_to_json(seq.factor())}};
  auto table = [&] {
    Json t = Json::array();
    for (const auto& mu : seq.table()) t.push_back(atoms_to_json(mu));
    return t;
  };
  switch (seq.kind()) {
    case MeasureSequence::Kind::ExplicitList:
      j["kind"] = "explicit";
      j["list"] = table();
      break;
    case MeasureSequence::Kind::Scaled:
      j["kind"] = "scaled";
      j["base"] = atoms_to_json(seq.base());
      j["ratio"] = rational_to_json(seq.ratio());
      break;
    case MeasureSequence::Kind::Harmonic:
      j["kind"] = "harmonic";
      j["base"] = atoms_to_json(seq.base());
      break;
    case MeasureSequence::Kind::IntervalSweep:
      j["kind"] = "sweep";
      j["depth"] = seq.depth();
      break;
    case MeasureSequence::Kind::Alternating:
      j["kind"] = "alternating";
      j["table"] = table();
      break;
  }
  return j;
}

MeasureSequence sequence_from_json(const Json& j) {
  const std::string& kind = text(field(j, "kind"));
  try {
    if (kind == "sweep") {
      auto seq = MeasureSequence::interval_sweep(natural(field(j, "depth")));
      if (j.contains("horizon")) seq = seq.with_horizon(natural(j.at("horizon")));
      return seq;
    }
    const LineDescriptor line = line_from_json(field(j, "line"));
    const std::size_t horizon = j.contains("horizon") ? natural(j.at("horizon")) : 0;
    const Rational factor = j.contains("factor") ? rational_from_json(j.at("factor")) : Rational(1);
    auto table = [&](const char* key) {
      std::vector<SignedMeasure> out;
      for (const auto& m : array(field(j, key))) out.push_back(atoms_from_json(m, line));
      return out;
    };
    std::optional<MeasureSequence> seq;
    if (kind == "explicit") {
      seq = MeasureSequence::explicit_list(line, table("list"), horizon);
    } else if (kind == "scaled") {
      seq = MeasureSequence::scaled(atoms_from_json(field(j, "base"), line), rational_from_json(field(j, "ratio")),
                                    horizon == 0 ? 20 : horizon);
    } else if (kind == "harmonic") {
      seq = MeasureSequence::harmonic(atoms_from_json(field(j, "base"), line), horizon == 0 ? 20 : horizon);
    } else if (kind == "alternating") {
      seq = MeasureSequence::alternating(line, table("table"), horizon == 0 ? 20 : horizon);
    } else {
      throw ParseError("unknown sequence kind \"" + kind + "\"");
    }
    return factor == 1 ? *seq : seq->scaled_by(factor);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const LineMismatch& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Check& c) {
  Json j{{"check", c.name}, {"lhs", rational_to_json(c.lhs)}, {"rhs", rational_to_json(c.rhs)}, {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const DecompositionResult& result) {
  Json terms = Json::array();
  for (std::size_t n = 1; n <= result.horizon; ++n) {
    terms.push_back(Json{{"n", n},
                         {"mu_prime", atoms_to_json(result.mu_prime[n - 1])},
                         {"nu", atoms_to_json(result.nu[n - 1])}});
  }
  Json e = Json::array();
  for (const auto& p : result.exceptional) e.push_back(to_json(p));
  Json partitions = Json::array();
  for (const auto& p : result.partitions) {
    Json cuts = Json::array();
    for (const auto& c : p.cuts()) cuts.push_back(to_json(c));
    partitions.push_back(cuts);
  }
  return Json{{"horizon", result.horizon},   {"schedule", result.schedule},
              {"exceptional", e},            {"partitions", partitions},
              {"hierarchy", to_json(result.hierarchy)}, {"terms", terms}};
}

Json to_json(const Verdict& v) {
  static const char* names[] = {"extendable", "not_extendable", "unknown"};
  Json j{{"verdict", names[static_cast<int>(v.kind)]}, {"reason", v.reason}, {"hits", v.hits}};
  Json e = Json::array();
  for (const auto& p : v.exceptional) e.push_back(to_json(p));
  j["exceptional"] = e;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

Json to_json(const PipelineReport& report) {
  return Json{{"doubled", report.doubled},
              {"quotient_size", report.quotient_size},
              {"horizon", report.horizon},
              {"schedule", report.schedule},
              {"norm_t0", rational_to_json(report.norm_t0)},
              {"norm_t", rational_to_json(report.norm_t)},
              {"norm_hard", rational_to_json(report.norm_hard)},
              {"norm_s", rational_to_json(report.norm_s)},
              {"norm_s_r", rational_to_json(report.norm_s_r)},
              {"norm_tprime", rational_to_json(report.norm_tprime)},
              {"ratio", rational_to_json(report.ratio)},
              {"checks", checks_to_json(report.checks)},
              {"holds", report.holds}};
}

Json parse(const std::string& input) {
  try {
    return Json::parse(input);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace sobczyk::io
