#include "gcl/json_io.hpp"

#include <sstream>

namespace gcl {

namespace {

std::string pattern_key(std::size_t mask, std::size_t width) {
  std::string key(width, '0');
  for (std::size_t j = 0; j < width; ++j)
    if (mask >> j & 1) key[j] = '1';
  return key;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(rational_string(v));
  return arr;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(parse_rational(item.get<std::string>()));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return rational_string(r); }

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json to_json(const FiniteDomain& domain) {
  Json j;
  j["size"] = domain.size;
  if (domain.labels) j["labels"] = *domain.labels;
  return j;
}

FiniteDomain domain_from_json(const Json& j) {
  std::optional<std::vector<std::string>> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return FiniteDomain(j["size"].get<std::size_t>(), std::move(labels));
}

Json to_json(const Measure& mu) {
  Json j;
  j["mode"] = mu.mode() == NumericMode::kExact ? "exact" : "approximate";
  j["weights"] = rationals_to_json(mu.weights());
  j["residual"] = rational_string(mu.residual());
  return j;
}

Measure measure_from_json(const Json& j) {
  auto weights = rationals_from_json(j["weights"]);
  Rational residual(0);
  if (j.contains("residual")) residual = parse_rational(j["residual"].get<std::string>());
  if (j.contains("mode") && j["mode"].get<std::string>() == "approximate") {
    std::vector<double> w;
    for (const auto& r : weights) w.push_back(r.get_d());
    return Measure::approximate(w);
  }
  return Measure::exact(std::move(weights), residual);
}

Json to_json(const FunctionClass& cls) {
  Json values = Json::array();
  for (std::size_t f = 0; f < cls.n_functions(); ++f) {
    Json row = Json::array();
    for (std::size_t x = 0; x < cls.domain_size(); ++x)
      row.push_back(rational_string(cls.value(f, x)));
    values.push_back(std::move(row));
  }
  Json j;
  j["values"] = std::move(values);
  j["kappa_minus"] = rational_string(cls.kappa_minus());
  j["kappa_plus"] = rational_string(cls.kappa_plus());
  return j;
}

FunctionClass function_class_from_json(const Json& j) {
  std::vector<std::vector<Rational>> values;
  for (const auto& row : j["values"]) values.push_back(rationals_from_json(row));
  return FunctionClass(std::move(values));
}

Json to_json(const SetFamily& family) {
  Json sets = Json::array();
  for (std::size_t s = 0; s < family.size(); ++s) sets.push_back(family.set(s).points());
  Json j;
  j["domain_size"] = family.domain_size();
  j["sets"] = std::move(sets);
  return j;
}

SetFamily set_family_from_json(const Json& j) {
  std::size_t n = j["domain_size"].get<std::size_t>();
  std::vector<PointSet> sets;
  for (const auto& indices : j["sets"]) {
    PointSet s(n);
    for (const auto& p : indices) s.set(p.get<std::size_t>());
    sets.push_back(std::move(s));
  }
  return SetFamily(n, std::move(sets));
}

Json to_json(const Partition& pi) {
  Json j;
  j["labels"] = pi.labels();
  j["block_count"] = pi.block_count();
  return j;
}

Partition partition_from_json(const Json& j) {
  return Partition(j["labels"].get<std::vector<int>>());
}

Json to_json(const Levels& levels) {
  Json j;
  j["alpha"] = rational_string(levels.alpha);
  j["beta"] = rational_string(levels.beta);
  return j;
}

Levels levels_from_json(const Json& j) {
  return Levels(parse_rational(j["alpha"].get<std::string>()),
                parse_rational(j["beta"].get<std::string>()));
}

Json to_json(const IndependenceWitness& w) {
  Json cells;
  for (std::size_t mask = 0; mask < w.cell_points.size(); ++mask)
    cells[pattern_key(mask, w.function_indices.size())] = w.cell_points[mask];
  Json j;
  j["function_indices"] = w.function_indices;
  j["levels"] = to_json(w.levels);
  j["cells"] = std::move(cells);
  return j;
}

Json to_json(const ShatterWitness& w) {
  Json selector;
  for (std::size_t mask = 0; mask < w.selector.size(); ++mask)
    selector[pattern_key(mask, w.points.size())] = w.selector[mask];
  Json j;
  j["points"] = w.points;
  j["levels"] = to_json(w.levels);
  j["selector"] = std::move(selector);
  return j;
}

Json to_json(const Bracket& b) {
  Json j;
  j["lower"] = rationals_to_json(b.lower);
  j["upper"] = rationals_to_json(b.upper);
  return j;
}

Json to_json(const CoverResult& r) {
  Json j;
  j["count"] = r.count;
  switch (r.certified) {
    case Certificate::kExact: j["certificate"] = "exact"; break;
    case Certificate::kUpperBound: j["certificate"] = "upper_bound"; break;
    case Certificate::kLowerBound: j["certificate"] = "lower_bound"; break;
  }
  j["epsilon"] = rational_string(r.epsilon);
  j["groups"] = r.groups;
  if (!r.brackets.empty()) {
    Json brackets = Json::array();
    for (const auto& b : r.brackets) brackets.push_back(to_json(b));
    j["brackets"] = std::move(brackets);
  }
  if (!r.centers.empty()) {
    Json centers = Json::array();
    for (std::size_t i = 0; i < r.centers.size(); ++i) {
      if (r.centers[i] == CoverResult::kMidpointCenter) {
        Json c;
        c["midpoint"] = i < r.center_values.size() ? rationals_to_json(r.center_values[i])
                                                   : Json::array();
        centers.push_back(std::move(c));
      } else {
        Json c;
        c["member"] = r.centers[i];
        centers.push_back(std::move(c));
      }
    }
    j["centers"] = std::move(centers);
  }
  if (!r.assignment.empty()) j["assignment"] = r.assignment;
  return j;
}

Json to_json(const ProjectivePlane& plane) {
  Json points = Json::array();
  for (const auto& p : plane.points) points.push_back({p[0], p[1], p[2]});
  Json lines = Json::array();
  for (std::size_t l = 0; l < plane.lines.size(); ++l) lines.push_back(plane.lines.set(l).points());
  Json j;
  j["q"] = plane.q;
  j["m"] = plane.m;
  j["points"] = std::move(points);
  j["lines"] = std::move(lines);
  return j;
}

Json to_json(const PlaneAxiomReport& report) {
  Json j;
  j["counts_match"] = report.counts_match;
  j["line_size"] = report.line_size;
  j["point_degree"] = report.point_degree;
  j["unique_line_per_pair"] = report.unique_line_per_pair;
  j["all"] = report.all();
  return j;
}

Json to_json(const ScheduleBand& band) {
  Json j;
  j["k"] = band.k;
  j["n_star"] = band.n_star;
  j["threshold"] = band.threshold.get_str();
  j["q"] = band.q.get_str();
  j["m"] = band.m.get_str();
  j["p"] = rational_string(band.p);
  j["prime_certificate"] =
      band.prime_certificate == PrimalityKind::kProvenSmall ? "proven" : "probable_bpsw";
  return j;
}

Json to_json(const Schedule& schedule) {
  Json bands = Json::array();
  for (const auto& band : schedule.bands) bands.push_back(to_json(band));
  Json j;
  j["bands"] = std::move(bands);
  return j;
}

Json to_json(const BlowupReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["eps"] = rational_string(row.eps);
    r["n_spec"] = row.target;
    r["bound"] = row.bound;
    r["margin"] = row.margin;
    r["pass"] = row.pass;
    rows.push_back(std::move(r));
  }
  Json j;
  j["schedule"] = to_json(report.schedule);
  j["rows"] = std::move(rows);
  j["all_pass"] = report.all_pass;
  return j;
}

Json to_json(const EmpiricalRun& run, bool include_samples) {
  Json j;
  j["seed"] = run.seed;
  j["sample_sizes"] = run.sample_sizes;
  if (include_samples) j["samples"] = run.samples;
  j["deviations"] = rationals_to_json(run.deviations);
  if (!run.envelopes.empty()) j["envelopes"] = rationals_to_json(run.envelopes);
  return j;
}

Json to_json(const GcFailureReport& report) {
  Json j;
  j["d"] = report.d;
  j["n"] = report.n;
  j["p"] = rational_string(report.p);
  j["seeds"] = report.n_seeds;
  j["event"] = report.event;
  j["deviations"] = rationals_to_json(report.deviations);
  j["event_frequency"] = report.event_frequency;
  j["analytic_probability"] = report.analytic_probability;
  return j;
}

Json to_json(const AlonCheck& check) {
  Json j;
  j["hypothesis_holds"] = check.hypothesis_holds;
  j["vacuous"] = check.vacuous;
  j["falsified"] = check.falsified;
  j["achieved"] = rational_string(check.achieved);
  j["method"] = check.method == SearchMethod::kExhaustive ? "exhaustive" : "local_search";
  return j;
}

std::string plane_adjacency_text(const ProjectivePlane& plane) {
  std::ostringstream out;
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    bool first = true;
    plane.lines.set(l).for_each([&](std::size_t p) {
      if (!first) out << ' ';
      out << p;
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

std::string empirical_csv(const EmpiricalRun& run) {
  std::ostringstream out;
  bool with_envelope = !run.envelopes.empty();
  out << (with_envelope ? "n,deviation,envelope\n" : "n,deviation\n");
  for (std::size_t i = 0; i < run.sample_sizes.size(); ++i) {
    out << run.sample_sizes[i] << "," << rational_string(run.deviations[i]);
    if (with_envelope) out << "," << rational_string(run.envelopes[i]);
    out << "\n";
  }
  return out.str();
}

}  // namespace gcl
