#include "dtc/certificate.hpp"

#include <algorithm>
#include <functional>

namespace dtc {

namespace {

Json labels_json(const Complex& k, const std::vector<VertexId>& ids) {
  Json out = Json::array();
  for (auto v : ids) out.push_back(k.label(v));
  return out;
}

Json complex_json(const Complex& k) { return Json{{"facets", k.canonical_facets()}}; }

Complex complex_from_json(const Json& j, bool allow_pair_labels = false) {
  return parse_complex_json(j.dump(), allow_pair_labels);
}

VertexId lookup(const Complex& k, const std::string& label) {
  auto v = k.find(label);
  if (!v) throw InvalidInput("unknown vertex '" + label + "'");
  return *v;
}

// Map domain → codomain from an array of codomain labels listed in `order`.
SimplicialMap map_from_json(const ComplexPtr& domain, const ComplexPtr& codomain,
                            const std::vector<VertexId>& order, const Json& images) {
  if (!images.is_array() || images.size() != order.size())
    throw InvalidInput("map has the wrong number of images");
  std::vector<VertexId> a(domain->num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) a[order[i]] = lookup(*codomain, images[i].get<std::string>());
  return SimplicialMap(domain, codomain, std::move(a));
}

std::vector<VertexId> domain_order(const Complex& domain, const Json& labels) {
  std::vector<VertexId> order;
  for (const auto& l : labels) order.push_back(lookup(domain, l.get<std::string>()));
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != domain.num_vertices() ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("witness domain does not list each vertex exactly once");
  return order;
}

struct Shape {
  ComplexPtr base;                  // K
  std::optional<ProductComplex> square;
  ComplexPtr ambient;               // K or K²
};

// Empty string on success.
std::string verify_admissible(const Json& entry, const Shape& shape, AdmissibleKind kind,
                              ComplexPtr* sub_out = nullptr) {
  if (entry.at("kind").get<std::string>() != to_string(kind)) return "wrong admissible kind";
  std::vector<Simplex> simplices;
  for (const auto& f : entry.at("facets"))
    simplices.push_back(shape.ambient->simplex_of(f.get<std::vector<std::string>>()));
  ComplexPtr sub = share(shape.ambient->subcomplex(simplices));
  if (sub_out) *sub_out = sub;
  if (!entry.contains("witness")) return "set carries no witness";
  const Json& w = entry.at("witness");
  auto order = domain_order(*sub, w.at("domain"));
  const ComplexPtr& codomain = kind == AdmissibleKind::kFarber ? shape.square->product() : shape.ambient;
  std::vector<SimplicialMap> steps;
  for (const auto& s : w.at("steps")) steps.push_back(map_from_json(sub, codomain, order, s));
  if (steps.empty()) return "empty witness";

  if (kind == AdmissibleKind::kFarber) {
    SimplicialMap sigma = map_from_json(sub, shape.base, order, entry.at("section"));
    SimplicialMap from = compose(diagonal(*shape.square), sigma);
    SimplicialMap to = inclusion_map(sub, shape.square->product());
    return check_witness(steps, from, to);
  }
  const auto& last = steps.back().assignment();
  if (std::adjacent_find(last.begin(), last.end(), std::not_equal_to<>()) != last.end())
    return "categorical witness does not end at a constant map";
  return check_witness(steps, inclusion_map(sub, shape.ambient), steps.back());
}

// `single` decides whether one facet of the ambient complex is admissible.
std::string verify_cover(const Json& cert, const Shape& shape, AdmissibleKind kind,
                         const std::function<Verdict(std::size_t)>& single) {
  const std::string status = cert.at("status");
  const Json& cover = cert.at("cover");
  std::vector<ComplexPtr> subs;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    ComplexPtr sub;
    if (auto err = verify_admissible(cover[i], shape, kind, &sub); !err.empty())
      return "cover set " + std::to_string(i) + ": " + err;
    subs.push_back(sub);
  }
  if (status == "not-coverable") {
    if (!cover.empty()) return "not-coverable result lists a cover";
    for (std::size_t f = 0; f < shape.ambient->num_facets(); ++f)
      if (single(f) == Verdict::kNo) return {};
    return "every facet is admissible on its own";
  }
  if (cover.empty()) return "missing cover";
  for (const auto& f : shape.ambient->facets()) {
    auto labels = shape.ambient->labels_of(f);
    bool covered = std::any_of(subs.begin(), subs.end(), [&](const ComplexPtr& s) {
      Simplex t;
      for (const auto& l : labels) {
        auto v = s->find(l);
        if (!v) return false;
        t.insert(*v);
      }
      return s->is_simplex(t);
    });
    if (!covered) return "facet {" + labels.front() + "...} is not covered";
  }
  const int upper = static_cast<int>(cover.size()) - 1;
  if (cert.at("upper_bound").is_null() || cert.at("upper_bound").get<int>() != upper)
    return "upper bound does not match the cover size";
  if (cert.at("lower_bound").get<int>() > upper) return "lower bound exceeds the upper bound";
  if (status == "exact") {
    if (cert.at("value").is_null() || cert.at("value").get<int>() != upper ||
        cert.at("lower_bound").get<int>() != upper)
      return "exact value does not match the cover";
  }
  return {};
}

Shape shape_for(const Json& cert, bool square_ambient, bool need_square) {
  Shape shape;
  shape.base = share(complex_from_json(cert.at("complex")));
  if (square_ambient || need_square) shape.square.emplace(shape.base);
  shape.ambient = square_ambient ? shape.square->product() : shape.base;
  return shape;
}

}  // namespace

// --- emit --------------------------------------------------------------------

Json witness_to_json(const ContiguityWitness& w) {
  const Complex& dom = w.front().domain();
  std::vector<VertexId> order(dom.num_vertices());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<VertexId>(v);
  Json steps = Json::array();
  for (const auto& s : w.steps()) steps.push_back(labels_json(s.codomain(), s.assignment()));
  return Json{{"domain", labels_json(dom, order)}, {"steps", steps}};
}

Json admissible_to_json(const AdmissibleSet& s, const Complex&) {
  Json out{{"kind", to_string(s.kind)}, {"facets", s.subcomplex->canonical_facets()}};
  if (s.witness) out["witness"] = witness_to_json(*s.witness);
  if (s.section) out["section"] = labels_json(s.section->codomain(), s.section->assignment());
  return out;
}

Json invariant_to_json(const std::string& kind, const Complex& k, const InvariantResult& r) {
  Json cover = Json::array();
  for (const auto& s : r.cover) cover.push_back(admissible_to_json(s, k));
  return Json{
      {"kind", kind},
      {"complex", complex_json(k)},
      {"status", to_string(r.status)},
      {"value", r.value ? Json(*r.value) : Json(nullptr)},
      {"lower_bound", r.lower_bound},
      {"upper_bound", r.upper_bound ? Json(*r.upper_bound) : Json(nullptr)},
      {"cover", cover},
      {"stats",
       {{"admissibility_checks", r.admissibility_checks},
        {"cover_nodes", r.cover_nodes},
        {"maximal_sets", r.maximal_sets.size()}}},
  };
}

Json check_to_json(const std::string& kind, const Complex& k, const Complex& sub,
                   const CheckResult& r) {
  Json out{{"kind", kind},
           {"complex", complex_json(k)},
           {"subcomplex", complex_json(sub)},
           {"verdict", to_string(r.verdict)},
           {"states", r.states}};
  if (r.set) out["set"] = admissible_to_json(*r.set, k);
  return out;
}

Json collapse_to_json(const CollapseSequence& seq) {
  Json steps = Json::array();
  for (const auto& s : seq.steps)
    steps.push_back({seq.start->label(s.removed), seq.start->label(s.dominator)});
  return Json{{"kind", "core"},
              {"complex", complex_json(*seq.start)},
              {"steps", steps},
              {"core", complex_json(seq.end)},
              {"strongly_collapsible", seq.end.num_vertices() == 1}};
}

Json plan_to_json(const ProductComplex& p, const AdmissibleSet& farber, const MotionPlan& plan) {
  const Complex& k = *p.base();
  Json pairs = Json::array();
  for (const auto& [x, y] : plan.pairs) pairs.push_back({k.label(x), k.label(y)});
  return Json{{"kind", "plan"},
              {"complex", complex_json(k)},
              {"from", k.label(plan.from)},
              {"to", k.label(plan.to)},
              {"midpoint", k.label(plan.midpoint)},
              {"pairs", pairs},
              {"path", labels_json(k, plan.path)},
              {"set", admissible_to_json(farber, k)}};
}

Json product_to_json(const ProductComplex& p) {
  return Json{{"kind", "product"},
              {"complex", complex_json(*p.base())},
              {"product", complex_json(*p.product())}};
}

// --- verify ------------------------------------------------------------------

VerifyReport verify_certificate(const Json& cert, const VerifyOptions& options) {
  VerifyReport report;
  auto reject = [&](const std::string& why) {
    report.accepted = false;
    report.message = why;
    return report;
  };
  try {
    const std::string kind = cert.at("kind");
    if (kind == "tc" || kind == "scat" || kind == "scat-square") {
      const bool farber = kind == "tc";
      Shape shape = shape_for(cert, kind != "scat", farber);
      auto single = [&](std::size_t f) {
        BitSet one;
        one.insert(f);
        const SearchOptions& so = options.invariants.search;
        if (kind == "tc") return is_farber(*shape.square, one, so).verdict;
        if (kind == "scat") return is_categorical(shape.base, one, so).verdict;
        return is_categorical_in_square(*shape.square, shape.ambient->subcomplex_by_facets(one), so).verdict;
      };
      auto err = verify_cover(cert, shape, farber ? AdmissibleKind::kFarber : AdmissibleKind::kCategorical,
                              single);
      if (!err.empty()) return reject(err);
      if (options.recompute) {
        InvariantResult r = kind == "tc" ? tc(shape.base, options.invariants)
                            : kind == "scat" ? scat(shape.base, options.invariants)
                                             : scat_of_square(*shape.square, options.invariants);
        if (to_string(r.status) != cert.at("status").get<std::string>() ||
            r.lower_bound != cert.at("lower_bound").get<int>())
          return reject("recomputation disagrees with the claimed bounds");
      }
      report.accepted = true;
      report.message = kind + (cert.at("status") == "not-coverable" ? " not-coverable certificate valid"
                                                                      : " cover certificate valid");
      return report;
    }
    if (kind == "farber-check" || kind == "categorical-check") {
      const bool farber = kind == "farber-check";
      Shape shape = shape_for(cert, farber, farber);
      Complex sub = complex_from_json(cert.at("subcomplex"), farber);
      const std::string verdict = cert.at("verdict");
      if (verdict == "yes") {
        if (!cert.contains("set")) return reject("yes verdict without a witness");
        ComplexPtr checked;
        auto err = verify_admissible(cert.at("set"), shape,
                                     farber ? AdmissibleKind::kFarber : AdmissibleKind::kCategorical, &checked);
        if (!err.empty()) return reject(err);
        if (!(*checked == sub)) return reject("witness is for a different subcomplex");
      } else if (verdict == "no") {
        CheckResult r = farber ? is_farber(*shape.square, sub, options.invariants.search)
                               : is_categorical(shape.base, sub, options.invariants.search);
        if (r.verdict != Verdict::kNo) return reject("exhaustive re-check did not confirm 'no'");
      } else if (verdict != "unknown") {
        return reject("unrecognized verdict");
      }
      report.accepted = true;
      report.message = kind + " verdict '" + verdict + "' confirmed";
      return report;
    }
    if (kind == "core") {
      ComplexPtr k = share(complex_from_json(cert.at("complex")));
      std::vector<CollapseStep> steps;
      for (const auto& s : cert.at("steps"))
        steps.push_back({lookup(*k, s.at(0).get<std::string>()), lookup(*k, s.at(1).get<std::string>())});
      std::optional<Complex> end;
      if (auto err = replay_collapse(k, steps, end); !err.empty()) return reject(err);
      Complex claimed = complex_from_json(cert.at("core"));
      if (!(*end == claimed)) return reject("replay does not reach the claimed core");
      if (!dominated_vertices(*end).empty()) return reject("claimed core still has a dominated vertex");
      if (cert.at("strongly_collapsible").get<bool>() != (end->num_vertices() == 1))
        return reject("strong collapsibility flag is wrong");
      report.accepted = true;
      report.message = "collapse sequence replays to a core";
      return report;
    }
    if (kind == "plan") {
      Shape shape = shape_for(cert, true, true);
      ComplexPtr sub;
      if (auto err = verify_admissible(cert.at("set"), shape, AdmissibleKind::kFarber, &sub); !err.empty())
        return reject(err);
      const Complex& k = *shape.base;
      VertexId x = lookup(k, cert.at("from")), y = lookup(k, cert.at("to"));
      VertexId omega = lookup(*sub, shape.square->product()->label(shape.square->pair(x, y)));
      auto order = domain_order(*sub, cert.at("set").at("witness").at("domain"));
      SimplicialMap sigma = map_from_json(sub, shape.base, order, cert.at("set").at("section"));
      const auto& steps = cert.at("set").at("witness").at("steps");
      auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), omega) - order.begin());

      MotionPlan plan;
      plan.from = x;
      plan.to = y;
      plan.midpoint = lookup(k, cert.at("midpoint"));
      for (const auto& p : cert.at("pairs"))
        plan.pairs.emplace_back(lookup(k, p.at(0)), lookup(k, p.at(1)));
      for (const auto& l : cert.at("path")) plan.path.push_back(lookup(k, l));
      if (plan.midpoint != sigma(omega)) return reject("midpoint is not the section value");
      if (plan.pairs.size() != steps.size()) return reject("pairs do not match the witness length");
      for (std::size_t j = 0; j < steps.size(); ++j) {
        const auto& image = steps[steps.size() - 1 - j].at(pos).get<std::string>();
        if (shape.square->product()->label(shape.square->pair(plan.pairs[j].first, plan.pairs[j].second)) != image)
          return reject("pair " + std::to_string(j) + " does not match the witness");
      }
      if (auto err = check_motion_plan(k, plan); !err.empty()) return reject(err);
      report.accepted = true;
      report.message = "motion plan is a valid edge path";
      return report;
    }
    if (kind == "product") {
      Shape shape = shape_for(cert, true, true);
      Complex claimed = complex_from_json(cert.at("product"), true);
      if (!(claimed == *shape.square->product())) return reject("product facets differ");
      report.accepted = true;
      report.message = "categorical square matches";
      return report;
    }
    return reject("unknown certificate kind '" + kind + "'");
  } catch (const Error& e) {
    return reject(e.what());
  } catch (const Json::exception& e) {
    return reject(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace dtc
