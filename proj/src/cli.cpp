#include "dtc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dtc/certificate.hpp"

namespace dtc {

namespace {

struct Args {
  std::string input;
  std::size_t budget = 1'000'000;
  unsigned threads = 1;
  bool json = false;
  bool square = false;
  bool recompute = false;
  std::string omega;
  std::string from, to;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "a,b;b,c" or "a b; b c": ';' separates facets, ',' or blanks separate vertices.
std::vector<std::vector<std::string>> parse_facet_list(const std::string& spec) {
  std::vector<std::vector<std::string>> facets;
  std::stringstream groups(spec);
  for (std::string group; std::getline(groups, group, ';');) {
    for (char& c : group)
      if (c == ',') c = ' ';
    std::istringstream words(group);
    std::vector<std::string> facet;
    for (std::string w; words >> w;) facet.push_back(w);
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw InvalidInput("empty facet list");
  return facets;
}

Complex sub_from_spec(const Complex& ambient, const std::string& spec) {
  std::vector<Simplex> simplices;
  for (const auto& f : parse_facet_list(spec)) simplices.push_back(ambient.simplex_of(f));
  return ambient.subcomplex(simplices);
}

std::string facet_text(const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? " " : "") + labels[i];
  return s + "}";
}

int status_exit(Status s) {
  return s == Status::kExact || s == Status::kNotCoverable ? kExitOk : kExitInconclusive;
}

int verdict_exit(Verdict v) { return v == Verdict::kUnknown ? kExitInconclusive : kExitOk; }

void print_invariant(std::ostream& out, const std::string& name, const InvariantResult& r) {
  switch (r.status) {
    case Status::kExact:
      out << name << " = " << *r.value << " (exact)\n";
      break;
    case Status::kNotCoverable:
      out << name << ": not coverable (some facet lies in no admissible subcomplex)\n";
      return;
    case Status::kBounded:
      out << name << " in [" << r.lower_bound << ", " << *r.upper_bound << "] (bounded)\n";
      break;
    case Status::kBudgetExhausted:
      out << name << " >= " << r.lower_bound << " (budget exhausted)\n";
      break;
  }
  if (!r.cover.empty()) out << "cover (" << r.cover.size() << " subcomplexes):\n";
  for (std::size_t i = 0; i < r.cover.size(); ++i) {
    out << "  [" << i << "]";
    for (const auto& f : r.cover[i].subcomplex->canonical_facets()) out << ' ' << facet_text(f);
    if (r.cover[i].witness) out << "  (witness: " << r.cover[i].witness->size() << " maps)";
    out << '\n';
  }
  out << "admissibility checks: " << r.admissibility_checks
      << ", maximal sets: " << r.maximal_sets.size() << ", cover search nodes: " << r.cover_nodes
      << '\n';
}

int dispatch(const std::string& verb, const Args& a, std::ostream& out) {
  InvariantOptions opts;
  opts.search.budget = a.budget;
  opts.threads = a.threads;

  if (verb == "verify") {
    Json cert;
    try {
      cert = Json::parse(read_file(a.input));
    } catch (const Json::parse_error& e) {
      throw ParseError(1, e.what());
    }
    VerifyOptions vo;
    vo.recompute = a.recompute;
    vo.invariants = opts;
    VerifyReport rep = verify_certificate(cert, vo);
    if (a.json)
      out << Json{{"accepted", rep.accepted}, {"message", rep.message}}.dump(2) << '\n';
    else
      out << (rep.accepted ? "ACCEPTED: " : "REJECTED: ") << rep.message << '\n';
    return rep.accepted ? kExitOk : kExitError;
  }

  ComplexPtr k = share(load_complex(a.input));

  if (verb == "tc") {
    InvariantResult r = tc(k, opts);
    if (a.json) out << invariant_to_json("tc", *k, r).dump(2) << '\n';
    else print_invariant(out, "TC", r);
    return status_exit(r.status);
  }
  if (verb == "scat") {
    if (a.square) {
      ProductComplex p = categorical_square(k);
      InvariantResult r = scat_of_square(p, opts);
      if (a.json) out << invariant_to_json("scat-square", *k, r).dump(2) << '\n';
      else print_invariant(out, "scat(K^2)", r);
      return status_exit(r.status);
    }
    InvariantResult r = scat(k, opts);
    if (a.json) out << invariant_to_json("scat", *k, r).dump(2) << '\n';
    else print_invariant(out, "scat", r);
    return status_exit(r.status);
  }
  if (verb == "core") {
    CollapseSequence seq = core(k);
    if (a.json) {
      out << collapse_to_json(seq).dump(2) << '\n';
    } else {
      out << "core: " << seq.end.num_vertices() << " vertices, " << seq.end.num_facets()
          << " facets" << (seq.end.num_vertices() == 1 ? " (strongly collapsible)" : "") << '\n';
      out << serialize_complex(seq.end);
      out << "collapse sequence (" << seq.steps.size() << " steps):\n";
      for (const auto& s : seq.steps)
        out << "  delete " << k->label(s.removed) << " (dominated by " << k->label(s.dominator) << ")\n";
    }
    return kExitOk;
  }
  if (verb == "product") {
    ProductComplex p = categorical_square(k);
    if (a.json) {
      out << product_to_json(p).dump(2) << '\n';
    } else {
      out << "# " << p.product()->num_vertices() << " vertices, " << p.product()->num_facets()
          << " facets\n";
      out << serialize_complex(*p.product());
    }
    return kExitOk;
  }
  if (verb == "is-farber") {
    ProductComplex p = categorical_square(k);
    Complex omega = a.omega.empty() ? *p.product() : sub_from_spec(*p.product(), a.omega);
    CheckResult r = is_farber(p, omega, opts.search);
    if (a.json) out << check_to_json("farber-check", *k, omega, r).dump(2) << '\n';
    else out << "Farber: " << to_string(r.verdict) << " (" << r.states << " maps visited)\n";
    return verdict_exit(r.verdict);
  }
  if (verb == "is-categorical") {
    Complex sub = a.omega.empty() ? *k : sub_from_spec(*k, a.omega);
    CheckResult r = is_categorical(k, sub, opts.search);
    if (a.json) out << check_to_json("categorical-check", *k, sub, r).dump(2) << '\n';
    else out << "categorical: " << to_string(r.verdict) << " (" << r.states << " maps visited)\n";
    return verdict_exit(r.verdict);
  }
  if (verb == "plan") {
    VertexId x = k->id_of(a.from), y = k->id_of(a.to);
    ProductComplex p = categorical_square(k);
    InvariantResult r = tc(k, opts);
    const AdmissibleSet* set = covering_set(p, r.cover, x, y);
    if (!set) throw InvalidInput("no certified Farber set contains (" + a.from + ", " + a.to + ")");
    MotionPlan plan = motion_plan(p, *set, x, y);
    if (a.json) {
      out << plan_to_json(p, *set, plan).dump(2) << '\n';
    } else {
      out << "plan " << a.from << " -> " << a.to << " via " << k->label(plan.midpoint) << ":";
      for (auto v : plan.path) out << ' ' << k->label(v);
      out << '\n';
    }
    return kExitOk;
  }
  throw InvalidInput("unknown command '" + verb + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete topological complexity and simplicial LS-category"};
  app.require_subcommand(1, 1);
  Args a;

  auto common = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", a.input, what)->required();
    sub->add_option("--budget", a.budget, "maximum maps visited per contiguity-class query")
        ->capture_default_str();
    sub->add_option("--threads", a.threads, "worker threads for admissibility checks")
        ->check(CLI::Range(1u, 256u));
    sub->add_flag("--json", a.json, "machine-readable output / certificate");
  };
  common(app.add_subcommand("tc", "discrete topological complexity"), "complex file");
  auto* scat_cmd = app.add_subcommand("scat", "simplicial LS-category");
  common(scat_cmd, "complex file");
  scat_cmd->add_flag("--square", a.square, "compute scat of the categorical square");
  common(app.add_subcommand("core", "strong-collapse core"), "complex file");
  common(app.add_subcommand("product", "categorical square"), "complex file");
  auto* farber = app.add_subcommand("is-farber", "Farber test for a subcomplex of the square");
  common(farber, "complex file");
  farber->add_option("--omega", a.omega, "facets of the subcomplex, e.g. 'a|a,a|b;b|b'");
  auto* categorical = app.add_subcommand("is-categorical", "categorical test for a subcomplex");
  common(categorical, "complex file");
  categorical->add_option("--sub,--omega", a.omega, "facets of the subcomplex, e.g. 'a,b;b,c'");
  auto* plan = app.add_subcommand("plan", "motion plan between two vertices");
  common(plan, "complex file");
  plan->add_option("--from", a.from, "start vertex")->required();
  plan->add_option("--to", a.to, "end vertex")->required();
  auto* verify = app.add_subcommand("verify", "re-check a JSON certificate");
  common(verify, "certificate file");
  verify->add_flag("--recompute", a.recompute, "also re-run searches behind lower bounds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace dtc
