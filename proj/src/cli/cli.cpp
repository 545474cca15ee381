#include "shg/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "shg/actions.hpp"
#include "shg/constructors.hpp"
#include "shg/io.hpp"

namespace shg {

namespace {

using Json = nlohmann::ordered_json;

std::string str(Rational const& q) { return to_string(q); }

Json vector_json(VectorQ const& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(str(v(i)));
  return out;
}

Json names_json(SpacePtr const& sp, std::vector<std::size_t> const& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(sp->name(i));
  return out;
}

std::string measure_literal(SpacePtr const& sp, VectorQ const& v) { return to_literal(Measure(sp, v)); }

// Text form: "key: value" per scalar, nested objects indented, arrays of
// scalars inline.
void render_text(Json const& j, std::ostream& out, int indent = 0) {
  auto scalar = [](Json const& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (auto const& [key, value] : j.items()) {
    out << std::string(static_cast<std::size_t>(indent), ' ') << key << ':';
    if (value.is_object()) {
      out << '\n';
      render_text(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << '\n';
      for (auto const& item : value) {
        out << std::string(static_cast<std::size_t>(indent + 2), ' ') << "-\n";
        render_text(item, out, indent + 4);
      }
    } else if (value.is_array()) {
      out << " [";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar(value[i]);
      out << "]\n";
    } else {
      out << ' ' << scalar(value) << '\n';
    }
  }
}

struct Loaded {
  std::string name;
  ConvTable table;
};

Loaded load_table(std::string const& path) {
  auto doc = parse_structure_document(read_file(path));
  return {doc.name.empty() ? path : doc.name, std::move(doc.table)};
}

Json structure_summary(Loaded const& l) {
  Json s;
  s["name"] = l.name;
  s["points"] = l.table.space()->points();
  return s;
}

// Outcome of one command: report plus exit code.
struct Outcome {
  Json report;
  int code = kExitOk;
};

Json witness_json(AxiomViolation const& e) {
  Json w;
  w["axiom"] = e.axiom();
  w["at"] = e.witness();
  w["detail"] = e.detail();
  return w;
}

Outcome cmd_check(std::string const& path) {
  auto l = load_table(path);
  Outcome o;
  o.report["structure"] = structure_summary(l);
  o.report["probability"] = "pass";  // enforced by the parser
  auto assoc = check_associativity(l.table);
  if (!assoc) {
    auto const& w = *assoc.witness;
    auto const& sp = *l.table.space();
    o.report["associativity"] = "fail";
    o.report["witness"] = witness_json(AxiomViolation(
        "associativity", {sp.name(w.x), sp.name(w.y), sp.name(w.z)},
        "(xy)z = " + to_literal(w.lhs) + " but x(yz) = " + to_literal(w.rhs)));
    o.report["verdict"] = "not a semihypergroup";
    o.code = kExitCheckFailed;
    return o;
  }
  o.report["associativity"] = "pass";
  auto s = Semihypergroup::verify(l.table, l.name);
  auto const& v = s.verified();
  auto const& sp = s.space();
  o.report["identity"] = v.identity ? sp->name(*v.identity) : "none";
  if (v.involution) {
    Json inv;
    for (std::size_t x = 0; x < s.size(); ++x) inv[sp->name(x)] = sp->name((*v.involution)(x));
    o.report["involution"] = inv;
    if (v.involution_ambiguous) o.report["involution_note"] = "several involutions fit; the first is shown";
  } else {
    o.report["involution"] = "none";
  }
  o.report["hypergroup"] = v.is_hypergroup;
  o.report["commutative"] = v.commutative;
  o.report["center"] = names_json(sp, center(s.table()));
  o.report["center_closed"] = center_is_closed(s.table());
  o.report["verdict"] = v.is_hypergroup ? "hypergroup" : "semihypergroup";
  return o;
}

Semihypergroup load_verified(std::string const& path, Json& report) {
  auto l = load_table(path);
  report["structure"] = structure_summary(l);
  return Semihypergroup::verify(std::move(l.table), l.name);
}

Json polytope_json(SpacePtr const& sp, SimplexPolytope const& p) {
  Json j;
  j["feasible"] = p.feasible;
  if (p.feasible) {
    j["witness"] = measure_literal(sp, p.witness);
    if (p.dimension >= 0) j["dimension"] = p.dimension;
  } else {
    j["certificate"] = vector_json(p.certificate);
    j["certificate_verified"] = verifies_infeasibility(p.program, p.certificate);
  }
  return j;
}

Outcome cmd_lim(std::string const& path) {
  Outcome o;
  auto s = load_verified(path, o.report);
  auto r = lim_solve(s);
  o.report["verdict"] = r.exists() ? "LIM exists" : "no LIM";
  if (r.exists()) {
    o.report["mean"] = to_literal(r.mean->measure());
    o.report["dimension"] = r.polytope.dimension;
    Json bounds;
    for (std::size_t x = 0; x < s.size(); ++x) {
      bounds[s.space()->name(x)] = str(r.polytope.lower(static_cast<Eigen::Index>(x))) + " .. " +
                                   str(r.polytope.upper(static_cast<Eigen::Index>(x)));
    }
    o.report["range"] = bounds;
  } else {
    o.report["certificate"] = vector_json(r.polytope.certificate);
    o.report["certificate_verified"] = verifies_infeasibility(r.polytope.program, r.polytope.certificate);
  }
  return o;
}

Outcome cmd_equiv(std::string const& path) {
  Outcome o;
  auto s = load_verified(path, o.report);
  auto r = equivalence_suite(s);
  o.report["lim"] = polytope_json(s.space(), r.lim);
  o.report["condition2"] = polytope_json(s.space(), r.condition2);
  o.report["condition3"] = polytope_json(s.space(), r.condition3);
  if (r.lim_witness_satisfies_2) o.report["lim_witness_satisfies_condition2"] = *r.lim_witness_satisfies_2;
  if (r.lim_witness_satisfies_3) o.report["lim_witness_satisfies_condition3"] = *r.lim_witness_satisfies_3;
  o.report["agree"] = r.agree();
  o.report["verdict"] = r.agree() ? (r.lim.feasible ? "all three conditions hold" : "all three conditions fail")
                                  : "conditions disagree";
  if (!r.agree()) o.code = kExitCheckFailed;
  return o;
}

Outcome cmd_arens(std::string const& path, int trials, std::uint64_t seed) {
  Outcome o;
  auto s = load_verified(path, o.report);
  o.report["seed"] = seed;
  o.report["trials"] = trials;
  auto r = check_arens_regularity(s, trials, seed);
  o.report["pairs_checked"] = r.pairs_checked;
  o.report["regular"] = r.passed();
  if (!r.passed()) {
    Json w;
    w["m"] = vector_json(r.witness->m.weights());
    w["n"] = vector_json(r.witness->n.weights());
    w["left"] = vector_json(r.witness->left.weights());
    w["right"] = vector_json(r.witness->right.weights());
    o.report["witness"] = w;
    o.code = kExitCheckFailed;
  }
  o.report["verdict"] = r.passed() ? "Arens regular" : "Arens products differ";
  return o;
}

std::optional<AffineAction> load_action(Semihypergroup const& s, std::string const& path, Outcome& o) {
  auto doc = parse_action(s.space(), read_file(path));
  o.report["action"] = {{"file", path}, {"dim", doc.dim}, {"domain", to_string(doc.domain)}};
  auto c = check_action_law(s, doc.matrices, doc.domain);
  if (c.passed()) return AffineAction::verify(s, std::move(doc.matrices), doc.domain);
  using K = ActionLawWitness<Rational>::Kind;
  auto const& w = *c.witness;
  Json j;
  auto const& sp = s.space();
  switch (w.kind) {
    case K::not_stochastic:
      j["axiom"] = "stochastic";
      j["at"] = Json::array({sp->name(w.x)});
      j["matrix"] = matrix_literal(w.lhs);
      break;
    case K::identity:
      j["axiom"] = "action identity";
      j["at"] = Json::array({sp->name(w.x)});
      j["matrix"] = matrix_literal(w.lhs);
      break;
    case K::law:
      j["axiom"] = "action law";
      j["at"] = Json::array({sp->name(w.x), sp->name(w.y)});
      j["product"] = matrix_literal(w.lhs);
      j["convolution_average"] = matrix_literal(w.rhs);
      break;
  }
  o.report["law"] = "fail";
  o.report["witness"] = j;
  o.report["verdict"] = "not an action";
  o.code = kExitCheckFailed;
  return std::nullopt;
}

Outcome cmd_action_check(std::string const& structure, std::string const& action) {
  Outcome o;
  auto s = load_verified(structure, o.report);
  if (load_action(s, action, o)) {
    o.report["law"] = "pass";
    o.report["verdict"] = "action";
  }
  return o;
}

Outcome cmd_fixed_points(std::string const& structure, std::string const& action, bool canonical) {
  Outcome o;
  auto s = load_verified(structure, o.report);
  std::optional<AffineAction> a;
  if (canonical) {
    a = canonical_action(s);
    o.report["action"] = "canonical";
  } else {
    a = load_action(s, action, o);
    if (!a) return o;
  }
  auto fp = fixed_points(*a);
  o.report["verdict"] = fp.feasible ? "fixed point exists" : "no fixed point";
  if (fp.feasible) {
    o.report["fixed_point"] = vector_json(fp.witness);
    o.report["dimension"] = fp.dimension;
  } else {
    o.report["certificate"] = vector_json(fp.certificate);
    o.report["certificate_verified"] = verifies_infeasibility(fp.program, fp.certificate);
  }
  return o;
}

Outcome cmd_fp_harness(std::string const& path, int instances, std::uint64_t seed, std::vector<int> const& dims) {
  Outcome o;
  auto s = load_verified(path, o.report);
  o.report["seed"] = seed;
  std::vector<Eigen::Index> d(dims.begin(), dims.end());
  auto r = fp_property_harness(s, instances, seed, d);
  o.report["lim_exists"] = r.lim.exists();
  o.report["canonical"] = polytope_json(s.space(), r.canonical);
  Json per_dim;
  for (auto dim : d) {
    std::size_t total = 0, with_fp = 0, propagated = 0;
    for (auto const& inst : r.instances) {
      if (inst.dim != dim) continue;
      ++total;
      with_fp += inst.has_fixed_point;
      propagated += inst.method == "propagated";
    }
    per_dim[std::to_string(dim)] = {{"actions", total}, {"with_fixed_point", with_fp}, {"propagated", propagated}};
  }
  o.report["actions"] = per_dim;
  o.report["misses"] = r.misses;
  o.report["consistent"] = r.consistent();
  o.report["verdict"] = r.consistent() ? "consistent with the fixed-point property" : "inconsistent";
  if (!r.consistent()) o.code = kExitCheckFailed;
  return o;
}

FiniteGroup parse_group(std::string const& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("group must be cyclic:N or symmetric:N, got '" + spec + "'");
  auto kind = spec.substr(0, colon);
  auto n = parse_rational(spec.substr(colon + 1));
  if (denominator(n) != 1 || n < 1) throw InputError("group order parameter must be a positive integer");
  auto k = numerator(n).convert_to<std::size_t>();
  if (kind == "cyclic") {
    if (k > 64) throw InputError("cyclic groups are limited to order 64");
    return FiniteGroup::cyclic(k);
  }
  if (kind == "symmetric") {
    if (k > 4) throw InputError("symmetric groups are limited to degree 4");
    return FiniteGroup::symmetric(k);
  }
  throw InputError("unknown group kind '" + kind + "'");
}

std::vector<Rational> parse_rationals(std::string const& csv, std::size_t expected, std::string const& flag) {
  std::vector<Rational> out;
  std::stringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(parse_rational(tok));
  if (out.size() != expected) {
    throw InputError(flag + " needs " + std::to_string(expected) + " comma-separated rationals");
  }
  return out;
}

struct ConstructArgs {
  std::string family, output, group = "symmetric:3", subgroup = "e,(12)", action = "inversion", kind;
  std::string points, cayley, x, y, z;
  long n = 2;
  std::size_t size = 2;
};

Outcome cmd_construct(ConstructArgs const& a, std::ostream& out) {
  auto split_names = [](std::string const& csv) {
    std::vector<std::string> v;
    std::stringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) v.push_back(tok);
    return v;
  };
  std::optional<Semihypergroup> s;
  std::string name = a.family;
  if (a.family == "group") {
    auto g = parse_group(a.group);
    s = from_group(g);
    name = a.group;
  } else if (a.family == "semigroup") {
    if (!a.cayley.empty()) {
      auto names = split_names(a.points);
      auto space = FiniteSpace::make(names);
      CayleyTable t;
      std::stringstream rows(a.cayley);
      std::string row;
      while (std::getline(rows, row, ';')) {
        std::stringstream cells(row);
        std::string cell;
        t.emplace_back();
        while (cells >> cell) t.back().push_back(space->index(cell));
      }
      s = from_semigroup(names, t);
    } else {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < a.size; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
      if (a.size < 1 || a.size > 26) throw InputError("--size must be between 1 and 26");
      if (a.kind == "left-zero") {
        s = left_zero_semigroup(names);
      } else if (a.kind == "right-zero") {
        s = right_zero_semigroup(names);
      } else {
        throw InputError("semigroup needs --kind left-zero|right-zero or --points with --cayley");
      }
      name = a.kind;
    }
  } else if (a.family == "coset" || a.family == "double-coset") {
    auto g = parse_group(a.group);
    auto h = g.subset(split_names(a.subgroup));
    s = a.family == "coset" ? left_coset_space(g, h) : double_coset_space(g, h);
    name = a.family + " " + a.group + " by {" + a.subgroup + "}";
  } else if (a.family == "orbit") {
    auto g = parse_group(a.group);
    if (a.action == "inversion") {
      s = orbit_space(g, GroupAction::inversion(g));
    } else if (a.action == "conjugation") {
      s = orbit_space(g, GroupAction::conjugation(g));
    } else {
      throw InputError("--action must be inversion or conjugation");
    }
    name = a.group + " / " + a.action;
  } else if (a.family == "three-point") {
    auto x = parse_rationals(a.x, 3, "--x"), y = parse_rationals(a.y, 3, "--y"), z = parse_rationals(a.z, 2, "--z");
    s = three_point_family<Rational>({x[0], x[1], x[2]}, {y[0], y[1], y[2]}, {z[0], z[1]});
    name = "three-point x=(" + a.x + ") y=(" + a.y + ") z=(" + a.z + ")";
  } else if (a.family == "zeuner") {
    if (a.n > 64) throw InputError("--n is limited to 64");
    s = zeuner_grid(a.n);
    name = "zeuner(" + std::to_string(a.n) + ")";
  } else {
    throw InputError("unknown family '" + a.family + "'");
  }
  auto text = emit_structure(s->table(), name);
  Outcome o;
  if (a.output.empty()) {
    out << text;
    o.report = nullptr;  // the document itself is the output
  } else {
    write_file(a.output, text);
    o.report["constructed"] = name;
    o.report["points"] = s->space()->points();
    o.report["written"] = a.output;
  }
  return o;
}

}  // namespace

int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite semihypergroup toolkit: axioms, invariant means, Arens products, affine actions.", "shg"};
  app.require_subcommand(1);
  bool json = false, timing = false;
  app.add_flag("--json", json, "machine-readable report");
  app.add_flag("--timing", timing, "append wall-clock time (makes output nondeterministic)");

  std::string file, action_file;
  int trials = 100, instances = 25;
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> dims{3, 4};
  bool canonical = false;
  ConstructArgs ca;

  auto with_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "random seed")->capture_default_str();
  };
  auto* check = app.add_subcommand("check", "verify the axioms and report identity, involution, center");
  check->add_option("file", file, "structure file")->required();
  auto* lim = app.add_subcommand("lim", "solve for a left-invariant mean");
  lim->add_option("file", file, "structure file")->required();
  auto* equiv = app.add_subcommand("equiv", "LIM, condition 2 and condition 3 side by side");
  equiv->add_option("file", file, "structure file")->required();
  auto* arens = app.add_subcommand("arens", "check that the two Arens products agree");
  arens->add_option("file", file, "structure file")->required();
  arens->add_option("--trials", trials, "random pairs on top of all Dirac pairs")->capture_default_str();
  with_seed(arens);
  auto* acheck = app.add_subcommand("action-check", "verify an affine action file");
  acheck->add_option("structure", file, "structure file")->required();
  acheck->add_option("action", action_file, "action file")->required();
  auto* fp = app.add_subcommand("fixed-points", "common fixed points of an action on the simplex");
  fp->add_option("structure", file, "structure file")->required();
  auto* fp_action = fp->add_option("action", action_file, "action file");
  auto* fp_canon = fp->add_flag("--canonical", canonical, "use the action of K on its means");
  fp_action->excludes(fp_canon);
  auto* harness = app.add_subcommand("fp-harness", "fixed points of seeded random actions");
  harness->add_option("file", file, "structure file")->required();
  harness->add_option("--instances", instances, "actions per dimension")->capture_default_str();
  harness->add_option("--dims", dims, "simplex dimensions plus one")->delimiter(',')->capture_default_str();
  with_seed(harness);
  auto* construct = app.add_subcommand("construct", "write a structure file from a named family");
  construct->add_option("family", ca.family, "group|semigroup|coset|double-coset|orbit|three-point|zeuner")
      ->required()
      ->check(CLI::IsMember({"group", "semigroup", "coset", "double-coset", "orbit", "three-point", "zeuner"}));
  construct->add_option("-o,--output", ca.output, "output file (default: stdout)");
  construct->add_option("--group", ca.group, "cyclic:N or symmetric:N")->capture_default_str();
  construct->add_option("--subgroup", ca.subgroup, "comma-separated element names")->capture_default_str();
  construct->add_option("--action", ca.action, "orbit action: inversion or conjugation")->capture_default_str();
  construct->add_option("--kind", ca.kind, "semigroup kind: left-zero or right-zero");
  construct->add_option("--size", ca.size, "semigroup size")->capture_default_str();
  construct->add_option("--points", ca.points, "comma-separated point names for --cayley");
  construct->add_option("--cayley", ca.cayley, "rows separated by ';', entries by spaces");
  construct->add_option("--x", ca.x, "three-point x1,x2,x3");
  construct->add_option("--y", ca.y, "three-point y1,y2,y3");
  construct->add_option("--z", ca.z, "three-point z1,z2");
  construct->add_option("--n", ca.n, "zeuner grid size")->capture_default_str();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<char const*> argv{"shg"};
  for (auto const& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  } catch (CLI::ParseError const& e) {
    auto known = app.get_subcommands([&](CLI::App* sub) { return !args.empty() && sub->get_name() == args.front(); });
    if (!args.empty() && args.front().rfind("-", 0) != 0 && known.empty()) {
      err << "error: unknown subcommand '" << args.front() << "'\n";
    } else {
      err << "error: " << e.what() << '\n';
    }
    auto const* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << failing->help();
    return kExitInputError;
  }
  if (fp->parsed() && !canonical && action_file.empty()) {
    err << "fixed-points needs an action file or --canonical\n" << fp->help();
    return kExitInputError;
  }

  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (check->parsed()) {
      o = cmd_check(file);
    } else if (lim->parsed()) {
      o = cmd_lim(file);
    } else if (equiv->parsed()) {
      o = cmd_equiv(file);
    } else if (arens->parsed()) {
      o = cmd_arens(file, trials, seed);
    } else if (acheck->parsed()) {
      o = cmd_action_check(file, action_file);
    } else if (fp->parsed()) {
      o = cmd_fixed_points(file, action_file, canonical);
    } else if (harness->parsed()) {
      o = cmd_fp_harness(file, instances, seed, dims);
    } else {
      o = cmd_construct(ca, out);
    }
  } catch (AxiomViolation const& e) {
    o.report["witness"] = witness_json(e);
    o.report["verdict"] = "not a semihypergroup";
    o.code = kExitCheckFailed;
  } catch (InputError const& e) {
    if (json) {
      out << Json{{"error", e.what()}}.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (o.report.is_null()) return o.code;
  if (timing) {
    o.report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  if (json) {
    out << o.report.dump(2) << '\n';
  } else {
    render_text(o.report, out);
  }
  return o.code;
}

}  // namespace shg
