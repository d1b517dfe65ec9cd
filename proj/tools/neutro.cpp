// neutro: command-line front end for the over/under/off-set library.
//
// Exit codes: 0 success, 1 invalid input, 2 an axiom or consistency check
// found a violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "neutro/dependence.hpp"
#include "neutro/io.hpp"
#include "neutro/symbolic.hpp"

using namespace neutro;

namespace {

constexpr int kFinding = 2;

bool use_color() {
  static const bool on = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return on;
}

std::string paint(const std::string& s, const char* code) {
  return use_color() ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

std::string paint_class(Class c, const std::string& text) {
  switch (c) {
    case Class::standard: return paint(text, "32");
    case Class::over: return paint(text, "33");
    case Class::under: return paint(text, "36");
    case Class::off: return paint(text, "35");
  }
  return text;
}

std::string noun(Class c, const std::string& base) {
  if (c == Class::standard) return "standard";
  return std::string(class_name(c)) + base;
}

std::string statistics_phrase(Class c) {
  switch (c) {
    case Class::off: return "offstatistics (under- and over-evidence present)";
    case Class::over: return "overstatistics (over-evidence only)";
    case Class::under: return "understatistics (under-evidence only)";
    case Class::standard: return "standard";
  }
  return "";
}

json verdict_json(const Verdict& v) {
  json w = json::array();
  for (const auto& x : v.witnesses)
    w.push_back(json{{"where", x.where}, {"direction", x.over ? "over" : "under"}, {"value", to_json(x.value)}});
  return json{{"class", class_name(v.cls)}, {"witnesses", w}};
}

void print_verdict(const std::string& label, const Verdict& v) {
  std::cout << paint_class(v.cls, label);
  if (!v.witnesses.empty()) {
    std::cout << "; witness: ";
    for (std::size_t k = 0; k < v.witnesses.size(); ++k) std::cout << (k ? "; " : "") << v.witnesses[k].str();
  }
  std::cout << "\n";
}

void print_line(const std::string& id, const Verdict& v, const std::string& base) {
  std::cout << "  " << id << ": " << paint_class(v.cls, noun(v.cls, base)) << "\n";
}

// --- classify ---------------------------------------------------------------

struct ClassifyOpts {
  std::string file;
  std::string kind;
  bool as_json = false;
};

int run_classify(const ClassifyOpts& o) {
  const json doc = read_json_file(o.file);
  const std::string kind = o.kind.empty() ? doc.value("kind", std::string("set")) : o.kind;
  const ThresholdFrame frame = json_frame(doc);
  Verdict overall;
  std::string base;
  std::vector<std::pair<std::string, Verdict>> parts;

  if (kind == "set") {
    const OffCollection c = load_collection(doc);
    for (const auto& [id, e] : c.elements()) parts.emplace_back(id, classify_element(e, frame));
    overall = classify_collection(c);
    base = "set";
  } else if (kind == "refined") {
    const auto es = load_refined(doc, frame);
    for (const auto& e : es) parts.emplace_back(e.id, classify_refined(e, frame));
    overall = classify_refined(es, frame);
    base = "set";
  } else if (kind == "complex") {
    const auto es = load_complex(doc, frame);
    const bool phases = doc.value("include_phases", false);
    for (const auto& e : es) parts.emplace_back(e.id, classify_complex(e, frame, phases));
    overall = classify_complex(es, frame, phases);
    base = "set";
  } else if (kind == "tripolar" || kind == "polar" || kind == "multipolar" || kind == "bipolar") {
    EvidenceScan scan;
    for (const auto& e : load_polar(doc)) {
      parts.emplace_back(e.id, classify_polar(e, frame));
      scan_polar(scan, e);
    }
    overall = scan.verdict();
    base = "set";
  } else if (kind == "graph") {
    const NeutroGraph g = load_graph(doc);
    overall = classify_graph(g, frame);
    base = "graph";
  } else if (kind == "matrix") {
    const NeutroMatrix m = load_matrix(doc);
    overall = classify_matrix(m, frame);
    base = "matrix";
  } else if (kind == "probability") {
    if (doc.value("refined", false)) {
      const auto space = load_refined_probability(doc);
      overall = classify_refined_probability(space, frame);
    } else {
      const auto space = load_probability(doc);
      for (const auto& p : space) parts.emplace_back(p.event, classify_probability({p}, frame));
      overall = classify_probability(space, frame);
    }
    base = "probability";
  } else if (kind == "label") {
    const LabelScale scale = load_scale(doc);
    bool over = false, under = false;
    std::vector<Witness> ws;
    for (const auto& e : load_label_elements(doc)) {
      const Verdict v = classify_label_element(e.t, e.i, e.f, scale, e.id);
      parts.emplace_back(e.id, v);
      over = over || v.cls == Class::over || v.cls == Class::off;
      under = under || v.cls == Class::under || v.cls == Class::off;
      ws.insert(ws.end(), v.witnesses.begin(), v.witnesses.end());
    }
    if (parts.empty()) throw ValidationError("no label elements");
    overall = {class_from_evidence(over, under), ws};
    base = "set";
  } else {
    throw ValidationError("unknown kind '" + kind + "'");
  }

  if (o.as_json) {
    json out{{"kind", kind}, {"overall", verdict_json(overall)}};
    json items = json::object();
    for (const auto& [id, v] : parts) items[id] = verdict_json(v);
    out["items"] = items;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  print_verdict(noun(overall.cls, base), overall);
  for (const auto& [id, v] : parts) print_line(id, v, "element");
  return 0;
}

// --- combine ----------------------------------------------------------------

struct CombineOpts {
  std::vector<std::string> files;
  std::string op = "union";
  std::string family = "minmax";
  std::string variant = "swap_tf";
  std::string output;
};

int run_combine(const CombineOpts& o) {
  const NormFamily fam = parse_family(o.family);
  const ComplementVariant var = parse_variant(o.variant);
  const OffCollection a = load_collection(read_json_file(o.files.at(0)));
  std::optional<OffCollection> result;
  if (o.op == "complement") {
    if (o.files.size() != 1) throw ValidationError("complement takes exactly one input");
    result = off_complement(a, var);
  } else {
    if (o.files.size() != 2) throw ValidationError(o.op + " takes exactly two inputs");
    const OffCollection b = load_collection(read_json_file(o.files[1]));
    if (o.op == "union") result = off_union(a, b, fam);
    else if (o.op == "intersect") result = off_intersection(a, b, fam);
    else throw ValidationError("unknown op '" + o.op + "' (expected union, intersect or complement)");
  }
  const std::string text = to_json(*result).dump(2) + "\n";
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out) throw ValidationError(o.output + ": cannot write");
    out << text;
  }
  return 0;
}

// --- eval -------------------------------------------------------------------

struct EvalOpts {
  std::string number;
  std::string at;
  std::string sym;
  std::string order = "default";
  std::string project;
  std::string triple;
  std::string omega_f = "1";
  std::string depend;
  bool as_json = false;
};

Triple parse_triple_text(const std::string& s) {
  std::vector<Rational> xs;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) xs.push_back(parse_rational(part));
  if (xs.size() != 3) throw ValidationError("expected a triple t,i,f, got '" + s + "'");
  return {xs[0], xs[1], xs[2]};
}

Channel parse_channel(char c) {
  switch (c) {
    case 'T': return Channel::T;
    case 'I': return Channel::I;
    case 'F': return Channel::F;
  }
  throw ValidationError(std::string("unknown channel '") + c + "'");
}

int run_depend(const EvalOpts& o) {
  const json doc = read_json_file(o.depend);
  json out = json::object();
  if (doc.contains("pairwise")) {
    DependenceSpec spec;
    for (const auto& [key, d] : doc.at("pairwise").items()) {
      if (key.size() != 2) throw ValidationError("pairwise." + key + ": expected a channel pair such as TF");
      spec.set_pair(parse_channel(key[0]), parse_channel(key[1]), json_rational(d, "pairwise." + key));
    }
    auto deg = [&](Channel a, Channel b) {
      auto it = spec.pairwise.find({a, b});
      return it == spec.pairwise.end() ? Rational(0) : it->second;
    };
    out["max_component_sum"] = to_json(max_component_sum(spec));
    out["pairwise_bound"] = to_json(triple_sum_bound_pairwise(deg(Channel::T, Channel::I), deg(Channel::I, Channel::F),
                                                              deg(Channel::T, Channel::F)));
  }
  if (doc.contains("global")) {
    const Rational d = json_rational(doc.at("global"), "global");
    out["global_bound"] = to_json(triple_sum_bound_global(d));
    if (doc.contains("bounds")) {
      const json& b = doc.at("bounds");
      auto range = [&](const char* k) {
        const SubsetValue v = json_value(b.at(k), std::string("bounds.") + k);
        return Range{v.inf(), v.sup()};
      };
      const auto r = off_sum_range_global(make_bounds(range("T"), range("I"), range("F")), d);
      out["off_sum_range"] = json::array({to_json(r.first), to_json(r.second)});
    }
  }
  if (doc.contains("pair")) out["pair_bound"] = to_json(pair_sum_bound(json_rational(doc.at("pair"), "pair")));
  if (doc.contains("refined")) {
    const json& r = doc.at("refined");
    std::vector<std::size_t> groups;
    std::vector<Rational> pairs;
    for (const auto& g : r.value("groups", json::array())) groups.push_back(g.get<std::size_t>());
    for (const auto& p : r.value("pairs", json::array())) pairs.push_back(json_rational(p, "refined.pairs"));
    out["refined_bound"] = to_json(refined_sum_bound(r.at("n").get<std::size_t>(), groups, pairs));
  }
  if (out.empty()) throw ValidationError(o.depend + ": nothing to evaluate (pairwise, global, pair or refined)");
  if (o.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : out.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return 0;
}

int run_eval(const EvalOpts& o) {
  const int modes = !o.number.empty() + !o.sym.empty() + !o.project.empty() + !o.depend.empty();
  if (modes != 1) throw ValidationError("eval needs exactly one of --number, --sym, --project or --depend");
  if (!o.sym.empty()) {
    const SymbolicOrder& order = o.order == "alt" ? alternate_order() : default_order();
    if (o.order != "alt" && o.order != "default") throw ValidationError("--order must be default or alt");
    std::cout << sym_name(eval_formula(o.sym, order)) << "\n";
    return 0;
  }
  if (!o.number.empty()) {
    if (o.at.empty()) throw ValidationError("--number needs --at");
    const OffnumberSpec spec = load_offnumber(read_json_file(o.number));
    const Rational x = parse_rational(o.at);
    const Triple r = spec.trapezoidal ? trapezoidal_eval(spec.trap, x) : triangular_eval(spec.tri, x);
    if (o.as_json) std::cout << to_json(r).dump() << "\n";
    else std::cout << r.str() << "\n";
    return 0;
  }
  if (!o.project.empty()) {
    if (o.triple.empty()) throw ValidationError("--project needs --triple t,i,f");
    const Triple r = antagonist_projection(parse_triple_text(o.triple), parse_rational(o.project), parse_rational(o.omega_f));
    if (o.as_json) std::cout << to_json(r).dump() << "\n";
    else std::cout << r.str() << "\n";
    return 0;
  }
  return run_depend(o);
}

// --- stats ------------------------------------------------------------------

struct StatsOpts {
  std::string sample;
  std::string norm;
  std::string rules;
  bool as_json = false;
};

int run_stats(const StatsOpts& o) {
  std::ifstream in(o.sample);
  if (!in) throw ValidationError(o.sample + ": cannot open file");
  ContributionResult r;
  if (!o.rules.empty()) {
    if (o.norm.empty()) throw ValidationError("--rules needs --norm");
    r = contribution_pipeline(load_events_csv(in), load_rules(read_json_file(o.rules)), Rational(0),
                              parse_rational(o.norm));
  } else {
    Sample s = load_sample_csv(in);
    if (!o.norm.empty()) {
      const Rational n = parse_rational(o.norm);
      for (auto& [id, x] : s)
        x = {normalize_attribute(x.t, 0, n), normalize_attribute(x.i, 0, n), normalize_attribute(x.f, 0, n)};
    }
    r = summarize_sample(std::move(s));
  }
  if (o.as_json) {
    json members = json::array();
    for (const auto& [id, x] : r.members) members.push_back(json{{"id", id}, {"value", to_json(x)}});
    std::cout << json{{"members", members}, {"mean", to_json(r.mean)}, {"verdict", verdict_json(r.verdict)}}.dump(2)
              << "\n";
    return 0;
  }
  for (const auto& [id, x] : r.members) std::cout << id << " " << x.str() << "\n";
  std::cout << "mean " << r.mean.str() << "\n";
  std::cout << paint_class(r.verdict.cls, statistics_phrase(r.verdict.cls)) << "\n";
  return 0;
}

// --- check ------------------------------------------------------------------

struct CheckOpts {
  std::string axioms;
  std::vector<std::string> inputs;
  std::string family = "minmax";
  std::string variant = "swap_tf";
  std::string kind;
  std::string psi = "-1.2";
  std::string omega = "1.2";
  std::size_t samples = 10000;
  std::uint64_t seed = kDefaultSeed;
};

std::string pass_fail(bool ok) { return ok ? paint("pass", "32") : paint("FAIL", "31"); }

int run_check(const CheckOpts& o) {
  if (o.axioms == "norms") {
    const ThresholdFrame frame = o.inputs.empty() ? make_frame(parse_rational(o.psi), parse_rational(o.omega))
                                                  : json_frame(read_json_file(o.inputs[0]));
    bool ok = true;
    for (const auto& rep : verify_family(parse_family(o.family), frame, o.samples, o.seed)) {
      for (const auto& a : rep.axioms) {
        std::cout << rep.subject << " " << a.name << ": " << pass_fail(a.pass) << " (" << a.checked << " cases)";
        if (!a.pass) std::cout << "; counterexample " << a.counterexample;
        std::cout << "\n";
      }
      ok = ok && rep.pass();
    }
    return ok ? 0 : kFinding;
  }
  if (o.inputs.size() != 1) throw ValidationError("--axioms " + o.axioms + " takes one input file");
  const json doc = read_json_file(o.inputs[0]);
  if (o.axioms == "structure") {
    const StructureSpec spec = load_structure_spec(doc);
    const auto s = generate_labeled_structure(spec.generators, spec.law, spec.modulus);
    std::cout << "{";
    bool first = true;
    for (const auto& [r, labels] : s) {
      std::cout << (first ? "" : ", ") << r << "_" << format_labels(labels);
      first = false;
    }
    std::cout << "}\n";
    return 0;
  }
  const ThresholdFrame frame = json_frame(doc);
  const auto family = load_family(doc, frame);
  if (o.axioms == "closure") {
    const StructureReport r = check_closure(family, parse_family(o.family), parse_variant(o.variant));
    std::cout << "closure: " << pass_fail(r.pass);
    if (!r.pass) std::cout << "; " << r.witness;
    std::cout << "\n";
    return r.pass ? 0 : kFinding;
  }
  if (o.axioms == "topology") {
    const std::string kind = o.kind.empty() ? doc.value("topology", std::string("over")) : o.kind;
    const TopologyReport r = check_topology(family, frame, parse_topology_kind(kind));
    for (const auto& [name, part] : {std::pair<const char*, const StructureReport*>{"a", &r.a}, {"b", &r.b}, {"c", &r.c}}) {
      std::cout << kind << " topology axiom (" << name << "): " << pass_fail(part->pass);
      if (!part->pass) std::cout << "; " << part->witness;
      std::cout << "\n";
    }
    return r.pass() ? 0 : kFinding;
  }
  throw ValidationError("unknown --axioms value '" + o.axioms + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Over-, under- and off-set calculus toolkit"};
  app.require_subcommand(1);

  ClassifyOpts co;
  auto* classify = app.add_subcommand("classify", "Classify a dataset as standard, over, under or off");
  classify->add_option("file", co.file, "JSON dataset")->required();
  classify->add_option("--kind", co.kind, "set, refined, complex, tripolar, graph, matrix, probability or label");
  classify->add_flag("--json", co.as_json, "Machine-readable report");

  CombineOpts cb;
  auto* combine = app.add_subcommand("combine", "Union, intersection or complement of collections");
  combine->add_option("files", cb.files, "One or two JSON collections")->required()->expected(1, 2);
  combine->add_option("--op", cb.op, "union, intersect or complement");
  combine->add_option("--family", cb.family, "minmax or bounded");
  combine->add_option("--complement-variant", cb.variant, "swap_tf, reflect_tf or reflect_all");
  combine->add_option("-o,--output", cb.output, "Output file (default stdout)");

  EvalOpts ev;
  auto* eval = app.add_subcommand("eval", "Evaluate an offnumber, a symbolic formula, a projection or bounds");
  eval->add_option("--number", ev.number, "Offnumber JSON file");
  eval->add_option("--at", ev.at, "Abscissa for --number");
  eval->add_option("--sym", ev.sym, "Symbolic formula, e.g. \"I_O -> F\"");
  eval->add_option("--order", ev.order, "default or alt");
  eval->add_option("--project", ev.project, "Degree of antagonism");
  eval->add_option("--triple", ev.triple, "Positive triple t,i,f for --project");
  eval->add_option("--omega-f", ev.omega_f, "Overlimit of F for --project");
  eval->add_option("--depend", ev.depend, "Dependence spec JSON file");
  eval->add_flag("--json", ev.as_json, "Machine-readable output");

  StatsOpts st;
  auto* stats = app.add_subcommand("stats", "Classify and average a sample");
  stats->add_option("sample", st.sample, "CSV: id,t,i,f or, with --rules, id,event,quantity")->required();
  stats->add_option("--norm", st.norm, "Upper threshold; values are divided by it");
  stats->add_option("--rules", st.rules, "Event rules JSON");
  stats->add_flag("--json", st.as_json, "Machine-readable report");

  CheckOpts ck;
  auto* check = app.add_subcommand("check", "Verify axioms, closure, topology or labeled structures");
  check->add_option("--axioms", ck.axioms, "norms, topology, closure or structure")->required();
  check->add_option("inputs", ck.inputs, "Input files");
  check->add_option("--family", ck.family, "minmax or bounded");
  check->add_option("--complement-variant", ck.variant, "swap_tf, reflect_tf or reflect_all");
  check->add_option("--kind", ck.kind, "Topology kind: over, under or off");
  check->add_option("--psi", ck.psi, "Underlimit for --axioms norms");
  check->add_option("--omega", ck.omega, "Overlimit for --axioms norms");
  check->add_option("--samples", ck.samples, "Random pairs per axiom");
  check->add_option("--seed", ck.seed, "Seed for the random grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classify) return run_classify(co);
    if (*combine) return run_combine(cb);
    if (*eval) return run_eval(ev);
    if (*stats) return run_stats(st);
    if (*check) return run_check(ck);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
