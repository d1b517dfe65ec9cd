#include "neutro/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace neutro {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) { throw ValidationError(where + ": " + msg); }

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

bool is_scalar(const json& j) { return j.is_number() || j.is_string(); }

bool flag(const json& j, const char* key, bool fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) bad(key, "expected true or false");
  return j.at(key).get<bool>();
}

}  // namespace

Rational json_rational(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer() || j.is_number_unsigned() || j.is_number_float()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const ValidationError& e) {
    bad(where, e.what());
  }
  bad(where, "expected a number or a \"p/q\" string, got " + j.dump());
}

namespace {

Piece json_piece(const json& j, const std::string& where) {
  if (is_scalar(j)) {
    const Rational x = json_rational(j, where);
    return Piece{x, false, x, false};
  }
  if (j.is_array()) {
    if (j.size() != 2) bad(where, "an interval needs exactly [lo, hi]");
    return Piece{json_rational(j[0], where + "[0]"), false, json_rational(j[1], where + "[1]"), false};
  }
  if (j.is_object())
    return Piece{json_rational(need(j, "lo", where), where + ".lo"), flag(j, "lo_open", false),
                 json_rational(need(j, "hi", where), where + ".hi"), flag(j, "hi_open", false)};
  bad(where, "expected a number, an interval or an object, got " + j.dump());
}

}  // namespace

SubsetValue json_value(const json& j, const std::string& where) {
  try {
    if (j.is_object() && j.contains("set")) {
      const json& s = j.at("set");
      if (!s.is_array() || s.empty()) bad(where, "\"set\" needs a nonempty array");
      std::vector<Rational> xs;
      for (std::size_t k = 0; k < s.size(); ++k) xs.push_back(json_rational(s[k], where + ".set[" + std::to_string(k) + "]"));
      return SubsetValue::points(xs);
    }
    if (j.is_array()) {
      if (j.empty()) bad(where, "empty value");
      if (j.size() == 2 && is_scalar(j[0]) && is_scalar(j[1])) return SubsetValue::from_pieces({json_piece(j, where)});
      std::vector<Piece> ps;
      for (std::size_t k = 0; k < j.size(); ++k) ps.push_back(json_piece(j[k], where + "[" + std::to_string(k) + "]"));
      return SubsetValue::from_pieces(std::move(ps));
    }
    return SubsetValue::from_pieces({json_piece(j, where)});
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    bad(where, msg);
  }
}

Triple json_triple(const json& j, const std::string& where) {
  if (j.is_array() && j.size() == 3)
    return {json_rational(j[0], where + "[0]"), json_rational(j[1], where + "[1]"), json_rational(j[2], where + "[2]")};
  if (j.is_object())
    return {json_rational(need(j, "T", where), where + ".T"), json_rational(need(j, "I", where), where + ".I"),
            json_rational(need(j, "F", where), where + ".F")};
  bad(where, "expected [t, i, f] or {\"T\", \"I\", \"F\"}");
}

json to_json(const Rational& r) {
  if (has_finite_decimal(r)) {
    const std::string s = to_string(r);
    const json j = json::parse(s);
    if (parse_rational(j.dump()) == r) return j;
  }
  return to_string(r);
}

json to_json(const SubsetValue& v) {
  if (v.is_crisp()) return to_json(v.crisp());
  auto piece = [](const Piece& p) -> json {
    if (!p.lo_open && !p.hi_open) return json::array({to_json(p.lo), to_json(p.hi)});
    return json{{"lo", to_json(p.lo)}, {"hi", to_json(p.hi)}, {"lo_open", p.lo_open}, {"hi_open", p.hi_open}};
  };
  if (v.pieces().size() == 1) return piece(v.pieces()[0]);
  bool points = true;
  for (const auto& p : v.pieces()) points = points && p.lo == p.hi;
  json arr = json::array();
  if (points) {
    for (const auto& p : v.pieces()) arr.push_back(to_json(p.lo));
    return json{{"set", arr}};
  }
  for (const auto& p : v.pieces()) arr.push_back(p.lo == p.hi ? to_json(p.lo) : piece(p));
  return arr;
}

json to_json(const Triple& t) { return json::array({to_json(t.t), to_json(t.i), to_json(t.f)}); }

ThresholdFrame json_frame(const json& doc) {
  if (!doc.is_object() || !doc.contains("frame")) return unit_frame();
  const json& f = doc.at("frame");
  auto three = [&](const char* key) {
    const json& v = need(f, key, "frame");
    const std::string where = std::string("frame.") + key;
    if (is_scalar(v)) {
      const Rational x = json_rational(v, where);
      return std::array<Rational, 3>{x, x, x};
    }
    if (!v.is_array() || v.size() != 3) bad(where, "expected a number or [T, I, F]");
    return std::array<Rational, 3>{json_rational(v[0], where + "[0]"), json_rational(v[1], where + "[1]"),
                                   json_rational(v[2], where + "[2]")};
  };
  const auto psi = three("psi");
  const auto omega = three("omega");
  return make_frame(psi[0], omega[0], psi[1], omega[1], psi[2], omega[2]);
}

json to_json(const ThresholdFrame& f) {
  return json{{"psi", json::array({to_json(f.psi[0]), to_json(f.psi[1]), to_json(f.psi[2])})},
              {"omega", json::array({to_json(f.omega[0]), to_json(f.omega[1]), to_json(f.omega[2])})}};
}

namespace {

Element json_element(const json& j, const std::string& id, const std::string& where) {
  if (j.is_array() && j.size() == 3)
    return Element{id, json_value(j[0], where + "[0]"), json_value(j[1], where + "[1]"), json_value(j[2], where + "[2]")};
  return Element{id, json_value(need(j, "T", where), where + ".T"), json_value(need(j, "I", where), where + ".I"),
                 json_value(need(j, "F", where), where + ".F")};
}

const json& object_at(const json& doc, const char* key, const std::string& where) {
  const json& j = need(doc, key, where);
  if (!j.is_object()) bad(where + "." + key, "expected an object keyed by id");
  return j;
}

}  // namespace

OffCollection load_collection(const json& elements, const ThresholdFrame& frame, const std::string& where) {
  if (!elements.is_object()) bad(where, "expected an object keyed by element id");
  OffCollection c(frame);
  for (const auto& [id, e] : elements.items()) {
    const std::string w = where + "." + id;
    try {
      c.add(json_element(e, id, w));
    } catch (const ValidationError& err) {
      const std::string msg = err.what();
      if (msg.rfind(where, 0) == 0) throw;
      bad(w, msg);
    }
  }
  return c;
}

OffCollection load_collection(const json& doc) {
  return load_collection(need(doc, "elements", "document"), json_frame(doc), "elements");
}

json to_json(const OffCollection& c) {
  json elements = json::object();
  for (const auto& [id, e] : c.elements())
    elements[id] = json{{"T", to_json(e.t)}, {"I", to_json(e.i)}, {"F", to_json(e.f)}};
  return json{{"frame", to_json(c.frame())}, {"elements", elements}};
}

Workspace load_workspace(const json& doc) {
  Workspace ws{json_frame(doc), {}, {}};
  if (doc.contains("elements")) ws.collections.emplace("main", load_collection(doc.at("elements"), ws.frame, "elements"));
  if (doc.contains("collections"))
    for (const auto& [name, c] : object_at(doc, "collections", "document").items())
      ws.collections.emplace(name, load_collection(need(c, "elements", "collections." + name), ws.frame,
                                                   "collections." + name + ".elements"));
  if (doc.contains("scale")) ws.scales.emplace("main", load_scale(doc));
  return ws;
}

namespace {

std::vector<SubsetValue> value_list(const json& j, const std::string& where) {
  std::vector<SubsetValue> out;
  if (!j.is_array()) bad(where, "expected an array of subcomponents");
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(json_value(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

RefinedForm parse_form(const std::string& s, const std::string& where) {
  if (s == "neutrosophic") return RefinedForm::neutrosophic;
  if (s == "fuzzy") return RefinedForm::fuzzy;
  if (s == "intuitionistic") return RefinedForm::intuitionistic;
  bad(where, "unknown refined form '" + s + "'");
}

}  // namespace

std::vector<RefinedElement> load_refined(const json& doc, const ThresholdFrame& frame) {
  const std::string form = doc.value("form", std::string("neutrosophic"));
  const bool off = flag(doc, "off", true);
  std::vector<RefinedElement> out;
  for (const auto& [id, e] : object_at(doc, "elements", "document").items()) {
    const std::string w = "elements." + id;
    RefinedElement r;
    r.id = id;
    r.form = parse_form(e.value("form", form), w + ".form");
    r.off_variant = flag(e, "off", off);
    r.ts = value_list(need(e, "T", w), w + ".T");
    if (e.contains("I")) r.is = value_list(e.at("I"), w + ".I");
    if (e.contains("F")) r.fs = value_list(e.at("F"), w + ".F");
    validate_refined(r, frame);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ComplexElement> load_complex(const json& doc, const ThresholdFrame& frame) {
  std::vector<ComplexElement> out;
  for (const auto& [id, e] : object_at(doc, "elements", "document").items()) {
    ComplexElement c;
    c.id = id;
    for (Channel ch : kChannels) {
      const std::string w = "elements." + id + "." + channel_name(ch);
      const json& part = need(e, channel_name(ch), "elements." + id);
      c.amp[static_cast<int>(ch)] = json_value(need(part, "amp", w), w + ".amp");
      c.phase[static_cast<int>(ch)] = json_value(need(part, "phase", w), w + ".phase");
    }
    validate_complex(c, frame);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

Tif json_tif(const json& j, const std::string& where) {
  const Element e = json_element(j, "", where);
  return {e.t, e.i, e.f};
}

std::vector<Tif> tif_list(const json& j, const std::string& where) {
  // A list of triples, as opposed to one triple whose T happens to be an interval.
  auto is_tif = [](const json& x) { return (x.is_object() && x.contains("T")) || (x.is_array() && x.size() == 3); };
  if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), is_tif)) {
    std::vector<Tif> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(json_tif(j[k], where + "[" + std::to_string(k) + "]"));
    return out;
  }
  return {json_tif(j, where)};
}

}  // namespace

PolarElement json_polar(const json& j, const std::string& id, const std::string& where) {
  if (!j.is_object() && !j.is_array()) bad(where, "expected an element");
  if (j.is_array() || j.contains("T")) return make_plain(id, json_tif(j, where));
  PolarElement e;
  e.id = id;
  e.off_variant = flag(j, "off", true);
  e.positive = tif_list(need(j, "pos", where), where + ".pos");
  e.negative = tif_list(need(j, "neg", where), where + ".neg");
  if (j.contains("neu")) e.neutral = json_tif(j.at("neu"), where + ".neu");
  if (j.contains("poles")) {
    const json& p = j.at("poles");
    if (!p.is_array()) bad(where + ".poles", "expected an array");
    for (std::size_t k = 0; k < p.size(); ++k) e.poles.push_back(json_rational(p[k], where + ".poles"));
    e.kind = Polarity::multipolar;
  } else {
    e.kind = e.neutral ? Polarity::tripolar : Polarity::bipolar;
  }
  return e;
}

std::vector<PolarElement> load_polar(const json& doc) {
  std::vector<PolarElement> out;
  for (const auto& [id, e] : object_at(doc, "elements", "document").items())
    out.push_back(json_polar(e, id, "elements." + id));
  return out;
}

NeutroGraph load_graph(const json& doc) {
  NeutroGraph g;
  for (const auto& [id, v] : object_at(doc, "vertices", "document").items())
    g.add_vertex(json_polar(v, id, "vertices." + id));
  if (doc.contains("edges")) {
    const json& es = doc.at("edges");
    if (!es.is_array()) bad("edges", "expected an array");
    for (std::size_t k = 0; k < es.size(); ++k) {
      const std::string w = "edges[" + std::to_string(k) + "]";
      const json& e = es[k];
      const std::string from = need(e, "from", w).get<std::string>();
      const std::string to = need(e, "to", w).get<std::string>();
      g.add_edge(from, to, json_polar(need(e, "value", w), from + "-" + to, w + ".value"));
    }
  }
  return g;
}

NeutroMatrix load_matrix(const json& doc) {
  NeutroMatrix m;
  const json& rows = need(doc, "rows", "document");
  if (!rows.is_array() || rows.empty()) bad("rows", "expected a nonempty array of rows");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array()) bad("rows[" + std::to_string(r) + "]", "expected an array of cells");
    std::vector<MatrixCell> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::string w = "rows[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      const json& cell = rows[r][c];
      const Rational value = json_rational(need(cell, "value", w), w + ".value");
      row.push_back({value, json_polar(need(cell, "label", w), "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")",
                                       w + ".label")});
    }
    if (!m.cells.empty() && row.size() != m.cols()) bad("rows[" + std::to_string(r) + "]", "rows have different lengths");
    m.cells.push_back(std::move(row));
  }
  return m;
}

std::vector<OffProbability> load_probability(const json& doc) {
  std::vector<OffProbability> out;
  for (const auto& [id, e] : object_at(doc, "events", "document").items()) {
    const std::string w = "events." + id;
    out.push_back({id, json_value(need(e, "occurs", w), w + ".occurs"), json_value(need(e, "indet", w), w + ".indet"),
                   json_value(need(e, "not", w), w + ".not")});
  }
  return out;
}

std::vector<RefinedOffProbability> load_refined_probability(const json& doc) {
  std::vector<RefinedOffProbability> out;
  for (const auto& [id, e] : object_at(doc, "events", "document").items()) {
    const std::string w = "events." + id;
    out.push_back({id, value_list(need(e, "occurs", w), w + ".occurs"), value_list(need(e, "indet", w), w + ".indet"),
                   value_list(need(e, "not", w), w + ".not")});
  }
  return out;
}

LabelScale load_scale(const json& doc) {
  const json& s = need(doc, "scale", "document");
  const json& labels = need(s, "labels", "scale");
  if (!labels.is_array()) bad("scale.labels", "expected an array of names");
  std::vector<std::string> names;
  for (const auto& l : labels) names.push_back(l.get<std::string>());
  return make_label_scale(std::move(names), s.value("below", 0), s.value("above", 0));
}

std::vector<LabelElement> load_label_elements(const json& doc) {
  std::vector<LabelElement> out;
  for (const auto& [id, e] : object_at(doc, "elements", "document").items()) {
    LabelElement le{id, {}, {}, {}};
    for (Channel c : kChannels) {
      const std::string w = "elements." + id + "." + channel_name(c);
      const json& idx = need(e, channel_name(c), "elements." + id);
      std::set<int>& target = c == Channel::T ? le.t : c == Channel::I ? le.i : le.f;
      if (idx.is_number_integer()) {
        target.insert(idx.get<int>());
      } else if (idx.is_array()) {
        for (const auto& k : idx) {
          if (!k.is_number_integer()) bad(w, "label indices must be integers");
          target.insert(k.get<int>());
        }
      } else {
        bad(w, "expected a label index or an array of indices");
      }
    }
    out.push_back(std::move(le));
  }
  return out;
}

OffnumberSpec load_offnumber(const json& doc) {
  const ThresholdFrame frame = json_frame(doc);
  const json& a = need(doc, "a", "document");
  if (!a.is_array()) bad("a", "expected an array of abscissae");
  std::vector<Rational> xs;
  for (std::size_t k = 0; k < a.size(); ++k) xs.push_back(json_rational(a[k], "a[" + std::to_string(k) + "]"));
  const Rational w = json_rational(need(doc, "w", "document"), "w");
  const Rational u = json_rational(need(doc, "u", "document"), "u");
  const Rational y = json_rational(need(doc, "y", "document"), "y");
  OffnumberSpec s;
  if (xs.size() == 3) {
    s.tri = make_triangular(xs[0], xs[1], xs[2], w, u, y, frame);
  } else if (xs.size() == 4) {
    s.trapezoidal = true;
    s.trap = make_trapezoidal(xs[0], xs[1], xs[2], xs[3], w, u, y, frame);
  } else {
    bad("a", "expected 3 (triangular) or 4 (trapezoidal) abscissae");
  }
  return s;
}

StructureSpec load_structure_spec(const json& doc) {
  StructureSpec s;
  s.modulus = need(doc, "modulus", "document").get<long long>();
  const std::string op = doc.value("op", std::string("add"));
  if (op == "add") s.law.op = LabeledLaw::Op::add;
  else if (op == "mul") s.law.op = LabeledLaw::Op::mul;
  else bad("op", "expected add or mul");
  if (doc.contains("combine")) {
    const json& c = doc.at("combine");
    if (!c.is_array() || c.size() != 3) bad("combine", "expected three of min/max");
    for (int k = 0; k < 3; ++k) {
      const std::string name = c[k].get<std::string>();
      if (name == "min") s.law.combine[k] = Combiner::min;
      else if (name == "max") s.law.combine[k] = Combiner::max;
      else bad("combine", "expected min or max, got '" + name + "'");
    }
  }
  const json& gens = need(doc, "generators", "document");
  if (!gens.is_array()) bad("generators", "expected an array");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string w = "generators[" + std::to_string(k) + "]";
    LabeledResidue r;
    r.residue = need(gens[k], "residue", w).get<long long>();
    r.labels.insert(json_triple(need(gens[k], "label", w), w + ".label"));
    s.generators.push_back(std::move(r));
  }
  return s;
}

std::vector<OffCollection> load_family(const json& doc, const ThresholdFrame& frame) {
  const json& fam = need(doc, "family", "document");
  if (!fam.is_array()) bad("family", "expected an array of collections");
  std::vector<OffCollection> out;
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const std::string w = "family[" + std::to_string(k) + "]";
    const json& member = fam[k].is_object() && fam[k].contains("elements") ? fam[k].at("elements") : fam[k];
    out.push_back(load_collection(member, frame, w));
  }
  return out;
}

std::vector<ContributionRule> load_rules(const json& doc) {
  const json& list = doc.is_object() && doc.contains("rules") ? doc.at("rules") : doc;
  if (!list.is_array()) bad("rules", "expected an array of {event, points_t, count_i, count_f}");
  std::vector<ContributionRule> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string w = "rules[" + std::to_string(k) + "]";
    const json& r = list[k];
    ContributionRule rule;
    rule.event = need(r, "event", w).get<std::string>();
    if (r.contains("points_t")) rule.points_t = json_rational(r.at("points_t"), w + ".points_t");
    if (r.contains("count_i")) rule.count_i = json_rational(r.at("count_i"), w + ".count_i");
    if (r.contains("count_f")) rule.count_f = json_rational(r.at("count_f"), w + ".count_f");
    out.push_back(std::move(rule));
  }
  return out;
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  return rows;
}

namespace {

std::vector<std::vector<std::string>> csv_body(std::istream& in, const std::vector<std::string>& header) {
  auto rows = read_csv(in);
  if (rows.empty()) bad("csv", "empty file");
  if (rows[0] != header) {
    std::string want;
    for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
    bad("csv line 1", "expected header " + want);
  }
  rows.erase(rows.begin());
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k].size() != header.size())
      bad("csv line " + std::to_string(k + 2), "expected " + std::to_string(header.size()) + " fields");
  return rows;
}

Rational csv_rational(const std::string& s, std::size_t line) {
  try {
    return parse_rational(s);
  } catch (const ValidationError& e) {
    bad("csv line " + std::to_string(line), e.what());
  }
}

}  // namespace

Sample load_sample_csv(std::istream& in) {
  Sample out;
  const auto rows = csv_body(in, {"id", "t", "i", "f"});
  for (std::size_t k = 0; k < rows.size(); ++k)
    out.emplace_back(rows[k][0], Triple{csv_rational(rows[k][1], k + 2), csv_rational(rows[k][2], k + 2),
                                        csv_rational(rows[k][3], k + 2)});
  return out;
}

std::vector<ContributionEvent> load_events_csv(std::istream& in) {
  std::vector<ContributionEvent> out;
  const auto rows = csv_body(in, {"id", "event", "quantity"});
  for (std::size_t k = 0; k < rows.size(); ++k) out.push_back({rows[k][0], rows[k][1], csv_rational(rows[k][2], k + 2)});
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace neutro
