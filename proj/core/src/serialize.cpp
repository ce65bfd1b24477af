#include "bicover/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bicover {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

json field_to_jv(const Field& f) {
  json j;
  switch (f.kind()) {
    case FieldKind::Prime:
      j["kind"] = "prime";
      j["p"] = f.p();
      break;
    case FieldKind::Extension:
      j["kind"] = "extension";
      j["p"] = f.p();
      j["r"] = f.degree();
      j["modulus"] = f.modulus();
      break;
    case FieldKind::Rational:
      j["kind"] = "rational";
      break;
    case FieldKind::Tower: {
      j["kind"] = "tower";
      json adj = json::array();
      for (const auto& d : f.adjoined()) adj.push_back(rational_to_string(d));
      j["adjoined"] = std::move(adj);
      break;
    }
  }
  return j;
}

FieldPtr field_from_jv(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "prime") return Field::prime(j.at("p").get<std::int64_t>());
  if (kind == "extension") {
    if (j.contains("modulus")) {
      return Field::extension(j.at("p").get<std::int64_t>(), j.at("r").get<int>(),
                              j.at("modulus").get<std::vector<std::int64_t>>());
    }
    return Field::extension(j.at("p").get<std::int64_t>(), j.at("r").get<int>());
  }
  if (kind == "rational") return Field::rationals();
  if (kind == "tower") {
    std::vector<Rational> adjoined;
    for (const auto& item : j.at("adjoined")) {
      if (item.is_string()) {
        adjoined.push_back(rational_from_string(item.get<std::string>()));
      } else {
        adjoined.push_back(Rational(item.get<std::int64_t>()));
      }
    }
    return Field::tower(adjoined);
  }
  throw Error(Errc::ParseError, "unknown field kind '" + kind + "'");
}

json elem_to_jv(const FieldElem& e) {
  const Field& f = *e.field();
  switch (f.kind()) {
    case FieldKind::Prime: return e.icoords()[0];
    case FieldKind::Extension: return e.icoords();
    case FieldKind::Rational: return rational_to_string(e.qcoords()[0]);
    case FieldKind::Tower: {
      json arr = json::array();
      for (const auto& c : e.qcoords()) arr.push_back(rational_to_string(c));
      return arr;
    }
  }
  throw Error(Errc::InternalInconsistency, "unknown field kind");
}

FieldElem elem_from_jv(const FieldPtr& f, const json& j) {
  switch (f->kind()) {
    case FieldKind::Prime:
      return f->from_integer(j.get<std::int64_t>());
    case FieldKind::Extension:
      return f->make(j.get<std::vector<std::int64_t>>());
    case FieldKind::Rational:
      if (j.is_string()) return f->from_rational(rational_from_string(j.get<std::string>()));
      return f->from_integer(j.get<std::int64_t>());
    case FieldKind::Tower: {
      std::vector<Rational> coords;
      for (const auto& item : j) {
        if (item.is_string()) {
          coords.push_back(rational_from_string(item.get<std::string>()));
        } else {
          coords.push_back(Rational(item.get<std::int64_t>()));
        }
      }
      return f->make(std::move(coords));
    }
  }
  throw Error(Errc::InternalInconsistency, "unknown field kind");
}

json matrix_to_jv(const SignMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"order", m.order()}, {"rows", std::move(rows)}};
}

SignMatrix matrix_from_jv(const json& j) {
  const int n = j.at("order").get<int>();
  SignMatrix m(n);
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != n) throw Error(Errc::ParseError, "row count mismatch");
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n) throw Error(Errc::ParseError, "row length mismatch");
    for (int k = 0; k < n; ++k) m.set(i, k, row[static_cast<std::size_t>(k)].get<int>());
  }
  return m;
}

json cover_to_jv(const Cover& c) {
  std::vector<BipartiteGraph> sorted = c.graphs;
  std::sort(sorted.begin(), sorted.end());
  json graphs = json::array();
  for (const auto& g : sorted) {
    graphs.push_back(json{{"A", g.a()}, {"B", g.b()}});
  }
  return json{{"n", c.n}, {"graphs", std::move(graphs)}};
}

Cover cover_from_jv(const json& j) {
  Cover c;
  c.n = j.at("n").get<int>();
  for (const auto& g : j.at("graphs")) {
    c.graphs.emplace_back(g.at("A").get<std::vector<int>>(), g.at("B").get<std::vector<int>>());
  }
  return c;
}

json circuit_to_jv(const Circuit& c) {
  json gates = json::array();
  for (const auto& gate : c.gates) {
    json forms = json::array();
    for (const auto& form : gate) {
      json coeffs = json::array();
      for (int i = 0; i < form.n(); ++i) coeffs.push_back(elem_to_jv(form.coeff(i)));
      forms.push_back(json{{"coeffs", std::move(coeffs)}, {"const", elem_to_jv(form.constant())}});
    }
    gates.push_back(json{{"forms", std::move(forms)}});
  }
  return json{{"field", field_to_jv(*c.field)}, {"n", c.n}, {"gates", std::move(gates)}};
}

Circuit circuit_from_jv(const json& j) {
  Circuit c;
  c.field = field_from_jv(j.at("field"));
  c.n = j.at("n").get<int>();
  for (const auto& gate : j.at("gates")) {
    std::vector<LinearForm> forms;
    for (const auto& form : gate.at("forms")) {
      std::vector<FieldElem> coeffs;
      for (const auto& item : form.at("coeffs")) coeffs.push_back(elem_from_jv(c.field, item));
      if (static_cast<int>(coeffs.size()) != c.n) {
        throw Error(Errc::ParseError, "form coefficient count mismatch");
      }
      FieldElem constant =
          form.contains("const") ? elem_from_jv(c.field, form.at("const")) : c.field->zero();
      forms.emplace_back(c.field, std::move(coeffs), std::move(constant));
    }
    c.gates.push_back(std::move(forms));
  }
  return c;
}

const char* condition_name(GoodCondition c) {
  switch (c) {
    case GoodCondition::RowParity: return "row-parity";
    case GoodCondition::CommonSupport: return "common-support";
    case GoodCondition::Orthogonality: return "orthogonality";
  }
  return "?";
}

json bound_side_to_jv(const BoundSide& s) {
  return json{{"value", s.value}, {"model", bound_model_name(s.model)}, {"for_all_n", s.for_all_n}};
}

}  // namespace

std::string field_to_json(const Field& f) { return dump(field_to_jv(f)); }

FieldPtr field_from_json(std::string_view text) { return field_from_jv(parse(text)); }

std::string elem_to_json(const FieldElem& e) { return dump(elem_to_jv(e)); }

FieldElem elem_from_json(const FieldPtr& f, std::string_view text) {
  return elem_from_jv(f, parse(text));
}

std::string matrix_to_json(const SignMatrix& m) { return dump(matrix_to_jv(m)); }

SignMatrix matrix_from_json(std::string_view text) { return matrix_from_jv(parse(text)); }

std::string matrix_to_text(const SignMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

SignMatrix matrix_from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<int> row;
    int v = 0;
    while (ls >> v) row.push_back(v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(Errc::ParseError, "empty matrix text");
  SignMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw Error(Errc::ParseError, "matrix text is not square");
    }
    for (int j = 0; j < n; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

std::string verdict_to_json(const GoodVerdict& v) {
  json failures = json::array();
  for (const auto& f : v.failures) {
    json item{{"condition", condition_name(f.condition)}, {"row", f.row_a}};
    if (f.row_b >= 0) item["row_b"] = f.row_b;
    failures.push_back(std::move(item));
  }
  return dump(json{{"ok", v.ok}, {"failures", std::move(failures)}});
}

std::string cover_to_json(const Cover& c) { return dump(cover_to_jv(c)); }

Cover cover_from_json(std::string_view text) { return cover_from_jv(parse(text)); }

std::string report_to_json(const MultiplicityReport& r, bool full) {
  json j{{"mode", r.mode.str()}, {"n", r.n}, {"ok", r.ok}};
  json violations = json::array();
  for (const auto& e : r.violations) violations.push_back(json::array({e.u, e.v}));
  j["violations"] = std::move(violations);
  if (full) {
    json counts = json::array();
    for (int u = 1; u <= r.n; ++u) {
      for (int v = u + 1; v <= r.n; ++v) {
        counts.push_back(json::array({u, v, r.count(u, v)}));
      }
    }
    j["edge_counts"] = std::move(counts);
  }
  return dump(j);
}

std::string circuit_to_json(const Circuit& c) { return dump(circuit_to_jv(c)); }

Circuit circuit_from_json(std::string_view text) { return circuit_from_jv(parse(text)); }

std::string substitution_to_json(const HomSubstitution& s) {
  json rows = json::array();
  for (const auto& row : s.rows) {
    json r = json::array();
    for (const auto& c : row) r.push_back(elem_to_jv(c));
    rows.push_back(std::move(r));
  }
  return dump(json{
      {"field", field_to_jv(*s.field)}, {"n", s.n}, {"r", s.r}, {"rows", std::move(rows)}});
}

HomSubstitution substitution_from_json(std::string_view text) {
  const json j = parse(text);
  HomSubstitution s;
  s.field = field_from_jv(j.at("field"));
  s.n = j.at("n").get<int>();
  s.r = j.at("r").get<int>();
  for (const auto& row : j.at("rows")) {
    std::vector<FieldElem> r;
    for (const auto& item : row) r.push_back(elem_from_jv(s.field, item));
    s.rows.push_back(std::move(r));
  }
  return s;
}

std::string diagnostics_to_json(const Gf2Diagnostics& d) {
  json j;
  j["weights_mod4"] = d.weights_mod4;
  j["weight_ok"] = d.weight_ok;
  json pairs = json::array();
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    pairs.push_back(json::array(
        {d.pairs[i][0], d.pairs[i][1], d.cross_parity[i], d.cross_ok[i] ? 1 : 0}));
  }
  j["cross"] = std::move(pairs);
  j["odd_count"] = d.odd_count;
  j["even_count"] = d.even_count;
  switch (d.dependency) {
    case Gf2Diagnostics::Dependency::Independent: j["dependency"] = "independent"; break;
    case Gf2Diagnostics::Dependency::EvenSumOnly: j["dependency"] = "even-sum-only"; break;
    case Gf2Diagnostics::Dependency::Other: j["dependency"] = "other"; break;
  }
  j["alpha"] = d.alpha;
  j["beta"] = d.beta;
  j["claim_ok"] = d.claim_ok;
  j["ok"] = d.ok;
  return dump(j);
}

std::string bounds_to_json(const BoundsEntry& e) {
  json j;
  j["family"] = e.family;
  j["n"] = e.n;
  j["lower"] = bound_side_to_jv(e.lower);
  j["lower_io"] = e.lower_io ? bound_side_to_jv(*e.lower_io) : json(nullptr);
  j["upper"] = bound_side_to_jv(e.upper);
  j["upper_io"] = e.upper_io ? bound_side_to_jv(*e.upper_io) : json(nullptr);
  j["fallback_upper"] = bound_side_to_jv(e.fallback_upper);
  j["citation"] = e.citation;
  return dump(j);
}

std::string equidistant_to_json(const FieldPtr& f, const std::optional<EquidistantSolution>& sol) {
  json j;
  j["field"] = field_to_jv(*f);
  j["found"] = sol.has_value();
  if (sol) {
    json ys = json::array();
    for (const auto& y : sol->ys) {
      json v = json::array();
      for (const auto& c : y) v.push_back(elem_to_jv(c));
      ys.push_back(std::move(v));
    }
    j["ys"] = std::move(ys);
  } else {
    j["ys"] = json(nullptr);
  }
  return dump(j);
}

std::string checkpoint_to_json(const CheckpointState& s) {
  json j;
  j["task"] = s.task;
  j["params"] = parse(s.params_json);
  j["completed_prefixes"] = std::vector<std::uint64_t>(s.completed.begin(), s.completed.end());
  j["best"] = s.best ? json(*s.best) : json(nullptr);
  return dump(j);
}

CheckpointState checkpoint_from_json(std::string_view text) {
  const json j = parse(text);
  CheckpointState s;
  s.task = j.at("task").get<std::string>();
  s.params_json = j.at("params").dump();
  for (const auto& b : j.at("completed_prefixes")) s.completed.insert(b.get<std::uint64_t>());
  if (!j.at("best").is_null()) s.best = j.at("best").get<std::uint64_t>();
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::BadArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::BadArgument, "cannot write '" + path + "'");
  out << content;
}

}  // namespace bicover
