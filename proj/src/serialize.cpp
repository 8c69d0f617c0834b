#include "workbench/serialize.hpp"

#include <set>

#include "workbench/error.hpp"

namespace workbench {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Int> ints_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected an array of integers");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

Json ints_to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

Json degree_to_json(const ModuleDegree& d) {
  Json w = Json::array();
  for (const auto& m : d.w) w.push_back(to_json(m));
  return Json{{"orders", ints_to_json(d.orders)}, {"z", to_json(d.z)}, {"w", w}};
}

ModuleDegree degree_from_json(const Json& j, const CrossedRing& ring) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "a module degree must be an object");
  auto orders = ints_from_json(field(j, "orders"));
  IntMatrix z;
  if (j.contains("z")) z = matrix_from_json(j.at("z"));
  std::vector<IntMatrix> w;
  if (j.contains("w")) {
    if (!j.at("w").is_array()) throw Error(ErrorCode::InvalidInput, "'w' must be an array of matrices");
    for (const auto& m : j.at("w")) w.push_back(matrix_from_json(m));
  }
  // empty matrices parse as 0x0; keep the shape consistent for zero degrees
  if (orders.empty()) return AModObject::make_degree(ring, {});
  return AModObject::make_degree(ring, std::move(orders), std::move(z), std::move(w));
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::InvalidInput, "'" + j.get<std::string>() + "' is not an integer");
    return v;
  }
  throw Error(ErrorCode::InvalidInput, "expected an integer, got " + j.dump());
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "a matrix must be an array of rows");
  if (j.empty()) return {};
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error(ErrorCode::InvalidInput, "matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
  }
  return m;
}

Json to_json(const CycPoly& a) {
  return Json{{"n", a.n()}, {"N", int_to_json(a.localization())}, {"num", ints_to_json(a.num())}, {"den", int_to_json(a.den())}};
}

CycPoly cycpoly_from_json(const Json& j) {
  return CycPoly(field(j, "n").get<unsigned>(), int_from_json(field(j, "N")), ints_from_json(field(j, "num")),
                 int_from_json(field(j, "den")));
}

Json to_json(const CycEltN& a) {
  return Json{{"n", a.n()}, {"N", int_to_json(a.localization())}, {"num", ints_to_json(a.num())}, {"den", int_to_json(a.den())}};
}

CycEltN cycelt_from_json(const Json& j) {
  return CycEltN(field(j, "n").get<unsigned>(), int_from_json(field(j, "N")), ints_from_json(field(j, "num")),
                 int_from_json(field(j, "den")));
}

Json to_json(const FinAbGroup& g) {
  return Json{{"factors", ints_to_json(g.factors)},
              {"free_rank", g.free_rank},
              {"order", g.is_finite() ? int_to_json(g.order()) : Json("infinite")},
              {"text", g.to_string()}};
}

FinAbGroup finabgroup_from_json(const Json& j) {
  FinAbGroup g;
  g.factors = ints_from_json(field(j, "factors"));
  g.free_rank = field(j, "free_rank").get<std::size_t>();
  return g;
}

Json to_json(const SuiteReport& r) {
  Json j{{"suite", r.suite}, {"max_n", r.bound},   {"seed", r.seed},
         {"passed", r.passed}, {"items", r.items}, {"checked", r.checked}};
  j["counterexample"] = r.counterexample.empty() ? Json(nullptr) : Json(r.counterexample);
  return j;
}

SuiteReport suite_report_from_json(const Json& j) {
  SuiteReport r;
  r.suite = field(j, "suite").get<std::string>();
  r.bound = field(j, "max_n").get<unsigned>();
  r.seed = field(j, "seed").get<std::uint64_t>();
  r.passed = field(j, "passed").get<bool>();
  r.items = field(j, "items").get<std::size_t>();
  r.checked = field(j, "checked").get<std::size_t>();
  if (!field(j, "counterexample").is_null()) r.counterexample = j.at("counterexample").get<std::string>();
  return r;
}

Json to_json(const UCTOrderResult& r) {
  Json degrees = Json::array();
  for (int d = 0; d < 2; ++d)
    degrees.push_back(Json{{"degree", d},
                           {"hom", to_json(r.degree[d].hom)},
                           {"ext", to_json(r.degree[d].ext)},
                           {"kk_order", int_to_json(r.degree[d].kk_order)}});
  return Json{{"degrees", degrees}};
}

UCTOrderResult uct_result_from_json(const Json& j) {
  UCTOrderResult r;
  const auto& degrees = field(j, "degrees");
  if (!degrees.is_array() || degrees.size() != 2) throw Error(ErrorCode::InvalidInput, "expected two degrees");
  for (int d = 0; d < 2; ++d) {
    r.degree[d].hom = finabgroup_from_json(field(degrees[d], "hom"));
    r.degree[d].ext = finabgroup_from_json(field(degrees[d], "ext"));
    r.degree[d].kk_order = int_from_json(field(degrees[d], "kk_order"));
  }
  return r;
}

Json to_json(const ValidationReport& r) {
  Json j{{"ok", r.ok}};
  if (!r.ok) {
    j["degree"] = r.degree;
    j["violation"] = r.violation;
  }
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "a group file must hold a JSON object");
  if (j.contains("preset")) {
    if (!j.at("preset").is_string()) throw Error(ErrorCode::InvalidInput, "'preset' must be a string");
    return preset_group(j.at("preset").get<std::string>());
  }
  const auto& table_json = field(j, "table");
  if (!table_json.is_array()) throw Error(ErrorCode::InvalidInput, "'table' must be an array of rows");
  std::vector<std::vector<long long>> table;
  for (const auto& row : table_json) {
    if (!row.is_array()) throw Error(ErrorCode::InvalidInput, "'table' rows must be arrays");
    std::vector<long long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(ErrorCode::InvalidInput, "table entries must be integers");
      r.push_back(x.get<long long>());
    }
    table.push_back(std::move(r));
  }
  if (j.contains("order")) {
    const auto& o = j.at("order");
    if (!o.is_number_integer() || o.get<long long>() != static_cast<long long>(table.size()))
      throw Error(ErrorCode::InvalidInput, "'order' does not match the table size " + std::to_string(table.size()));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw Error(ErrorCode::InvalidInput, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return group_from_table(table, std::move(labels));
}

Json group_info_json(const FiniteGroup& g, const std::vector<CyclicClass>& classes) {
  Json elements = Json::array();
  for (int a = 0; a < g.order(); ++a) elements.push_back(Json{{"label", g.label(a)}, {"order", g.element_order(a)}});
  Json cls = Json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    Json reps = Json::array();
    for (int r : c.coset_reps) reps.push_back(g.label(r));
    cls.push_back(Json{{"index", i},
                       {"n", c.representative.n},
                       {"generator", g.label(c.representative.generator)},
                       {"class_size", c.class_size},
                       {"normalizer_order", c.normalizer.size()},
                       {"weyl_order", c.weyl_order},
                       {"coset_representatives", reps},
                       {"weyl_units", c.weyl_units},
                       {"weyl_table", c.weyl_table}});
  }
  return Json{{"group", g.name()},
              {"order", g.order()},
              {"abelian", g.is_abelian()},
              {"elements", elements},
              {"cyclic_classes", cls}};
}

std::string summand_summary(const TargetCategoryReport& r) {
  const auto flat = r.flattened();
  std::vector<std::string> labels;
  for (const auto& f : flat) labels.push_back(r.summand(f).label());
  const std::string count = std::to_string(flat.size()) + (flat.size() == 1 ? " summand" : " summands");
  bool same = true;
  for (const auto& l : labels) same = same && l == labels.front();
  if (same && !labels.empty()) return count + " " + labels.front();
  std::string s = count + ":";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : " ") + labels[i];
  return s;
}

Json to_json(const TargetCategoryReport& r) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& e = r.classes[i];
    Json summands = Json::array();
    for (const auto& s : e.summands)
      summands.push_back(Json{{"kind", summand_kind_name(s.kind)},
                              {"label", s.label()},
                              {"d", s.d},
                              {"multiplicity", s.multiplicity},
                              {"rank", s.rank()},
                              {"provenance", s.provenance}});
    classes.push_back(Json{{"index", i},
                           {"n", e.cls.representative.n},
                           {"class_size", e.cls.class_size},
                           {"weyl_order", e.cls.weyl_order},
                           {"weyl_units", e.ring->weyl_units},
                           {"ring", e.ring->label()},
                           {"rank", e.ring->rank()},
                           {"summands", summands}});
  }
  Json flat = Json::array();
  const auto f = r.flattened();
  for (std::size_t i = 0; i < f.size(); ++i)
    flat.push_back(Json{{"index", i},
                        {"class", f[i].class_index},
                        {"summand", f[i].summand_index},
                        {"copy", f[i].copy},
                        {"label", r.summand(f[i]).label()}});
  return Json{{"group", r.group_name},
              {"order", r.group_order},
              {"N", int_to_json(r.N)},
              {"classes", classes},
              {"flattened", flat},
              {"total_summands", r.total_summands()},
              {"summary", summand_summary(r)}};
}

Json module_to_json(const AModObject& m, std::size_t summand) {
  Json j{{"summand", summand}};
  if (m.degree[0].size() > 0) j["degree0"] = degree_to_json(m.degree[0]);
  if (m.degree[1].size() > 0) j["degree1"] = degree_to_json(m.degree[1]);
  return j;
}

AModObject module_from_json(const Json& j, const RingPtr& ring) {
  AModObject m = AModObject::zero(ring);
  if (j.contains("degree0")) m.degree[0] = degree_from_json(j.at("degree0"), *ring);
  if (j.contains("degree1")) m.degree[1] = degree_from_json(j.at("degree1"), *ring);
  return m;
}

AModFamily family_from_json(const Json& j, const TargetCategoryReport& report) {
  Json list;
  if (j.is_array())
    list = j;
  else if (j.is_object() && j.contains("modules"))
    list = j.at("modules");
  else if (j.is_object())
    list = Json::array({j});
  else
    throw Error(ErrorCode::InvalidInput, "a module file holds one module object or a list of them");
  if (!list.is_array()) throw Error(ErrorCode::InvalidInput, "'modules' must be an array");

  AModFamily fam = AModFamily::zero(report);
  const auto flat = report.flattened();
  std::set<long long> seen;
  for (const auto& item : list) {
    const auto& idx = field(item, "summand");
    if (!idx.is_number_integer()) throw Error(ErrorCode::InvalidInput, "'summand' must be an integer");
    const long long i = idx.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= flat.size())
      throw Error(ErrorCode::FamilyMismatch, "summand index " + std::to_string(i) + " out of range; the report has " +
                                                 std::to_string(flat.size()) + " summands");
    if (!seen.insert(i).second)
      throw Error(ErrorCode::FamilyMismatch, "summand index " + std::to_string(i) + " appears twice");
    const auto& ring = report.summand(flat[i]).ring;
    AModObject m = module_from_json(item, ring);
    const auto v = validate(m);
    if (!v.ok)
      throw Error(ErrorCode::InvalidInput, "summand " + std::to_string(i) + " (" + ring->label() + "), degree " +
                                               std::to_string(v.degree) + ": " + v.violation);
    fam.modules[i] = std::move(m);
  }
  return fam;
}

Json family_to_json(const AModFamily& f) {
  Json list = Json::array();
  for (std::size_t i = 0; i < f.modules.size(); ++i)
    if (!f.modules[i].is_zero()) list.push_back(module_to_json(f.modules[i], i));
  return Json{{"modules", list}};
}

}  // namespace workbench
