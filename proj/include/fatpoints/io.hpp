#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fatpoints/cohomology.hpp"
#include "fatpoints/configuration.hpp"
#include "fatpoints/negcurves.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/resolution.hpp"

namespace fatpoints {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
  throw ValidationError("schema: " + path + ": " + what);
}

inline void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) schema_error(path, "unknown key \"" + k + "\"");
  }
}

inline const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) schema_error(path, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline Int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<Int>();
}

inline std::size_t as_index(const Json& j, const std::string& path, std::size_t min) {
  const Int v = as_int(j, path);
  if (v < static_cast<Int>(min)) schema_error(path, "expected an integer >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

inline const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

inline std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

inline std::string at(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

inline CurveKind curve_kind_from(const std::string& s, const std::string& path) {
  for (CurveKind k : {CurveKind::line, CurveKind::conic, CurveKind::cubic_uniform, CurveKind::cubic_flex})
    if (to_string(k) == s) return k;
  schema_error(path, "unknown curve kind \"" + s + "\"");
}

inline const char* shape_name(ConicShape::Kind k) {
  switch (k) {
    case ConicShape::Kind::smooth: return "smooth";
    case ConicShape::Kind::two_lines: return "two_lines";
    case ConicShape::Kind::double_line: return "double_line";
  }
  return "?";
}

inline const char* lambda_name(LambdaSpec::Kind k) {
  switch (k) {
    case LambdaSpec::Kind::trivial: return "trivial";
    case LambdaSpec::Kind::order: return "order";
    case LambdaSpec::Kind::members: return "members";
  }
  return "?";
}

}  // namespace detail

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": parse error at " + detail::line_col(text, e.byte) + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open file");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline FatPointScheme scheme_from_json(const Json& j) {
  using namespace detail;
  only_keys(j, "$", {"curve_kind", "points", "extra_proximities", "lines", "conic_shape", "lambda",
                     "multiplicities"});
  FatPointScheme s;
  PointConfig& c = s.config;
  c.curve_kind = curve_kind_from(as_string(field(j, "$", "curve_kind"), "$.curve_kind"), "$.curve_kind");

  const auto& pts = as_array(field(j, "$", "points"), "$.points");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::string p = at("$.points", k);
    only_keys(pts[k], p, {"id", "parent"});
    Point pt;
    pt.id = as_index(field(pts[k], p, "id"), p + ".id", 1);
    if (pts[k].contains("parent")) pt.parent = as_index(pts[k].at("parent"), p + ".parent", 1);
    c.points.push_back(pt);
  }
  if (j.contains("extra_proximities")) {
    const auto& ex = as_array(j.at("extra_proximities"), "$.extra_proximities");
    for (std::size_t k = 0; k < ex.size(); ++k) {
      const std::string p = at("$.extra_proximities", k);
      if (!ex[k].is_array() || ex[k].size() != 2) schema_error(p, "expected a pair [j, i]");
      c.extra_proximities.emplace_back(as_index(ex[k][0], p + "[0]", 1), as_index(ex[k][1], p + "[1]", 1));
    }
  }
  if (j.contains("lines")) {
    const auto& ls = as_array(j.at("lines"), "$.lines");
    for (std::size_t k = 0; k < ls.size(); ++k) {
      const std::string p = at("$.lines", k);
      const auto& l = as_array(ls[k], p);
      std::vector<std::size_t> members;
      for (std::size_t q = 0; q < l.size(); ++q) members.push_back(as_index(l[q], at(p, q), 1));
      c.lines.push_back(std::move(members));
    }
  }
  if (j.contains("conic_shape")) {
    const auto& cs = j.at("conic_shape");
    only_keys(cs, "$.conic_shape", {"kind", "lines"});
    const std::string kind = as_string(field(cs, "$.conic_shape", "kind"), "$.conic_shape.kind");
    ConicShape shape;
    std::size_t want;
    if (kind == "smooth") {
      shape.kind = ConicShape::Kind::smooth;
      want = 0;
    } else if (kind == "two_lines") {
      shape.kind = ConicShape::Kind::two_lines;
      want = 2;
    } else if (kind == "double_line") {
      shape.kind = ConicShape::Kind::double_line;
      want = 1;
    } else {
      schema_error("$.conic_shape.kind", "unknown conic shape \"" + kind + "\"");
    }
    const std::size_t have = cs.contains("lines") ? as_array(cs.at("lines"), "$.conic_shape.lines").size() : 0;
    if (have != want)
      schema_error("$.conic_shape.lines", kind + " takes " + std::to_string(want) + " line indices");
    if (want >= 1) shape.line_a = as_index(cs.at("lines")[0], "$.conic_shape.lines[0]", 0);
    if (want == 2) shape.line_b = as_index(cs.at("lines")[1], "$.conic_shape.lines[1]", 0);
    c.conic_shape = shape;
  }
  if (j.contains("lambda")) {
    const auto& lj = j.at("lambda");
    const std::string kind = as_string(field(lj, "$.lambda", "kind"), "$.lambda.kind");
    LambdaSpec l;
    if (kind == "trivial") {
      only_keys(lj, "$.lambda", {"kind"});
      l.kind = LambdaSpec::Kind::trivial;
    } else if (kind == "order") {
      only_keys(lj, "$.lambda", {"kind", "l"});
      l.kind = LambdaSpec::Kind::order;
      l.order = as_int(field(lj, "$.lambda", "l"), "$.lambda.l");
    } else if (kind == "members") {
      only_keys(lj, "$.lambda", {"kind", "classes"});
      l.kind = LambdaSpec::Kind::members;
      const auto& cl = as_array(field(lj, "$.lambda", "classes"), "$.lambda.classes");
      for (std::size_t k = 0; k < cl.size(); ++k) {
        const std::string p = at("$.lambda.classes", k);
        if (!cl[k].is_array() || cl[k].size() != 2) schema_error(p, "expected a pair [t, m]");
        l.members.emplace_back(as_int(cl[k][0], p + "[0]"), as_int(cl[k][1], p + "[1]"));
      }
    } else {
      schema_error("$.lambda.kind", "unknown lambda kind \"" + kind + "\"");
    }
    c.lambda = l;
  }
  const auto& ms = as_array(field(j, "$", "multiplicities"), "$.multiplicities");
  for (std::size_t k = 0; k < ms.size(); ++k) s.mults.push_back(as_int(ms[k], at("$.multiplicities", k)));
  if (s.mults.size() != c.size())
    schema_error("$.multiplicities", "has " + std::to_string(s.mults.size()) + " entries for " +
                                         std::to_string(c.size()) + " points");
  require_valid(c);
  return s;
}

inline FatPointScheme parse_scheme(const std::string& text, const std::string& source = "<input>") {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw ParseError(source + ": parse error at line 1, column 1: empty document");
  return scheme_from_json(parse_json_text(text, source));
}

inline FatPointScheme load_scheme(const std::string& path) { return parse_scheme(read_file(path), path); }

inline Json scheme_to_json(const FatPointScheme& s) {
  const PointConfig& c = s.config;
  Json j;
  j["curve_kind"] = to_string(c.curve_kind);
  j["points"] = Json::array();
  for (const auto& p : c.points) {
    Json pj;
    pj["id"] = p.id;
    if (p.parent) pj["parent"] = *p.parent;
    j["points"].push_back(pj);
  }
  if (!c.extra_proximities.empty()) {
    j["extra_proximities"] = Json::array();
    for (auto [a, b] : c.extra_proximities) j["extra_proximities"].push_back({a, b});
  }
  if (!c.lines.empty()) j["lines"] = c.lines;
  if (c.conic_shape) {
    Json cs;
    cs["kind"] = detail::shape_name(c.conic_shape->kind);
    if (c.conic_shape->kind == ConicShape::Kind::two_lines)
      cs["lines"] = {c.conic_shape->line_a, c.conic_shape->line_b};
    else if (c.conic_shape->kind == ConicShape::Kind::double_line)
      cs["lines"] = {c.conic_shape->line_a};
    j["conic_shape"] = cs;
  }
  if (c.lambda) {
    Json l;
    l["kind"] = detail::lambda_name(c.lambda->kind);
    if (c.lambda->kind == LambdaSpec::Kind::order) l["l"] = c.lambda->order;
    if (c.lambda->kind == LambdaSpec::Kind::members) {
      l["classes"] = Json::array();
      for (auto [t, m] : c.lambda->members) l["classes"].push_back({t, m});
    }
    j["lambda"] = l;
  }
  j["multiplicities"] = s.mults;
  return j;
}

// "d,m1,...,mr"
inline ClassVector parse_class(const std::string& text, std::size_t rank) {
  std::vector<Int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Int x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw ParseError("class: \"" + item + "\" is not an integer");
    v.push_back(x);
  }
  if (v.size() != rank + 1)
    throw ValidationError("class: expected " + std::to_string(rank + 1) + " entries d,m1,...,m" +
                          std::to_string(rank) + ", got " + std::to_string(v.size()));
  return {v.front(), std::vector<Int>(v.begin() + 1, v.end())};
}

inline Json class_to_json(const ClassVector& c) {
  Json j = Json::array({c.d()});
  for (Int m : c.m()) j.push_back(m);
  return j;
}

inline ClassVector class_from_json(const Json& j, const std::string& path) {
  const auto& a = detail::as_array(j, path);
  if (a.empty()) detail::schema_error(path, "a class needs at least the degree entry");
  std::vector<Int> m;
  for (std::size_t k = 1; k < a.size(); ++k) m.push_back(detail::as_int(a[k], detail::at(path, k)));
  return {detail::as_int(a[0], detail::at(path, 0)), std::move(m)};
}

inline Json module_to_json(const GradedFreeModule& m) {
  Json j = Json::array();
  for (auto [d, mult] : m.shifts) j.push_back({d, mult});
  return j;
}

inline GradedFreeModule module_from_json(const Json& j, const std::string& path) {
  GradedFreeModule m;
  const auto& a = detail::as_array(j, path);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::string p = detail::at(path, k);
    if (!a[k].is_array() || a[k].size() != 2) detail::schema_error(p, "expected a pair [shift, multiplicity]");
    m.add(detail::as_int(a[k][0], p + "[0]"), detail::as_int(a[k][1], p + "[1]"));
  }
  return m;
}

inline std::vector<Int> ints_from_json(const Json& j, const std::string& path) {
  std::vector<Int> v;
  const auto& a = detail::as_array(j, path);
  for (std::size_t k = 0; k < a.size(); ++k) v.push_back(detail::as_int(a[k], detail::at(path, k)));
  return v;
}

inline Json report_to_json(const ResolutionReport& r) {
  Json j;
  j["alpha"] = r.alpha;
  j["cutoff"] = r.cutoff;
  j["h"] = r.h;
  j["nu"] = r.nu;
  j["F0"] = module_to_json(r.f0);
  j["F1"] = module_to_json(r.f1);
  j["degrees"] = Json::array();
  for (const auto& t : r.degrees) {
    Json tj;
    tj["degree"] = t.degree;
    tj["h"] = t.h;
    tj["effective"] = t.effective;
    tj["moving"] = class_to_json(t.moving);
    tj["fixed"] = class_to_json(t.fixed);
    tj["trace"] = Json::array();
    for (const auto& c : t.trace) tj["trace"].push_back(class_to_json(c));
    tj["rule"] = t.rule;
    tj["nu_next"] = t.nu_next;
    j["degrees"].push_back(tj);
  }
  return j;
}

inline ResolutionReport report_from_json(const Json& j) {
  using namespace detail;
  only_keys(j, "$.result", {"alpha", "cutoff", "h", "nu", "F0", "F1", "degrees"});
  ResolutionReport r;
  r.alpha = as_int(field(j, "$.result", "alpha"), "$.result.alpha");
  r.cutoff = as_int(field(j, "$.result", "cutoff"), "$.result.cutoff");
  r.h = ints_from_json(field(j, "$.result", "h"), "$.result.h");
  r.nu = ints_from_json(field(j, "$.result", "nu"), "$.result.nu");
  r.f0 = module_from_json(field(j, "$.result", "F0"), "$.result.F0");
  r.f1 = module_from_json(field(j, "$.result", "F1"), "$.result.F1");
  const auto& ds = as_array(field(j, "$.result", "degrees"), "$.result.degrees");
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const std::string p = at("$.result.degrees", k);
    only_keys(ds[k], p, {"degree", "h", "effective", "moving", "fixed", "trace", "rule", "nu_next"});
    DegreeTrace t;
    t.degree = as_int(field(ds[k], p, "degree"), p + ".degree");
    t.h = as_int(field(ds[k], p, "h"), p + ".h");
    if (!field(ds[k], p, "effective").is_boolean()) schema_error(p + ".effective", "expected a boolean");
    t.effective = ds[k].at("effective").get<bool>();
    t.moving = class_from_json(field(ds[k], p, "moving"), p + ".moving");
    t.fixed = class_from_json(field(ds[k], p, "fixed"), p + ".fixed");
    const auto& tr = as_array(field(ds[k], p, "trace"), p + ".trace");
    for (std::size_t q = 0; q < tr.size(); ++q) t.trace.push_back(class_from_json(tr[q], at(p + ".trace", q)));
    t.rule = as_string(field(ds[k], p, "rule"), p + ".rule");
    t.nu_next = as_int(field(ds[k], p, "nu_next"), p + ".nu_next");
    r.degrees.push_back(std::move(t));
  }
  return r;
}

inline Json oracle_to_json(const OracleReport& r) {
  Json j;
  j["prime"] = r.coordinates.prime;
  j["seed"] = r.coordinates.seed;
  j["attempts"] = r.coordinates.attempts;
  j["points"] = Json::array();
  for (const auto& p : r.coordinates.points) {
    Json pj;
    pj["x"] = p.x;
    pj["y"] = p.y;
    if (p.parent) {
      pj["parent"] = *p.parent;
      pj["direction"] = {p.u, p.v};
    }
    j["points"].push_back(pj);
  }
  j["degrees"] = Json::array();
  for (const auto& d : r.degrees) {
    Json dj;
    dj["degree"] = d.degree;
    dj["h_oracle"] = d.h_oracle;
    dj["h_pipeline"] = d.h_pipeline;
    dj["nu_oracle"] = d.nu_oracle;
    dj["nu_pipeline"] = d.nu_pipeline;
    dj["agree"] = d.agree();
    j["degrees"].push_back(dj);
  }
  j["all_agree"] = r.all_agree();
  return j;
}

inline OracleReport oracle_from_json(const Json& j) {
  using namespace detail;
  const std::string base = "$.result";
  only_keys(j, base, {"prime", "seed", "attempts", "points", "degrees", "all_agree"});
  OracleReport r;
  auto unsigned_field = [&](const char* key) {
    const auto& v = field(j, base, key);
    if (!v.is_number_unsigned()) schema_error(base + "." + key, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
  };
  r.coordinates.prime = unsigned_field("prime");
  r.coordinates.seed = unsigned_field("seed");
  r.coordinates.attempts = static_cast<unsigned>(unsigned_field("attempts"));
  const auto& ps = as_array(field(j, base, "points"), base + ".points");
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const std::string p = at(base + ".points", k);
    only_keys(ps[k], p, {"x", "y", "parent", "direction"});
    SampledPoint sp;
    sp.x = static_cast<Elem>(as_index(field(ps[k], p, "x"), p + ".x", 0));
    sp.y = static_cast<Elem>(as_index(field(ps[k], p, "y"), p + ".y", 0));
    if (ps[k].contains("parent")) {
      sp.parent = as_index(ps[k].at("parent"), p + ".parent", 1);
      const auto& dir = field(ps[k], p, "direction");
      if (!dir.is_array() || dir.size() != 2) schema_error(p + ".direction", "expected a pair [u, v]");
      sp.u = static_cast<Elem>(as_index(dir[0], p + ".direction[0]", 0));
      sp.v = static_cast<Elem>(as_index(dir[1], p + ".direction[1]", 0));
    }
    r.coordinates.points.push_back(sp);
  }
  const auto& ds = as_array(field(j, base, "degrees"), base + ".degrees");
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const std::string p = at(base + ".degrees", k);
    only_keys(ds[k], p, {"degree", "h_oracle", "h_pipeline", "nu_oracle", "nu_pipeline", "agree"});
    OracleDegree d;
    d.degree = as_int(field(ds[k], p, "degree"), p + ".degree");
    d.h_oracle = as_int(field(ds[k], p, "h_oracle"), p + ".h_oracle");
    d.h_pipeline = as_int(field(ds[k], p, "h_pipeline"), p + ".h_pipeline");
    d.nu_oracle = as_int(field(ds[k], p, "nu_oracle"), p + ".nu_oracle");
    d.nu_pipeline = as_int(field(ds[k], p, "nu_pipeline"), p + ".nu_pipeline");
    r.degrees.push_back(d);
  }
  return r;
}

inline Json curves_to_json(const NegativeCurveList& l) {
  Json j = Json::array();
  for (const auto& c : l.entries) {
    Json cj;
    cj["class"] = class_to_json(c.cls);
    cj["type"] = to_string(c.type);
    j.push_back(cj);
  }
  return j;
}

inline NegativeCurveList curves_from_json(const Json& j, const std::string& path) {
  NegativeCurveList l;
  const auto& a = detail::as_array(j, path);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::string p = detail::at(path, k);
    detail::only_keys(a[k], p, {"class", "type"});
    NegativeCurve c;
    c.cls = class_from_json(detail::field(a[k], p, "class"), p + ".class");
    const std::string type = detail::as_string(detail::field(a[k], p, "type"), p + ".type");
    bool found = false;
    for (CurveType t : {CurveType::exceptional_component, CurveType::line, CurveType::conic,
                        CurveType::anticanonical})
      if (to_string(t) == type) {
        c.type = t;
        found = true;
      }
    if (!found) detail::schema_error(p + ".type", "unknown curve type \"" + type + "\"");
    l.entries.push_back(c);
  }
  return l;
}

// Columns: 0 = R, 1 = F0, 2 = F1; row = shift - column.
inline std::string betti_table(const ResolutionReport& r) {
  std::map<std::pair<Int, int>, Int> cell;
  cell[{0, 0}] = 1;
  for (auto [d, m] : r.f0.shifts) cell[{d - 1, 1}] += m;
  for (auto [d, m] : r.f1.shifts) cell[{d - 2, 2}] += m;
  Int lo = 0, hi = 0;
  for (const auto& [key, m] : cell) {
    lo = std::min(lo, key.first);
    hi = std::max(hi, key.first);
  }
  const Int totals[3] = {1, r.f0.rank(), r.f1.rank()};
  std::size_t w = 1;
  for (Int t : totals) w = std::max(w, std::to_string(t).size());
  for (const auto& [key, m] : cell) w = std::max(w, std::to_string(m).size());
  auto pad = [](const std::string& s, std::size_t n) { return std::string(n > s.size() ? n - s.size() : 0, ' ') + s; };
  std::ostringstream out;
  out << pad("", 7);
  for (int c = 0; c < 3; ++c) out << ' ' << pad(std::to_string(c), w);
  out << "\n" << pad("total:", 7);
  for (Int t : totals) out << ' ' << pad(std::to_string(t), w);
  out << "\n";
  for (Int row = lo; row <= hi; ++row) {
    out << pad(std::to_string(row) + ":", 7);
    for (int c = 0; c < 3; ++c) {
      auto it = cell.find({row, c});
      out << ' ' << pad(it == cell.end() || it->second == 0 ? "." : std::to_string(it->second), w);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace fatpoints
