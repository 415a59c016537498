#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "fatpoints/io.hpp"

namespace fatpoints {

enum class OutputFormat { table, machine };

struct RunSpec {
  std::string command;  // resolve | hilbert | zariski | negcurves | oracle-check
  std::string input;
  OutputFormat format = OutputFormat::table;
  std::optional<Int> max_degree;
  std::uint64_t seed = 1;
  std::uint64_t prime = 32003;
  std::string class_text;  // zariski only
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid = 1;
inline constexpr int unsupported = 2;
inline constexpr int oracle_mismatch = 3;
inline constexpr int internal = 4;
}  // namespace exit_code

struct ZariskiResult {
  ClassVector input;
  bool effective = false;
  Int h0 = 0;
  ClassVector moving;
  ClassVector fixed;
  std::vector<ClassVector> trace;
};

inline Json zariski_to_json(const ZariskiResult& z) {
  Json j;
  j["class"] = class_to_json(z.input);
  j["effective"] = z.effective;
  j["h0"] = z.h0;
  j["moving"] = class_to_json(z.moving);
  j["fixed"] = class_to_json(z.fixed);
  j["trace"] = Json::array();
  for (const auto& c : z.trace) j["trace"].push_back(class_to_json(c));
  return j;
}

inline ZariskiResult zariski_from_json(const Json& j) {
  using namespace detail;
  const std::string b = "$.result";
  only_keys(j, b, {"class", "effective", "h0", "moving", "fixed", "trace"});
  ZariskiResult z;
  z.input = class_from_json(field(j, b, "class"), b + ".class");
  if (!field(j, b, "effective").is_boolean()) schema_error(b + ".effective", "expected a boolean");
  z.effective = j.at("effective").get<bool>();
  z.h0 = as_int(field(j, b, "h0"), b + ".h0");
  z.moving = class_from_json(field(j, b, "moving"), b + ".moving");
  z.fixed = class_from_json(field(j, b, "fixed"), b + ".fixed");
  const auto& tr = as_array(field(j, b, "trace"), b + ".trace");
  for (std::size_t k = 0; k < tr.size(); ++k) z.trace.push_back(class_from_json(tr[k], at(b + ".trace", k)));
  return z;
}

inline Json envelope(const std::string& command, Json result) {
  Json j;
  j["command"] = command;
  j["result"] = std::move(result);
  return j;
}

// Parses machine output and emits it again from the typed report.
inline std::string canonical_machine_output(const std::string& text) {
  const Json j = parse_json_text(text, "<report>");
  detail::only_keys(j, "$", {"command", "result"});
  const std::string cmd = detail::as_string(detail::field(j, "$", "command"), "$.command");
  const Json& r = detail::field(j, "$", "result");
  Json out;
  if (cmd == "resolve") {
    out = report_to_json(report_from_json(r));
  } else if (cmd == "hilbert") {
    detail::only_keys(r, "$.result", {"h"});
    out["h"] = ints_from_json(detail::field(r, "$.result", "h"), "$.result.h");
  } else if (cmd == "zariski") {
    out = zariski_to_json(zariski_from_json(r));
  } else if (cmd == "negcurves") {
    out = curves_to_json(curves_from_json(r, "$.result"));
  } else if (cmd == "oracle-check") {
    out = oracle_to_json(oracle_from_json(r));
  } else {
    detail::schema_error("$.command", "unknown command \"" + cmd + "\"");
  }
  return envelope(cmd, std::move(out)).dump(2) + "\n";
}

namespace detail {

inline std::string join(const std::vector<Int>& v) {
  std::string s;
  for (Int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

inline int run_resolve(const RunSpec& spec, const FatPointScheme& s, std::ostream& out) {
  const auto rep = resolve(s);
  if (spec.format == OutputFormat::machine) {
    out << envelope("resolve", report_to_json(rep)).dump(2) << "\n";
    return exit_code::ok;
  }
  out << "h(d), d = 0.." << rep.cutoff << ": " << join(rep.h) << "\n";
  out << "generators by degree:   " << join(rep.nu) << "\n";
  out << "F0 = " << rep.f0.to_string() << "\n";
  out << "F1 = " << rep.f1.to_string() << "\n\n";
  out << betti_table(rep);
  return exit_code::ok;
}

inline int run_hilbert(const RunSpec& spec, const FatPointScheme& s, std::ostream& out) {
  const Int last = spec.max_degree ? *spec.max_degree : s.total_multiplicity() + 1;
  if (last < 0) throw ValidationError("max-degree: must be nonnegative");
  std::vector<Int> h;
  for (Int d = 0; d <= last; ++d) h.push_back(hilbert_function(s, d));
  if (spec.format == OutputFormat::machine) {
    Json r;
    r["h"] = h;
    out << envelope("hilbert", r).dump(2) << "\n";
    return exit_code::ok;
  }
  out << "  d  h(d)\n";
  for (std::size_t d = 0; d < h.size(); ++d) {
    std::string ds = std::to_string(d);
    out << std::string(ds.size() < 3 ? 3 - ds.size() : 0, ' ') << ds << "  " << h[d] << "\n";
  }
  return exit_code::ok;
}

inline int run_zariski(const RunSpec& spec, const FatPointScheme& s, std::ostream& out) {
  if (spec.class_text.empty()) throw ValidationError("class: zariski needs --class d,m1,...,mr");
  const ClassVector f = parse_class(spec.class_text, s.config.size());
  const auto ctx = make_context(s.config);
  const auto a = analyze(f, ctx);
  ZariskiResult z{f, a.cohomology.h0 > 0, a.cohomology.h0, a.decomposition.moving, a.decomposition.fixed,
                  a.decomposition.trace};
  if (!z.effective) {
    z.moving = ClassVector::zero(f.rank());
    z.fixed = ClassVector::zero(f.rank());
  }
  if (spec.format == OutputFormat::machine) {
    out << envelope("zariski", zariski_to_json(z)).dump(2) << "\n";
    return exit_code::ok;
  }
  out << "class:     " << f.to_string() << "\n";
  if (!z.effective) {
    out << "not effective (h0 = 0)\n";
  } else {
    out << "nef part:  " << z.moving.to_string() << "\n";
    out << "fixed:     " << z.fixed.to_string() << "\n";
    out << "h0:        " << z.h0 << "\n";
  }
  out << "subtracted:";
  if (z.trace.empty()) out << " none";
  for (const auto& c : z.trace) out << " " << c.to_string();
  out << "\n";
  return exit_code::ok;
}

inline int run_negcurves(const RunSpec& spec, const FatPointScheme& s, std::ostream& out) {
  const auto ctx = make_context(s.config);
  if (ctx.kind() == CurveKind::cubic_uniform)
    throw UnsupportedError("negcurves: cubic_uniform configurations are handled without a curve list");
  if (spec.format == OutputFormat::machine) {
    out << envelope("negcurves", curves_to_json(ctx.curves)).dump(2) << "\n";
    return exit_code::ok;
  }
  for (const auto& c : ctx.curves.entries) out << c.cls.to_string() << "  " << to_string(c.type) << "\n";
  return exit_code::ok;
}

inline int run_oracle(const RunSpec& spec, const FatPointScheme& s, std::ostream& out) {
  const auto rep = oracle_report(s, spec.seed, spec.prime);
  if (spec.format == OutputFormat::machine) {
    out << envelope("oracle-check", oracle_to_json(rep)).dump(2) << "\n";
  } else {
    out << "  d  h(oracle)  h(rules)  gens(oracle)  gens(rules)\n";
    for (const auto& d : rep.degrees)
      out << (d.degree < 10 ? "  " : " ") << d.degree << "  " << d.h_oracle << "  " << d.h_pipeline << "  "
          << d.nu_oracle << "  " << d.nu_pipeline << (d.agree() ? "" : "  MISMATCH") << "\n";
    const Int last = rep.degrees.empty() ? 0 : rep.degrees.back().degree;
    if (rep.all_agree()) {
      out << "agree at all degrees 0.." << last << "\n";
    } else {
      out << "mismatch at degrees";
      for (const auto& d : rep.degrees)
        if (!d.agree()) out << " " << d.degree;
      out << "\n";
    }
  }
  return rep.all_agree() ? exit_code::ok : exit_code::oracle_mismatch;
}

}  // namespace detail

inline int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const FatPointScheme s = load_scheme(spec.input);
    if (spec.command != "zariski" && spec.command != "negcurves") require_proximity(s);
    if (spec.command == "resolve") return detail::run_resolve(spec, s, out);
    if (spec.command == "hilbert") return detail::run_hilbert(spec, s, out);
    if (spec.command == "zariski") return detail::run_zariski(spec, s, out);
    if (spec.command == "negcurves") return detail::run_negcurves(spec, s, out);
    if (spec.command == "oracle-check") return detail::run_oracle(spec, s, out);
    err << "error: unknown command \"" << spec.command << "\"\n";
    return exit_code::invalid;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::invalid;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return exit_code::unsupported;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  }
}

}  // namespace fatpoints
