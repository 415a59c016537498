// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "support/properties.hpp"

using namespace fatpoints;

namespace {

struct Check {
  std::string detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// rank difference and Hilbert identity through cutoff + 3
void expect_invariants(Check& c, const FatPointScheme& s, const ResolutionReport& rep, const std::string& label) {
  c.expect(rep.f0.rank() - rep.f1.rank() == 1, label + ": rank difference");
  for (Int n = 0; n <= rep.cutoff + 3; ++n)
    c.expect(rep.f0.hilbert(n) - rep.f1.hilbert(n) == hilbert_function(s, n),
             label + ": Hilbert identity at degree " + std::to_string(n));
}

const DegreeTrace* trace_at(const ResolutionReport& rep, Int d) {
  for (const auto& t : rep.degrees)
    if (t.degree == d) return &t;
  return nullptr;
}

Check conic_golden() {
  Check c;
  const auto rep = resolve(fx::conic_example_scheme());
  const std::vector<Int> h{0, 0, 0, 0, 0, 3, 8, 14, 23};
  for (std::size_t d = 0; d < h.size(); ++d) c.expect(rep.h.at(d) == h[d], "h at degree " + std::to_string(d));
  const std::map<Int, ClassVector> moving{{5, fx::cls(2, {0, 1, 1, 0, 1, 0})},
                                         {6, fx::cls(4, {1, 1, 1, 0, 2, 1})},
                                         {7, fx::cls(5, {1, 1, 1, 0, 2, 1})}};
  for (const auto& [d, m] : moving) {
    const auto* t = trace_at(rep, d);
    c.expect(t && t->moving == m, "moving part at degree " + std::to_string(d));
  }
  c.expect(std::vector<Int>(rep.nu.begin() + 5, rep.nu.begin() + 9) == std::vector<Int>{3, 1, 0, 2}, "generator counts");
  c.expect(rep.f0.to_string() == "R[-5]^3 + R[-6] + R[-8]^2", "F0 = " + rep.f0.to_string());
  c.expect(rep.f1.to_string() == "R[-6]^2 + R[-7] + R[-9]^2", "F1 = " + rep.f1.to_string());
  return c;
}

void partitions(Int left, Int top, std::size_t slots, std::vector<Int>& cur,
                const std::function<void(const std::vector<Int>&)>& f) {
  if (!cur.empty()) f(cur);
  if (slots == 0) return;
  for (Int k = std::min(left, top); k >= 1; --k) {
    cur.push_back(k);
    partitions(left - k, k, slots - 1, cur, f);
    cur.pop_back();
  }
}

Check line_closed_form() {
  Check c;
  int count = 0;
  std::vector<Int> cur;
  partitions(15, 15, 6, cur, [&](const std::vector<Int>& m) {
    ++count;
    const FatPointScheme s{fx::line(m.size()), m};
    const auto a = resolve(s);
    const auto b = resolve_line_closed_form(s);
    std::string label = "m =";
    for (Int x : m) label += " " + std::to_string(x);
    c.expect(a.f0.shifts == b.f0.shifts && a.f1.shifts == b.f1.shifts, label + ": modules");
    for (Int n = 0; n <= a.cutoff; ++n) {
      const auto k = static_cast<std::size_t>(n);
      c.expect(a.h.at(k) == b.h.at(k), label + ": h");
      c.expect(a.nu.at(k) == b.nu.at(k), label + ": generators");
    }
    for (Int n = 0; n <= s.total_multiplicity() + 3; ++n) {
      const Int h = hilbert_function(s, n);
      c.expect(line_hilbert_formula(s, n) == h && line_hilbert_formula_grouped(s, n) == h,
               label + ": printed formula at degree " + std::to_string(n));
    }
  });
  c.detail = c.ok ? std::to_string(count) + " partitions" : c.detail;
  return c;
}

void expect_oracle(Check& c, const FatPointScheme& s, std::uint64_t seed, const std::string& label) {
  const auto rep = oracle_report(s, seed);
  for (const auto& d : rep.degrees)
    c.expect(d.agree(), label + " seed " + std::to_string(seed) + ": degree " + std::to_string(d.degree));
  c.expect(!rep.degrees.empty() && rep.degrees.back().degree == regularity_bound(s) + 2, label + ": degree range");
}

Check oracle_equivalence() {
  Check c;
  props::Gen g(2024);
  const int seeds = 20;
  for (int k = 1; k <= seeds; ++k) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 5));
    std::vector<Int> m(r);
    for (auto& x : m) x = g.uniform(1, 4);
    expect_oracle(c, {fx::line(r), m}, static_cast<std::uint64_t>(k), "line");
  }
  for (int k = 1; k <= seeds; ++k) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 6));
    std::vector<Int> m(r);
    for (auto& x : m) x = g.uniform(1, 3);
    expect_oracle(c, {fx::smooth_conic(r), m}, static_cast<std::uint64_t>(k), "smooth conic");
  }
  for (int k = 1; k <= seeds; ++k) {
    std::vector<Int> m(6);
    for (auto& x : m) x = g.uniform(0, 3);
    m[5] = std::min(m[5], m[4]);
    if (k == 1) m = {3, 2, 2, 1, 3, 2};
    expect_oracle(c, {fx::conic_example(), m}, static_cast<std::uint64_t>(k), "two lines");
  }
  return c;
}

Check uniform_golden() {
  Check c;
  for (Int m = 1; m <= 4; ++m) {
    const FatPointScheme s{fx::uniform(12), std::vector<Int>(12, m)};
    const auto rep = resolve(s);
    GradedFreeModule f0, f1;
    f0.add(3 * m, 1);
    for (Int i = 1; i <= m; ++i) {
      f0.add(3 * m + i + 1, 3);
      f1.add(3 * m + i + 2, 3);
    }
    const std::string label = "m = " + std::to_string(m);
    c.expect(rep.f0.shifts == f0.shifts, label + ": F0 = " + rep.f0.to_string());
    c.expect(rep.f1.shifts == f1.shifts, label + ": F1 = " + rep.f1.to_string());
    if (m <= 2) expect_oracle(c, s, 1, "uniform " + label);
  }
  return c;
}

Check uniform_s_values() {
  Check c;
  c.expect(s_of_nef(uniform_class(3, 1, 12), make_context(fx::uniform(12))).value == 0, "-K.F > 1");
  c.expect(s_of_nef(uniform_class(1, 1, 11), make_context(fx::uniform(11))).value == 1, "-K.F = 1");
  c.expect(s_of_nef(uniform_class(1, 3, 10), make_context(fx::uniform(10))).value == 1, "ten points");
  for (auto [a, b] : {std::pair<Int, Int>{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    const auto ctx = make_context(fx::uniform(9, fx::order(a)));
    c.expect(s_of_nef(uniform_class(0, a * b, 9), ctx).value == 3 * b * (a - 1),
             "nine points a = " + std::to_string(a) + " b = " + std::to_string(b));
    for (Int m = 1; m <= 4; ++m) {
      const FatPointScheme s{fx::uniform(9, fx::order(a)), std::vector<Int>(9, m)};
      expect_invariants(c, s, resolve(s), "nine points l = " + std::to_string(a) + " m = " + std::to_string(m));
    }
  }
  return c;
}

ClassVector hsum(std::size_t r, std::initializer_list<std::pair<std::size_t, Int>> terms) {
  ClassVector f = ClassVector::zero(r);
  for (auto [i, b] : terms) f += b * h_class(i, r);
  return f;
}

void chains(std::size_t r, std::vector<Int>& cur, const std::function<void(const std::vector<Int>&)>& f) {
  if (cur.size() == r) {
    f(cur);
    return;
  }
  for (Int m = cur.empty() ? 3 : cur.back(); m >= 0; --m) {
    cur.push_back(m);
    chains(r, cur, f);
    cur.pop_back();
  }
}

Check flex_rules() {
  Check c;
  const auto ctx = make_context(fx::flex(12));
  auto s = [&](const ClassVector& h) { return s_of_nef_part(h, ctx).value; };
  c.expect(s(hsum(12, {{8, 1}})) == 1, "H8");
  c.expect(s(hsum(12, {{9, 2}})) == 0, "b9 H9");
  c.expect(s(hsum(12, {{0, 1}})) == 0 && s(hsum(12, {{7, 1}, {10, 1}})) == 1 && s(hsum(12, {{7, 1}, {10, 2}})) == 1 &&
               s(hsum(12, {{7, 1}, {11, 1}})) == 0,
           "type I table");
  c.expect(s(hsum(12, {{8, 2}})) == 1 && s(hsum(12, {{8, 2}, {10, 1}})) == 2 && s(hsum(12, {{8, 2}, {10, 2}})) == 2,
           "type II values");
  for (Int b9 = 1; b9 <= 3; ++b9) c.expect(s(hsum(12, {{8, 1}, {9, b9}, {10, 1}})) == b9 + 1, "composite rule");
  int count = 0;
  for (std::size_t r = 1; r <= 12; ++r) {
    std::vector<Int> cur;
    chains(r, cur, [&](const std::vector<Int>& m) {
      ++count;
      const FatPointScheme sc{fx::flex(r), m};
      std::string label = "chain";
      for (Int x : m) label += " " + std::to_string(x);
      try {
        expect_invariants(c, sc, resolve(sc), label);
      } catch (const std::exception& e) {
        c.expect(false, label + ": " + e.what());
      }
    });
  }
  if (c.ok) c.detail = std::to_string(count) + " chains";
  return c;
}

Check invariant_suite() {
  Check c;
  std::string summary;
  for (const auto& prop : props::all()) {
    const auto t = prop(600);
    c.expect(t.cases >= 500, t.name + ": too few cases");
    c.expect(t.passed(), t.name + ": " + t.first);
    summary += (summary.empty() ? "" : ", ") + std::to_string(t.cases);
  }
  if (c.ok) c.detail = "cases " + summary;
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"conic golden", conic_golden},          {"line closed form", line_closed_form},
      {"oracle equivalence", oracle_equivalence}, {"uniform cubic golden", uniform_golden},
      {"uniform S values", uniform_s_values},  {"flex rules", flex_rules},
      {"invariant suite", invariant_suite}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      c = criteria[k].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    failed += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  }
  return failed == 0 ? 0 : 1;
}
