#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "support/fixtures.hpp"
#include "support/independent.hpp"

using namespace fatpoints;

static std::map<Int, Int> shifts(const GradedFreeModule& m) { return {m.shifts.begin(), m.shifts.end()}; }

static std::map<Int, Int> shifts(const std::map<std::int64_t, std::int64_t>& m) { return {m.begin(), m.end()}; }

TEST_CASE("conic example resolution", "[resolution]") {
  const auto rep = resolve(fx::conic_example_scheme());
  CHECK(rep.alpha == 5);
  CHECK(rep.cutoff == 14);
  CHECK(std::vector<Int>(rep.h.begin(), rep.h.begin() + 9) == std::vector<Int>{0, 0, 0, 0, 0, 3, 8, 14, 23});
  CHECK(shifts(rep.f0) == std::map<Int, Int>{{5, 3}, {6, 1}, {8, 2}});
  CHECK(shifts(rep.f1) == std::map<Int, Int>{{6, 2}, {7, 1}, {9, 2}});
  CHECK(rep.f0.to_string() == "R[-5]^3 + R[-6] + R[-8]^2");
  CHECK(rep.f1.to_string() == "R[-6]^2 + R[-7] + R[-9]^2");
  CHECK(rep.f0.rank() - rep.f1.rank() == 1);
}

TEST_CASE("conic example against brute force", "[resolution]") {
  // all proper points here; the reference has no infinitely near points
  const std::uint64_t p = 32003;
  std::vector<indep::Pt> pts{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}};
  auto brute = indep::brute_resolution(pts, {3, 2, 2, 1, 3, 2}, 12, p);
  FatPointScheme s{fx::distinct(CurveKind::conic, 6), {3, 2, 2, 1, 3, 2}};
  s.config.lines = {{1, 2, 3, 4}, {1, 5, 6}};
  s.config.conic_shape = ConicShape{ConicShape::Kind::two_lines, 0, 1};
  const auto rep = resolve(s);
  for (std::size_t d = 0; d < rep.h.size() && d < brute.h.size(); ++d) CHECK(rep.h[d] == brute.h[d]);
  CHECK(shifts(rep.f0) == shifts(brute.f0));
  CHECK(shifts(rep.f1) == shifts(brute.f1));
}

TEST_CASE("uniform twelve points of multiplicity two", "[resolution]") {
  const auto rep = resolve({fx::uniform(12), std::vector<Int>(12, 2)});
  CHECK(shifts(rep.f0) == std::map<Int, Int>{{6, 1}, {8, 3}, {9, 3}});
  CHECK(shifts(rep.f1) == std::map<Int, Int>{{9, 3}, {10, 3}});
  auto brute = indep::brute_resolution(indep::cubic_points(12, 1009, 5), std::vector<int>(12, 2), 14, 1009);
  CHECK(shifts(rep.f0) == shifts(brute.f0));
  CHECK(shifts(rep.f1) == shifts(brute.f1));
}

TEST_CASE("small schemes", "[resolution]") {
  const auto one = resolve({fx::line(1), {1}});
  CHECK(shifts(one.f0) == std::map<Int, Int>{{1, 2}});
  CHECK(shifts(one.f1) == std::map<Int, Int>{{2, 1}});

  const auto empty = resolve({fx::line(2), {0, 0}});
  CHECK(shifts(empty.f0) == std::map<Int, Int>{{0, 1}});
  CHECK(empty.f1.rank() == 0);

  const auto fat = resolve({fx::line(1), {3}});
  CHECK(shifts(fat.f0) == std::map<Int, Int>{{3, 4}});
  CHECK(shifts(fat.f1) == std::map<Int, Int>{{4, 3}});
}

TEST_CASE("line closed forms agree with the pipeline", "[resolution]") {
  for (std::vector<Int> m : {std::vector<Int>{3, 2, 1}, {1, 1}, {4}, {5, 5, 2, 2, 2, 1}, {2, 2, 2, 2, 2}}) {
    const FatPointScheme s{fx::line(m.size()), m};
    const auto rep = resolve(s);
    const auto closed = resolve_line_closed_form(s);
    CHECK(rep.alpha == closed.alpha);
    CHECK(shifts(rep.f0) == shifts(closed.f0));
    CHECK(shifts(rep.f1) == shifts(closed.f1));
    for (Int n = 0; n <= rep.cutoff + 3; ++n) {
      CHECK(hilbert_function(s, n) == line_hilbert_formula(s, n));
      CHECK(hilbert_function(s, n) == line_hilbert_formula_grouped(s, n));
    }
    std::vector<int> mi(m.begin(), m.end());
    auto brute = indep::brute_resolution(indep::line_points(m.size(), 32003, 9), mi, static_cast<int>(rep.cutoff), 32003);
    CHECK(shifts(rep.f0) == shifts(brute.f0));
    CHECK(shifts(rep.f1) == shifts(brute.f1));
  }
}

TEST_CASE("free module from a Hilbert difference", "[resolution]") {
  CHECK(shifts(free_module_from_hilbert({0, 0, 0, 0, 1, 4, 9, 16}, 7)) == std::map<Int, Int>{{4, 1}, {5, 1}});
  CHECK(shifts(free_module_from_hilbert({0, 0, 1, 3, 6}, 4)) == std::map<Int, Int>{{2, 1}});
  CHECK(shifts(free_module_from_hilbert({}, 3)).empty());
}

TEST_CASE("Hilbert function reaches the multiplicity count", "[resolution]") {
  const auto s = fx::conic_example_scheme();
  Int conditions = 0;
  for (Int m : s.mults) conditions += m * (m + 1) / 2;
  for (Int d = 10; d <= 20; ++d) CHECK(hilbert_function(s, d) == forms_of_degree(d) - conditions);
  FatPointScheme u{fx::uniform(12), std::vector<Int>(12, 3)};
  for (Int d = 20; d <= 24; ++d) CHECK(hilbert_function(u, d) == forms_of_degree(d) - 72);
}

TEST_CASE("flex chains resolve", "[resolution]") {
  const auto rep = resolve({fx::flex(10), {3, 3, 2, 2, 2, 1, 1, 1, 1, 1}});
  CHECK(rep.f0.rank() - rep.f1.rank() == 1);
  CHECK(rep.alpha >= 3);
  const auto short_chain = resolve({fx::flex(2), {1, 1}});
  CHECK(shifts(short_chain.f0) == std::map<Int, Int>{{1, 1}, {2, 1}});
}

TEST_CASE("uniform outside the supported range", "[resolution]") {
  CHECK_THROWS_AS(resolve({fx::uniform(12), {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1}}), UnsupportedError);
  CHECK_THROWS_AS(resolve({fx::uniform(8), std::vector<Int>(8, 1)}), UnsupportedError);
}
