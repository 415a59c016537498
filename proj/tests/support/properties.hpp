#pragma once

// Randomized invariant checks shared by the Catch2 suite and the acceptance binary.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "independent.hpp"

namespace props {

using namespace fatpoints;

struct Tally {
  std::string name;
  explicit Tally(std::string n) : name(std::move(n)) {}
  int cases = 0;
  int failures = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool passed() const { return failures == 0; }
};

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }
  ClassVector cls(std::size_t r, Int dlo, Int dhi, Int mlo, Int mhi) {
    std::vector<Int> m(r);
    for (auto& x : m) x = uniform(mlo, mhi);
    return {uniform(dlo, dhi), m};
  }
  std::vector<Int> partition(std::size_t len, Int top) {
    std::vector<Int> p(len);
    for (auto& x : p) x = uniform(1, top);
    std::sort(p.rbegin(), p.rend());
    return p;
  }
};

// Configurations the Zariski engine accepts, in rotation.
inline PointConfig engine_config(Gen& g) {
  switch (g.uniform(0, 3)) {
    case 0: return fx::line(static_cast<std::size_t>(g.uniform(3, 7)));
    case 1: return fx::smooth_conic(static_cast<std::size_t>(g.uniform(3, 8)));
    case 2: return fx::conic_example();
    default: return fx::flex(static_cast<std::size_t>(g.uniform(3, 11)));
  }
}

inline NegativeCurveList curves_for(const PointConfig& c) {
  return c.curve_kind == CurveKind::cubic_flex ? flex_candidate_fixed_classes(c.size()) : enumerate_negative_curves(c);
}

inline Tally bilinearity(int n) {
  Tally t{"pairing bilinear and symmetric"};
  Gen g(11);
  for (; t.cases < n; ++t.cases) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 12));
    const auto f = g.cls(r, -20, 20, -9, 9), h = g.cls(r, -20, 20, -9, 9), q = g.cls(r, -20, 20, -9, 9);
    const Int a = g.uniform(-5, 5), b = g.uniform(-5, 5);
    t.check(intersect(a * f + b * h, q) == a * intersect(f, q) + b * intersect(h, q), "linearity at " + f.to_string());
    t.check(intersect(f, h) == intersect(h, f), "symmetry at " + f.to_string());
    t.check(intersect(f, h) == indep::pairing(fx::coeffs(f), fx::coeffs(h)), "reference pairing at " + f.to_string());
  }
  return t;
}

inline Tally h_basis_round_trip(int n) {
  Tally t{"H-basis round trip"};
  Gen g(12);
  for (; t.cases < n; ++t.cases) {
    const auto r = static_cast<std::size_t>(g.uniform(3, 14));
    const auto f = g.cls(r, -30, 30, -9, 9);
    const auto nb = nef_basis_coefficients(f);
    t.check(from_nef_basis(nb.a) == f, f.to_string());
    t.check(nb.minus_k_pairing == intersect(anticanonical_class(r), f), f.to_string());
  }
  return t;
}

inline Tally conjugate_involution(int n) {
  Tally t{"conjugate partition involution"};
  Gen g(13);
  for (; t.cases < n; ++t.cases) {
    const auto p = g.partition(static_cast<std::size_t>(g.uniform(1, 9)), 9);
    const auto c = conjugate(p);
    t.check(conjugate(c) == p, "involution");
    t.check(c == indep::rows_of_columns(std::vector<std::int64_t>(p.begin(), p.end())), "reference diagram");
  }
  return t;
}

inline Tally chi_parity(int n) {
  Tally t{"Euler characteristic parity"};
  Gen g(14);
  for (; t.cases < n; ++t.cases) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 12));
    const auto f = g.cls(r, -10, 25, -3, 8);
    const Int rr = self_intersection(f) - intersect(canonical_class(r), f);
    t.check(rr % 2 == 0, "parity at " + f.to_string());
    t.check(2 * (chi(f) - 1) == rr, "Riemann-Roch at " + f.to_string());
  }
  return t;
}

inline Tally zariski_certificates(int n) {
  Tally t{"Zariski idempotence and negativity"};
  Gen g(15);
  int effective = 0;
  for (; t.cases < n; ++t.cases) {
    const auto c = engine_config(g);
    const auto curves = curves_for(c);
    const auto f = g.cls(c.size(), 0, 14, 0, 5);
    const auto z = zariski_decompose(f, c, curves);
    ClassVector cur = f;
    for (const auto& step : z.trace) {
      t.check(intersect(cur, step) < 0, "non-negative step at " + f.to_string());
      cur -= step;
    }
    if (!z.effective) continue;
    ++effective;
    t.check(cur == z.moving && z.moving + z.fixed == f, "trace does not add up at " + f.to_string());
    t.check(is_nef(z.moving, c, curves), "moving part not nef at " + f.to_string());
    const auto again = zariski_decompose(z.moving, c, curves);
    t.check(again.effective && again.moving == z.moving && again.trace.empty(), "not idempotent at " + f.to_string());
  }
  t.check(effective > n / 4, "too few effective samples");
  return t;
}

inline Tally h0_monotone(int n) {
  Tally t{"h0(F+e0) >= h0(F)"};
  Gen g(16);
  for (; t.cases < n; ++t.cases) {
    if (g.uniform(0, 4) == 0) {
      const auto c = fx::uniform(static_cast<std::size_t>(g.uniform(10, 13)));
      const auto ctx = make_context(c);
      const auto f = uniform_class(g.uniform(0, 12), g.uniform(0, 4), c.size());
      t.check(h0(f + ClassVector::e0(c.size()), ctx) >= h0(f, ctx), f.to_string());
      continue;
    }
    const auto c = engine_config(g);
    const auto ctx = make_context(c);
    const auto f = g.cls(c.size(), 0, 14, 0, 5);
    const Int h = h0(f, ctx);
    t.check(h0(f + ClassVector::e0(c.size()), ctx) >= h, f.to_string());
    t.check(h >= std::max<Int>(chi(f), 0), "below chi at " + f.to_string());
  }
  return t;
}

inline Tally reorder_invariance(int n) {
  Tally t{"resolve independent of point order"};
  Gen g(17);
  for (; t.cases < n; ++t.cases) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 6));
    std::vector<Int> m(r);
    for (auto& x : m) x = g.uniform(0, 4);
    const bool conic = g.uniform(0, 1) == 1;
    auto make = [&](std::vector<Int> mults) {
      return FatPointScheme{conic ? fx::smooth_conic(r) : fx::line(r), std::move(mults)};
    };
    std::vector<Int> shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), g.rng);
    const auto a = resolve(make(m)), b = resolve(make(shuffled));
    t.check(a.f0.shifts == b.f0.shifts && a.f1.shifts == b.f1.shifts && a.h == b.h, "order changed the resolution");
  }
  return t;
}

inline std::vector<std::function<Tally(int)>> all() {
  return {bilinearity,  h_basis_round_trip, conjugate_involution, chi_parity,
          zariski_certificates, h0_monotone, reorder_invariance};
}

}  // namespace props
