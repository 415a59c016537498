#pragma once

#include <cstddef>
#include <vector>

#include "fatpoints/fatpoints.hpp"

namespace fx {

using namespace fatpoints;

inline PointConfig distinct(CurveKind kind, std::size_t r) {
  PointConfig c;
  c.curve_kind = kind;
  for (std::size_t i = 1; i <= r; ++i) c.points.push_back({i, std::nullopt});
  return c;
}

inline PointConfig conic_example() {
  PointConfig c = distinct(CurveKind::conic, 5);
  c.points.push_back({6, 5});
  c.lines = {{1, 2, 3, 4}, {1, 5, 6}};
  c.conic_shape = ConicShape{ConicShape::Kind::two_lines, 0, 1};
  return c;
}

inline FatPointScheme conic_example_scheme() { return {conic_example(), {3, 2, 2, 1, 3, 2}}; }

inline PointConfig line(std::size_t r) {
  PointConfig c = distinct(CurveKind::line, r);
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i <= r; ++i) all.push_back(i);
  if (r > 0) c.lines = {all};
  return c;
}

inline PointConfig smooth_conic(std::size_t r) {
  PointConfig c = distinct(CurveKind::conic, r);
  c.conic_shape = ConicShape{};
  return c;
}

inline PointConfig uniform(std::size_t r, LambdaSpec lambda = {}) {
  PointConfig c = distinct(CurveKind::cubic_uniform, r);
  c.lambda = lambda;
  return c;
}

inline LambdaSpec order(Int l) { return {LambdaSpec::Kind::order, l, {}}; }

inline PointConfig flex(std::size_t r) {
  PointConfig c;
  c.curve_kind = CurveKind::cubic_flex;
  for (std::size_t i = 1; i <= r; ++i)
    c.points.push_back({i, i == 1 ? std::nullopt : std::optional<std::size_t>(i - 1)});
  return c;
}

inline ClassVector cls(Int d, std::vector<Int> m) { return {d, std::move(m)}; }

// Coefficient vector (d, -m1, ..., -mr) for the reference pairing.
inline std::vector<std::int64_t> coeffs(const ClassVector& c) {
  std::vector<std::int64_t> v{c.d()};
  for (Int m : c.m()) v.push_back(-m);
  return v;
}

}  // namespace fx
