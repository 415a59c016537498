#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "fatpoints/configuration.hpp"
#include "fatpoints/lattice.hpp"

namespace fatpoints {

enum class CurveType { exceptional_component, line, conic, anticanonical };

inline std::string to_string(CurveType t) {
  switch (t) {
    case CurveType::exceptional_component: return "exceptional_component";
    case CurveType::line: return "line";
    case CurveType::conic: return "conic";
    case CurveType::anticanonical: return "anticanonical";
  }
  return "?";
}

struct NegativeCurve {
  ClassVector cls;
  CurveType type = CurveType::line;

  friend bool operator==(const NegativeCurve&, const NegativeCurve&) = default;
};

// Entries are kept in Zariski candidate order.
struct NegativeCurveList {
  std::vector<NegativeCurve> entries;

  std::size_t size() const { return entries.size(); }
  bool contains(const ClassVector& c) const {
    for (const auto& e : entries)
      if (e.cls == c) return true;
    return false;
  }
};

inline ClassVector line_class(const std::vector<std::size_t>& members, std::size_t r) {
  ClassVector c = ClassVector::e0(r);
  for (std::size_t id : members) c -= ClassVector::e(id, r);
  return c;
}

inline NegativeCurveList enumerate_negative_curves(const PointConfig& c) {
  if (c.curve_kind != CurveKind::line && c.curve_kind != CurveKind::conic)
    throw ContractError("negative curve enumeration covers line and conic configurations");
  require_valid(c);
  const std::size_t r = c.size();
  const auto prox = proximity_matrix(c);
  NegativeCurveList out;

  for (std::size_t j = 1; j <= r; ++j) {
    ClassVector e = ClassVector::e(j, r);
    for (std::size_t k : prox.proximate_to(j)) e -= ClassVector::e(k, r);
    out.entries.push_back({e, CurveType::exceptional_component});
  }

  std::vector<std::vector<std::size_t>> lines;
  for (const auto& l : c.lines) {
    auto members = l;
    std::sort(members.begin(), members.end());
    lines.push_back(members);
  }
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = i + 1; j <= r; ++j) {
      if (c.on_common_line(i, j)) continue;
      const bool satellite = prox.count_for(i) > 1 || prox.count_for(j) > 1;
      const bool both_proper = c.is_proper(i) && c.is_proper(j);
      const bool first_order = c.parent(j) == i;
      if (satellite)
        throw UnsupportedError("undeclared incidence: no line declared through " + detail::pid(prox.count_for(j) > 1 ? i : j) +
                               " and satellite " + detail::pid(prox.count_for(j) > 1 ? j : i));
      if (both_proper || first_order) {
        lines.push_back({i, j});
        continue;
      }
      // Deeper pairs need a declared line unless the conic is smooth.
      if (c.is_ancestor(i, j) && !(c.conic_shape && c.conic_shape->kind == ConicShape::Kind::smooth))
        throw UnsupportedError("undeclared incidence: " + detail::pid(i) + " and " +
                               detail::pid(j) + " need a declared line");
    }
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) {
    ClassVector cls = line_class(l, r);
    if (self_intersection(cls) < 0) out.entries.push_back({cls, CurveType::line});
  }

  if (c.curve_kind == CurveKind::conic && c.conic_shape->kind == ConicShape::Kind::smooth && r >= 5) {
    ClassVector q = 2 * ClassVector::e0(r);
    for (std::size_t i = 1; i <= r; ++i) q -= ClassVector::e(i, r);
    out.entries.push_back({q, CurveType::conic});
  }
  return out;
}

inline NegativeCurveList flex_candidate_fixed_classes(std::size_t r) {
  if (r < 3) throw UnsupportedError("flex case needs at least 3 points for the tangent line");
  NegativeCurveList out;
  out.entries.push_back({line_class({1, 2, 3}, r), CurveType::line});
  for (std::size_t i = 1; i < r; ++i)
    out.entries.push_back(
        {ClassVector::e(i, r) - ClassVector::e(i + 1, r), CurveType::exceptional_component});
  out.entries.push_back({ClassVector::e(r, r), CurveType::exceptional_component});
  if (r > 9) out.entries.push_back({anticanonical_class(r), CurveType::anticanonical});
  return out;
}

}  // namespace fatpoints
