#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fatpoints/errors.hpp"
#include "fatpoints/lattice.hpp"

namespace fatpoints {

enum class CurveKind { line, conic, cubic_uniform, cubic_flex };

inline std::string to_string(CurveKind k) {
  switch (k) {
    case CurveKind::line: return "line";
    case CurveKind::conic: return "conic";
    case CurveKind::cubic_uniform: return "cubic_uniform";
    case CurveKind::cubic_flex: return "cubic_flex";
  }
  return "?";
}

struct ConicShape {
  enum class Kind { smooth, two_lines, double_line };
  Kind kind = Kind::smooth;
  std::size_t line_a = 0;  // index into PointConfig::lines
  std::size_t line_b = 0;  // two_lines only

  friend bool operator==(const ConicShape&, const ConicShape&) = default;
};

// What is known about the kernel of restriction to the cubic, on uniform classes.
struct LambdaSpec {
  enum class Kind { trivial, order, members };
  Kind kind = Kind::trivial;
  Int order = 0;                            // least l > 0 with -lK in the kernel (r = 9)
  std::vector<std::pair<Int, Int>> members;  // (t, m): te0 - mK known to be in the kernel

  friend bool operator==(const LambdaSpec&, const LambdaSpec&) = default;
};

struct Point {
  std::size_t id = 0;
  std::optional<std::size_t> parent;

  friend bool operator==(const Point&, const Point&) = default;
};

struct PointConfig {
  CurveKind curve_kind = CurveKind::line;
  std::vector<Point> points;
  std::vector<std::pair<std::size_t, std::size_t>> extra_proximities;  // (j, i)
  std::vector<std::vector<std::size_t>> lines;
  std::optional<ConicShape> conic_shape;
  std::optional<LambdaSpec> lambda;

  std::size_t size() const { return points.size(); }

  std::optional<std::size_t> parent(std::size_t id) const { return points.at(id - 1).parent; }
  bool is_proper(std::size_t id) const { return !parent(id).has_value(); }

  std::size_t depth(std::size_t id) const {
    std::size_t k = 0;
    for (auto p = parent(id); p; p = parent(*p)) ++k;
    return k;
  }

  // True when p_j lies over p_i (i a strict ancestor of j).
  bool is_ancestor(std::size_t i, std::size_t j) const {
    for (auto p = parent(j); p; p = parent(*p))
      if (*p == i) return true;
    return false;
  }

  bool on_line(std::size_t line, std::size_t id) const {
    const auto& l = lines.at(line);
    return std::find(l.begin(), l.end(), id) != l.end();
  }

  bool on_common_line(std::size_t i, std::size_t j) const {
    for (std::size_t l = 0; l < lines.size(); ++l)
      if (on_line(l, i) && on_line(l, j)) return true;
    return false;
  }

  bool line_referenced(std::size_t l) const {
    if (curve_kind == CurveKind::line) return true;
    if (!conic_shape) return false;
    if (conic_shape->kind == ConicShape::Kind::two_lines)
      return conic_shape->line_a == l || conic_shape->line_b == l;
    if (conic_shape->kind == ConicShape::Kind::double_line) return conic_shape->line_a == l;
    return false;
  }

  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

// prox(j, i) is true iff p_j is proximate to p_i; ids are 1-based.
class ProximityMatrix {
 public:
  explicit ProximityMatrix(std::size_t r = 0) : r_(r), bits_(r * r, false) {}

  std::size_t size() const { return r_; }
  bool operator()(std::size_t j, std::size_t i) const { return bits_.at((j - 1) * r_ + (i - 1)); }
  void set(std::size_t j, std::size_t i) { bits_.at((j - 1) * r_ + (i - 1)) = true; }

  std::vector<std::size_t> proximate_to(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 1; j <= r_; ++j)
      if ((*this)(j, i)) out.push_back(j);
    return out;
  }
  std::size_t count_for(std::size_t j) const {
    std::size_t n = 0;
    for (std::size_t i = 1; i <= r_; ++i) n += (*this)(j, i);
    return n;
  }

  friend bool operator==(const ProximityMatrix&, const ProximityMatrix&) = default;

 private:
  std::size_t r_;
  std::vector<bool> bits_;
};

inline ProximityMatrix proximity_matrix(const PointConfig& c) {
  ProximityMatrix prox(c.size());
  for (const auto& p : c.points)
    if (p.parent) prox.set(p.id, *p.parent);
  for (auto [j, i] : c.extra_proximities) prox.set(j, i);
  return prox;
}

namespace detail {

inline std::string pid(std::size_t id) { return "p" + std::to_string(id); }

inline void validate_satellites(const PointConfig& c, std::vector<Violation>& out) {
  const std::size_t r = c.size();
  ProximityMatrix prox(r);
  for (const auto& p : c.points)
    if (p.parent) prox.set(p.id, *p.parent);
  auto extras = c.extra_proximities;
  std::sort(extras.begin(), extras.end());
  for (std::size_t k = 0; k < extras.size(); ++k) {
    auto [j, i] = extras[k];
    std::string name = "(" + pid(j) + ", " + pid(i) + ")";
    if (j < 1 || j > r || i < 1 || i > r) {
      out.push_back({"satellite", name + " refers to an unknown point"});
      continue;
    }
    if (k > 0 && extras[k - 1] == extras[k]) {
      out.push_back({"satellite", name + " listed twice"});
      continue;
    }
    auto par = c.parent(j);
    if (!par) {
      out.push_back({"satellite", pid(j) + " is a proper point and cannot be a satellite"});
      continue;
    }
    if (*par == i) {
      out.push_back({"satellite", name + " repeats the parent relation"});
      continue;
    }
    if (i >= j || !prox(*par, i)) {
      out.push_back({"satellite", name + ": parent " + pid(*par) + " is not proximate to " + pid(i)});
      continue;
    }
    prox.set(j, i);
    if (prox.count_for(j) > 2)
      out.push_back({"satellite", pid(j) + " is proximate to more than two points"});
  }
}

inline void validate_lines(const PointConfig& c, std::vector<Violation>& out) {
  const std::size_t r = c.size();
  for (std::size_t l = 0; l < c.lines.size(); ++l) {
    const auto& line = c.lines[l];
    std::string name = "line " + std::to_string(l);
    std::set<std::size_t> seen;
    bool ok = true;
    for (std::size_t id : line) {
      if (id < 1 || id > r) {
        out.push_back({"line members", name + " refers to unknown point " + std::to_string(id)});
        ok = false;
      } else if (!seen.insert(id).second) {
        out.push_back({"line members", name + " lists " + pid(id) + " twice"});
        ok = false;
      }
    }
    if (!ok) continue;
    if (line.size() < 2 && !c.line_referenced(l))
      out.push_back({"line size", name + " has fewer than 2 members"});
    std::set<std::size_t> parents;
    for (std::size_t id : line) {
      auto par = c.parent(id);
      if (!par) continue;
      if (!seen.count(*par))
        out.push_back({"line nearness", name + " contains " + pid(id) + " but not its parent " +
                                            pid(*par)});
      if (!parents.insert(*par).second)
        out.push_back({"line nearness", name + " contains two directions at " + pid(*par)});
    }
  }
  for (std::size_t a = 0; a < c.lines.size(); ++a)
    for (std::size_t b = a + 1; b < c.lines.size(); ++b) {
      std::size_t shared = 0;
      for (std::size_t id : c.lines[a])
        if (std::find(c.lines[b].begin(), c.lines[b].end(), id) != c.lines[b].end()) ++shared;
      if (shared > 1)
        out.push_back({"line intersection", "lines " + std::to_string(a) + " and " +
                                                std::to_string(b) + " share more than one point"});
    }
}

inline void validate_kind(const PointConfig& c, std::vector<Violation>& out) {
  const std::size_t r = c.size();
  const bool conic = c.curve_kind == CurveKind::conic;
  const bool uniform = c.curve_kind == CurveKind::cubic_uniform;
  if (conic != c.conic_shape.has_value())
    out.push_back({"conic shape", conic ? "conic configuration needs a conic_shape"
                                        : "conic_shape is only meaningful for conic configurations"});
  if (uniform != c.lambda.has_value())
    out.push_back({"lambda", uniform ? "cubic_uniform configuration needs a lambda specification"
                                     : "lambda is only meaningful for cubic_uniform configurations"});
  switch (c.curve_kind) {
    case CurveKind::line: {
      bool covered = false;
      if (c.lines.size() == 1) {
        covered = true;
        for (std::size_t id = 1; id <= r; ++id) covered = covered && c.on_line(0, id);
      } else if (c.lines.empty() && r == 0) {
        covered = true;
      }
      if (!covered)
        out.push_back({"line coverage", "a line configuration needs exactly one line holding every point"});
      break;
    }
    case CurveKind::conic: {
      if (!c.conic_shape) break;
      const auto& s = *c.conic_shape;
      if (s.kind == ConicShape::Kind::smooth) {
        for (std::size_t l = 0; l < c.lines.size(); ++l)
          if (c.lines[l].size() > 2)
            out.push_back({"conic shape", "line " + std::to_string(l) +
                                              " meets a smooth conic in more than two points"});
      } else if (s.kind == ConicShape::Kind::two_lines) {
        if (s.line_a >= c.lines.size() || s.line_b >= c.lines.size() || s.line_a == s.line_b) {
          out.push_back({"conic shape", "two_lines must reference two distinct listed lines"});
          break;
        }
        for (std::size_t id = 1; id <= r; ++id)
          if (!c.on_line(s.line_a, id) && !c.on_line(s.line_b, id))
            out.push_back({"conic shape", pid(id) + " lies on neither component line"});
      } else {
        if (s.line_a >= c.lines.size()) {
          out.push_back({"conic shape", "double_line must reference a listed line"});
          break;
        }
        for (std::size_t id = 1; id <= r; ++id) {
          if (c.on_line(s.line_a, id)) continue;
          auto par = c.parent(id);
          if (!par || !c.is_proper(*par) || !c.on_line(s.line_a, *par))
            out.push_back({"conic shape", pid(id) + " is not on the double line"});
        }
      }
      break;
    }
    case CurveKind::cubic_uniform: {
      if (!c.lines.empty())
        out.push_back({"cubic lines", "collinearity on the cubic is expressed through lambda"});
      if (!c.extra_proximities.empty())
        out.push_back({"satellite", "points on a smooth cubic cannot be satellites"});
      if (c.lambda) {
        if (c.lambda->kind == LambdaSpec::Kind::order && c.lambda->order < 1)
          out.push_back({"lambda", "order must be positive"});
        if (c.lambda->kind == LambdaSpec::Kind::trivial)
          for (const auto& p : c.points)
            if (p.parent)
              out.push_back({"lambda", "trivial lambda requires distinct points, but " + pid(p.id) +
                                           " is infinitely near"});
      }
      break;
    }
    case CurveKind::cubic_flex: {
      if (!c.lines.empty()) out.push_back({"flex chain", "flex configurations take no lines"});
      if (!c.extra_proximities.empty())
        out.push_back({"flex chain", "flex configurations take no satellites"});
      for (const auto& p : c.points) {
        bool ok = p.id == 1 ? !p.parent : (p.parent && *p.parent == p.id - 1);
        if (!ok) out.push_back({"flex chain", pid(p.id) + " must follow the previous point"});
      }
      break;
    }
  }
}

}  // namespace detail

inline std::vector<Violation> validate(const PointConfig& c) {
  std::vector<Violation> out;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c.points[k].id != k + 1)
      out.push_back({"point ids", "point ids must be 1..r in order; position " +
                                      std::to_string(k + 1) + " has id " +
                                      std::to_string(c.points[k].id)});
  if (!out.empty()) return out;
  for (const auto& p : c.points)
    if (p.parent && (*p.parent == 0 || *p.parent >= p.id))
      out.push_back({"forest", detail::pid(p.id) + " has parent " + std::to_string(*p.parent) +
                                   " which does not precede it"});
  if (!out.empty()) return out;
  detail::validate_satellites(c, out);
  detail::validate_lines(c, out);
  detail::validate_kind(c, out);
  return out;
}

inline void require_valid(const PointConfig& c) {
  auto v = validate(c);
  if (!v.empty()) throw ValidationError(describe(v));
}

struct FatPointScheme {
  PointConfig config;
  std::vector<Int> mults;

  std::size_t size() const { return mults.size(); }
  ClassVector to_class(Int d) const { return {d, mults}; }
  Int total_multiplicity() const {
    Int s = 0;
    for (Int m : mults) s = checked_add(s, m);
    return s;
  }

  friend bool operator==(const FatPointScheme&, const FatPointScheme&) = default;
};

inline std::vector<Violation> proximity_violations(const FatPointScheme& s) {
  if (s.mults.size() != s.config.size())
    throw ContractError("multiplicity count " + std::to_string(s.mults.size()) +
                        " does not match point count " + std::to_string(s.config.size()));
  std::vector<Violation> out;
  auto prox = proximity_matrix(s.config);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (s.mults[i - 1] < 0) {
      out.push_back({"proximity inequality", "negative multiplicity at " + detail::pid(i)});
      continue;
    }
    Int sum = 0;
    for (std::size_t j : prox.proximate_to(i)) sum = checked_add(sum, s.mults[j - 1]);
    if (s.mults[i - 1] < sum)
      out.push_back({"proximity inequality", "proximity inequality at " + detail::pid(i)});
  }
  return out;
}

inline bool check_proximity(const FatPointScheme& s) { return proximity_violations(s).empty(); }

inline void require_proximity(const FatPointScheme& s) {
  auto v = proximity_violations(s);
  if (!v.empty()) throw ValidationError(describe(v));
}

struct ReorderedScheme {
  FatPointScheme scheme;
  std::vector<std::size_t> permutation;  // permutation[k] = original id of new point k+1
};

// Sort multiplicities into descending order without moving a point ahead of a
// point it lies over, then drop zero-multiplicity points that carry no positive
// point above them.
inline ReorderedScheme canonical_reorder(const FatPointScheme& s) {
  const PointConfig& c = s.config;
  const std::size_t r = c.size();
  if (s.mults.size() != r) throw ContractError("multiplicity count does not match point count");

  std::vector<bool> placed(r + 1, false);
  std::vector<std::size_t> order;
  while (order.size() < r) {
    std::size_t best = 0;
    for (std::size_t id = 1; id <= r; ++id) {
      if (placed[id]) continue;
      auto par = c.parent(id);
      if (par && !placed[*par]) continue;
      if (best == 0 || s.mults[id - 1] > s.mults[best - 1]) best = id;
    }
    placed[best] = true;
    order.push_back(best);
  }

  // A zero point is dropped when every point lying over it is zero as well.
  std::vector<bool> keep(r + 1, true);
  for (std::size_t id = r; id >= 1; --id) {
    if (s.mults[id - 1] != 0) continue;
    bool all_zero = true;
    for (std::size_t j = id + 1; j <= r; ++j)
      if (c.is_ancestor(id, j) && s.mults[j - 1] != 0) all_zero = false;
    keep[id] = !all_zero;
  }

  std::vector<std::size_t> new_id(r + 1, 0);
  ReorderedScheme out;
  for (std::size_t old : order) {
    if (!keep[old]) continue;
    out.permutation.push_back(old);
    new_id[old] = out.permutation.size();
  }

  PointConfig n;
  n.curve_kind = c.curve_kind;
  n.lambda = c.lambda;
  for (std::size_t k = 0; k < out.permutation.size(); ++k) {
    std::size_t old = out.permutation[k];
    Point p{k + 1, std::nullopt};
    if (auto par = c.parent(old)) p.parent = new_id[*par];
    n.points.push_back(p);
    out.scheme.mults.push_back(s.mults[old - 1]);
  }
  for (auto [j, i] : c.extra_proximities)
    if (new_id[j] && new_id[i]) n.extra_proximities.emplace_back(new_id[j], new_id[i]);
  std::sort(n.extra_proximities.begin(), n.extra_proximities.end());

  std::vector<std::optional<std::size_t>> line_map(c.lines.size());
  for (std::size_t l = 0; l < c.lines.size(); ++l) {
    std::vector<std::size_t> members;
    for (std::size_t id : c.lines[l])
      if (new_id[id]) members.push_back(new_id[id]);
    std::sort(members.begin(), members.end());
    if (members.size() < 2 && !c.line_referenced(l)) continue;
    line_map[l] = n.lines.size();
    n.lines.push_back(std::move(members));
  }
  if (c.conic_shape) {
    ConicShape shape = *c.conic_shape;
    if (shape.kind != ConicShape::Kind::smooth) shape.line_a = *line_map.at(shape.line_a);
    if (shape.kind == ConicShape::Kind::two_lines) shape.line_b = *line_map.at(shape.line_b);
    n.conic_shape = shape;
  }
  out.scheme.config = std::move(n);
  return out;
}

struct PartitionData {
  std::vector<Int> mu;
  std::vector<Int> a;

  friend bool operator==(const PartitionData&, const PartitionData&) = default;
};

// Conjugate of a partition given as a nonincreasing list of positive parts.
inline std::vector<Int> conjugate(const std::vector<Int>& parts) {
  std::vector<Int> mu;
  if (parts.empty()) return mu;
  for (Int i = 1; i <= parts.front(); ++i) {
    Int count = 0;
    for (Int p : parts) count += p >= i;
    mu.push_back(count);
  }
  return mu;
}

inline PartitionData line_partition_data(const FatPointScheme& s) {
  if (s.config.curve_kind != CurveKind::line)
    throw ContractError("partition data applies to line configurations only");
  const auto& m = s.mults;
  if (m.empty()) throw ContractError("partition data needs at least one point");
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] <= 0) throw ContractError("partition data needs positive multiplicities");
    if (k > 0 && m[k] > m[k - 1]) throw ContractError("partition data needs sorted multiplicities");
  }
  PartitionData out;
  out.mu = conjugate(m);
  const Int m1 = m.front();
  out.a.assign(static_cast<std::size_t>(m1), 0);
  Int tail = 0;
  for (Int i = m1; i >= 1; --i) {
    tail = checked_add(tail, out.mu[static_cast<std::size_t>(i - 1)]);
    out.a[static_cast<std::size_t>(i - 1)] = checked_add(i - 1, tail);
  }
  return out;
}

}  // namespace fatpoints
