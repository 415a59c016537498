#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fatpoints/configuration.hpp"
#include "fatpoints/prime_field.hpp"
#include "fatpoints/resolution.hpp"

namespace fatpoints {

using Elem = PrimeField::Elem;

struct SampledPoint {
  Elem x = 0, y = 0;  // the parent's coordinates for an infinitely near point
  std::optional<std::size_t> parent;
  Elem u = 0, v = 0;  // tangent direction, infinitely near points only
};

struct CoordinateAssignment {
  std::uint64_t prime = 32003;
  std::uint64_t seed = 0;
  unsigned attempts = 1;
  std::vector<SampledPoint> points;
};

struct SamplingError : ValidationError {
  using ValidationError::ValidationError;
};

namespace detail {

inline void require_oracle_scope(const PointConfig& c) {
  require_valid(c);
  if (c.curve_kind == CurveKind::cubic_flex)
    throw UnsupportedError("oracle: flex chains are outside oracle scope");
  if (!c.extra_proximities.empty()) throw UnsupportedError("oracle: satellite points are outside oracle scope");
  for (std::size_t id = 1; id <= c.size(); ++id)
    if (c.depth(id) > 1) throw UnsupportedError("oracle: " + pid(id) + " is infinitely near to depth > 1");
  if (c.curve_kind == CurveKind::cubic_uniform && c.lambda->kind != LambdaSpec::Kind::trivial)
    throw UnsupportedError("oracle: only a trivial lambda can be realized by random cubic points");
}

// Points on y^2 = x^3 + Ax + B; nullopt is the point at infinity.
struct Cubic {
  const PrimeField& f;
  Elem A, B;
  using Pt = std::optional<std::pair<Elem, Elem>>;

  Pt add(const Pt& P, const Pt& Q) const {
    if (!P) return Q;
    if (!Q) return P;
    auto [x1, y1] = *P;
    auto [x2, y2] = *Q;
    Elem lam;
    if (x1 == x2) {
      if (f.add(y1, y2) == 0) return std::nullopt;
      lam = f.mul(f.add(f.mul(3, f.mul(x1, x1)), A), f.inv(f.mul(2, y1)));
    } else {
      lam = f.mul(f.sub(y2, y1), f.inv(f.sub(x2, x1)));
    }
    Elem x3 = f.sub(f.sub(f.mul(lam, lam), x1), x2);
    Elem y3 = f.sub(f.mul(lam, f.sub(x1, x3)), y1);
    return std::make_pair(x3, y3);
  }
};

// Smallest set of ids closed under taking parents.
inline std::vector<std::size_t> with_parents(const PointConfig& c, std::vector<std::size_t> ids) {
  std::set<std::size_t> s(ids.begin(), ids.end());
  for (std::size_t id : ids)
    if (auto p = c.parent(id)) s.insert(*p);
  return {s.begin(), s.end()};
}

inline bool collinear(const CoordinateAssignment& a, const std::vector<std::size_t>& ids, const PrimeField& f) {
  std::vector<std::pair<Elem, Elem>> pts, dirs;
  for (std::size_t id : ids) {
    const auto& p = a.points[id - 1];
    if (p.parent)
      dirs.emplace_back(p.u, p.v);
    else
      pts.emplace_back(p.x, p.y);
  }
  Elem du, dv;
  if (pts.size() >= 2) {
    du = f.sub(pts[1].first, pts[0].first);
    dv = f.sub(pts[1].second, pts[0].second);
  } else if (!dirs.empty()) {
    du = dirs[0].first;
    dv = dirs[0].second;
  } else {
    return true;
  }
  auto parallel = [&](Elem u, Elem v) { return f.mul(u, dv) == f.mul(v, du); };
  for (const auto& [x, y] : pts)
    if (!parallel(f.sub(x, pts[0].first), f.sub(y, pts[0].second))) return false;
  for (const auto& [u, v] : dirs)
    if (!parallel(u, v)) return false;
  return true;
}

inline bool declared_together(const PointConfig& c, const std::vector<std::size_t>& ids) {
  for (std::size_t l = 0; l < c.lines.size(); ++l) {
    bool all = true;
    for (std::size_t id : ids) all = all && c.on_line(l, id);
    if (all) return true;
  }
  return false;
}

// Empty string when the sample is usable, else the reason it is degenerate.
inline std::string degeneracy(const PointConfig& c, const CoordinateAssignment& a, const PrimeField& f) {
  const std::size_t r = c.size();
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = i + 1; j <= r; ++j) {
      const auto& p = a.points[i - 1];
      const auto& q = a.points[j - 1];
      if (!p.parent && !q.parent && p.x == q.x && p.y == q.y) return "coincident points";
    }
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = i + 1; j <= r; ++j)
      for (std::size_t k = j + 1; k <= r; ++k) {
        auto ids = with_parents(c, {i, j, k});
        if (collinear(a, ids, f) && !declared_together(c, ids)) return "undeclared collinearity";
      }
  return {};
}

inline std::uint64_t derived_seed(std::uint64_t seed, unsigned attempt) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (attempt + 1ULL));
}

}  // namespace detail

inline CoordinateAssignment sample_coordinates(const PointConfig& c, std::uint64_t seed,
                                               std::uint64_t prime = 32003, unsigned max_attempts = 32,
                                               Int max_mult = 0) {
  detail::require_oracle_scope(c);
  PrimeField f(prime);
  const std::size_t r = c.size();
  std::string last;
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    std::mt19937_64 rng(attempt == 0 ? seed : detail::derived_seed(seed, attempt));
    auto any = [&] { return static_cast<Elem>(rng() % prime); };
    auto nonzero = [&] {
      Elem x;
      do x = any();
      while (x == 0);
      return x;
    };
    CoordinateAssignment out;
    out.prime = prime;
    out.seed = seed;
    out.attempts = attempt + 1;
    out.points.resize(r);
    auto proper = [&](std::size_t id) -> SampledPoint& { return out.points[id - 1]; };

    // Direction of a line through each proper point, when the shape dictates one.
    std::vector<std::optional<std::pair<Elem, Elem>>> tangent(r + 1);
    switch (c.curve_kind) {
      case CurveKind::line:
        for (std::size_t id = 1; id <= r; ++id) {
          if (!c.is_proper(id)) continue;
          proper(id).x = any();
          tangent[id] = std::make_pair(Elem{1}, Elem{0});
        }
        break;
      case CurveKind::conic: {
        const auto& s = *c.conic_shape;
        if (s.kind == ConicShape::Kind::smooth) {
          for (std::size_t id = 1; id <= r; ++id) {
            if (!c.is_proper(id)) continue;
            const Elem t = any();
            proper(id).x = t;
            proper(id).y = f.mul(t, t);
            tangent[id] = std::make_pair(Elem{1}, f.mul(2, t));
          }
        } else if (s.kind == ConicShape::Kind::two_lines) {
          const Elem x0 = any(), y0 = any();
          const Elem sa = any();
          Elem sb;
          do sb = any();
          while (sb == sa);
          for (std::size_t id = 1; id <= r; ++id) {
            if (!c.is_proper(id)) continue;
            const bool on_a = c.on_line(s.line_a, id), on_b = c.on_line(s.line_b, id);
            const Elem t = on_a && on_b ? 0 : nonzero();
            const Elem slope = on_a ? sa : sb;
            proper(id).x = f.add(x0, t);
            proper(id).y = f.add(y0, f.mul(slope, t));
            if (!(on_a && on_b)) tangent[id] = std::make_pair(Elem{1}, slope);
          }
        } else {
          for (std::size_t id = 1; id <= r; ++id) {
            if (!c.is_proper(id)) continue;
            proper(id).x = any();
            tangent[id] = std::make_pair(Elem{1}, Elem{0});
          }
        }
        break;
      }
      case CurveKind::cubic_uniform: {
        Elem A, B;
        do A = any(), B = any();
        while (f.add(f.mul(4, f.pow(A, 3)), f.mul(27, f.mul(B, B))) == 0);
        detail::Cubic cubic{f, A, B};
        detail::Cubic::Pt sum;
        for (std::size_t id = 1; id <= r; ++id) {
          std::optional<Elem> y;
          Elem x;
          do {
            x = any();
            y = f.sqrt(f.add(f.add(f.pow(x, 3), f.mul(A, x)), B));
          } while (!y);
          proper(id).x = x;
          proper(id).y = (rng() & 1) ? f.neg(*y) : *y;
          sum = cubic.add(sum, std::make_pair(proper(id).x, proper(id).y));
        }
        detail::Cubic::Pt multiple;
        for (Int k = 1; k <= max_mult + 1 && last.empty(); ++k) {
          multiple = cubic.add(multiple, sum);
          if (!multiple) last = "points sum to torsion of order " + std::to_string(k);
        }
        break;
      }
      case CurveKind::cubic_flex: break;
    }

    for (std::size_t id = 1; id <= r; ++id) {
      auto par = c.parent(id);
      if (!par) continue;
      auto& p = out.points[id - 1];
      p.parent = par;
      p.x = out.points[*par - 1].x;
      p.y = out.points[*par - 1].y;
      // A declared line through the child fixes the direction; otherwise follow the shape.
      std::optional<std::pair<Elem, Elem>> dir;
      bool along = false;
      for (std::size_t l = 0; l < c.lines.size() && !dir; ++l) {
        if (!c.on_line(l, id)) continue;
        along = true;
        for (std::size_t other : c.lines[l])
          if (other != id && other != *par && c.is_proper(other)) {
            dir = std::make_pair(f.sub(out.points[other - 1].x, p.x), f.sub(out.points[other - 1].y, p.y));
            break;
          }
      }
      const bool on_curve = c.curve_kind == CurveKind::line ||
                            (c.curve_kind == CurveKind::conic && c.conic_shape->kind == ConicShape::Kind::smooth);
      if (!dir && (along || on_curve)) dir = tangent[*par];
      if (!dir) dir = std::make_pair(any(), Elem{1});
      p.u = dir->first;
      p.v = dir->second;
    }

    if (last.empty()) {
      for (std::size_t l = 0; l < c.lines.size(); ++l)
        if (!detail::collinear(out, detail::with_parents(c, c.lines[l]), f))
          throw UnsupportedError("oracle: cannot realize line " + std::to_string(l) + " on the sampled shape");
      last = detail::degeneracy(c, out, f);
    }
    if (last.empty()) return out;
    if (attempt + 1 < max_attempts) last.clear();
  }
  throw SamplingError("oracle: sampling stayed degenerate after " + std::to_string(max_attempts) +
                      " attempts (" + last + ")");
}

namespace detail {

struct BinomialTable {
  std::vector<std::vector<Elem>> c;
  BinomialTable(Int n, const PrimeField& f) : c(static_cast<std::size_t>(n) + 1) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i].assign(i + 1, 1);
      for (std::size_t k = 1; k < i; ++k) c[i][k] = f.add(c[i - 1][k - 1], c[i - 1][k]);
    }
  }
  Elem operator()(Int n, Int k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    return c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
};

inline Elem power(const PrimeField& f, Elem a, Int e) { return e < 0 ? 0 : f.pow(a, static_cast<std::uint64_t>(e)); }

// Coefficient of X^i Y^j in x^alpha y^beta after x = a + X, y = b + sX + Y.
inline Elem sheared_coefficient(const PrimeField& f, const BinomialTable& C, Elem a, Elem b, Elem s, Int alpha,
                                Int beta, Int i, Int j) {
  if (j > beta) return 0;
  Elem total = 0;
  for (Int k = 0; k <= i; ++k) {
    if (i - k > alpha || beta - j - k < 0) continue;
    Elem term = f.mul(C(alpha, i - k), power(f, a, alpha - i + k));
    term = f.mul(term, f.mul(C(beta, j), C(beta - j, k)));
    term = f.mul(term, f.mul(power(f, b, beta - j - k), power(f, s, k)));
    total = f.add(total, term);
  }
  return total;
}

// Coefficient of X^i Y^j in x^alpha y^beta after x = a + Y, y = b + X.
inline Elem swapped_coefficient(const PrimeField& f, const BinomialTable& C, Elem a, Elem b, Int alpha, Int beta,
                                Int i, Int j) {
  if (j > alpha || i > beta) return 0;
  return f.mul(f.mul(C(alpha, j), power(f, a, alpha - j)), f.mul(C(beta, i), power(f, b, beta - i)));
}

inline std::size_t monomial_index(Int d, Int alpha, Int beta) {
  Int off = 0;
  for (Int k = 0; k < alpha; ++k) off += d - k + 1;
  return static_cast<std::size_t>(off + beta);
}

inline std::vector<Row> condition_matrix(const CoordinateAssignment& a, const std::vector<Int>& mults, Int d,
                                         const PrimeField& f) {
  if (mults.size() != a.points.size()) throw ContractError("multiplicity count does not match coordinates");
  std::vector<Row> rows;
  if (d < 0) return rows;
  const std::size_t n = static_cast<std::size_t>(forms_of_degree(d));
  const BinomialTable C(d + 1, f);
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    const auto& p = a.points[k];
    const Int n_here = mults[k];
    if (n_here <= 0) continue;
    auto emit = [&](auto coefficient) {
      Row row(n, 0);
      bool nonzero = false;
      for (Int al = 0; al <= d; ++al)
        for (Int be = 0; al + be <= d; ++be) {
          Elem v = coefficient(al, be);
          row[monomial_index(d, al, be)] = v;
          nonzero = nonzero || v != 0;
        }
      if (nonzero) rows.push_back(std::move(row));
    };
    if (!p.parent) {
      for (Int i = 0; i < n_here; ++i)
        for (Int j = 0; i + j < n_here; ++j)
          emit([&](Int al, Int be) { return sheared_coefficient(f, C, p.x, p.y, 0, al, be, i, j); });
      continue;
    }
    const Int m = mults[*p.parent - 1];
    const bool vertical = p.u == 0;
    const Elem s = vertical ? 0 : f.mul(p.v, f.inv(p.u));
    for (Int deg = m; deg < m + n_here; ++deg)
      for (Int j = 0; j < m + n_here - deg && j <= deg; ++j) {
        const Int i = deg - j;
        emit([&](Int al, Int be) {
          return vertical ? swapped_coefficient(f, C, p.x, p.y, al, be, i, j)
                          : sheared_coefficient(f, C, p.x, p.y, s, al, be, i, j);
        });
      }
  }
  return rows;
}

inline void require_prime_margin(const CoordinateAssignment& a, Int d) {
  if (static_cast<Int>(a.prime) <= 2 * (d + 1))
    throw ValidationError("prime: " + std::to_string(a.prime) + " is too small for degree " + std::to_string(d));
}

}  // namespace detail

inline Int hilbert_oracle(const CoordinateAssignment& a, const std::vector<Int>& mults, Int d) {
  if (d < 0) return 0;
  detail::require_prime_margin(a, d);
  PrimeField f(a.prime);
  const auto rank = rank_mod_p(detail::condition_matrix(a, mults, d, f), f);
  return forms_of_degree(d) - static_cast<Int>(rank);
}

// Generators needed in degree d + 1 beyond those coming from degree d.
inline Int nu_oracle(const CoordinateAssignment& a, const std::vector<Int>& mults, Int d) {
  const Int target = hilbert_oracle(a, mults, d + 1);
  if (d < 0) return target;
  detail::require_prime_margin(a, d + 1);
  PrimeField f(a.prime);
  const std::size_t n = static_cast<std::size_t>(forms_of_degree(d));
  const auto kernel = kernel_basis(detail::condition_matrix(a, mults, d, f), n, f);
  const std::size_t n1 = static_cast<std::size_t>(forms_of_degree(d + 1));
  TrailingEchelon span(f);
  for (int var = 0; var < 3; ++var) {
    for (const auto& v : kernel) {
      if (static_cast<Int>(span.rank()) == target) break;
      Row w(n1, 0);
      for (Int al = 0; al <= d; ++al)
        for (Int be = 0; al + be <= d; ++be) {
          const Elem x = v[detail::monomial_index(d, al, be)];
          if (!x) continue;
          const Int al1 = al + (var == 1), be1 = be + (var == 2);
          w[detail::monomial_index(d + 1, al1, be1)] = x;
        }
      span.insert(std::move(w));
    }
  }
  return target - static_cast<Int>(span.rank());
}

struct OracleDegree {
  Int degree = 0;
  Int h_oracle = 0, h_pipeline = 0;
  Int nu_oracle = 0, nu_pipeline = 0;  // generators in this degree
  bool agree() const { return h_oracle == h_pipeline && nu_oracle == nu_pipeline; }
};

struct OracleReport {
  CoordinateAssignment coordinates;
  std::vector<OracleDegree> degrees;  // 0..regularity bound + 2
  bool all_agree() const {
    for (const auto& d : degrees)
      if (!d.agree()) return false;
    return true;
  }
};

inline OracleReport oracle_report(const FatPointScheme& s, std::uint64_t seed, std::uint64_t prime = 32003) {
  require_valid(s.config);
  require_proximity(s);
  Int max_mult = 0;
  for (Int m : s.mults) max_mult = std::max(max_mult, m);
  OracleReport out;
  out.coordinates = sample_coordinates(s.config, seed, prime, 32, max_mult);
  const auto rep = resolve(s);
  const Int last = regularity_bound(s) + 2;
  detail::require_prime_margin(out.coordinates, last + 1);
  for (Int d = 0; d <= last; ++d) {
    OracleDegree row;
    row.degree = d;
    row.h_oracle = hilbert_oracle(out.coordinates, s.mults, d);
    row.nu_oracle = nu_oracle(out.coordinates, s.mults, d - 1);
    const auto k = static_cast<std::size_t>(d);
    row.h_pipeline = k < rep.h.size() ? rep.h[k] : hilbert_function(s, d);
    row.nu_pipeline = k < rep.nu.size() ? rep.nu[k] : 0;
    out.degrees.push_back(row);
  }
  return out;
}

}  // namespace fatpoints
