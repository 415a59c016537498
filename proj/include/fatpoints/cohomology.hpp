#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/configuration.hpp"
#include "fatpoints/lattice.hpp"
#include "fatpoints/negcurves.hpp"
#include "fatpoints/zariski.hpp"

namespace fatpoints {

struct BaseLocus {
  enum class Kind { none, point, divisor };
  Kind kind = Kind::none;
  std::string description;  // "E9", "E9-E10", ...
};

struct CohomologyAnswer {
  Int h0 = 0;
  std::optional<Int> h1;
  ClassVector moving_part;
  std::vector<std::string> notes;
  BaseLocus base_locus;
};

inline Int chi(const ClassVector& f) {
  const Int twice = checked_sub(self_intersection(f), intersect(canonical_class(f.rank()), f));
  if (twice % 2 != 0) throw InternalError("Riemann-Roch parity failed for " + f.to_string());
  return twice / 2 + 1;
}

inline Int regularity_bound(const FatPointScheme& s) { return s.total_multiplicity() - 1; }

namespace detail {

inline CohomologyAnswer conic_answer(const ZariskiDecomposition& z) {
  CohomologyAnswer out;
  if (!z.effective) {
    out.moving_part = ClassVector::zero(z.moving.rank());
    out.notes.push_back("not effective");
    return out;
  }
  out.moving_part = z.moving;
  out.h0 = chi(z.moving);
  out.h1 = 0;
  out.notes.push_back("nef part is regular");
  return out;
}

}  // namespace detail

inline CohomologyAnswer h0_conic(const ClassVector& f, const PointConfig& c,
                                 const NegativeCurveList& curves) {
  if (c.curve_kind != CurveKind::line && c.curve_kind != CurveKind::conic)
    throw ContractError("h0_conic covers line and conic configurations");
  return detail::conic_answer(zariski_decompose(f, c, curves));
}

// te0 - mK on the blowup at r points.
inline ClassVector uniform_class(Int t, Int m, std::size_t r) {
  return {checked_add(t, checked_mul(3, m)), std::vector<Int>(r, m)};
}

enum class Membership { yes, no, unknown };

inline Membership lambda_contains(const LambdaSpec& lambda, Int t, Int m, std::size_t r) {
  if (t == 0 && m == 0) return Membership::yes;
  if (checked_add(checked_mul(3, t), checked_mul(9 - static_cast<Int>(r), m)) != 0)
    return Membership::no;
  switch (lambda.kind) {
    case LambdaSpec::Kind::trivial: return Membership::no;
    case LambdaSpec::Kind::order:
      if (r != 9) return Membership::unknown;
      return m % lambda.order == 0 ? Membership::yes : Membership::no;
    case LambdaSpec::Kind::members:
      for (const auto& [mt, mm] : lambda.members)
        if (mt == t && mm == m) return Membership::yes;
      return Membership::unknown;
  }
  return Membership::unknown;
}

namespace detail {

inline bool decide(const LambdaSpec& lambda, Int t, Int m, std::size_t r) {
  switch (lambda_contains(lambda, t, m, r)) {
    case Membership::yes: return true;
    case Membership::no: return false;
    case Membership::unknown: break;
  }
  throw UnsupportedError("lambda underdetermined: membership of " + uniform_class(t, m, r).to_string() +
                         " is not specified");
}

}  // namespace detail

// Least l > 0 with -lK in the kernel, searching up to `bound`; 0 if none.
inline Int lambda_order(const LambdaSpec& lambda, Int bound) {
  for (Int l = 1; l <= bound; ++l)
    if (detail::decide(lambda, 0, l, 9)) return l;
  return 0;
}

inline CohomologyAnswer h0_uniform(Int t, Int m, std::size_t r, const LambdaSpec& lambda) {
  if (r < 9) throw ContractError("uniform rules need at least 9 points");
  if (m < 0) throw ContractError("uniform rules need m >= 0");
  CohomologyAnswer out;
  out.moving_part = ClassVector::zero(r);
  if (m == 0) {
    out.notes.push_back("multiple of e0");
    if (t >= 0) {
      out.h0 = forms_of_degree(t);
      out.h1 = 0;
      out.moving_part = uniform_class(t, 0, r);
    }
    return out;
  }
  if (t < 0) {
    out.notes.push_back("not effective (t < 0)");
    return out;
  }
  const ClassVector f = uniform_class(t, m, r);
  const ClassVector minus_k = anticanonical_class(r);
  if (r == 9) {
    if (t > 0) {
      out.moving_part = f;
      out.h0 = chi(f);
      out.h1 = 0;
      out.notes.push_back("r=9, t>0: regular");
      return out;
    }
    Int s = 0;
    while (!detail::decide(lambda, 0, m - s, r)) ++s;
    const Int j = m - s;
    Int lam = 0;
    if (j > 0) {
      const Int l = lambda_order(lambda, j);
      if (l == 0 || j % l != 0) throw ValidationError("lambda specification is inconsistent");
      lam = j / l;
    }
    out.moving_part = uniform_class(0, j, r);
    out.h0 = lam + 1;
    out.h1 = lam;
    out.notes.push_back("r=9, t=0: moving part -" + std::to_string(j) + "K");
    return out;
  }
  if (intersect(minus_k, f) > 0) {
    out.moving_part = f;
    out.h0 = chi(f);
    out.h1 = 0;
    out.notes.push_back("-K.F > 0: regular");
    return out;
  }
  if (t == 0) {
    out.h0 = 1;
    out.h1 = 0;
    out.notes.push_back("-K.F <= 0, t=0: moving part 0");
    return out;
  }
  Int s = 0;
  while (intersect(minus_k, uniform_class(t, m - s, r)) < 0) ++s;
  const ClassVector g = uniform_class(t, m - s, r);
  if (intersect(minus_k, g) > 0) {
    out.moving_part = g;
    out.h0 = chi(g);
    out.h1 = 0;
    out.notes.push_back("subtract " + std::to_string(s) + "(-K)");
  } else if (detail::decide(lambda, t, m - s, r)) {
    out.moving_part = g;
    out.h0 = checked_add(chi(g), 1);
    out.h1 = 1;
    out.notes.push_back("subtract " + std::to_string(s) + "(-K); remainder in lambda");
  } else {
    out.moving_part = uniform_class(t, m - s - 1, r);
    out.h0 = chi(out.moving_part);
    out.h1 = 0;
    out.notes.push_back("subtract " + std::to_string(s + 1) + "(-K)");
  }
  return out;
}

inline BaseLocus flex_base_locus(const NefBasisCoefficients& nb) {
  const auto& a = nb.a;
  const std::size_t r = a.size() - 1;
  auto only = [&](std::initializer_list<std::size_t> allowed) {
    for (std::size_t i = 0; i <= r; ++i) {
      bool ok = false;
      for (std::size_t k : allowed) ok = ok || k == i;
      if (!ok && a[i] != 0) return false;
    }
    return true;
  };
  auto at = [&](std::size_t i) { return i <= r ? a[i] : 0; };
  const bool h8_lead = r >= 8 && at(8) == 1;
  if (h8_lead && at(10) == 1 && only({8, 9, 10})) return {BaseLocus::Kind::divisor, "E9-E10"};
  if (h8_lead && at(9) > 0 && only({8, 9})) return {BaseLocus::Kind::divisor, "E9"};
  const bool is_h8 = h8_lead && only({8});
  const bool h8_plus_h9 = h8_lead && only({8, 9});
  if (is_h8 || (nb.minus_k_pairing == 1 && !h8_plus_h9)) {
    const auto j = static_cast<std::size_t>(nb.top_index());
    if (j == r) return {BaseLocus::Kind::point, "point"};
    return {BaseLocus::Kind::divisor, "E" + std::to_string(j + 1)};
  }
  return {};
}

inline CohomologyAnswer h0_flex(const ClassVector& f) {
  const auto nb = nef_basis_coefficients(f);
  if (!nb.all_nonnegative() || nb.minus_k_pairing < 0)
    throw ContractError("h0_flex needs a nef class, got " + f.to_string());
  CohomologyAnswer out;
  out.moving_part = f;
  const Int sq = self_intersection(f);
  if (nb.minus_k_pairing >= 1)
    out.h1 = 0;
  else if (sq > 0)
    out.h1 = 1;
  else
    out.h1 = intersect(f, ClassVector::e(1, f.rank()));
  out.h0 = checked_add(chi(f), *out.h1);
  out.base_locus = flex_base_locus(nb);
  out.notes.push_back("flex nef class, h1 = " + std::to_string(*out.h1));
  return out;
}

// Everything the per-class rules need to know about one configuration.
struct CaseContext {
  PointConfig config;
  NegativeCurveList curves;  // empty for cubic_uniform

  CurveKind kind() const { return config.curve_kind; }
  std::size_t rank() const { return config.size(); }
  const LambdaSpec& lambda() const { return *config.lambda; }
};

inline CaseContext make_context(const PointConfig& c) {
  require_valid(c);
  CaseContext ctx{c, {}};
  switch (c.curve_kind) {
    case CurveKind::line:
    case CurveKind::conic: ctx.curves = enumerate_negative_curves(c); break;
    case CurveKind::cubic_flex: ctx.curves = flex_candidate_fixed_classes(c.size()); break;
    case CurveKind::cubic_uniform:
      if (c.size() < 9) throw UnsupportedError("uniform cubic rules need at least 9 points");
      break;
  }
  return ctx;
}

// Writes a uniform class as te0 - mK; throws when the class is not uniform.
inline std::pair<Int, Int> uniform_parameters(const ClassVector& f) {
  const Int m = f.rank() == 0 ? 0 : f.m(1);
  for (Int x : f.m())
    if (x != m) throw UnsupportedError("class " + f.to_string() + " is not uniform");
  return {checked_sub(f.d(), checked_mul(3, m)), m};
}

struct ClassAnalysis {
  CohomologyAnswer cohomology;
  ZariskiDecomposition decomposition;
};

inline ClassAnalysis analyze(const ClassVector& f, const CaseContext& ctx) {
  if (f.rank() != ctx.rank()) throw ContractError("class rank does not match the configuration");
  ClassAnalysis out;
  switch (ctx.kind()) {
    case CurveKind::line:
    case CurveKind::conic:
      out.decomposition = zariski_decompose(f, ctx.config, ctx.curves);
      out.cohomology = detail::conic_answer(out.decomposition);
      break;
    case CurveKind::cubic_flex:
      out.decomposition = zariski_decompose(f, ctx.config, ctx.curves);
      if (out.decomposition.effective) {
        out.cohomology = h0_flex(out.decomposition.moving);
      } else {
        out.cohomology.moving_part = ClassVector::zero(f.rank());
        out.cohomology.notes.push_back("not effective");
      }
      break;
    case CurveKind::cubic_uniform: {
      auto [t, m] = uniform_parameters(f);
      out.cohomology = h0_uniform(t, m, ctx.rank(), ctx.lambda());
      auto& z = out.decomposition;
      z.effective = out.cohomology.h0 > 0;
      z.moving = z.effective ? out.cohomology.moving_part : f;
      z.fixed = z.effective ? f - z.moving : ClassVector::zero(f.rank());
      break;
    }
  }
  return out;
}

inline Int h0(const ClassVector& f, const CaseContext& ctx) { return analyze(f, ctx).cohomology.h0; }

}  // namespace fatpoints
