#pragma once

#include <string>

#include "fatpoints/cohomology.hpp"
#include "fatpoints/configuration.hpp"
#include "fatpoints/lattice.hpp"

namespace fatpoints {

struct SyzygyAnswer {
  Int value = 0;
  std::string rule;
};

namespace detail {

// H_8 + b9*H_9 + b10*H_10 with b9 or b10 positive.
inline bool flex_composite(const NefBasisCoefficients& nb) {
  const auto& a = nb.a;
  const std::size_t r = a.size() - 1;
  if (r < 9 || a[8] != 1) return false;
  for (std::size_t i = 0; i <= r; ++i)
    if (i != 8 && i != 9 && i != 10 && a[i] != 0) return false;
  return a[9] > 0 || (r >= 10 && a[10] > 0);
}

inline SyzygyAnswer uniform_s_of_nef(const ClassVector& h, const CaseContext& ctx) {
  if (h.is_zero()) return {0, "uniform: zero class"};
  const std::size_t r = ctx.rank();
  const Int mk = intersect(anticanonical_class(r), h);
  if (mk > 1) return {0, "uniform: -K.H > 1"};
  if (mk == 1) return {1, "uniform: -K.H = 1"};
  if (mk < 0) throw ContractError("uniform moving part " + h.to_string() + " is not nef");
  if (r == 10) return {1, "uniform: -K.H = 0, r = 10"};
  if (r == 9) {
    auto [t, m] = uniform_parameters(h);
    if (t != 0) throw InternalError("uniform class with -K.H = 0 at r = 9 must be a multiple of K");
    const Int a = lambda_order(ctx.lambda(), m);
    if (a == 0 || m % a != 0)
      throw InternalError("moving part -" + std::to_string(m) + "K is not in lambda");
    const Int b = m / a;
    return {checked_mul(checked_mul(3, b), a - 1), "uniform: r = 9, -abK gives 3b(a-1)"};
  }
  return {0, "uniform: -K.H = 0"};
}

inline SyzygyAnswer flex_s_of_nef(const ClassVector& h) {
  const auto nb = nef_basis_coefficients(h);
  if (!nb.all_nonnegative() || nb.minus_k_pairing < 0)
    throw ContractError("flex class " + h.to_string() + " is not nef");
  const auto& a = nb.a;
  const Int mk = nb.minus_k_pairing;
  const int j = nb.top_index();
  const bool j10_tail = mk == 0 && j == 10;
  bool type1 = false;
  for (std::size_t i = 0; i < 8 && i < a.size(); ++i) type1 = type1 || a[i] > 0;
  if (type1) {
    if (mk == 1 || j10_tail) return {1, "flex type I: -K.H = 1 or (-K.H = 0, j = 10)"};
    return {0, "flex type I"};
  }
  if (h.is_zero()) return {0, "flex: zero class"};
  if (flex_composite(nb))
    throw ContractError("H_8 + b9 H_9 + b10 H_10 is answered by the composite rule");
  const Int b8 = a.size() > 8 ? a[8] : 0;
  if (b8 == 0) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != 9 && a[i] != 0) throw InternalError("unexpected type II class " + h.to_string());
    return {0, "flex type II: b9 H_9"};
  }
  if (b8 == 1) return {1, "flex type II: H_8"};
  if (mk == 1 || j10_tail) return {2, "flex type II: b8 > 1 with -K.H = 1 or (-K.H = 0, j = 10)"};
  return {1, "flex type II: b8 > 1"};
}

}  // namespace detail

inline SyzygyAnswer s_of_nef(const ClassVector& h, const CaseContext& ctx) {
  switch (ctx.kind()) {
    case CurveKind::line:
    case CurveKind::conic: return {0, "nef on a conic"};
    case CurveKind::cubic_uniform: return detail::uniform_s_of_nef(h, ctx);
    case CurveKind::cubic_flex: return detail::flex_s_of_nef(h);
  }
  return {};
}

// S(H, e0) for the nef part of a class, including the flex composite shape.
inline SyzygyAnswer s_of_nef_part(const ClassVector& h, const CaseContext& ctx) {
  if (ctx.kind() == CurveKind::cubic_flex) {
    const auto nb = nef_basis_coefficients(h);
    if (nb.all_nonnegative() && nb.minus_k_pairing >= 0 && detail::flex_composite(nb))
      return {checked_add(nb.a[9], 1), "flex composite H_8 + b9 H_9 + b10 H_10: b9 + 1"};
  }
  return s_of_nef(h, ctx);
}

inline SyzygyAnswer s_dim(const FatPointScheme& s, Int d, const CaseContext& ctx) {
  if (d > regularity_bound(s)) return {0, "beyond regularity bound"};
  const ClassVector f = s.to_class(d);
  const ClassVector next = s.to_class(d + 1);
  const auto here = analyze(f, ctx);
  if (here.cohomology.h0 == 0) return {h0(next, ctx), "not effective: h0(F + e0)"};
  const ClassVector& h = here.decomposition.moving;
  const ClassVector e0 = ClassVector::e0(f.rank());
  const auto base = s_of_nef_part(h, ctx);
  const Int value = checked_sub(checked_add(base.value, h0(next, ctx)), h0(h + e0, ctx));
  if (value < 0) throw InternalError("negative cokernel dimension at degree " + std::to_string(d));
  return {value, base.rule};
}

inline bool s_vanish_by_degree(const ClassVector& f, const ClassVector& g, const ProximityMatrix& prox) {
  (void)prox;
  auto ok = [](const ClassVector& c) {
    Int sum = 0;
    for (Int x : c.m()) sum = checked_add(sum, x);
    return c.d() >= sum;
  };
  return ok(f) && ok(g);
}

}  // namespace fatpoints
