#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatpoints/configuration.hpp"
#include "fatpoints/lattice.hpp"
#include "fatpoints/negcurves.hpp"

namespace fatpoints {

// When `effective` is false, `moving` holds the class reached when the
// subtraction loop certified non-effectivity.
struct ZariskiDecomposition {
  bool effective = true;
  ClassVector moving;
  ClassVector fixed;
  std::vector<ClassVector> trace;
};

namespace detail {

inline void require_engine_kind(const PointConfig& c) {
  if (c.curve_kind == CurveKind::cubic_uniform)
    throw ContractError("uniform classes are decomposed by the uniform cohomology rules");
}

// A = c*e0 - sum w_i e_i with A.C >= 1 on every candidate curve.
inline ClassVector ample_witness(const PointConfig& c) {
  const std::size_t r = c.size();
  const auto prox = proximity_matrix(c);
  std::vector<Int> w(r + 1, 1);
  Int total = 0;
  for (std::size_t i = r; i >= 1; --i) {
    for (std::size_t k : prox.proximate_to(i)) w[i] = checked_add(w[i], w[k]);
    total = checked_add(total, w[i]);
  }
  std::vector<Int> m(w.begin() + 1, w.end());
  return {checked_add(total, 1), std::move(m)};
}

}  // namespace detail

inline bool is_nef(const ClassVector& f, const PointConfig& c, const NegativeCurveList& curves) {
  detail::require_engine_kind(c);
  if (f.rank() != c.size()) throw ContractError("class rank does not match the configuration");
  if (c.curve_kind == CurveKind::cubic_flex) {
    auto nb = nef_basis_coefficients(f);
    return nb.all_nonnegative() && nb.minus_k_pairing >= 0;
  }
  const std::size_t r = f.rank();
  if (intersect(f, ClassVector::e0(r)) < 0) return false;
  for (const auto& curve : curves.entries)
    if (intersect(f, curve.cls) < 0) return false;
  // With a single point the ruling e0 - e1 bounds the nef cone as well.
  if (r == 1 && intersect(f, ClassVector::e0(1) - ClassVector::e(1, 1)) < 0) return false;
  return true;
}

inline ZariskiDecomposition zariski_decompose(const ClassVector& f, const PointConfig& c,
                                              const NegativeCurveList& curves) {
  detail::require_engine_kind(c);
  const std::size_t r = c.size();
  if (f.rank() != r) throw ContractError("class rank does not match the configuration");
  const bool flex = c.curve_kind == CurveKind::cubic_flex;

  const ClassVector witness = detail::ample_witness(c);
  for (const auto& curve : curves.entries) {
    if (self_intersection(curve.cls) >= 0)
      throw InternalError("candidate " + curve.cls.to_string() + " is not negative");
    if (intersect(witness, curve.cls) < 1)
      throw InternalError("ample witness fails on " + curve.cls.to_string());
  }

  // Budget: F.A plus the lowest value F.A can reach while d >= 0.
  Int positive = 0;
  for (Int x : f.m()) positive = checked_add(positive, x > 0 ? x : 0);
  Int budget = checked_add(checked_add(intersect(f, witness),
                                       checked_mul(positive, checked_sub(witness.d(), 1))),
                           1);

  ZariskiDecomposition out;
  out.moving = f;
  out.fixed = ClassVector::zero(r);
  const ClassVector minus_k = anticanonical_class(r);
  for (Int steps = 0;; ++steps) {
    ClassVector& cur = out.moving;
    if (cur.d() < 0) {
      out.effective = false;
      return out;
    }
    if (is_nef(cur, c, curves)) return out;
    const ClassVector* pick = nullptr;
    if (flex && r > 9 && intersect(cur, minus_k) < 0) pick = &minus_k;
    for (std::size_t k = 0; !pick && k < curves.entries.size(); ++k)
      if (intersect(cur, curves.entries[k].cls) < 0) pick = &curves.entries[k].cls;
    if (!pick) {
      if (!flex && r == 1) {
        out.effective = false;
        return out;
      }
      throw InternalError("class " + cur.to_string() + " is not nef but meets no candidate negatively");
    }
    if (steps >= budget) throw InternalError("Zariski subtraction exceeded its iteration budget");
    const Int before = intersect(cur, witness);
    cur -= *pick;
    out.fixed += *pick;
    out.trace.push_back(*pick);
    if (intersect(cur, witness) >= before)
      throw InternalError("Zariski subtraction failed to decrease the witness pairing");
  }
}

}  // namespace fatpoints
