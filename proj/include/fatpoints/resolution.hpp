#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "fatpoints/cohomology.hpp"
#include "fatpoints/configuration.hpp"
#include "fatpoints/lattice.hpp"
#include "fatpoints/syzygy.hpp"

namespace fatpoints {

// sum over d of R[-d]^mult
struct GradedFreeModule {
  std::map<Int, Int> shifts;

  Int rank() const {
    Int n = 0;
    for (auto [d, mult] : shifts) n = checked_add(n, mult);
    return n;
  }
  Int hilbert(Int n) const {
    Int h = 0;
    for (auto [d, mult] : shifts) h = checked_add(h, checked_mul(mult, forms_of_degree(n - d)));
    return h;
  }
  void add(Int degree, Int mult) {
    if (mult == 0) return;
    if (mult < 0) throw InternalError("negative multiplicity in a free module");
    shifts[degree] = checked_add(shifts[degree], mult);
  }
  std::string to_string() const {
    if (shifts.empty()) return "0";
    std::string s;
    for (auto [d, mult] : shifts) {
      if (!s.empty()) s += " + ";
      s += "R[" + std::to_string(-d) + "]";
      if (mult != 1) s += "^" + std::to_string(mult);
    }
    return s;
  }

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

struct DegreeTrace {
  Int degree = 0;
  Int h = 0;
  bool effective = false;
  ClassVector moving;
  ClassVector fixed;
  std::vector<ClassVector> trace;
  std::string rule;
  Int nu_next = 0;
};

struct ResolutionReport {
  Int alpha = 0;
  Int cutoff = 0;
  std::vector<Int> h;   // h[d] for 0 <= d <= cutoff
  std::vector<Int> nu;  // nu[d] for 0 <= d <= cutoff
  GradedFreeModule f0;
  GradedFreeModule f1;
  std::vector<DegreeTrace> degrees;
};

// Greedy recovery of a free module from its Hilbert function; generators are
// only placed in degrees <= max_degree and the rest must match exactly.
inline GradedFreeModule free_module_from_hilbert(const std::vector<Int>& delta,
                                                 Int max_degree = std::numeric_limits<Int>::max()) {
  GradedFreeModule out;
  for (std::size_t n = 0; n < delta.size(); ++n) {
    const Int d = static_cast<Int>(n);
    const Int residual = checked_sub(delta[n], out.hilbert(d));
    if (residual == 0) continue;
    if (residual < 0 || d > max_degree)
      throw InternalError("inconsistent Hilbert data at degree " + std::to_string(d));
    out.add(d, residual);
  }
  return out;
}

// Binomial formula for h_{I_Z}(n), points on a line.
inline Int line_hilbert_formula(const FatPointScheme& s, Int n) {
  const auto pd = line_partition_data(s);
  const Int m1 = s.mults.front();
  Int h = forms_of_degree(n - m1);
  for (Int a : pd.a) h = checked_add(h, checked_sub(forms_of_degree(n - a), choose2(n - a + 1)));
  return h;
}

// Same count written with the m1 - m2 + 1 generators of degree m1 grouped.
inline Int line_hilbert_formula_grouped(const FatPointScheme& s, Int n) {
  const auto pd = line_partition_data(s);
  const Int m1 = s.mults.front();
  const Int m2 = s.mults.size() > 1 ? s.mults[1] : 0;
  Int h = checked_sub(checked_mul(m1 - m2 + 1, forms_of_degree(n - m1)),
                      checked_mul(m1 - m2, choose2(n - m1 + 1)));
  for (Int i = 0; i < m2; ++i) {
    const Int a = pd.a[static_cast<std::size_t>(i)];
    h = checked_add(h, checked_sub(forms_of_degree(n - a), choose2(n - a + 1)));
  }
  return h;
}

namespace detail {

struct Prepared {
  FatPointScheme scheme;
  CaseContext ctx;
};

inline Prepared prepare_scheme(const FatPointScheme& input) {
  require_valid(input.config);
  require_proximity(input);
  FatPointScheme s = input;
  switch (s.config.curve_kind) {
    case CurveKind::cubic_uniform: {
      s = canonical_reorder(s).scheme;
      if (s.size() == 0) break;
      for (Int m : s.mults)
        if (m != s.mults.front())
          throw UnsupportedError("uniform cubic rules need equal multiplicities on the nonzero points");
      if (s.size() < 9) throw UnsupportedError("uniform cubic rules need at least 9 points");
      break;
    }
    case CurveKind::cubic_flex:
      while (s.size() < 3) {
        const std::size_t id = s.size() + 1;
        s.config.points.push_back({id, s.size() == 0 ? std::nullopt : std::optional<std::size_t>(id - 1)});
        s.mults.push_back(0);
      }
      break;
    default: break;
  }
  if (s.total_multiplicity() == 0) return {s, CaseContext{s.config, {}}};
  return {s, make_context(s.config)};
}

inline void check_report(const ResolutionReport& rep, const std::vector<Int>& h_extended) {
  if (rep.f0.rank() - rep.f1.rank() != 1)
    throw InternalError("rank(F0) - rank(F1) is " + std::to_string(rep.f0.rank() - rep.f1.rank()));
  for (std::size_t n = 0; n < h_extended.size(); ++n) {
    const Int d = static_cast<Int>(n);
    if (checked_sub(rep.f0.hilbert(d), rep.f1.hilbert(d)) != h_extended[n])
      throw InternalError("Hilbert identity fails at degree " + std::to_string(d));
  }
}

}  // namespace detail

inline Int hilbert_function(const FatPointScheme& s, Int d) {
  auto p = detail::prepare_scheme(s);
  if (p.scheme.total_multiplicity() == 0) return d < 0 ? 0 : forms_of_degree(d);
  return h0(p.scheme.to_class(d), p.ctx);
}

inline ResolutionReport resolve(const FatPointScheme& input) {
  auto [s, ctx] = detail::prepare_scheme(input);
  ResolutionReport rep;
  const Int total = s.total_multiplicity();
  rep.cutoff = total + 1;
  const std::size_t span = static_cast<std::size_t>(rep.cutoff) + 1;

  if (total == 0) {
    for (Int d = 0; d <= rep.cutoff; ++d) rep.h.push_back(forms_of_degree(d));
    rep.nu.assign(span, 0);
    rep.nu[0] = 1;
    rep.f0.add(0, 1);
    std::vector<Int> ext;
    for (Int d = 0; d <= rep.cutoff + 3; ++d) ext.push_back(forms_of_degree(d));
    detail::check_report(rep, ext);
    return rep;
  }

  std::vector<ClassAnalysis> an;
  for (Int d = 0; d <= rep.cutoff + 3; ++d) an.push_back(analyze(s.to_class(d), ctx));
  std::vector<Int> h_ext;
  for (const auto& a : an) h_ext.push_back(a.cohomology.h0);
  rep.h.assign(h_ext.begin(), h_ext.begin() + static_cast<std::ptrdiff_t>(span));

  rep.nu.assign(span, 0);
  for (Int d = -1; d < rep.cutoff; ++d) {
    const auto sd = s_dim(s, d, ctx);
    rep.nu[static_cast<std::size_t>(d + 1)] = sd.value;
    if (d < 0) continue;
    const auto& a = an[static_cast<std::size_t>(d)];
    DegreeTrace t;
    t.degree = d;
    t.h = a.cohomology.h0;
    t.effective = a.decomposition.effective && a.cohomology.h0 > 0;
    t.moving = a.decomposition.moving;
    t.fixed = a.decomposition.fixed;
    t.trace = a.decomposition.trace;
    t.rule = sd.rule;
    t.nu_next = sd.value;
    rep.degrees.push_back(std::move(t));
  }

  rep.alpha = -1;
  for (std::size_t d = 0; d < span; ++d)
    if (rep.h[d] > 0) {
      rep.alpha = static_cast<Int>(d);
      break;
    }
  if (rep.alpha < 0) throw InternalError("no nonzero Hilbert value through the cutoff");

  for (std::size_t d = 0; d < span; ++d) rep.f0.add(static_cast<Int>(d), rep.nu[d]);
  std::vector<Int> delta;
  for (std::size_t n = 0; n < h_ext.size(); ++n)
    delta.push_back(checked_sub(rep.f0.hilbert(static_cast<Int>(n)), h_ext[n]));
  rep.f1 = free_module_from_hilbert(delta, rep.cutoff);

  detail::check_report(rep, h_ext);
  if (rep.nu[static_cast<std::size_t>(rep.alpha)] != rep.h[static_cast<std::size_t>(rep.alpha)])
    throw InternalError("generator count differs from h at the initial degree");
  for (std::size_t d = 0; d + 1 < h_ext.size(); ++d)
    if (h_ext[d + 1] < h_ext[d]) throw InternalError("Hilbert function decreases at degree " + std::to_string(d));
  if (ctx.kind() != CurveKind::cubic_flex) {
    for (std::size_t d = 0; d + 1 < span; ++d) {
      const auto& a = an[d];
      const auto& b = an[d + 1];
      if (a.cohomology.h0 == 0) continue;
      if (a.decomposition.fixed != b.decomposition.fixed && rep.nu[d + 1] == 0)
        throw InternalError("fixed part changes after degree " + std::to_string(d) +
                            " but no generator is recorded");
    }
  }
  return rep;
}

inline ResolutionReport resolve_line_closed_form(const FatPointScheme& s) {
  if (s.config.curve_kind != CurveKind::line) throw ContractError("closed form applies to line configurations");
  require_proximity(s);
  const auto pd = line_partition_data(s);
  const Int m1 = s.mults.front();
  ResolutionReport rep;
  rep.cutoff = s.total_multiplicity() + 1;
  rep.alpha = m1;
  for (Int a : pd.a) {
    rep.f0.add(a, 1);
    rep.f1.add(a + 1, 1);
  }
  rep.f0.add(m1, 1);
  rep.nu.assign(static_cast<std::size_t>(rep.cutoff) + 1, 0);
  for (auto [d, mult] : rep.f0.shifts) rep.nu.at(static_cast<std::size_t>(d)) = mult;
  for (Int d = 0; d <= rep.cutoff; ++d) rep.h.push_back(line_hilbert_formula(s, d));
  return rep;
}

}  // namespace fatpoints
