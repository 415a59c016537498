#pragma once

#include <compare>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fatpoints/checked.hpp"

namespace fatpoints {

// The class d*e0 - m1*e1 - ... - mr*er on the blowup of the plane at r points.
class ClassVector {
 public:
  ClassVector() = default;
  ClassVector(Int d, std::vector<Int> m) : d_(d), m_(std::move(m)) {}

  static ClassVector zero(std::size_t r) { return {0, std::vector<Int>(r, 0)}; }
  static ClassVector e0(std::size_t r) { return {1, std::vector<Int>(r, 0)}; }
  // e_i, 1 <= i <= r.
  static ClassVector e(std::size_t i, std::size_t r) {
    if (i == 0 || i > r) throw ContractError("exceptional index out of range");
    ClassVector v = zero(r);
    v.m_[i - 1] = -1;
    return v;
  }

  Int d() const { return d_; }
  const std::vector<Int>& m() const { return m_; }
  Int m(std::size_t i) const { return m_.at(i - 1); }
  std::size_t rank() const { return m_.size(); }

  bool is_zero() const {
    if (d_ != 0) return false;
    for (Int x : m_)
      if (x != 0) return false;
    return true;
  }

  ClassVector& operator+=(const ClassVector& o) {
    check_rank(o);
    d_ = checked_add(d_, o.d_);
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i] = checked_add(m_[i], o.m_[i]);
    return *this;
  }
  ClassVector& operator-=(const ClassVector& o) {
    check_rank(o);
    d_ = checked_sub(d_, o.d_);
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i] = checked_sub(m_[i], o.m_[i]);
    return *this;
  }
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator-(ClassVector a) {
    a.d_ = checked_sub(0, a.d_);
    for (Int& x : a.m_) x = checked_sub(0, x);
    return a;
  }
  friend ClassVector operator*(Int k, ClassVector a) {
    a.d_ = checked_mul(k, a.d_);
    for (Int& x : a.m_) x = checked_mul(k, x);
    return a;
  }

  friend bool operator==(const ClassVector&, const ClassVector&) = default;
  friend auto operator<=>(const ClassVector&, const ClassVector&) = default;

  void check_rank(const ClassVector& o) const {
    if (o.rank() != rank())
      throw ContractError("rank mismatch: " + std::to_string(rank()) + " vs " +
                          std::to_string(o.rank()));
  }

  // "5e0-3e1-2e2", "e5-e6", "0".
  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    auto term = [&](Int c, const std::string& name) {
      if (c == 0) return;
      if (c < 0)
        out << '-';
      else if (!first)
        out << '+';
      Int a = c < 0 ? -c : c;
      if (a != 1) out << a;
      out << name;
      first = false;
    };
    term(d_, "e0");
    for (std::size_t i = 0; i < m_.size(); ++i) term(-m_[i], "e" + std::to_string(i + 1));
    if (first) out << '0';
    return out.str();
  }

 private:
  Int d_ = 0;
  std::vector<Int> m_;
};

inline Int intersect(const ClassVector& f, const ClassVector& g) {
  f.check_rank(g);
  Int s = checked_mul(f.d(), g.d());
  for (std::size_t i = 0; i < f.rank(); ++i) s = checked_sub(s, checked_mul(f.m()[i], g.m()[i]));
  return s;
}

inline Int self_intersection(const ClassVector& f) { return intersect(f, f); }

// K = -3e0 + e1 + ... + er.
inline ClassVector canonical_class(std::size_t r) { return {-3, std::vector<Int>(r, -1)}; }

inline ClassVector anticanonical_class(std::size_t r) { return {3, std::vector<Int>(r, 1)}; }

// Pull a class back to a blowup at more points (new coefficients zero).
inline ClassVector extend_rank(const ClassVector& f, std::size_t r) {
  if (r < f.rank()) throw ContractError("extend_rank cannot shrink a class");
  std::vector<Int> m = f.m();
  m.resize(r, 0);
  return {f.d(), std::move(m)};
}

// H_0 = e0, H_1 = e0-e1, H_2 = 2e0-e1-e2, H_i = 3e0-e1-...-ei.
inline ClassVector h_class(std::size_t i, std::size_t r) {
  if (i > r) throw ContractError("H index exceeds rank");
  std::vector<Int> m(r, 0);
  for (std::size_t k = 0; k < i; ++k) m[k] = 1;
  Int d = i < 3 ? static_cast<Int>(i == 0 ? 1 : i) : 3;
  return {d, std::move(m)};
}

struct NefBasisCoefficients {
  std::vector<Int> a;  // a_0..a_r
  Int minus_k_pairing = 0;

  // Largest index with a positive coefficient, or -1 for the zero class.
  int top_index() const {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] > 0) return static_cast<int>(i);
    return -1;
  }
  bool all_nonnegative() const {
    for (Int x : a)
      if (x < 0) return false;
    return true;
  }
};

inline NefBasisCoefficients nef_basis_coefficients(const ClassVector& f) {
  const std::size_t r = f.rank();
  if (r < 3) throw ContractError("H-basis needs at least 3 points");
  NefBasisCoefficients out;
  out.a.assign(r + 1, 0);
  out.a[r] = f.m(r);
  for (std::size_t i = 1; i < r; ++i) out.a[i] = checked_sub(f.m(i), f.m(i + 1));
  out.a[0] = checked_sub(checked_sub(checked_sub(f.d(), f.m(1)), f.m(2)), f.m(3));
  out.minus_k_pairing = intersect(anticanonical_class(r), f);
  return out;
}

inline ClassVector from_nef_basis(const std::vector<Int>& a) {
  if (a.empty()) throw ContractError("empty H-basis coefficient list");
  const std::size_t r = a.size() - 1;
  ClassVector f = ClassVector::zero(r);
  for (std::size_t i = 0; i <= r; ++i) f += a[i] * h_class(i, r);
  return f;
}

}  // namespace fatpoints
