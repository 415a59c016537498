#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/errors.hpp"

namespace fatpoints {

// Arithmetic modulo a prime below 2^31.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= (1ULL << 31) || !is_prime(p))
      throw ValidationError("prime: " + std::to_string(p) + " is not an odd prime below 2^31");
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
      if (n % q == 0) return false;
    return true;
  }

  std::uint64_t prime() const { return p_; }
  Elem reduce(std::int64_t x) const {
    const auto p = static_cast<std::int64_t>(p_);
    return static_cast<Elem>(((x % p) + p) % p);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    for (a %= p_; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  Elem inv(Elem a) const {
    if (a % p_ == 0) throw InternalError("inverse of zero mod " + std::to_string(p_));
    return pow(a, p_ - 2);
  }
  bool is_square(Elem a) const { return a % p_ == 0 || pow(a, (p_ - 1) / 2) == 1; }

  // Tonelli-Shanks.
  std::optional<Elem> sqrt(Elem a) const {
    a %= p_;
    if (a == 0) return 0;
    if (!is_square(a)) return std::nullopt;
    std::uint64_t q = p_ - 1, s = 0;
    while (q % 2 == 0) q /= 2, ++s;
    Elem z = 2;
    while (is_square(z)) ++z;
    Elem m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
      Elem i = 0, t2 = t;
      while (t2 != 1) t2 = mul(t2, t2), ++i;
      Elem b = c;
      for (Elem k = 0; k + 1 < m - i; ++k) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return r;
  }

 private:
  std::uint64_t p_;
};

using Row = std::vector<PrimeField::Elem>;

// In-place reduced row echelon form; returns pivot columns in row order.
inline std::vector<std::size_t> rref(std::vector<Row>& a, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const auto iv = f.inv(a[row][col]);
    for (auto& x : a[row]) x = f.mul(x, iv);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k == row || a[k][col] == 0) continue;
      const auto factor = a[k][col];
      for (std::size_t j = col; j < cols; ++j)
        if (a[row][j]) a[k][j] = f.sub(a[k][j], f.mul(factor, a[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return pivots;
}

inline std::size_t rank_mod_p(std::vector<Row> a, const PrimeField& f) { return rref(a, f).size(); }

// Kernel basis of a matrix with `cols` columns; vector k has its last nonzero
// entry at the k-th free column.
inline std::vector<Row> kernel_basis(std::vector<Row> a, std::size_t cols, const PrimeField& f) {
  const auto pivots = rref(a, f);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (pivots[i] < free) v[pivots[i]] = f.neg(a[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Echelon basis keyed by the last nonzero column of each row.
class TrailingEchelon {
 public:
  explicit TrailingEchelon(const PrimeField& f) : f_(f) {}

  std::size_t rank() const { return rows_.size(); }

  // Returns true when v was independent of the stored rows.
  bool insert(Row v) {
    for (std::size_t c = v.size(); c-- > 0;) {
      if (v[c] == 0) continue;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        const auto iv = f_.inv(v[c]);
        for (std::size_t j = 0; j <= c; ++j) v[j] = f_.mul(v[j], iv);
        rows_.emplace(c, std::move(v));
        return true;
      }
      const auto factor = v[c];
      const Row& p = it->second;
      for (std::size_t j = 0; j <= c; ++j)
        if (p[j]) v[j] = f_.sub(v[j], f_.mul(factor, p[j]));
    }
    return false;
  }

 private:
  const PrimeField& f_;
  std::map<std::size_t, Row> rows_;
};

}  // namespace fatpoints
