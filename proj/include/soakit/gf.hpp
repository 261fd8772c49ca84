#pragma once

#include <span>
#include <utility>
#include <vector>

namespace soakit {

/// Lookup-table arithmetic for GF(q), q = p^h.
///
/// Elements are the integers 0..q-1: the coefficient vector of a polynomial
/// over GF(p), read low degree first, as base-p digits. 0 and 1 are the
/// additive and multiplicative identities. The defining polynomial is the
/// lexicographically least monic irreducible of degree h (coefficients
/// compared from the constant term up).
class FieldTable {
 public:
  /// Throws ParameterError unless q is a prime power in [2, 256].
  explicit FieldTable(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return h_; }

  /// Coefficients of the defining polynomial, low degree first (size h+1, monic).
  const std::vector<int>& polynomial() const noexcept { return poly_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int sub(int a, int b) const { return add_[index(a, neg_[b])]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  int inv(int a) const;
  int pow(int a, unsigned e) const;

  bool contains(int a) const noexcept { return a >= 0 && a < q_; }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * q_ + b; }

  int q_;
  int p_;
  int h_;
  std::vector<int> poly_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

/// Horner evaluation of sum coeffs[i] * x^i. Throws ParameterError on an
/// element outside the field.
int eval_poly(const FieldTable& f, std::span<const int> coeffs, int x);

/// Returns (p, h) with q = p^h, or (0, 0) if q is not a prime power.
std::pair<int, int> prime_power_decomposition(int q);

}  // namespace soakit
