#include "soakit/gf.hpp"

#include <string>

#include "soakit/error.hpp"

namespace soakit {
namespace {

using Poly = std::vector<int>;  // low degree first, over GF(p)

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const int lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of code, with the constant term as the most significant
// digit (so increasing code walks the low-degree-first lexicographic order).
Poly monic_from_code(int code, int degree, int p) {
  Poly f(degree + 1, 0);
  f[degree] = 1;
  for (int i = degree - 1; i >= 0; --i) {
    f[i] = code % p;
    code /= p;
  }
  return f;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool irreducible(const Poly& f, int p) {
  const int h = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= h / 2; ++d) {
    for (int code = 0; code < ipow(p, d); ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(int p, int h) {
  for (int code = 0; code < ipow(p, h); ++code) {
    Poly f = monic_from_code(code, h, p);
    if (irreducible(f, p)) return f;
  }
  throw ConstructionError("no irreducible polynomial found");  // unreachable
}

Poly decode(int a, int p, int h) {
  Poly v(h);
  for (int i = 0; i < h; ++i) {
    v[i] = a % p;
    a /= p;
  }
  return v;
}

int encode(const Poly& v, int p) {
  int a = 0;
  for (std::size_t i = v.size(); i-- > 0;) a = a * p + v[i];
  return a;
}

}  // namespace

std::pair<int, int> prime_power_decomposition(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int h = 0;
  while (q % p == 0) {
    q /= p;
    ++h;
  }
  if (q != 1) return {0, 0};
  return {p, h};
}

FieldTable::FieldTable(int q) : q_(q) {
  auto [p, h] = prime_power_decomposition(q);
  if (p == 0) throw ParameterError(std::to_string(q) + " is not a prime power");
  if (q > 256) throw ParameterError("field order " + std::to_string(q) + " exceeds 256");
  p_ = p;
  h_ = h;
  poly_ = h == 1 ? Poly{0, 1} : least_irreducible(p, h);

  const auto qq = static_cast<std::size_t>(q);
  add_.resize(qq * qq);
  mul_.resize(qq * qq);
  neg_.resize(qq);
  inv_.assign(qq, 0);

  for (int a = 0; a < q; ++a) {
    const Poly va = decode(a, p, h);
    Poly vn(h);
    for (int i = 0; i < h; ++i) vn[i] = (p - va[i]) % p;
    neg_[a] = encode(vn, p);
    for (int b = 0; b < q; ++b) {
      const Poly vb = decode(b, p, h);
      Poly sum(h);
      for (int i = 0; i < h; ++i) sum[i] = (va[i] + vb[i]) % p;
      add_[index(a, b)] = encode(sum, p);

      Poly prod(2 * h, 0);
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p;
      Poly rem = poly_mod(prod, poly_, p);
      rem.resize(h, 0);
      mul_[index(a, b)] = encode(rem, p);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[index(a, b)] == 1) inv_[a] = b;
}

int FieldTable::inv(int a) const {
  if (a <= 0 || a >= q_) throw ParameterError("no inverse for element " + std::to_string(a));
  return inv_[a];
}

int FieldTable::pow(int a, unsigned e) const {
  int r = 1;
  while (e-- > 0) r = mul(r, a);
  return r;
}

int eval_poly(const FieldTable& f, std::span<const int> coeffs, int x) {
  if (!f.contains(x)) throw ParameterError("element " + std::to_string(x) + " outside GF(" + std::to_string(f.order()) + ")");
  int acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (!f.contains(coeffs[i]))
      throw ParameterError("coefficient " + std::to_string(coeffs[i]) + " outside GF(" + std::to_string(f.order()) + ")");
    acc = f.add(f.mul(acc, x), coeffs[i]);
  }
  return acc;
}

}  // namespace soakit
