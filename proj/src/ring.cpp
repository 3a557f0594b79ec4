/*
  This is ring.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/ring.h"

#include <algorithm>

namespace ivh {

namespace {

using Poly = std::vector<Coord>;  // ascending, no trailing zeros

void polyTrim(Poly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

Poly polyMul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty())
    return Poly();
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = coordAdd(r[i + j], coordMul(a[i], b[j]));
  return r;
}

// exact division by a monic polynomial
Poly polyDivExact(Poly num, const Poly& den) {
  if (den.empty() || den.back() != 1)
    throw InternalError("polyDivExact: divisor not monic");
  polyTrim(num);
  Poly q;
  if (num.size() < den.size()) {
    if (!num.empty())
      throw InternalError("polyDivExact: not divisible");
    return q;
  }
  q.assign(num.size() - den.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    Coord c = num[k + den.size() - 1];
    q[k] = c;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[k + j] = coordAdd(num[k + j], coordMul(-c, den[j]));
  }
  polyTrim(num);
  if (!num.empty())
    throw InternalError("polyDivExact: nonzero remainder");
  return q;
}

// cyclotomic polynomial Phi_n, by exact division of z^n - 1
Poly cyclotomic(int n) {
  Poly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0)
      num = polyDivExact(std::move(num), cyclotomic(d));
  return num;
}

}  // namespace

std::vector<Coord> GeomRing::minimalPolynomial(int m) {
  if (m < 4)
    throw DomainError("minimalPolynomial: bond value has no generator");
  /*
    2cos(pi/m) = z + z^{-1} for z a primitive 2m-th root of unity. Fold the
    palindromic Phi_{2m} into x = z + z^{-1} via the Dickson recurrence
    D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1} for z^j + z^{-j}.
  */
  Poly phi = cyclotomic(2 * m);
  int d = (static_cast<int>(phi.size()) - 1) / 2;
  if (static_cast<int>(phi.size()) != 2 * d + 1)
    throw InternalError("minimalPolynomial: cyclotomic of odd degree");
  std::vector<Poly> dick(static_cast<std::size_t>(d) + 1);
  dick[0] = Poly{2};
  if (d >= 1)
    dick[1] = Poly{0, 1};
  for (int j = 2; j <= d; ++j) {
    Poly t = polyMul(Poly{0, 1}, dick[static_cast<std::size_t>(j - 1)]);
    const Poly& prev = dick[static_cast<std::size_t>(j - 2)];
    if (t.size() < prev.size())
      t.resize(prev.size(), 0);
    for (std::size_t i = 0; i < prev.size(); ++i)
      t[i] = coordAdd(t[i], -prev[i]);
    polyTrim(t);
    dick[static_cast<std::size_t>(j)] = std::move(t);
  }
  Poly psi{phi[static_cast<std::size_t>(d)]};  // the central coefficient
  for (int j = 1; j <= d; ++j) {
    Coord c = phi[static_cast<std::size_t>(d + j)];
    if (c == 0)
      continue;
    const Poly& dj = dick[static_cast<std::size_t>(j)];
    if (psi.size() < dj.size())
      psi.resize(dj.size(), 0);
    for (std::size_t i = 0; i < dj.size(); ++i)
      psi[i] = coordAdd(psi[i], coordMul(c, dj[i]));
  }
  polyTrim(psi);
  if (psi.empty() || psi.back() != 1)
    throw InternalError("minimalPolynomial: fold is not monic");
  return psi;
}

GeomRing::GeomRing(const std::vector<int>& bonds) {
  d_bonds = bonds;
  std::sort(d_bonds.begin(), d_bonds.end());
  d_bonds.erase(std::unique(d_bonds.begin(), d_bonds.end()), d_bonds.end());
  for (int m : d_bonds)
    if (m < 4)
      throw DomainError("GeomRing: generators exist only for finite m >= 4");
  d_rank = 1;
  for (int m : d_bonds) {
    Poly psi = minimalPolynomial(m);
    int deg = static_cast<int>(psi.size()) - 1;
    d_deg.push_back(deg);
    d_stride.push_back(d_rank);
    d_rank *= deg;
    // powers x^k for k = 0 .. 2(deg-1), reduced mod psi
    std::vector<std::vector<Coord>> pows;
    std::vector<Coord> cur(static_cast<std::size_t>(deg), 0);
    cur[0] = 1;
    pows.push_back(cur);
    for (int k = 1; k <= 2 * (deg - 1); ++k) {
      std::vector<Coord> nxt(static_cast<std::size_t>(deg), 0);
      Coord top = cur[static_cast<std::size_t>(deg - 1)];
      for (int i = deg - 1; i > 0; --i)
        nxt[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      if (top != 0)
        for (int i = 0; i < deg; ++i)
          nxt[static_cast<std::size_t>(i)] = coordAdd(
              nxt[static_cast<std::size_t>(i)],
              coordMul(-top, psi[static_cast<std::size_t>(i)]));
      pows.push_back(nxt);
      cur = nxt;
    }
    d_pow.push_back(std::move(pows));
  }
}

int GeomRing::bondIndex(int m) const {
  for (std::size_t i = 0; i < d_bonds.size(); ++i)
    if (d_bonds[i] == m)
      return static_cast<int>(i);
  throw InternalError("GeomRing: bond value not registered");
}

GeomRing::Elt GeomRing::integer(Coord n) const {
  Elt e = zero();
  e[0] = n;
  return e;
}

GeomRing::Elt GeomRing::bondValue(int m) const {
  if (m == 2)
    return integer(0);
  if (m == 3)
    return integer(1);
  if (m == 0)
    return integer(2);  // infinite bond
  if (m == 1)
    return integer(-2);  // diagonal entry; never used by the reflection action
  Elt e = zero();
  int i = bondIndex(m);
  e[static_cast<std::size_t>(d_stride[static_cast<std::size_t>(i)])] = 1;
  return e;
}

bool GeomRing::isZero(const Elt& a) const {
  for (Coord c : a)
    if (c != 0)
      return false;
  return true;
}

void GeomRing::addInto(Elt& a, const Elt& b) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = coordAdd(a[i], b[i]);
}

void GeomRing::subInto(Elt& a, const Elt& b) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = coordAdd(a[i], -b[i]);
}

GeomRing::Elt GeomRing::mul(const Elt& a, const Elt& b) const {
  Elt r = zero();
  std::size_t ng = d_bonds.size();
  std::vector<int> ea(ng), eb(ng);
  for (int i = 0; i < d_rank; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0)
      continue;
    int rest = i;
    for (std::size_t g = ng; g-- > 0;) {
      ea[g] = rest / d_stride[g];
      rest %= d_stride[g];
    }
    for (int j = 0; j < d_rank; ++j) {
      if (b[static_cast<std::size_t>(j)] == 0)
        continue;
      rest = j;
      for (std::size_t g = ng; g-- > 0;) {
        eb[g] = rest / d_stride[g];
        rest %= d_stride[g];
      }
      Coord c = coordMul(a[static_cast<std::size_t>(i)],
                         b[static_cast<std::size_t>(j)]);
      // distribute the product of reduced generator powers
      struct Frame { int g; int idx; Coord c; };
      std::vector<Frame> stack{{0, 0, c}};
      while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.g == static_cast<int>(ng)) {
          r[static_cast<std::size_t>(f.idx)] =
              coordAdd(r[static_cast<std::size_t>(f.idx)], f.c);
          continue;
        }
        const std::vector<Coord>& exp =
            d_pow[static_cast<std::size_t>(f.g)]
                 [static_cast<std::size_t>(ea[static_cast<std::size_t>(f.g)] +
                                           eb[static_cast<std::size_t>(f.g)])];
        for (int k = 0; k < d_deg[static_cast<std::size_t>(f.g)]; ++k) {
          if (exp[static_cast<std::size_t>(k)] == 0)
            continue;
          stack.push_back({f.g + 1,
                           f.idx + k * d_stride[static_cast<std::size_t>(f.g)],
                           coordMul(f.c, exp[static_cast<std::size_t>(k)])});
        }
      }
    }
  }
  return r;
}

GeomRing::Elt GeomRing::mulInt(const Elt& a, Coord n) const {
  Elt r = a;
  for (Coord& c : r)
    c = coordMul(c, n);
  return r;
}

GeomRing::Elt GeomRing::neg(const Elt& a) const { return mulInt(a, -1); }

int GeomRing::sign(const Elt& a) const {
  bool pos = false, negv = false;
  for (Coord c : a) {
    if (c > 0)
      pos = true;
    if (c < 0)
      negv = true;
  }
  if (pos && negv)
    throw InternalError("GeomRing::sign: mixed-sign coordinates");
  if (pos)
    return 1;
  if (negv)
    return -1;
  return 0;
}

}  // namespace ivh

