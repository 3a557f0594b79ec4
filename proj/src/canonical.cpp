/*
  This is canonical.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/canonical.h"

#include <algorithm>
#include <vector>

#include "ivhecke/barsolve.h"
#include "ivhecke/error.h"

namespace ivh {

const CanonicalBasis::Column& CanonicalBasis::column(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  auto it = d_columns.find(w);
  if (it != d_columns.end()) {
    return it->second;
  }

  CoxeterSystem& W = system();
  // the support of the r column at w is the full Bruhat interval below w
  const RTable::Column& interval = d_r.column(w);
  std::vector<Elt> order;
  order.reserve(interval.size());
  for (const auto& entry : interval) {
    order.push_back(entry.first);
  }
  std::sort(order.begin(), order.end(),
            [&W](Elt a, Elt b) { return W.before(b, a); });

  Column col = solveBarTriangle(
      order, [this](Elt x, Elt y) { return d_r.r(x, y); });
  for (const auto& entry : col) {
    if (entry.second.isZero()) {
      // impossible below w: the lowest term is v^{-l(w)+l(x)} exactly
      throw InternalError("canonical column has a vanishing entry");
    }
  }
  return d_columns.emplace(w, std::move(col)).first->second;
}

Laurent CanonicalBasis::pi(Elt y, Elt w) {
  const Column& col = column(w);
  auto it = col.find(y);
  return it == col.end() ? Laurent() : it->second;
}

Laurent CanonicalBasis::pPM(Elt y, Elt w) {
  Laurent value = pi(y, w);
  if (value.isZero()) {
    return value;
  }
  CoxeterSystem& W = system();
  value = value.shifted(W.length(w) - W.length(y));
  if (!value.isUPolynomial()) {
    throw InternalError("P is not a polynomial in u");
  }
  if (value.coeff(0) != 1) {
    throw InternalError("P has constant term different from one");
  }
  return value;
}

MElt CanonicalBasis::aBasis(Elt w) {
  CoxeterSystem& W = system();
  MElt out;
  for (const auto& entry : column(w)) {
    mAddTerm(out, entry.first, entry.second.shifted(-W.length(entry.first)));
  }
  return out;
}

Int CanonicalBasis::muPrime(Elt y, Elt w) {
  return pi(y, w).coeff(-1);
}

Int CanonicalBasis::muSecond(Elt y, Elt w) {
  return pi(y, w).coeff(-2);
}

Laurent CanonicalBasis::csCoefficient(int s, Elt y, Elt w) {
  CoxeterSystem& W = system();
  Involutions& inv = involutions();
  if (inv.epsilon(y) != inv.epsilon(w)) {
    return Laurent::constant(muPrime(y, w)) *
           (Laurent::vPow(1) + Laurent::vPow(-1));
  }
  Int value = muSecond(y, w);
  for (const auto& entry : d_r.column(w)) {
    Elt x = entry.first;
    if (x == w || x == y || !W.isLeftDescent(s, x) || !W.bruhatLeq(y, x)) {
      continue;
    }
    value -= muPrime(y, x) * muPrime(x, w);
  }
  Elt sw = W.leftMul(s, w);
  if (sw == W.rightMul(w, W.starGen(s))) {
    value -= muPrime(y, sw);
  }
  Elt sy = W.leftMul(s, y);
  if (sy == W.rightMul(y, W.starGen(s))) {
    value += muPrime(sy, w);
  }
  return Laurent::constant(value);
}

MElt CanonicalBasis::csAction(int s, const MElt& m) {
  MElt out = d_r.module().tsAction(s, m);
  for (const auto& term : m) {
    mAddTerm(out, term.first, term.second);
  }
  mScale(out, Laurent::uPow(-1));
  return out;
}

std::map<CanonicalBasis::Elt, Laurent> CanonicalBasis::expandInABasis(
    MElt m) {
  CoxeterSystem& W = system();
  std::map<Elt, Laurent> out;
  while (!m.empty()) {
    Elt top = m.begin()->first;
    for (const auto& term : m) {
      if (W.before(top, term.first)) {
        top = term.first;
      }
    }
    Laurent coeff = m.at(top).shifted(W.length(top));
    out.emplace(top, coeff);
    mAddScaled(m, -coeff, aBasis(top));
  }
  return out;
}

}  // namespace ivh
