/*
  This is classical.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/classical.h"

#include <algorithm>
#include <vector>

#include "ivhecke/barsolve.h"
#include "ivhecke/error.h"

namespace ivh {

namespace {

std::uint64_t packPair(KLTable::Elt y, KLTable::Elt w) {
  return (static_cast<std::uint64_t>(y) << 32) | w;
}

}  // namespace

const TVec<Int>& KLTable::barBasisT(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  auto it = d_barBasis.find(w);
  if (it != d_barBasis.end()) {
    return it->second;
  }
  TVec<Int> value;
  if (w == CoxeterSystem::kIdentity) {
    value.emplace(w, Laurent::one());
  } else {
    // ov{t_w} = t_{w^{-1}}^{-1} = ov{t_{w'}} t_s^{-1} for w = w' s short
    CoxeterSystem::Word word = d_system.wordOf(w);
    int s = static_cast<int>(word.back());
    value = tTimesGenInverse(d_system, barBasisT(d_system.rightMul(w, s)), s);
  }
  return d_barBasis.emplace(w, std::move(value)).first->second;
}

TVec<Int> KLTable::barT(const TVec<Int>& xi) {
  TVec<Int> out;
  for (const auto& term : xi) {
    const TVec<Int>& basis = barBasisT(term.first);
    Laurent c = term.second.bar();
    for (const auto& entry : basis) {
      tAddTerm(out, entry.first, c * entry.second);
    }
  }
  return out;
}

const KLTable::Column& KLTable::rhoColumn(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  auto it = d_rho.find(w);
  if (it != d_rho.end()) {
    return it->second;
  }
  Column col;
  for (const auto& term : barBasisT(w)) {
    Elt y = term.first;
    col.emplace(y, term.second.bar().shifted(-d_system.length(w) -
                                             d_system.length(y)));
  }
  return d_rho.emplace(w, std::move(col)).first->second;
}

Laurent KLTable::rho(Elt y, Elt w) {
  const Column& col = rhoColumn(w);
  auto it = col.find(y);
  return it == col.end() ? Laurent() : it->second;
}

Laurent KLTable::rhoByRecursion(Elt y, Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  return rhoRecursionLocked(y, w);
}

Laurent KLTable::rhoRecursionLocked(Elt x, Elt w) {
  if (w == CoxeterSystem::kIdentity) {
    return x == CoxeterSystem::kIdentity ? Laurent::one() : Laurent();
  }
  auto memo = d_rhoMemo.find(packPair(x, w));
  if (memo != d_rhoMemo.end()) {
    return memo->second;
  }
  // peel the smallest descent s of w = s y
  int s = static_cast<int>(d_system.wordOf(w)[0]);
  Elt y = d_system.leftMul(s, w);
  Elt sx = d_system.leftMul(s, x);
  Laurent value;
  if (d_system.length(sx) < d_system.length(x)) {
    value = rhoRecursionLocked(sx, y);
  } else {
    value = rhoRecursionLocked(sx, y) +
            (Laurent::vPow(1) - Laurent::vPow(-1)) * rhoRecursionLocked(x, y);
  }
  d_rhoMemo.emplace(packPair(x, w), value);
  return value;
}

const KLTable::Column& KLTable::pColumn(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  auto it = d_p.find(w);
  if (it != d_p.end()) {
    return it->second;
  }
  const Column& interval = rhoColumn(w);
  std::vector<Elt> order;
  order.reserve(interval.size());
  for (const auto& entry : interval) {
    order.push_back(entry.first);
  }
  std::sort(order.begin(), order.end(), [this](Elt a, Elt b) {
    return d_system.before(b, a);
  });
  Column col =
      solveBarTriangle(order, [this](Elt x, Elt y) { return rho(x, y); });
  return d_p.emplace(w, std::move(col)).first->second;
}

Laurent KLTable::p(Elt y, Elt w) {
  const Column& col = pColumn(w);
  auto it = col.find(y);
  return it == col.end() ? Laurent() : it->second;
}

Laurent KLTable::klPolynomial(Elt y, Elt w) {
  Laurent value = p(y, w);
  if (value.isZero()) {
    return value;
  }
  value = value.shifted(d_system.length(w) - d_system.length(y));
  if (!value.isUPolynomial()) {
    throw InternalError("Kazhdan-Lusztig entry is not a polynomial in u");
  }
  if (value.coeff(0) != 1) {
    throw InternalError(
        "Kazhdan-Lusztig entry has constant term different from one");
  }
  return value;
}

}  // namespace ivh
