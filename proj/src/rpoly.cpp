/*
  This is rpoly.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/rpoly.h"

#include "ivhecke/error.h"

namespace ivh {

namespace {

std::uint64_t packPair(RTable::Elt y, RTable::Elt w) {
  return (static_cast<std::uint64_t>(y) << 32) | w;
}

}  // namespace

const RTable::Column& RTable::column(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  auto it = d_columns.find(w);
  if (it != d_columns.end()) {
    return it->second;
  }
  CoxeterSystem& W = system();
  const MElt& barW = d_module.barBasis(w);
  Column col;
  for (const auto& term : barW) {
    Elt y = term.first;
    col.emplace(y,
                term.second.bar().shifted(-W.length(w) - W.length(y)));
  }
  return d_columns.emplace(w, std::move(col)).first->second;
}

Laurent RTable::r(Elt y, Elt w) {
  const Column& col = column(w);
  auto it = col.find(y);
  return it == col.end() ? Laurent() : it->second;
}

Laurent RTable::rByRecursion(Elt y, Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  return recursionLocked(y, w);
}

Laurent RTable::recursionLocked(Elt x, Elt w) {
  if (w == CoxeterSystem::kIdentity) {
    return x == CoxeterSystem::kIdentity ? Laurent::one() : Laurent();
  }
  auto memo = d_memo.find(packPair(x, w));
  if (memo != d_memo.end()) {
    return memo->second;
  }

  CoxeterSystem& W = system();
  const Laurent one = Laurent::one();
  const Laurent v = Laurent::vPow(1);
  const Laurent vi = Laurent::vPow(-1);
  const Laurent u = Laurent::uPow(1);
  const Laurent ui = Laurent::uPow(-1);

  // peel the smallest descent s of w; y = s . w is shorter
  int s = static_cast<int>(W.wordOf(w)[0]);
  Elt sw = W.leftMul(s, w);
  bool wTwoSided = sw == W.rightMul(w, W.starGen(s));
  Elt y = wTwoSided ? sw : W.rightMul(sw, W.starGen(s));

  Elt sx = W.leftMul(s, x);
  bool xTwoSided = sx == W.rightMul(x, W.starGen(s));
  bool xUp = W.length(sx) > W.length(x);

  Laurent value;
  if (wTwoSided) {
    // w = sy with sy = ys^* > y; the right side is divisible by v + v^{-1}
    Laurent rhs;
    if (xTwoSided) {
      rhs = xUp ? recursionLocked(sx, y) * (vi - v) +
                      recursionLocked(x, y) * (u - ui)
                : recursionLocked(x, y) * Laurent::constant(-2) +
                      recursionLocked(sx, y) * (v + vi);
    } else {
      Elt sxs = W.rightMul(sx, W.starGen(s));
      rhs = xUp ? recursionLocked(sxs, y) +
                      recursionLocked(x, y) * (u - one - ui)
                : recursionLocked(sxs, y) - recursionLocked(x, y);
    }
    value = rhs.exactDiv(v + vi);
  } else {
    // w = sys^* with sy != ys^* > y
    if (xTwoSided) {
      value = xUp ? recursionLocked(sx, y) * (vi - v) +
                        recursionLocked(x, y) * (u + one - ui)
                  : recursionLocked(sx, y) * (v + vi) -
                        recursionLocked(x, y);
    } else {
      Elt sxs = W.rightMul(sx, W.starGen(s));
      value = xUp ? recursionLocked(sxs, y) +
                        recursionLocked(x, y) * (u - ui)
                  : recursionLocked(sxs, y);
    }
  }
  d_memo.emplace(packPair(x, w), value);
  return value;
}

}  // namespace ivh
