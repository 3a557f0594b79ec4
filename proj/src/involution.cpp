/*
  This is involution.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/involution.h"

#include <algorithm>

#include "ivhecke/error.h"

namespace ivh {

bool Involutions::isTwisted(Elt w) {
  return d_system.star(d_system.inverse(w)) == w;
}

Involutions::Elt Involutions::dot(int s, Elt w) {
  if (!isTwisted(w)) {
    throw InternalError("dot action applied off the twisted involution set");
  }
  Elt left = d_system.leftMul(s, w);
  Elt twoSided = d_system.rightMul(left, d_system.starGen(s));
  return left == d_system.rightMul(w, d_system.starGen(s)) ? left : twoSided;
}

bool Involutions::dotDescends(int s, Elt w) {
  return d_system.isLeftDescent(s, w);
}

std::vector<Involutions::Elt> Involutions::all(int maxLen, std::size_t cap) {
  std::vector<Elt> out;
  for (Elt w : d_system.enumerate(maxLen, cap)) {
    if (isTwisted(w)) {
      out.push_back(w);
    }
  }
  return out;  // enumerate already sorts by (length, word)
}

int Involutions::phi(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  return phiLocked(w);
}

int Involutions::phiLocked(Elt w) {
  if (w == CoxeterSystem::kIdentity) {
    return 0;
  }
  auto it = d_phi.find(w);
  if (it != d_phi.end()) {
    return it->second;
  }
  if (!isTwisted(w)) {
    throw InternalError("phi applied off the twisted involution set");
  }
  // peel the smallest descent; the value is chain-independent
  int s = static_cast<int>(d_system.wordOf(w)[0]);
  Elt down = d_system.leftMul(s, w);
  int value;
  if (down == d_system.rightMul(w, d_system.starGen(s))) {
    value = phiLocked(down) + 1;
  } else {
    value = phiLocked(d_system.rightMul(down, d_system.starGen(s)));
  }
  if (((value ^ d_system.length(w)) & 1) != 0) {
    throw InternalError("phi has the wrong parity against the length");
  }
  d_phi.emplace(w, value);
  return value;
}

int Involutions::kappa(Elt w) {
  int half = (d_system.length(w) + phi(w)) / 2;
  return (half & 1) ? -1 : 1;
}

int Involutions::epsilon(Elt w) {
  return (d_system.length(w) & 1) ? -1 : 1;
}

}  // namespace ivh
