/*
  This is hecke.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/hecke.h"

#include "ivhecke/error.h"

namespace ivh {

void mAddTerm(MElt& m, CoxeterSystem::Elt w, const Laurent& c) {
  if (c.isZero()) {
    return;
  }
  auto it = m.find(w);
  if (it == m.end()) {
    m.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) {
    m.erase(it);
  }
}

void mAddScaled(MElt& dst, const Laurent& c, const MElt& src) {
  if (c.isZero()) {
    return;
  }
  for (const auto& term : src) {
    mAddTerm(dst, term.first, c * term.second);
  }
}

void mScale(MElt& m, const Laurent& c) {
  if (c.isZero()) {
    m.clear();
    return;
  }
  for (auto& term : m) {
    term.second *= c;
  }
}

Laurent mCoeff(const MElt& m, CoxeterSystem::Elt w) {
  auto it = m.find(w);
  return it == m.end() ? Laurent() : it->second;
}

bool mEq(const MElt& a, const MElt& b) {
  return a == b;
}

MElt HeckeModule::basis(Elt w) {
  MElt m;
  m.emplace(w, Laurent::one());
  return m;
}

MElt HeckeModule::tsAction(int s, const MElt& m) {
  const Laurent u = Laurent::uPow(1);
  const Laurent uu = Laurent::uPow(2);
  const Laurent one = Laurent::one();

  MElt out;
  for (const auto& term : m) {
    Elt w = term.first;
    const Laurent& c = term.second;
    if (!d_involutions.isTwisted(w)) {
      throw InternalError("module action applied off the twisted set");
    }
    Elt sw = d_system.leftMul(s, w);
    Elt ws = d_system.rightMul(w, d_system.starGen(s));
    bool up = d_system.length(sw) > d_system.length(w);
    if (sw == ws) {
      if (up) {
        mAddTerm(out, w, c * u);
        mAddTerm(out, sw, c * (u + one));
      } else {
        mAddTerm(out, w, c * (uu - u - one));
        mAddTerm(out, sw, c * (uu - u));
      }
    } else {
      Elt sws = d_system.rightMul(sw, d_system.starGen(s));
      if (up) {
        mAddTerm(out, sws, c);
      } else {
        mAddTerm(out, w, c * (uu - one));
        mAddTerm(out, sws, c * uu);
      }
    }
  }
  return out;
}

MElt HeckeModule::tsInverseAction(int s, const MElt& m) {
  const Laurent ui = Laurent::uPow(-1);
  const Laurent uii = Laurent::uPow(-2);
  const Laurent one = Laurent::one();

  MElt out;
  for (const auto& term : m) {
    Elt w = term.first;
    const Laurent& c = term.second;
    if (!d_involutions.isTwisted(w)) {
      throw InternalError("module action applied off the twisted set");
    }
    Elt sw = d_system.leftMul(s, w);
    Elt ws = d_system.rightMul(w, d_system.starGen(s));
    bool up = d_system.length(sw) > d_system.length(w);
    if (sw == ws) {
      if (up) {
        mAddTerm(out, w, c * (ui + uii - one));
        mAddTerm(out, sw, c * (ui + uii));
      } else {
        mAddTerm(out, w, c * (-ui));
        mAddTerm(out, sw, c * (one - ui));
      }
    } else {
      Elt sws = d_system.rightMul(sw, d_system.starGen(s));
      if (up) {
        mAddTerm(out, w, c * (uii - one));
        mAddTerm(out, sws, c * uii);
      } else {
        mAddTerm(out, sws, c);
      }
    }
  }
  return out;
}

MElt HeckeModule::actT(Elt x, const MElt& m) {
  // T_x = T_{s_1} ... T_{s_k} along a reduced word, so the last letter
  // acts first
  CoxeterSystem::Word word = d_system.wordOf(x);
  MElt out = m;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = tsAction(static_cast<int>(*it), out);
  }
  return out;
}

MElt HeckeModule::actTInverse(Elt x, const MElt& m) {
  // T_x^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1}, so the first letter acts first
  CoxeterSystem::Word word = d_system.wordOf(x);
  MElt out = m;
  for (char letter : word) {
    out = tsInverseAction(static_cast<int>(letter), out);
  }
  return out;
}

const MElt& HeckeModule::barBasis(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  auto it = d_barBasis.find(w);
  if (it != d_barBasis.end()) {
    return it->second;
  }
  Elt wi = d_system.inverse(w);
  MElt value = actTInverse(wi, basis(wi));
  if (d_involutions.epsilon(w) < 0) {
    mScale(value, -Laurent::one());
  }
  return d_barBasis.emplace(w, std::move(value)).first->second;
}

MElt HeckeModule::bar(const MElt& m) {
  MElt out;
  for (const auto& term : m) {
    mAddScaled(out, term.second.bar(), barBasis(term.first));
  }
  return out;
}

}  // namespace ivh
