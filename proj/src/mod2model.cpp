/*
  This is mod2model.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/mod2model.h"

namespace ivh {

Mod2Model::Vec Mod2Model::basis(Elt w) {
  Vec out;
  out.emplace(w, Laurent2::one());
  return out;
}

Mod2Model::Vec Mod2Model::reduce(const MElt& m) {
  Vec out;
  for (const auto& term : m) {
    Laurent2 c = mod2(term.second);
    if (!c.isZero()) {
      out.emplace(term.first, std::move(c));
    }
  }
  return out;
}

Mod2Model::Vec Mod2Model::sharp(const Vec& xi) const {
  Vec out;
  for (const auto& term : xi) {
    tAddTerm(out, d_system.star(d_system.inverse(term.first)), term.second);
  }
  return out;
}

Mod2Model::Vec Mod2Model::project(const Vec& xi) const {
  Vec out;
  for (const auto& term : xi) {
    if (d_involutions.isTwisted(term.first)) {
      out.emplace(term.first, term.second);
    }
  }
  return out;
}

Mod2Model::Vec Mod2Model::odot(int s, const Vec& xi) const {
  return project(
      genTimesT(d_system, s, tTimesGen(d_system, xi, d_system.starGen(s))));
}

Mod2Model::Vec Mod2Model::odotAct(Elt x, const Vec& xi) const {
  Vec out = xi;
  CoxeterSystem::Word word = d_system.wordOf(x);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = odot(static_cast<int>(*it), out);
  }
  return out;
}

const Mod2Model::Vec& Mod2Model::barBasisT(Elt w) {
  std::lock_guard<std::recursive_mutex> guard(d_lock);
  auto it = d_barBasis.find(w);
  if (it != d_barBasis.end()) {
    return it->second;
  }
  Vec value;
  if (w == CoxeterSystem::kIdentity) {
    value.emplace(w, Laurent2::one());
  } else {
    CoxeterSystem::Word word = d_system.wordOf(w);
    int s = static_cast<int>(word.back());
    value = tTimesGenInverse(d_system, barBasisT(d_system.rightMul(w, s)), s);
  }
  return d_barBasis.emplace(w, std::move(value)).first->second;
}

Mod2Model::Vec Mod2Model::barT(const Vec& xi) {
  Vec out;
  for (const auto& term : xi) {
    const Vec& basis = barBasisT(term.first);
    Laurent2 c = term.second.bar();
    for (const auto& entry : basis) {
      tAddTerm(out, entry.first, c * entry.second);
    }
  }
  return out;
}

Mod2Model::Vec Mod2Model::barProjected(const Vec& xi) {
  return project(barT(xi));
}

Laurent halfSum(const Laurent& a, const Laurent& b) {
  return divCoeffs(a + b, 2);
}

Laurent halfDifference(const Laurent& a, const Laurent& b) {
  return divCoeffs(a - b, 2);
}

}  // namespace ivh
