/*
  This is duality.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include "ivhecke/duality.h"

#include <utility>

#include "ivhecke/error.h"

namespace ivh {

DualityContext::DualityContext(RTable& table, std::size_t cap)
    : d_table(table), d_canonical(table), d_cap(cap) {
  CoxeterSystem& w = system();
  if (!w.parabolicIsFinite(w.fullMask(), cap)) {
    throw DomainError("the inversion pairing needs a finite group");
  }
  d_longest = w.longestElement(w.fullMask(), cap);

  // conjugating a generator by the longest element lands on a generator;
  // composing with the base star gives the partner permutation
  d_dualStar.resize(static_cast<std::size_t>(w.rank()));
  for (int s = 0; s < w.rank(); ++s) {
    Elt starred = w.generator(w.starGen(s));
    Elt conj = w.mul(d_longest, w.mul(starred, d_longest));
    if (w.length(conj) != 1) {
      throw InternalError(
          "conjugation by the longest element does not permute the "
          "generators");
    }
    d_dualStar[static_cast<std::size_t>(s)] =
        static_cast<int>(w.wordOf(conj)[0]);
  }

  std::vector<std::string> labels;
  std::vector<std::vector<int>> matrix;
  for (int s = 0; s < w.rank(); ++s) {
    labels.push_back(w.label(s));
    std::vector<int> row;
    for (int t = 0; t < w.rank(); ++t) {
      row.push_back(w.bond(s, t));
    }
    matrix.push_back(std::move(row));
  }
  d_dualSystem.reset(
      new CoxeterSystem(std::move(labels), std::move(matrix), d_dualStar));
  d_dualInvolutions.reset(new Involutions(*d_dualSystem));
  d_dualModule.reset(new HeckeModule(*d_dualSystem, *d_dualInvolutions));
  d_dualTable.reset(new RTable(*d_dualModule));
  d_dualCanonical.reset(new CanonicalBasis(*d_dualTable));
}

DualityContext::Elt DualityContext::toDual(Elt x) {
  return d_dualSystem->fromLetters(system().wordOf(x));
}

DualityContext::Elt DualityContext::fromDual(Elt z) {
  return system().fromLetters(d_dualSystem->wordOf(z));
}

Laurent DualityContext::dualR(Elt zLow, Elt zHigh) {
  return d_dualTable->r(zLow, zHigh);
}

Laurent DualityContext::dualPPM(Elt zLow, Elt zHigh) {
  return d_dualCanonical->pPM(zLow, zHigh);
}

bool DualityContext::rSymmetryHolds(Elt y, Elt w) {
  CoxeterSystem& sys = system();
  Laurent lhs = d_table.r(y, w).bar();
  Laurent rhs = dualR(toDual(sys.mul(w, d_longest)),
                      toDual(sys.mul(y, d_longest)));
  int sign = involutions().kappa(y) * involutions().kappa(w);
  return sign < 0 ? lhs == -rhs : lhs == rhs;
}

Laurent DualityContext::inversionSum(Elt y, Elt w) {
  CoxeterSystem& sys = system();
  Involutions& inv = involutions();
  Elt wDualSide = toDual(sys.mul(w, d_longest));
  Laurent sum;
  for (auto t : inv.all(sys.length(w), d_cap)) {
    if (!sys.bruhatLeq(y, t) || !sys.bruhatLeq(t, w)) {
      continue;
    }
    Laurent term = d_canonical.pPM(y, t) *
                   dualPPM(wDualSide, toDual(sys.mul(t, d_longest)));
    if (inv.kappa(t) < 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  if (inv.kappa(y) < 0) {
    sum = -sum;
  }
  return sum;
}

}  // namespace ivh
