/*
  This is duality.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_DUALITY_H
#define IVH_DUALITY_H

#include <memory>
#include <vector>

#include "ivhecke/canonical.h"
#include "ivhecke/coxeter.h"
#include "ivhecke/involution.h"

namespace ivh {

/*
  DualityContext pairs a finite system with its conjugate-twisted partner.
  Writing w_S for the longest element, the map x -> w_S x^* w_S is again a
  diagram involution; the twisted involutions of the partner system are
  exactly the translates (twisted involutions of the base) * w_S, and the
  bar expansions on the two sides determine each other:

    bar(r_{y,w}) = kappa(y) kappa(w) r'_{w w_S, y w_S},

  with r' taken in the partner system, and the split polynomials satisfy
  the inversion formula

    sum over t in [y,w]: kappa(y) kappa(t) P_{y,t} P'_{w w_S, t w_S}
      = delta_{y,w}.

  The partner system is a fresh registry over the same matrix; elements
  travel between the two by reduced word.
*/
class DualityContext {
public:
  using Elt = CoxeterSystem::Elt;

  DualityContext(RTable& table, std::size_t cap);

  CoxeterSystem& system() const { return d_table.system(); }
  Involutions& involutions() const { return d_table.involutions(); }
  CanonicalBasis& canonical() { return d_canonical; }

  CoxeterSystem& dualSystem() const { return *d_dualSystem; }
  Involutions& dualInvolutions() const { return *d_dualInvolutions; }
  CanonicalBasis& dualCanonical() { return *d_dualCanonical; }

  Elt longest() const { return d_longest; }
  int dualStarGen(int s) const {
    return d_dualStar[static_cast<std::size_t>(s)];
  }

  // word transport between the two registries
  Elt toDual(Elt x);
  Elt fromDual(Elt z);

  Laurent dualR(Elt zLow, Elt zHigh);
  Laurent dualPPM(Elt zLow, Elt zHigh);

  // the two sides of the bar-expansion symmetry at (y, w)
  bool rSymmetryHolds(Elt y, Elt w);

  // the alternating pairing of split polynomials across the two systems;
  // equal to delta_{y,w} on twisted involutions
  Laurent inversionSum(Elt y, Elt w);

private:
  RTable& d_table;
  CanonicalBasis d_canonical;
  std::size_t d_cap;

  Elt d_longest;
  std::vector<int> d_dualStar;
  std::unique_ptr<CoxeterSystem> d_dualSystem;
  std::unique_ptr<Involutions> d_dualInvolutions;
  std::unique_ptr<HeckeModule> d_dualModule;
  std::unique_ptr<RTable> d_dualTable;
  std::unique_ptr<CanonicalBasis> d_dualCanonical;
};

}  // namespace ivh

#endif
