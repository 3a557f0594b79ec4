/*
  This is mod2model.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_MOD2MODEL_H
#define IVH_MOD2MODEL_H

#include <mutex>
#include <unordered_map>

#include "ivhecke/classical.h"
#include "ivhecke/coxeter.h"
#include "ivhecke/hecke.h"
#include "ivhecke/involution.h"
#include "ivhecke/laurent.h"

namespace ivh {

/*
  The mod-2 bridge between the regular Hecke algebra and the twisted module.
  Over GF2 the span of the t_w with twisted w carries a second module
  structure

    T_s (.) xi = project(t_s xi t_{s*}),

  where project keeps only twisted basis elements, and t_w |-> a_w
  intertwines this action with the module action reduced mod 2.  The
  projected bar involution matches the module bar the same way.  Both facts
  are exercised by the test suite; this class packages the operations.
*/
class Mod2Model {
public:
  using Elt = CoxeterSystem::Elt;
  using Vec = TVec<GF2>;

  Mod2Model(CoxeterSystem& system, Involutions& involutions)
      : d_system(system), d_involutions(involutions) {}

  CoxeterSystem& system() const { return d_system; }
  Involutions& involutions() const { return d_involutions; }

  static Vec basis(Elt w);

  // coefficient-wise reduction of a module vector
  static Vec reduce(const MElt& m);

  // the antiautomorphism t_w |-> t_{star(w)^{-1}}, coefficients fixed
  Vec sharp(const Vec& xi) const;

  // keep only the terms supported on twisted involutions
  Vec project(const Vec& xi) const;

  // T_s (.) xi = project(t_s xi t_{s*})
  Vec odot(int s, const Vec& xi) const;

  // T_x (.) xi, folding the word of x with the last letter acting first
  Vec odotAct(Elt x, const Vec& xi) const;

  const Vec& barBasisT(Elt w);           // ov{t_w} over GF2, cached
  Vec barT(const Vec& xi);               // the bar involution over GF2
  Vec barProjected(const Vec& xi);       // project(barT(xi))

private:
  CoxeterSystem& d_system;
  Involutions& d_involutions;

  mutable std::recursive_mutex d_lock;
  std::unordered_map<Elt, Vec> d_barBasis;
};

// the two halves of a polynomial pair with matching parity of coefficients:
// halfSum = (a + b) / 2 and halfDifference = (a - b) / 2, entrywise exact
Laurent halfSum(const Laurent& a, const Laurent& b);
Laurent halfDifference(const Laurent& a, const Laurent& b);

}  // namespace ivh

#endif
