/*
  This is involution.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_INVOLUTION_H
#define IVH_INVOLUTION_H

#include <cstddef>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "ivhecke/coxeter.h"

namespace ivh {

/*
  Involutions is a view of a CoxeterSystem restricted to its twisted
  involutions, the elements w with star(w^{-1}) = w. The set carries the
  partial action

    s . w  =  sw    if sw = w s^*,
    s . w  =  sws^* otherwise,

  which moves the length by one in the first case and by two in the second,
  and which generates the whole set from the identity.

  phi(w) counts, along any chain from the identity to w, the steps of the
  first kind; it is independent of the chain and has the parity of the
  length (checked at runtime). From it we derive the two signs

    epsilon(w) = (-1)^{length(w)},
    kappa(w)   = (-1)^{(length(w) + phi(w)) / 2},

  the latter alternating along the dot action: kappa(s . w) = -kappa(w)
  whenever s . w differs from w.
*/
class Involutions {
public:
  using Elt = CoxeterSystem::Elt;

  explicit Involutions(CoxeterSystem& system) : d_system(system) {}

  CoxeterSystem& system() const { return d_system; }

  bool isTwisted(Elt w);

  // the dot action; w must be a twisted involution (InternalError otherwise)
  Elt dot(int s, Elt w);
  bool dotDescends(int s, Elt w);  // length(s . w) < length(w)

  // all twisted involutions of length <= maxLen, in (length, word) order
  std::vector<Elt> all(int maxLen, std::size_t cap);

  int phi(Elt w);
  int kappa(Elt w);
  int epsilon(Elt w);

private:
  CoxeterSystem& d_system;

  mutable std::recursive_mutex d_lock;
  std::unordered_map<Elt, int> d_phi;

  int phiLocked(Elt w);
};

}  // namespace ivh

#endif
