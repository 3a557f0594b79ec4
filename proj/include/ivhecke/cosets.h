/*
  This is cosets.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_COSETS_H
#define IVH_COSETS_H

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ivhecke/coxeter.h"
#include "ivhecke/involution.h"

namespace ivh {

/*
  A (W_K, W_{K*}) double coset, for a generator subset K with W_K finite.
  The coset is determined by its unique minimal element b; the unique
  maximal element is d = w_K w_J b w_{K*} where W_J = W_K cap b W_{K*} b^{-1}
  is again a standard parabolic of W_K, with

    l(d) = l(w_K) + l(b) + l(w_{K*}) - l(w_J).

  Every x in the coset factors uniquely as x = c b d' with c in W_K having
  no right descent in J, d' in W_{K*}, and l(x) = l(c) + l(b) + l(d').

  The coset meets the twisted involutions exactly when b is itself twisted
  (equivalently d is). In that case J* = b^{-1} J b, and y |-> b^{-1} y* b
  is a diagram involution tau of the subsystem W_{J*}; the twisted
  involutions of (W_{J*}, tau) parametrize the intersection through

    (c, z) |-> c b z c^{*-1},    l = 2 l(c) + l(b) + l(z).
*/
class DoubleCoset {
public:
  using Elt = CoxeterSystem::Elt;
  using Mask = std::uint32_t;

  struct Coordinates {
    Elt d_c;       // in W_K, no right descent in J
    Elt d_dPrime;  // in W_{K*}
  };

  /*
    The intersection with the twisted involutions in ranks one and two forms
    one or two chains of explicit elements; d_tag names which of the known
    shapes applies ("i" .. "vii" in rank two, "i" / "ii" in rank one).
  */
  struct Chains {
    std::string d_tag;
    std::vector<Elt> d_xi;
    std::vector<Elt> d_xiPrime;
  };

  DoubleCoset(CoxeterSystem& system, Involutions& involutions, Mask k,
              Elt seed, std::size_t cap);

  CoxeterSystem& system() const { return d_system; }
  Involutions& involutions() const { return d_involutions; }

  Mask kMask() const { return d_k; }
  Mask kStarMask() const { return d_kStar; }
  Mask jMask() const { return d_j; }
  Mask jStarMask() const { return d_jStar; }

  Elt minimal() const { return d_b; }
  Elt maximal() const { return d_d; }
  bool starStable() const { return d_starStable; }

  // the unique minimal element of the double coset of x
  static Elt minimalElement(CoxeterSystem& system, Mask k, Elt x);

  bool contains(Elt x);
  Coordinates decompose(Elt x);  // DomainError when x is outside the coset

  // the twisted subsystem (W_{J*}, tau); DomainError when not star-stable
  CoxeterSystem& tauSystem();
  Involutions& tauInvolutions();
  Elt embed(Elt z);  // subsystem element into the ambient group

  /*
    All twisted involutions in the coset, in (length, word) order; empty
    when the coset is not star-stable. Produced by the (c, z) parametrization
    and cross-checked against a filtered enumeration (InternalError on any
    disagreement).
  */
  std::vector<Elt> twistedMembers(std::size_t cap);

  /*
    A descent chain from a twisted member x down to the minimal element:
    pairs (s, s . x) with s in K and strictly decreasing lengths.
  */
  std::vector<std::pair<int, Elt>> chainToMin(Elt x);

  std::string caseTag();  // "" outside the classified rank 1 / rank 2 setups
  Chains rank2Chains();   // DomainError unless rank 2 and star-stable

private:
  CoxeterSystem& d_system;
  Involutions& d_involutions;
  std::size_t d_cap;

  Mask d_k = 0;
  Mask d_kStar = 0;
  Mask d_j = 0;
  Mask d_jStar = 0;
  Elt d_b = CoxeterSystem::kIdentity;
  Elt d_d = CoxeterSystem::kIdentity;
  bool d_starStable = false;

  std::vector<int> d_tauGens;  // subsystem letter -> ambient generator
  std::unique_ptr<CoxeterSystem> d_tauSystem;
  std::unique_ptr<Involutions> d_tauInvolutions;

  void buildTau();
};

/*
  Groups the twisted involutions of length <= maxLen into their double
  cosets and keeps the cosets whose maximal element has length <= maxLen
  (so each returned intersection is complete). Sorted by (length, word)
  of the maximal elements.
*/
std::vector<DoubleCoset> starStableCosets(CoxeterSystem& system,
                                          Involutions& involutions,
                                          DoubleCoset::Mask k, int maxLen,
                                          std::size_t cap);

}  // namespace ivh

#endif
