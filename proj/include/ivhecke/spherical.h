/*
  This is spherical.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_SPHERICAL_H
#define IVH_SPHERICAL_H

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "ivhecke/cosets.h"
#include "ivhecke/hecke.h"
#include "ivhecke/rpoly.h"

namespace ivh {

/*
  An exact fraction num / (u+1)^denPow. The evaluation map zeta lands in
  such fractions because each basis vector contributes
  u^l ((u-1)/(u+1))^phi; sums and products stay in this shape, and equality
  is decided by cross-multiplication, so no polynomial gcd is ever needed.
*/
struct UFraction {
  Laurent d_num;
  int d_denPow = 0;

  static Laurent uPlusOnePow(int k);
  static UFraction one() { return UFraction{Laurent::one(), 0}; }

  UFraction operator+(const UFraction& o) const;
  UFraction operator*(const UFraction& o) const;
  bool operator==(const UFraction& o) const;
  bool operator!=(const UFraction& o) const { return !(*this == o); }
};

/*
  The spherical submodule attached to a generator subset K with W_K finite:
  vectors whose coefficients are constant on each intersection of a double
  coset with the twisted involutions. Membership can be decided orbitwise
  (the intersections are the orbits of the dot moves from K), the summation
  operator Sigma = sum of T_x over W_K lands in the submodule, and the
  evaluation zeta links basis sums over cosets to Poincare-type series.
*/
class Spherical {
public:
  using Elt = CoxeterSystem::Elt;
  using Mask = std::uint32_t;

  explicit Spherical(HeckeModule& module) : d_module(module) {}

  HeckeModule& module() const { return d_module; }
  CoxeterSystem& system() const { return d_module.system(); }
  Involutions& involutions() const { return d_module.involutions(); }

  // constant on each dot-orbit of K through the support
  bool isSpherical(const MElt& m, Mask k);
  // the same property as the intersection of the rank-one conditions
  bool isSphericalByGenerators(const MElt& m, Mask k);

  // Sigma m = sum over x in W_K of T_x m
  MElt sigma(Mask k, const MElt& m, std::size_t cap);

  static MElt sumBasis(const std::vector<Elt>& members);

  // zeta(a_w) = u^{l(w)} ((u-1)/(u+1))^{phi(w)}, extended linearly
  UFraction zeta(const MElt& m);

  Laurent poincare(Mask k, std::size_t cap);  // sum of u^l over W_K
  // sum of u^l over the star-fixed elements of W_K (K star-stable)
  Laurent poincareStarFixed(Mask k, std::size_t cap);
  // sum of u^l lambda^phi over the twisted involutions in W_K
  UFraction twistedSeries(Mask k, std::size_t cap);

  // the same two series for the twisted subsystem (W_{J*}, tau) of a coset
  Laurent tauFixedSeries(DoubleCoset& coset, std::size_t cap);
  UFraction tauTwistedSeries(DoubleCoset& coset, std::size_t cap);

private:
  HeckeModule& d_module;

  void requireStarStable(Mask k);
};

/*
  The bar coefficient table at the level of double cosets: with
  a'_Omega = v^{-l(d_Omega)} a_Omega,

    bar(a'_Omega) = sum over Omega' of bar(r_{Omega',Omega}) a'_{Omega'},

  and the entries are recovered from the element-level table as

    r_{Omega',Omega} = sum over x in Omega cap I_* of
                       v^{l(x) - l(d_Omega)} r_{d_{Omega'}, x}.

  The same triangular bar solve as at element level then produces the
  coefficients pi_{Omega',Omega} of the bar-fixed column; unlike there, a
  pi entry of zero is legitimate at coset level. Cosets are indexed in
  (length, word) order of their maximal elements.
*/
class CosetTable {
public:
  using Elt = CoxeterSystem::Elt;
  using Mask = std::uint32_t;

  CosetTable(RTable& table, Mask k, int maxLen, std::size_t cap);

  CoxeterSystem& system() const { return d_table.system(); }
  std::size_t size() const { return d_cosets.size(); }
  DoubleCoset& coset(std::size_t i) { return d_cosets[i]; }
  const std::vector<Elt>& members(std::size_t i);

  Laurent r(std::size_t iPrime, std::size_t i);
  Laurent pi(std::size_t iPrime, std::size_t i);

  // the bar-fixed element of the column, expanded in the a basis
  MElt canonicalElement(std::size_t i);

private:
  RTable& d_table;
  std::size_t d_cap;
  std::vector<DoubleCoset> d_cosets;

  std::recursive_mutex d_lock;
  std::map<std::size_t, std::vector<Elt>> d_members;
  std::map<std::size_t, std::map<std::size_t, Laurent>> d_pi;
};

}  // namespace ivh

#endif
