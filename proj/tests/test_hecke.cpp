/*
  This is test_hecke.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include <string>
#include <vector>

#include "doctest.h"
#include "ivhecke/hecke.h"
#include "test_systems.h"

using namespace ivh;

namespace {

constexpr std::size_t kCap = 1u << 20;

struct Setup {
  std::unique_ptr<CoxeterSystem> d_system;
  std::unique_ptr<Involutions> d_involutions;
  std::unique_ptr<HeckeModule> d_module;

  explicit Setup(std::unique_ptr<CoxeterSystem> system)
      : d_system(std::move(system)),
        d_involutions(new Involutions(*d_system)),
        d_module(new HeckeModule(*d_system, *d_involutions)) {}

  CoxeterSystem& W() { return *d_system; }
  Involutions& I() { return *d_involutions; }
  HeckeModule& M() { return *d_module; }
};

// apply an alternating product T_s T_t T_s ... with the given number of
// factors; the rightmost factor acts first
MElt alternating(HeckeModule& M, int s, int t, int factors, const MElt& m) {
  MElt out = m;
  for (int i = factors - 1; i >= 0; --i) {
    out = M.tsAction(i % 2 == 0 ? s : t, out);
  }
  return out;
}

void checkQuadratic(Setup& setup, int maxLen) {
  const Laurent uu = Laurent::uPow(2);
  const Laurent one = Laurent::one();
  for (auto w : setup.I().all(maxLen, kCap)) {
    for (int s = 0; s < setup.W().rank(); ++s) {
      MElt ts = setup.M().tsAction(s, HeckeModule::basis(w));
      MElt lhs = setup.M().tsAction(s, ts);
      MElt rhs;
      mAddScaled(rhs, uu - one, ts);
      mAddScaled(rhs, uu, HeckeModule::basis(w));
      CHECK(mEq(lhs, rhs));
    }
  }
}

void checkBraid(Setup& setup, int maxLen) {
  for (auto w : setup.I().all(maxLen, kCap)) {
    for (int s = 0; s < setup.W().rank(); ++s) {
      for (int t = s + 1; t < setup.W().rank(); ++t) {
        int m = setup.W().bond(s, t);
        if (m == 0) {
          continue;  // infinite bond, no relation
        }
        MElt lhs = alternating(setup.M(), s, t, m, HeckeModule::basis(w));
        MElt rhs = alternating(setup.M(), t, s, m, HeckeModule::basis(w));
        CHECK(mEq(lhs, rhs));
      }
    }
  }
}

void checkInverse(Setup& setup, int maxLen) {
  const Laurent uii = Laurent::uPow(-2);
  const Laurent one = Laurent::one();
  for (auto w : setup.I().all(maxLen, kCap)) {
    MElt a = HeckeModule::basis(w);
    for (int s = 0; s < setup.W().rank(); ++s) {
      MElt inv = setup.M().tsInverseAction(s, a);
      CHECK(mEq(setup.M().tsAction(s, inv), a));
      CHECK(mEq(setup.M().tsInverseAction(s, setup.M().tsAction(s, a)), a));
      // the inverse action agrees with u^{-2} T_s + (u^{-2} - 1)
      MElt expanded = setup.M().tsAction(s, a);
      mScale(expanded, uii);
      mAddScaled(expanded, uii - one, a);
      CHECK(mEq(inv, expanded));
    }
  }
}

void checkBar(Setup& setup, int maxLen) {
  for (auto w : setup.I().all(maxLen, kCap)) {
    MElt a = HeckeModule::basis(w);
    MElt barred = setup.M().bar(a);
    CHECK(mEq(setup.M().bar(barred), a));
    for (int s = 0; s < setup.W().rank(); ++s) {
      MElt lhs = setup.M().bar(setup.M().tsAction(s, a));
      MElt rhs = setup.M().tsInverseAction(s, barred);
      CHECK(mEq(lhs, rhs));
    }
    // antilinearity in the coefficient
    MElt scaled = a;
    mScale(scaled, Laurent::vPow(1));
    MElt viaBar = barred;
    mScale(viaBar, Laurent::vPow(-1));
    CHECK(mEq(setup.M().bar(scaled), viaBar));
  }
}

}  // namespace

TEST_CASE("generator action, pinned small cases") {
  Setup b2(testsys::b2());
  const Laurent u = Laurent::uPow(1);
  const Laurent one = Laurent::one();

  CoxeterSystem::Elt e = CoxeterSystem::kIdentity;
  CoxeterSystem::Elt s = b2.W().generator(0);

  MElt up = b2.M().tsAction(0, HeckeModule::basis(e));
  CHECK(mCoeff(up, e) == u);
  CHECK(mCoeff(up, s) == u + one);

  MElt down = b2.M().tsAction(0, HeckeModule::basis(s));
  CHECK(mCoeff(down, s) == u * u - u - one);
  CHECK(mCoeff(down, e) == u * u - u);

  // under the diagram flip the generators step two lengths at once
  Setup flip(testsys::a3flip());
  CoxeterSystem::Elt s0s2 = flip.W().fromLetters(std::string("\0\2", 2));
  MElt two = flip.M().tsAction(0, HeckeModule::basis(e));
  CHECK(two.size() == 1);
  CHECK(mCoeff(two, s0s2) == one);

  MElt back = flip.M().tsAction(0, HeckeModule::basis(s0s2));
  CHECK(mCoeff(back, s0s2) == u * u - one);
  CHECK(mCoeff(back, e) == u * u);
}

TEST_CASE("quadratic relation across systems") {
  Setup a3(testsys::a3());
  checkQuadratic(a3, 6);
  Setup a3flip(testsys::a3flip());
  checkQuadratic(a3flip, 6);
  Setup b2swap(testsys::dihedral(4, true));
  checkQuadratic(b2swap, 4);
  Setup i25(testsys::i25());
  checkQuadratic(i25, 5);
  Setup aff(testsys::affineA1());
  checkQuadratic(aff, 6);
}

TEST_CASE("braid relations across systems") {
  Setup a3(testsys::a3());
  checkBraid(a3, 6);
  Setup a3flip(testsys::a3flip());
  checkBraid(a3flip, 6);
  Setup b3(testsys::b3());
  checkBraid(b3, 5);
  Setup i26(testsys::i26());
  checkBraid(i26, 6);
  Setup aff(testsys::affineA2swap());
  checkBraid(aff, 5);
}

TEST_CASE("inverse action across systems") {
  Setup a3(testsys::a3());
  checkInverse(a3, 6);
  Setup b2swap(testsys::dihedral(4, true));
  checkInverse(b2swap, 4);
  Setup aff(testsys::affineA1());
  checkInverse(aff, 6);
}

TEST_CASE("products along reduced words compose") {
  Setup a3(testsys::a3());
  std::vector<CoxeterSystem::Elt> all = a3.W().enumerate(6, kCap);
  MElt seed = HeckeModule::basis(CoxeterSystem::kIdentity);
  for (auto x : all) {
    for (auto y : all) {
      if (a3.W().length(a3.W().mul(x, y)) !=
          a3.W().length(x) + a3.W().length(y)) {
        continue;
      }
      MElt stepwise = a3.M().actT(x, a3.M().actT(y, seed));
      MElt direct = a3.M().actT(a3.W().mul(x, y), seed);
      CHECK(mEq(stepwise, direct));
    }
  }
}

TEST_CASE("bar involution, pinned rank one case") {
  Setup a1(testsys::a1());
  CoxeterSystem::Elt e = CoxeterSystem::kIdentity;
  CoxeterSystem::Elt s = a1.W().generator(0);
  MElt barred = a1.M().bar(HeckeModule::basis(s));
  CHECK(mCoeff(barred, s) == Laurent::uPow(-1));
  CHECK(mCoeff(barred, e) == Laurent::uPow(-1) - Laurent::one());
  CHECK(mEq(a1.M().bar(HeckeModule::basis(e)), HeckeModule::basis(e)));
}

TEST_CASE("bar is an involution and twists the generator action") {
  Setup a3(testsys::a3());
  checkBar(a3, 6);
  Setup a3flip(testsys::a3flip());
  checkBar(a3flip, 6);
  Setup b2(testsys::b2());
  checkBar(b2, 4);
  Setup b2swap(testsys::dihedral(4, true));
  checkBar(b2swap, 4);
  Setup i25(testsys::i25());
  checkBar(i25, 5);
  Setup affA1(testsys::affineA1());
  checkBar(affA1, 6);
  Setup affA2(testsys::affineA2swap());
  checkBar(affA2, 5);
}
