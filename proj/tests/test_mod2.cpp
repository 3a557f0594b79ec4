/*
  This is test_mod2.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include <memory>
#include <vector>

#include "doctest.h"
#include "ivhecke/canonical.h"
#include "ivhecke/mod2model.h"
#include "test_systems.h"

using namespace ivh;

namespace {

constexpr std::size_t kCap = 1u << 20;

struct Setup {
  std::unique_ptr<CoxeterSystem> d_system;
  std::unique_ptr<Involutions> d_involutions;
  std::unique_ptr<HeckeModule> d_module;
  std::unique_ptr<RTable> d_r;
  std::unique_ptr<CanonicalBasis> d_canonical;
  std::unique_ptr<KLTable> d_kl;
  std::unique_ptr<Mod2Model> d_mod2;

  explicit Setup(std::unique_ptr<CoxeterSystem> system)
      : d_system(std::move(system)),
        d_involutions(new Involutions(*d_system)),
        d_module(new HeckeModule(*d_system, *d_involutions)),
        d_r(new RTable(*d_module)),
        d_canonical(new CanonicalBasis(*d_r)),
        d_kl(new KLTable(*d_system)),
        d_mod2(new Mod2Model(*d_system, *d_involutions)) {}

  CoxeterSystem& W() { return *d_system; }
  Involutions& I() { return *d_involutions; }
  HeckeModule& M() { return *d_module; }
  RTable& R() { return *d_r; }
  CanonicalBasis& C() { return *d_canonical; }
  KLTable& K() { return *d_kl; }
  Mod2Model& M2() { return *d_mod2; }
};

bool allNonnegative(const Laurent& p) {
  if (p.isZero()) {
    return true;
  }
  for (int e = p.minExp(); e <= p.maxExp(); ++e) {
    if (p.coeff(e) < 0) {
      return false;
    }
  }
  return true;
}

void checkGeneratorAction(Setup& setup, int maxLen) {
  std::vector<CoxeterSystem::Elt> tw = setup.I().all(maxLen, kCap);
  for (auto w : tw) {
    for (int s = 0; s < setup.W().rank(); ++s) {
      Mod2Model::Vec viaAlgebra = setup.M2().odot(s, Mod2Model::basis(w));
      Mod2Model::Vec viaModule =
          Mod2Model::reduce(setup.M().tsAction(s, HeckeModule::basis(w)));
      CHECK(viaAlgebra == viaModule);
    }
  }
}

void checkBarAgreement(Setup& setup, int maxLen) {
  std::vector<CoxeterSystem::Elt> tw = setup.I().all(maxLen, kCap);
  for (auto w : tw) {
    Mod2Model::Vec viaAlgebra = setup.M2().barProjected(Mod2Model::basis(w));
    Mod2Model::Vec viaModule =
        Mod2Model::reduce(setup.M().bar(HeckeModule::basis(w)));
    CHECK(viaAlgebra == viaModule);
  }
}

void checkRAgreement(Setup& setup, int maxLen) {
  std::vector<CoxeterSystem::Elt> tw = setup.I().all(maxLen, kCap);
  for (auto w : tw) {
    for (auto y : tw) {
      CHECK(mod2(setup.R().r(y, w)) == mod2(setup.K().rho(y, w)));
    }
  }
}

void checkColumnAgreement(Setup& setup, int maxLen) {
  std::vector<CoxeterSystem::Elt> tw = setup.I().all(maxLen, kCap);
  for (auto w : tw) {
    for (auto y : tw) {
      CHECK(mod2(setup.C().pPM(y, w)) ==
            mod2(setup.K().klPolynomial(y, w)));
    }
  }
}

void checkSplits(Setup& setup, int maxLen, bool expectNonnegative) {
  std::vector<CoxeterSystem::Elt> tw = setup.I().all(maxLen, kCap);
  for (auto w : tw) {
    for (auto y : tw) {
      if (!setup.W().bruhatLeq(y, w)) {
        continue;
      }
      Laurent kl = setup.K().klPolynomial(y, w);
      Laurent signed_ = setup.C().pPM(y, w);
      // integrality of both halves; divCoeffs throws when it fails
      Laurent plus = halfSum(kl, signed_);
      Laurent minus = halfDifference(kl, signed_);
      CHECK(plus.isUPolynomial());
      CHECK(minus.isUPolynomial());
      CHECK(plus + minus == kl);
      CHECK(plus - minus == signed_);
      if (expectNonnegative) {
        CHECK(allNonnegative(plus));
        CHECK(allNonnegative(minus));
      } else {
        // reported, not required
        WARN(allNonnegative(plus));
        WARN(allNonnegative(minus));
      }
    }
  }
}

}  // namespace

TEST_CASE("sharp is an antiautomorphism fixing the twisted span") {
  Setup a3(testsys::a3flip());
  std::vector<CoxeterSystem::Elt> all = a3.W().enumerate(6, kCap);
  for (auto w : all) {
    Mod2Model::Vec xi = a3.M2().sharp(Mod2Model::basis(w));
    CHECK(xi == Mod2Model::basis(a3.W().star(a3.W().inverse(w))));
    CHECK(a3.M2().sharp(xi) == Mod2Model::basis(w));
    for (int s = 0; s < a3.W().rank(); ++s) {
      // sharp(xi t_s) = t_{s*} sharp(xi)
      CHECK(a3.M2().sharp(tTimesGen(a3.W(), Mod2Model::basis(w), s)) ==
            genTimesT(a3.W(), a3.W().starGen(s),
                      a3.M2().sharp(Mod2Model::basis(w))));
    }
  }
}

TEST_CASE("generator action matches the module action mod two") {
  Setup b2(testsys::b2());
  checkGeneratorAction(b2, 4);
  Setup b2swap(testsys::dihedral(4, true));
  checkGeneratorAction(b2swap, 4);
  Setup a3(testsys::a3());
  checkGeneratorAction(a3, 6);
  Setup a3flip(testsys::a3flip());
  checkGeneratorAction(a3flip, 6);
}

TEST_CASE("projected bar matches the module bar mod two") {
  Setup b2(testsys::b2());
  checkBarAgreement(b2, 4);
  Setup b2swap(testsys::dihedral(4, true));
  checkBarAgreement(b2swap, 4);
  Setup a3(testsys::a3());
  checkBarAgreement(a3, 6);
  Setup a3flip(testsys::a3flip());
  checkBarAgreement(a3flip, 6);
}

TEST_CASE("twisted r equals classical rho mod two") {
  Setup a3(testsys::a3());
  checkRAgreement(a3, 6);
  Setup a3flip(testsys::a3flip());
  checkRAgreement(a3flip, 6);
  Setup b2(testsys::b2());
  checkRAgreement(b2, 4);
  Setup b2swap(testsys::dihedral(4, true));
  checkRAgreement(b2swap, 4);
  Setup i26(testsys::i26());
  checkRAgreement(i26, 6);
  Setup affA1(testsys::affineA1());
  checkRAgreement(affA1, 6);
}

TEST_CASE("twisted columns equal classical columns mod two") {
  Setup a3(testsys::a3());
  checkColumnAgreement(a3, 6);
  Setup a3flip(testsys::a3flip());
  checkColumnAgreement(a3flip, 6);
  Setup b2(testsys::b2());
  checkColumnAgreement(b2, 4);
  Setup b2swap(testsys::dihedral(4, true));
  checkColumnAgreement(b2swap, 4);
  Setup i25(testsys::i25());
  checkColumnAgreement(i25, 5);
  Setup i26(testsys::i26());
  checkColumnAgreement(i26, 6);
  Setup affA2(testsys::affineA2swap());
  checkColumnAgreement(affA2, 5);
}

TEST_CASE("split halves are integral and reconstruct both columns") {
  Setup a3(testsys::a3());
  checkSplits(a3, 6, true);
  Setup b2(testsys::b2());
  checkSplits(b2, 4, true);
  Setup b3(testsys::b3());
  checkSplits(b3, 9, true);
  Setup i26(testsys::i26());
  checkSplits(i26, 6, true);
  // outside Weyl type the sign pattern is reported, not required
  Setup i25(testsys::i25());
  checkSplits(i25, 5, false);
  Setup h3(testsys::h3());
  checkSplits(h3, 8, false);
}
