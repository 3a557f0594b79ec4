/*
  This is test_involution.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include <set>
#include <vector>

#include "doctest.h"
#include "ivhecke/involution.h"
#include "test_systems.h"

using namespace ivh;

namespace {

constexpr std::size_t kCap = 1u << 20;

// brute-force membership test, straight from the definition
bool twistedByHand(CoxeterSystem& W, CoxeterSystem::Elt w) {
  return W.star(W.inverse(w)) == w;
}

}  // namespace

TEST_CASE("twisted involutions with trivial star are the involutions") {
  auto Wp = testsys::a3();
  Involutions inv(*Wp);
  std::vector<CoxeterSystem::Elt> tw = inv.all(6, kCap);
  // in the symmetric group on four points: the identity, six transpositions
  // and three double transpositions
  CHECK(tw.size() == 10);
  for (auto w : tw) {
    CHECK(Wp->mul(w, w) == CoxeterSystem::kIdentity);
  }
  // sorted by (length, word)
  for (std::size_t i = 1; i < tw.size(); ++i) {
    CHECK(Wp->before(tw[i - 1], tw[i]));
  }
}

TEST_CASE("twisted involutions under the diagram flip") {
  auto Wp = testsys::a3flip();
  Involutions inv(*Wp);
  std::vector<CoxeterSystem::Elt> tw = inv.all(6, kCap);
  std::size_t count = 0;
  for (auto w : Wp->enumerate(6, kCap)) {
    if (twistedByHand(*Wp, w)) {
      ++count;
      CHECK(inv.isTwisted(w));
    }
  }
  CHECK(tw.size() == count);
  // the star swaps the outer generators, so a generator itself need not be
  // a twisted involution while a rotation-like product is
  CHECK(inv.isTwisted(Wp->fromLetters(std::string("\0\2", 2))));
  CHECK_FALSE(inv.isTwisted(Wp->generator(0)));
  CHECK(inv.isTwisted(Wp->generator(1)));
}

TEST_CASE("twisted involution counts in dihedral systems") {
  // identity star: the identity, the m reflections, and for even m the
  // central rotation
  for (int m = 3; m <= 6; ++m) {
    auto Wp = testsys::dihedral(m);
    Involutions inv(*Wp);
    std::size_t expected = static_cast<std::size_t>(m) + (m % 2 == 0 ? 2 : 1);
    CHECK(inv.all(m, kCap).size() == expected);
  }
  // swap star: all m rotations, plus the longest element when m is odd
  // (for odd m the longest element is a star-fixed reflection)
  for (int m = 3; m <= 6; ++m) {
    auto Wp = testsys::dihedral(m, true);
    Involutions inv(*Wp);
    std::size_t expected = static_cast<std::size_t>(m) + (m % 2 == 0 ? 0 : 1);
    CHECK(inv.all(m, kCap).size() == expected);
  }
}

TEST_CASE("dot action moves within the twisted set") {
  auto check = [](CoxeterSystem& W, int maxLen) {
    Involutions inv(W);
    for (auto w : inv.all(maxLen, kCap)) {
      for (int s = 0; s < W.rank(); ++s) {
        CoxeterSystem::Elt z = inv.dot(s, w);
        CHECK(inv.isTwisted(z));
        CHECK(inv.dot(s, z) == w);  // the dot action of s is an involution
        int diff = W.length(z) - W.length(w);
        CHECK((diff == 1 || diff == -1 || diff == 2 || diff == -2));
        CHECK(inv.dotDescends(s, w) == (diff < 0));
      }
    }
  };
  auto a3 = testsys::a3();
  check(*a3, 6);
  auto a3flip = testsys::a3flip();
  check(*a3flip, 6);
  auto b2swap = testsys::dihedral(4, true);
  check(*b2swap, 4);
  auto i25 = testsys::i25();
  check(*i25, 5);
  auto aff = testsys::affineA1();
  check(*aff, 6);
}

TEST_CASE("dot action off the twisted set is an internal error") {
  auto Wp = testsys::a3flip();
  Involutions inv(*Wp);
  CHECK_THROWS_AS(inv.dot(1, Wp->generator(0)), InternalError);
}

TEST_CASE("phi is chain independent and has the parity of the length") {
  auto check = [](CoxeterSystem& W, int maxLen) {
    Involutions inv(W);
    for (auto w : inv.all(maxLen, kCap)) {
      int value = inv.phi(w);
      CHECK(((value ^ W.length(w)) & 1) == 0);
      if (w == CoxeterSystem::kIdentity) {
        CHECK(value == 0);
        continue;
      }
      // every descent must produce the same value
      for (int s = 0; s < W.rank(); ++s) {
        if (!inv.dotDescends(s, w)) {
          continue;
        }
        CoxeterSystem::Elt down = inv.dot(s, w);
        int viaS = (W.length(down) == W.length(w) - 1) ? inv.phi(down) + 1
                                                       : inv.phi(down);
        CHECK(viaS == value);
      }
    }
  };
  auto a3 = testsys::a3();
  check(*a3, 6);
  auto a3flip = testsys::a3flip();
  check(*a3flip, 6);
  auto b2 = testsys::b2();
  check(*b2, 4);
  auto i26 = testsys::i26();
  check(*i26, 6);
}

TEST_CASE("phi and kappa on the dihedral longest element") {
  auto Wp = testsys::b2();
  Involutions inv(*Wp);
  CoxeterSystem::Elt w0 = Wp->longestElement(Wp->fullMask(), kCap);
  CHECK(inv.phi(w0) == 2);
  CHECK(inv.kappa(w0) == -1);
  CHECK(inv.kappa(CoxeterSystem::kIdentity) == 1);
  CHECK(inv.epsilon(w0) == 1);
  CHECK(inv.epsilon(Wp->generator(0)) == -1);
}

TEST_CASE("kappa alternates along the dot action") {
  auto check = [](CoxeterSystem& W, int maxLen) {
    Involutions inv(W);
    for (auto w : inv.all(maxLen, kCap)) {
      if (w == CoxeterSystem::kIdentity) {
        CHECK(inv.kappa(w) == 1);
        continue;
      }
      for (int s = 0; s < W.rank(); ++s) {
        if (inv.dotDescends(s, w)) {
          CHECK(inv.kappa(w) == -inv.kappa(inv.dot(s, w)));
        }
      }
    }
  };
  auto a3 = testsys::a3();
  check(*a3, 6);
  auto a3flip = testsys::a3flip();
  check(*a3flip, 6);
  auto i25 = testsys::i25();
  check(*i25, 5);
  auto aff = testsys::affineA2swap();
  check(*aff, 5);
}
