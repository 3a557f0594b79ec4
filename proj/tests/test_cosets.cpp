/*
  This is test_cosets.cpp

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

#include "doctest.h"
#include "ivhecke/cosets.h"
#include "test_systems.h"

using namespace ivh;

namespace {

constexpr std::size_t kCap = 1u << 20;

struct Setup {
  std::unique_ptr<CoxeterSystem> d_system;
  std::unique_ptr<Involutions> d_involutions;

  explicit Setup(std::unique_ptr<CoxeterSystem> system)
      : d_system(std::move(system)),
        d_involutions(new Involutions(*d_system)) {}

  CoxeterSystem& W() { return *d_system; }
  Involutions& I() { return *d_involutions; }

  int fullLength() {
    return d_system->length(
        d_system->longestElement(d_system->fullMask(), kCap));
  }
};

void checkDecomposition(Setup& setup, DoubleCoset::Mask k, int maxLen) {
  std::vector<DoubleCoset> cosets =
      starStableCosets(setup.W(), setup.I(), k, maxLen, kCap);
  for (auto& coset : cosets) {
    for (auto x : setup.W().enumerate(maxLen, kCap)) {
      if (!coset.contains(x)) {
        continue;
      }
      DoubleCoset::Coordinates co = coset.decompose(x);
      CHECK(setup.W().mul(setup.W().mul(co.d_c, coset.minimal()),
                          co.d_dPrime) == x);
      CHECK(setup.W().length(x) ==
            setup.W().length(co.d_c) + setup.W().length(coset.minimal()) +
                setup.W().length(co.d_dPrime));
      CHECK((setup.W().rightDescentMask(co.d_c) & coset.jMask()) == 0);
      for (char letter : setup.W().wordOf(co.d_dPrime)) {
        CHECK((coset.kStarMask() & (1u << static_cast<int>(letter))) != 0);
      }
      CHECK(setup.W().bruhatLeq(coset.minimal(), x));
      CHECK(setup.W().bruhatLeq(x, coset.maximal()));
    }
  }
}

void checkRankOne(Setup& setup, int s) {
  std::vector<DoubleCoset> cosets = starStableCosets(
      setup.W(), setup.I(), 1u << s, setup.fullLength(), kCap);
  for (auto& coset : cosets) {
    std::vector<DoubleCoset::Elt> members = coset.twistedMembers(kCap);
    CHECK(members.size() == 2);
    CHECK(members[0] == coset.minimal());
    CHECK(members[1] == coset.maximal());
    DoubleCoset::Elt b = coset.minimal();
    if (coset.caseTag() == "i") {
      CHECK(setup.W().leftMul(s, b) ==
            setup.W().rightMul(b, setup.W().starGen(s)));
      CHECK(coset.maximal() ==
            setup.W().rightMul(b, setup.W().starGen(s)));
      CHECK(setup.W().length(coset.maximal()) == setup.W().length(b) + 1);
      CHECK(coset.jMask() == (1u << s));
    } else {
      CHECK(coset.caseTag() == "ii");
      CHECK(coset.maximal() ==
            setup.W().rightMul(setup.W().leftMul(s, b),
                               setup.W().starGen(s)));
      CHECK(setup.W().length(coset.maximal()) == setup.W().length(b) + 2);
      CHECK(coset.jMask() == 0);
    }
  }
}

// expected subscript (and so length offset over beta) per chain position
std::vector<int> chainOffsets(const std::string& tag, int m,
                              std::size_t count, bool prime) {
  std::vector<int> out;
  if (tag == "i") {
    for (std::size_t j = 0; j < count; ++j) {
      out.push_back(2 * static_cast<int>(j));
    }
  } else if (tag == "ii" || tag == "iii") {
    if (prime) {
      return out;
    }
    for (std::size_t j = 0; j < count; ++j) {
      out.push_back(static_cast<int>(j));
    }
  } else if (tag == "iv" || tag == "v") {
    out.push_back(0);
    for (std::size_t j = 1; j < count; ++j) {
      out.push_back(2 * static_cast<int>(j) - 1);
    }
    if (tag == "v") {
      out.back() = m;
    }
  } else {
    out.push_back(0);
    for (std::size_t j = 1; j < count; ++j) {
      out.push_back(2 * static_cast<int>(j));
    }
    if (tag == "vi") {
      out.back() = m;
    }
  }
  return out;
}

void checkRankTwo(Setup& setup, DoubleCoset::Mask k,
                  std::set<std::string>* tags = nullptr) {
  std::vector<DoubleCoset> cosets =
      starStableCosets(setup.W(), setup.I(), k, setup.fullLength(), kCap);
  CHECK_FALSE(cosets.empty());
  for (auto& coset : cosets) {
    DoubleCoset::Chains chains = coset.rank2Chains();
    CHECK_FALSE(chains.d_tag.empty());
    if (tags != nullptr) {
      tags->insert(chains.d_tag);
    }

    int s = 0;
    while ((k & (1u << s)) == 0) {
      ++s;
    }
    int t = s + 1;
    while ((k & (1u << t)) == 0) {
      ++t;
    }
    int m = setup.W().bond(s, t);
    int beta = setup.W().length(coset.minimal());

    std::set<DoubleCoset::Elt> predicted(chains.d_xi.begin(),
                                         chains.d_xi.end());
    predicted.insert(chains.d_xiPrime.begin(), chains.d_xiPrime.end());
    std::vector<DoubleCoset::Elt> members = coset.twistedMembers(kCap);
    std::set<DoubleCoset::Elt> actual(members.begin(), members.end());
    CHECK(predicted == actual);

    CHECK(chains.d_xi.front() == coset.minimal());
    CHECK(chains.d_xi.back() == coset.maximal());
    if (!chains.d_xiPrime.empty()) {
      CHECK(chains.d_xiPrime.front() == coset.minimal());
      CHECK(chains.d_xiPrime.back() == coset.maximal());
    }

    std::vector<int> offsets =
        chainOffsets(chains.d_tag, m, chains.d_xi.size(), false);
    REQUIRE(offsets.size() == chains.d_xi.size());
    for (std::size_t j = 0; j < offsets.size(); ++j) {
      CHECK(setup.W().length(chains.d_xi[j]) == beta + offsets[j]);
    }
    std::vector<int> primeOffsets =
        chainOffsets(chains.d_tag, m, chains.d_xiPrime.size(), true);
    REQUIRE(primeOffsets.size() == chains.d_xiPrime.size());
    for (std::size_t j = 0; j < primeOffsets.size(); ++j) {
      CHECK(setup.W().length(chains.d_xiPrime[j]) == beta + primeOffsets[j]);
    }
  }
}

void checkChains(Setup& setup, DoubleCoset::Mask k) {
  std::vector<DoubleCoset> cosets =
      starStableCosets(setup.W(), setup.I(), k, setup.fullLength(), kCap);
  for (auto& coset : cosets) {
    for (auto x : coset.twistedMembers(kCap)) {
      auto chain = coset.chainToMin(x);
      CHECK(chain.empty() == (x == coset.minimal()));
      DoubleCoset::Elt at = x;
      for (const auto& step : chain) {
        CHECK((k & (1u << step.first)) != 0);
        CHECK(setup.W().length(step.second) < setup.W().length(at));
        CHECK(step.second == setup.I().dot(step.first, at));
        at = step.second;
      }
      if (!chain.empty()) {
        CHECK(chain.back().second == coset.minimal());
      }
    }
  }
}

}  // namespace

TEST_CASE("whole group as a single coset in rank two") {
  Setup a2(testsys::a2());
  DoubleCoset coset(a2.W(), a2.I(), 3u, a2.W().generator(0), kCap);
  CHECK(coset.minimal() == CoxeterSystem::kIdentity);
  CHECK(coset.jMask() == 3u);
  CHECK(coset.maximal() ==
        a2.W().fromLetters(std::string("\0\1\0", 3)));
  CHECK(coset.starStable());
  std::vector<DoubleCoset::Elt> members = coset.twistedMembers(kCap);
  CHECK(members.size() == 4);
  CHECK(coset.caseTag() == "iv");

  DoubleCoset::Coordinates co = coset.decompose(a2.W().generator(0));
  CHECK(co.d_c == CoxeterSystem::kIdentity);
  CHECK(co.d_dPrime == a2.W().generator(0));
}

TEST_CASE("infinite parabolic subgroups are rejected") {
  Setup aff(testsys::affineA1());
  CHECK_THROWS_AS(
      DoubleCoset(aff.W(), aff.I(), 3u, CoxeterSystem::kIdentity, 1u << 8),
      DomainError);
}

TEST_CASE("coordinates multiply back with additive lengths") {
  Setup a3(testsys::a3());
  checkDecomposition(a3, 3u, 6);
  checkDecomposition(a3, 5u, 6);
  Setup a3flip(testsys::a3flip());
  checkDecomposition(a3flip, 3u, 6);
  checkDecomposition(a3flip, 7u, 6);
}

TEST_CASE("rank one cosets come in two shapes") {
  Setup a3flip(testsys::a3flip());
  checkRankOne(a3flip, 0);
  checkRankOne(a3flip, 1);
  Setup b2(testsys::b2());
  checkRankOne(b2, 0);
  Setup i25(testsys::i25());
  checkRankOne(i25, 1);
}

TEST_CASE("rank two chains match the twisted members") {
  std::set<std::string> tags;
  Setup a2(testsys::a2());
  checkRankTwo(a2, 3u, &tags);
  CHECK(tags.count("iv") == 1);

  tags.clear();
  Setup b2(testsys::b2());
  checkRankTwo(b2, 3u, &tags);
  CHECK(tags.count("v") == 1);

  tags.clear();
  Setup a2swap(testsys::a2swap());
  checkRankTwo(a2swap, 3u, &tags);
  CHECK(tags.count("vi") == 1);

  tags.clear();
  Setup b2swap(testsys::dihedral(4, true));
  checkRankTwo(b2swap, 3u, &tags);
  CHECK(tags.count("vii") == 1);

  tags.clear();
  Setup a3(testsys::a3());
  checkRankTwo(a3, 3u, &tags);   // contains a case ii coset
  checkRankTwo(a3, 6u, &tags);   // contains a case iii coset
  checkRankTwo(a3, 5u, &tags);   // commuting generators give case i
  CHECK(tags.count("ii") == 1);
  CHECK(tags.count("iii") == 1);
  CHECK(tags.count("i") == 1);

  Setup a3flip(testsys::a3flip());
  checkRankTwo(a3flip, 3u);
  checkRankTwo(a3flip, 5u);
  Setup i26(testsys::i26());
  checkRankTwo(i26, 3u);
  Setup h3(testsys::h3());
  checkRankTwo(h3, 3u);
  checkRankTwo(h3, 6u);
}

TEST_CASE("descent chains reach the minimal element") {
  Setup a2(testsys::a2());
  DoubleCoset whole(a2.W(), a2.I(), 3u, CoxeterSystem::kIdentity, kCap);
  auto chain =
      whole.chainToMin(a2.W().fromLetters(std::string("\0\1\0", 3)));
  CHECK(chain.size() >= 1);
  CHECK(chain.back().second == CoxeterSystem::kIdentity);

  Setup a3flip(testsys::a3flip());
  checkChains(a3flip, 3u);
  checkChains(a3flip, 7u);
  Setup b3(testsys::b3());
  checkChains(b3, 3u);
  checkChains(b3, 7u);
}

TEST_CASE("cosets partition the twisted involutions") {
  Setup a3(testsys::a3());
  for (DoubleCoset::Mask k : {1u, 3u, 5u, 6u, 7u}) {
    std::vector<DoubleCoset> cosets =
        starStableCosets(a3.W(), a3.I(), k, a3.fullLength(), kCap);
    std::vector<DoubleCoset::Elt> collected;
    for (auto& coset : cosets) {
      for (auto x : coset.twistedMembers(kCap)) {
        collected.push_back(x);
      }
    }
    a3.W().sortElements(collected);
    CHECK(collected == a3.I().all(a3.fullLength(), kCap));
  }
}
