/*
  This is test_systems.h

  ivhecke : Hecke-module structures on twisted involutions

  See file LICENSE for full copyright notice
*/

#ifndef IVH_TEST_SYSTEMS_H
#define IVH_TEST_SYSTEMS_H

#include <memory>
#include <string>
#include <vector>

#include "ivhecke/coxeter.h"

namespace ivh::testsys {

/*
  Programmatic builders for the systems exercised throughout the tests.
  The same data lives under systems/ as descriptors for the command-line
  tool; the descriptor tests check the two stay in agreement.
*/

inline std::unique_ptr<CoxeterSystem> chain(int n, std::vector<int> star) {
  // simply laced chain: m = 3 between neighbours, 2 otherwise
  std::vector<std::string> labels;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    if (i + 1 < n) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 3;
      m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = 3;
    }
  }
  return std::make_unique<CoxeterSystem>(labels, m, star);
}

inline std::unique_ptr<CoxeterSystem> a1() { return chain(1, {0}); }
inline std::unique_ptr<CoxeterSystem> a2() { return chain(2, {0, 1}); }
inline std::unique_ptr<CoxeterSystem> a2swap() { return chain(2, {1, 0}); }
inline std::unique_ptr<CoxeterSystem> a3() { return chain(3, {0, 1, 2}); }
inline std::unique_ptr<CoxeterSystem> a3flip() { return chain(3, {2, 1, 0}); }

inline std::unique_ptr<CoxeterSystem> dihedral(int m, bool swapStar = false) {
  std::vector<std::string> labels{"0", "1"};
  std::vector<std::vector<int>> mat{{1, m}, {m, 1}};
  std::vector<int> star = swapStar ? std::vector<int>{1, 0}
                                   : std::vector<int>{0, 1};
  return std::make_unique<CoxeterSystem>(labels, mat, star);
}

inline std::unique_ptr<CoxeterSystem> b2() { return dihedral(4); }
inline std::unique_ptr<CoxeterSystem> i25() { return dihedral(5); }
inline std::unique_ptr<CoxeterSystem> i26() { return dihedral(6); }

inline std::unique_ptr<CoxeterSystem> b3() {
  std::vector<std::string> labels{"0", "1", "2"};
  std::vector<std::vector<int>> mat{{1, 4, 2}, {4, 1, 3}, {2, 3, 1}};
  return std::make_unique<CoxeterSystem>(labels, mat, std::vector<int>{0, 1, 2});
}

inline std::unique_ptr<CoxeterSystem> h3() {
  std::vector<std::string> labels{"0", "1", "2"};
  std::vector<std::vector<int>> mat{{1, 5, 2}, {5, 1, 3}, {2, 3, 1}};
  return std::make_unique<CoxeterSystem>(labels, mat, std::vector<int>{0, 1, 2});
}

// affine systems; generator 0 is the affine letter throughout

inline std::unique_ptr<CoxeterSystem> affineA1() {
  std::vector<std::string> labels{"0", "1"};
  std::vector<std::vector<int>> mat{{1, 0}, {0, 1}};  // 0 encodes infinity
  return std::make_unique<CoxeterSystem>(labels, mat, std::vector<int>{0, 1});
}

inline std::unique_ptr<CoxeterSystem> affineA2swap() {
  std::vector<std::string> labels{"0", "1", "2"};
  std::vector<std::vector<int>> mat{{1, 3, 3}, {3, 1, 3}, {3, 3, 1}};
  return std::make_unique<CoxeterSystem>(labels, mat, std::vector<int>{0, 2, 1});
}

inline std::unique_ptr<CoxeterSystem> affineC2() {
  // bonds: m(0,1) = 4, m(1,2) = 4, m(0,2) = 2
  std::vector<std::string> labels{"0", "1", "2"};
  std::vector<std::vector<int>> mat{{1, 4, 2}, {4, 1, 4}, {2, 4, 1}};
  return std::make_unique<CoxeterSystem>(labels, mat, std::vector<int>{0, 1, 2});
}

}  // namespace ivh::testsys

#endif
