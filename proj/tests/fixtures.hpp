#ifndef SUBTREE_TESTS_FIXTURES_HPP
#define SUBTREE_TESTS_FIXTURES_HPP

#include <vector>

#include "subtree/tree.hpp"

namespace fixtures {

/// The 19-vertex example tree drawn layer by layer: ids 0 | 1..4 | 5..13 |
/// 14..18, degrees (4,4,3,3,3,3,3,2,1 x 11) in id order.
inline subtree::Tree layered_example() {
  std::vector<subtree::Edge> e = {
      {0, 1},  {0, 2},  {0, 3},  {0, 4},                     // root
      {1, 5},  {1, 6},  {1, 7},                              // v11
      {2, 8},  {2, 9},                                       // v12
      {3, 10}, {3, 11},                                      // v13
      {4, 12}, {4, 13},                                      // v14
      {5, 14}, {5, 15}, {6, 16}, {6, 17}, {7, 18},           // layer 3
  };
  return subtree::tree_from_edges(19, e);
}

inline std::vector<long long> layered_example_degrees() {
  return {4, 4, 3, 3, 3, 3, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
}

}  // namespace fixtures

#endif  // SUBTREE_TESTS_FIXTURES_HPP
