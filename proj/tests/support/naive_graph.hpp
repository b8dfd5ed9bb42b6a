#ifndef LPK_TESTS_NAIVE_GRAPH_HPP
#define LPK_TESTS_NAIVE_GRAPH_HPP

#include "lpk/graph.hpp"

namespace lpk::testsupport {

// Brute-force evaluator used as an oracle against graphOf: instead of
// composing whole matchings it chases every atom occurrence individually
// through the term, bouncing at composition boundaries. Loops are not
// tracked; link sets are what the cross-check compares.
KMGraph naiveGraph(const ArrowPtr& t, SystemId system);

}  // namespace lpk::testsupport

#endif
