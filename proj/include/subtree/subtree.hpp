#ifndef SUBTREE_SUBTREE_HPP
#define SUBTREE_SUBTREE_HPP

#include "subtree/canonical.hpp"
#include "subtree/common.hpp"
#include "subtree/count.hpp"
#include "subtree/extremal.hpp"
#include "subtree/formulas.hpp"
#include "subtree/io.hpp"
#include "subtree/majorization.hpp"
#include "subtree/oracle.hpp"
#include "subtree/tree.hpp"

#endif  // SUBTREE_SUBTREE_HPP
