#pragma once

#include "spherebraid/braid_word.hpp"

namespace spherebraid::testsupport {

// Signature of the closure link of a braid word via the Goeritz matrix of
// the checkerboard coloring of the standard closure diagram, with the
// Gordon-Litherland correction term.  Independent of the Seifert-matrix
// route in the library: different surface, different matrix, separate
// exact-signature code.
int goeritz_signature(const BraidWord& w);

}  // namespace spherebraid::testsupport
