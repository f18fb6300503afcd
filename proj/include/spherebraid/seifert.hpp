#pragma once

#include <Eigen/Dense>

#include "spherebraid/braid_word.hpp"

namespace spherebraid {

/// Seifert matrix of the Bennequin surface of the braid word: one disk per
/// strand, one band per letter, H_1 basis from consecutive same-corridor
/// band pairs.  Size is c - m + s (letters - strands + split components).
Eigen::MatrixXi seifert_matrix(const BraidWord& w);

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization over the rationals (no floating point).
int signature_exact(const Eigen::MatrixXi& sym);

/// Signature of the closure link of the braid word, computed as the
/// signature of V + V^T; the positive trefoil sigma_1^3 gives -2.
int closure_signature(const BraidWord& w);

}  // namespace spherebraid
