#pragma once

#include "dgk/digraph.hpp"
#include "dgk/matrix.hpp"

namespace dgk {

// Edge i -> j iff there is a directed path of length >= 1 from i to j;
// weights all 1.
Digraph transitive_closure(const Digraph& g);

// Checks of e^{-L}: row-stochastic, non-negative, and its positivity
// pattern equals the reflexive-transitive closure of the walk digraph
// (the graph of S's nonzero pattern).
struct ClosureReport {
  bool is_row_stochastic = false;
  double max_row_sum_residual = 0;
  bool is_nonnegative = false;
  double min_entry = 0;
  bool closure_consistent = false;
  bool ok() const {
    return is_row_stochastic && is_nonnegative && closure_consistent;
  }
};

ClosureReport closure_check(const Digraph& g, double eps = 1e-12);

// Compares the projection built from L = I - S with the one built from
// L~ = I - e^{-L}; the two kernels coincide, so the projections should
// agree to tol.
bool kernel_equality_check(const Digraph& g, double tol = 1e-8,
                           double* distance = nullptr);

}  // namespace dgk
