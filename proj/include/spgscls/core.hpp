#pragma once

#include "spgscls/types.hpp"

namespace spgscls {

struct CompileOptions {
  /// H is materialized dense up to this dimension; above it, Lhat is kept
  /// and H is formed as a sparse product.
  Index dense_threshold = 4096;
};

/// Checks the ProblemData invariants: consistent row counts, gamma > 0,
/// m, n >= 1, all entries finite.
void validate(const ProblemData& data);

/// Assembles the compact spherical least-squares form from a validated
/// instance. Sparse X yields sparse Lhat. Deterministic.
SclsProblem compile(const ProblemData& data, const CompileOptions& opts = {});

}  // namespace spgscls
