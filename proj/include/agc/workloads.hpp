#pragma once

#include "agc/trace.hpp"

namespace agc {

// Concurrent Fibonacci shaped as a spawn tree. The actor holding argument j
// spawns children for j-1 and j-2 when j exceeds the sequential threshold
// and computes inline otherwise, so the distinct-actor count A obeys
//   A(j) = 1                     for j <= threshold
//   A(j) = 1 + A(j-1) + A(j-2)   otherwise.
// Children reply to their parent, both sides drop their references, and the
// child terminates, so finished subtrees become garbage while the trace is
// still running. The actor holding k is the root and never terminates.
// Lowering the threshold gives the same shape at desk scale.
MutationTrace gen_fib_trace(std::uint64_t k, std::uint64_t threshold = 30);

// One coordinator (the root) plus (n-1)*(n-2) workers. Every worker reports
// back to the coordinator, both drop their references, and the worker
// terminates.
MutationTrace gen_nqueens_trace(std::uint64_t n);

// Shape-only matrix multiplication: an initiator (the root) plus two
// workers, or four sub-matrix workers when distributed. dim labels the run;
// no numbers are multiplied.
MutationTrace gen_matmul_trace(std::uint64_t dim, bool distributed);

}  // namespace agc
