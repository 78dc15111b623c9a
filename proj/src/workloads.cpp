#include "agc/workloads.hpp"

#include <stdexcept>

namespace agc {

namespace {

struct FibBuilder {
  MutationTrace& trace;
  std::uint64_t threshold;
  ActorId next_id = 1;

  void emit(EventKind k, ActorId a, ActorId b = 0) { trace.events.push_back({k, a, b}); }

  // Child finished: report to the parent (which unblocks it), have the
  // parent drop its reference, then retire the child. The child keeps its
  // own reference to the parent until terminate drops it, so every method
  // agrees the child is live right up to its last event and garbage after.
  void reply(ActorId child, ActorId parent) {
    emit(EventKind::send, child, parent);
    emit(EventKind::drop_ref, parent, child);
    emit(EventKind::terminate, child);
  }

  // Emits the whole computation of argument j by actor self. The root never
  // blocks; everyone else blocks while a child subtree runs.
  void compute(ActorId self, std::uint64_t j, bool is_root) {
    if (j <= threshold) return;  // computed inline
    ActorId left = next_id++;
    emit(EventKind::spawn, self, left);
    emit(EventKind::add_ref, left, self);
    ActorId right = next_id++;
    emit(EventKind::spawn, self, right);
    emit(EventKind::add_ref, right, self);

    if (!is_root) emit(EventKind::block, self);
    compute(left, j - 1, false);
    reply(left, self);  // unblocks self

    if (!is_root) emit(EventKind::block, self);
    compute(right, j - 2, false);
    reply(right, self);
  }
};

// Root 0 spawns `workers` helpers; each reports back and terminates.
MutationTrace fan_out_trace(std::uint64_t workers) {
  MutationTrace t;
  t.initial.add_root(0);
  auto emit = [&](EventKind k, ActorId a, ActorId b = 0) { t.events.push_back({k, a, b}); };
  for (ActorId w = 1; w <= workers; ++w) {
    emit(EventKind::spawn, 0, w);
    emit(EventKind::add_ref, w, 0);
  }
  for (ActorId w = 1; w <= workers; ++w) {
    emit(EventKind::send, w, 0);
    emit(EventKind::drop_ref, 0, w);
    emit(EventKind::terminate, w);
  }
  t.expected_actor_total = workers + 1;
  return t;
}

}  // namespace

MutationTrace gen_fib_trace(std::uint64_t k, std::uint64_t threshold) {
  if (k < 1) throw std::invalid_argument("fib argument must be at least 1");
  if (threshold < 1) throw std::invalid_argument("fib threshold must be at least 1");
  MutationTrace t;
  t.initial.add_root(0);
  FibBuilder builder{t, threshold};
  builder.compute(0, k, true);
  t.expected_actor_total = builder.next_id;
  return t;
}

MutationTrace gen_nqueens_trace(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("board size must be at least 3");
  return fan_out_trace((n - 1) * (n - 2));
}

MutationTrace gen_matmul_trace(std::uint64_t dim, bool distributed) {
  if (dim < 1) throw std::invalid_argument("dimension must be at least 1");
  return fan_out_trace(distributed ? 4 : 2);
}

}  // namespace agc
