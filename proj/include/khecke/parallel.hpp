#pragma once

#include <cstddef>
#include <functional>

namespace khecke {

/// Worker cap shared by every parallel loop. Defaults to KHECKE_JOBS when
/// set, else the number of hardware threads.
std::size_t jobs();
void set_jobs(std::size_t n);

/// Calls body(i) for i in [0, n) across up to jobs() threads. Bodies must
/// write only to per-index slots; callers merge in index order so results do
/// not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace khecke
