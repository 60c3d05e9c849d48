#pragma once

#include <cstddef>
#include <functional>

namespace twisteq {

// Execution policy for the sweep kernels. Parallel runs under OpenMP when
// compiled in; Serial is the reference path and must produce identical
// results (callers write into preallocated slots and reduce in index order).
enum class Exec { Serial, Parallel };

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  Exec exec = Exec::Parallel);

int max_threads();

}  // namespace twisteq
