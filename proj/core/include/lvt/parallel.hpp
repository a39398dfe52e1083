#pragma once

namespace lvt {

/// Cap the number of worker threads used by parallel kernels. n <= 0 restores the default.
void set_thread_count(int n);
int thread_count();

}  // namespace lvt
