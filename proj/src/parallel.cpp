#include "ftlab/parallel.hpp"

namespace ftlab {

void parallel_for(Exec exec, int n, const std::function<void(int)>& body) {
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) body(i);
}

double pairwise_sum(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  std::vector<double> buf = x;
  size_t n = buf.size();
  while (n > 1) {
    const size_t half = n / 2;
    for (size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (n % 2) buf[half] = buf[n - 1];
    n = half + n % 2;
  }
  return buf[0];
}

}  // namespace ftlab
