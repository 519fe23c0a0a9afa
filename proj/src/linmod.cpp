#include "parkhopf/linmod.hpp"

#include <stdexcept>

#include "parkhopf/pfcore.hpp"

namespace parkhopf {

Integer graded_dim(GradedSpace space, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  switch (space) {
    case GradedSpace::pqsym:
      return n == 0 ? Integer(1) : ipow(n + 1, static_cast<unsigned long>(n - 1));
    case GradedSpace::cqsym:
      return binomial(2L * n, n) / (n + 1);
    case GradedSpace::sqsym: {
      if (n == 0) return 1;
      Integer s = 0;
      for (int k = 0; k <= n; ++k) s += binomial(n + 1, k) * binomial(2L * n - k, n - k);
      return s / (2 * n + 2);
    }
  }
  throw std::invalid_argument("unknown graded space");
}

}  // namespace parkhopf
