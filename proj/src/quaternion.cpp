#include "tribospin/split_quaternion.hpp"

namespace tribospin {

SplitQuaternion gtn_quaternion(const SequenceParams& p, long n) {
  if (n < 0) throw PreconditionError("sequence index must be nonnegative");
  std::vector<Rational> v = term_range(p, n + 3);
  return {v[n], v[n + 1], v[n + 2], v[n + 3]};
}

}  // namespace tribospin
