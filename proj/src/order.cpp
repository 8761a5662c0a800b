#include "lexsearch/order.hpp"

#include <algorithm>

#include "lexsearch/error.hpp"

namespace lexsearch {

VertexOrder VertexOrder::of_sequence(std::vector<int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n == 0) fail(ErrorKind::InvalidOrder, "empty order");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = seq[i];
    if (v < 0 || v >= n) fail(ErrorKind::InvalidOrder, "id " + std::to_string(v) + " out of range");
    if (pos[v] != -1) fail(ErrorKind::InvalidOrder, "id " + std::to_string(v) + " repeated");
    pos[v] = i;
  }
  VertexOrder order;
  order.seq_ = std::move(seq);
  order.pos_ = std::move(pos);
  return order;
}

VertexOrder VertexOrder::reversed() const {
  const int n = static_cast<int>(seq_.size());
  VertexOrder order;
  order.seq_.assign(seq_.rbegin(), seq_.rend());
  order.pos_.resize(n);
  for (int v = 0; v < n; ++v) order.pos_[v] = n - 1 - pos_[v];
  return order;
}

}  // namespace lexsearch
