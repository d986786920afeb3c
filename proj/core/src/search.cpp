#include "eulercg/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ecg {

int search_bound(int requested) {
  if (const char* env = std::getenv("EULER_CG_BOUND")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return requested;
}

namespace {

int value_of_rank(int r) { return r == 0 ? 0 : (r % 2 ? (r + 1) / 2 : -(r / 2)); }

}  // namespace

std::vector<std::vector<int>> vectors_of_norm(int len, int norm) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    if (norm == 0) out.push_back({});
    return out;
  }
  int ranks = 2 * norm + 1;
  std::vector<int> idx(len, 0);
  while (true) {
    std::vector<int> v(len);
    int mx = 0;
    for (int i = 0; i < len; ++i) {
      v[i] = value_of_rank(idx[i]);
      mx = std::max(mx, std::abs(v[i]));
    }
    if (mx == norm) out.push_back(v);
    int k = len - 1;
    while (k >= 0 && ++idx[k] == ranks) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

std::vector<std::vector<int>> vectors_up_to(int len, int bound) {
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= bound; ++n)
    for (auto& v : vectors_of_norm(len, n)) out.push_back(std::move(v));
  return out;
}

}  // namespace ecg
