#include "boxdioph/frobenius.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace boxdioph {

namespace {

void require_positive(std::span<const Integer> a) {
  if (a.empty())
    throw Error(ErrorKind::DimensionMismatch, "empty coefficient vector");
  for (const auto &v : a)
    if (sgn(v) <= 0)
      throw Error(ErrorKind::NonPositiveEntry,
                  "entry " + v.get_str() + " is not positive");
}

void require_primitive(std::span<const Integer> a) {
  Integer g = 0;
  for (const auto &v : a)
    g = gcd(g, v);
  if (g != 1)
    throw Error(ErrorKind::GcdNotOne, "gcd of entries is " + g.get_str());
}

} // namespace

IntVector f_chain(std::span<const Integer> a) {
  require_positive(a);
  IntVector f(a.size());
  f[0] = a[0];
  for (std::size_t i = 1; i < a.size(); ++i)
    f[i] = gcd(f[i - 1], a[i]);
  return f;
}

Integer brauer_G(std::span<const Integer> a) {
  require_positive(a);
  require_primitive(a);
  const IntVector f = f_chain(a);
  Integer G = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    G += a[i] * (f[i - 1] / f[i]);
  for (const auto &v : a)
    G -= v;
  return G;
}

Integer frobenius_number_dp(std::span<const Integer> a, unsigned long cap) {
  require_positive(a);
  require_primitive(a);
  const Integer &smallest = *std::min_element(a.begin(), a.end());
  if (smallest > cap)
    throw Error(ErrorKind::CapExceeded,
                "smallest entry " + smallest.get_str() + " exceeds cap");
  const unsigned long mod = smallest.get_ui();
  if (mod == 1)
    return -1;

  // dist[r] = least representable number congruent to r modulo `mod`.
  std::vector<Integer> dist(mod);
  std::vector<bool> known(mod, false);
  std::vector<unsigned long> steps;
  for (const auto &v : a)
    steps.push_back(Integer(v % mod).get_ui());

  using Entry = std::pair<Integer, unsigned long>;
  auto cmp = [](const Entry &l, const Entry &r) { return l.first > r.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
  std::vector<bool> seen(mod, false);
  dist[0] = 0;
  seen[0] = true;
  queue.emplace(Integer(0), 0UL);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (known[r])
      continue;
    known[r] = true;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const unsigned long next = (r + steps[k]) % mod;
      const Integer nd = d + a[k];
      if (!seen[next] || nd < dist[next]) {
        seen[next] = true;
        dist[next] = nd;
        queue.emplace(nd, next);
      }
    }
  }
  Integer worst = 0;
  for (const auto &d : dist)
    worst = std::max(worst, d);
  return worst - smallest;
}

IntVector box_shape(std::span<const Integer> a) {
  const IntVector f = f_chain(a);
  IntVector shape(a.size() - 1);
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    shape[i] = f[i] / f[i + 1];
  return shape;
}

} // namespace boxdioph
