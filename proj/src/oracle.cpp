#include "boxdioph/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace boxdioph {

namespace {

std::int64_t to_i64(const Integer &v) {
  if (!v.fits_slong_p())
    throw Error(ErrorKind::DimensionMismatch,
                "oracle coefficient does not fit in 64 bits");
  return v.get_si();
}

class Enumerator {
public:
  Enumerator(const IntMatrix &A, std::span<const Integer> b,
             const EnumerationBudget &budget)
      : m_(A.rows()), n_(A.cols()), budget_(budget), a_(m_ * n_), b_(m_),
        nonneg_row_(m_, true), bound_(n_, budget.per_var_bound), x_(n_, 0) {
    if (b.size() != m_)
      throw Error(ErrorKind::DimensionMismatch, "b has wrong length");
    if (n_ == 0)
      throw Error(ErrorKind::DimensionMismatch, "no variables");
    for (std::size_t i = 0; i < m_; ++i) {
      b_[i] = to_i64(b[i]);
      for (std::size_t j = 0; j < n_; ++j) {
        a_[i * n_ + j] = to_i64(A(i, j));
        if (a_[i * n_ + j] < 0)
          nonneg_row_[i] = false;
      }
    }
    conclusive_ = true;
    for (std::size_t j = 0; j < n_; ++j) {
      bool bounded = false;
      for (std::size_t i = 0; i < m_; ++i) {
        const std::int64_t c = a_[i * n_ + j];
        if (!nonneg_row_[i] || c <= 0)
          continue;
        const std::int64_t cap = b_[i] < 0 ? -1 : b_[i] / c;
        bound_[j] = bounded ? std::min(bound_[j], cap) : cap;
        bounded = true;
      }
      conclusive_ = conclusive_ && bounded;
    }
    // The last variable is solved from a row where it has a nonzero coefficient.
    for (std::size_t i = 0; i < m_; ++i)
      if (a_[i * n_ + n_ - 1] != 0) {
        pivot_row_ = i;
        break;
      }
    residual_ = b_;
  }

  bool conclusive() const { return conclusive_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  // Visits solutions until `visit` returns false or the budget runs out.
  void run(const std::function<bool(const std::vector<std::int64_t> &)> &visit) {
    visit_ = &visit;
    if (std::any_of(bound_.begin(), bound_.end(),
                    [](std::int64_t v) { return v < 0; }))
      return;
    descend(0);
  }

private:
  // On entry residual_ = b - A x with x_j = 0; restored before returning.
  bool descend(std::size_t j) {
    if (++nodes_ > budget_.node_cap) {
      exhausted_ = true;
      return false;
    }
    if (j + 1 == n_)
      return close_last();
    std::int64_t v = 0;
    bool more = true;
    for (; v <= bound_[j]; ++v) {
      if (!feasible_prefix())
        break;
      x_[j] = v;
      if (!descend(j + 1)) {
        more = false;
        break;
      }
      shift(j, -1);
    }
    shift(j, v);
    x_[j] = 0;
    return more;
  }

  // Tries the value of the last variable forced by the pivot row.
  bool close_last() {
    const std::size_t j = n_ - 1;
    std::vector<std::int64_t> candidates;
    if (pivot_row_) {
      const std::int64_t c = a_[*pivot_row_ * n_ + j];
      const std::int64_t r = residual_[*pivot_row_];
      if (r % c == 0 && r / c >= 0 && r / c <= bound_[j])
        candidates.push_back(r / c);
    } else {
      for (std::int64_t v = 0; v <= bound_[j]; ++v)
        candidates.push_back(v);
    }
    for (std::int64_t v : candidates) {
      bool ok = true;
      for (std::size_t i = 0; i < m_ && ok; ++i)
        ok = residual_[i] == a_[i * n_ + j] * v;
      if (!ok)
        continue;
      x_[j] = v;
      const bool more = (*visit_)(x_);
      x_[j] = 0;
      if (!more)
        return false;
    }
    return true;
  }

  bool feasible_prefix() const {
    for (std::size_t i = 0; i < m_; ++i)
      if (nonneg_row_[i] && residual_[i] < 0)
        return false;
    return true;
  }

  // residual_ += delta * column j
  void shift(std::size_t j, std::int64_t delta) {
    for (std::size_t i = 0; i < m_; ++i)
      residual_[i] += a_[i * n_ + j] * delta;
  }

  std::size_t m_, n_;
  EnumerationBudget budget_;
  std::vector<std::int64_t> a_, b_;
  std::vector<bool> nonneg_row_;
  std::vector<std::int64_t> bound_, x_, residual_;
  std::optional<std::size_t> pivot_row_;
  bool conclusive_ = false;
  bool exhausted_ = false;
  std::uint64_t nodes_ = 0;
  const std::function<bool(const std::vector<std::int64_t> &)> *visit_ = nullptr;
};

IntVector to_int_vector(const std::vector<std::int64_t> &v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v)
    out.emplace_back(static_cast<long>(x));
  return out;
}

} // namespace

OracleResult brute_force_solve(const IntMatrix &A, std::span<const Integer> b,
                               const EnumerationBudget &budget) {
  Enumerator e(A, b, budget);
  OracleResult res;
  e.run([&](const std::vector<std::int64_t> &x) {
    res.x = to_int_vector(x);
    return false;
  });
  res.conclusive = e.conclusive();
  res.nodes = e.nodes();
  if (!res.x.empty())
    res.status = OracleStatus::Found;
  else if (e.exhausted())
    res.status = OracleStatus::Exhausted;
  else
    res.status = OracleStatus::NoneWithinBounds;
  return res;
}

std::vector<IntVector> brute_force_all(const IntMatrix &A,
                                       std::span<const Integer> b,
                                       const EnumerationBudget &budget) {
  Enumerator e(A, b, budget);
  std::vector<IntVector> all;
  e.run([&](const std::vector<std::int64_t> &x) {
    all.push_back(to_int_vector(x));
    return true;
  });
  if (e.exhausted())
    throw Error(ErrorKind::CapExceeded, "enumeration node cap reached");
  return all;
}

} // namespace boxdioph
