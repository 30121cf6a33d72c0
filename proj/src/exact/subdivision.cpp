#include "primeplex/exact/subdivision.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "primeplex/errors.hpp"
#include "primeplex/exact/combinatorics.hpp"

namespace primeplex {

namespace {

void check_count_args(int i, int d) {
  if (i < -1 || d < -1) throw std::invalid_argument("subdivision count: indices must be >= -1");
  if (i >= 0 && i > d)
    throw std::invalid_argument("subdivision count: f_{" + std::to_string(i) + "," + std::to_string(d) +
                                "} requires i <= d");
}

std::size_t at(int i) { return static_cast<std::size_t>(i + 1); }

}  // namespace

Integer subdivision_count(int i, int d) {
  check_count_args(i, d);
  if (i == -1) return d == -1 ? 1 : 0;
  return factorial(i + 1) * stirling2(d + 1, i + 1);
}

Integer subdivision_count_recurrence(int i, int d) {
  check_count_args(i, d);
  // cols[d+1][i+1] = f_{i,d}, grown one column d at a time.
  static std::mutex mutex;
  static std::vector<std::vector<Integer>> cols;
  std::lock_guard lock(mutex);
  while (static_cast<int>(cols.size()) <= d + 1) {
    const int dd = static_cast<int>(cols.size()) - 1;
    std::vector<Integer> col(at(dd) + 1, Integer(0));
    if (dd == -1) {
      col[at(-1)] = 1;
    } else {
      for (int ii = 0; ii <= dd; ++ii) {
        Integer acc = 0;
        for (int j = ii; j <= dd; ++j) {
          // f_{ii-1, j-1}; column j-1 has entries for rows -1..j-1
          const auto& prev = cols[at(j - 1)];
          if (at(ii - 1) < prev.size()) acc += binomial(dd + 1, j) * prev[at(ii - 1)];
        }
        col[at(ii)] = acc;
      }
    }
    cols.push_back(std::move(col));
  }
  return cols[at(d)][at(i)];
}

EigenRationals::EigenRationals(int d, std::vector<Rational> values) : d_(d), values_(std::move(values)) {
  if (values_.size() != at(d) + 1) throw std::invalid_argument("EigenRationals: wrong length");
}

const Rational& EigenRationals::operator[](int i) const {
  if (i < -1 || i > d_) throw std::out_of_range("EigenRationals index out of range");
  return values_[at(i)];
}

EigenRationals eigen_rationals(int d) {
  if (d < -1) throw std::invalid_argument("eigen_rationals: d must be >= -1");
  static std::mutex mutex;
  static std::map<int, EigenRationals> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  std::vector<Rational> v(at(d) + 1, Rational(0));
  v[at(d)] = 1;
  if (d >= 0) {
    const Integer top = factorial(d + 1);
    // i = -1 would divide 0 by 0! - 1! = 0; F_{-1,d} = 0 is seeded instead.
    for (int i = d - 1; i >= 0; --i) {
      Rational acc = 0;
      for (int j = i + 1; j <= d; ++j) acc += Rational(subdivision_count(i, j)) * v[at(j)];
      acc /= Rational(top - factorial(i + 1));
      v[at(i)] = acc;
    }
  }
  EigenRationals result(d, std::move(v));
  std::lock_guard lock(mutex);
  memo.emplace(d, result);
  return result;
}

Rational eigen_rationals_direct(int d, int i) {
  if (i < 0 || i >= d)
    throw std::invalid_argument("eigen_rationals_direct: requires 0 <= i < d, got i=" + std::to_string(i) +
                                " d=" + std::to_string(d));
  const Integer top = factorial(d + 1);
  const int free = d - i - 1;  // candidates i+1..d-1 for the interior chain members
  if (free > 30) throw ResourceError("eigen_rationals_direct: chain enumeration too large");
  Rational total = 0;
  for (unsigned long mask = 0; mask < (1ul << free); ++mask) {
    Rational term = 1;
    int current = i;
    auto step = [&](int next) {
      term *= Rational(subdivision_count(current, next)) / Rational(top - factorial(current + 1));
      current = next;
    };
    for (int b = 0; b < free; ++b)
      if (mask & (1ul << b)) step(i + 1 + b);
    step(d);
    total += term;
  }
  total.canonicalize();
  return total;
}

std::vector<Rational> limit_coefficients(int d) {
  if (d < 0) throw std::invalid_argument("limit_coefficients: d must be >= 0");
  const EigenRationals f = eigen_rationals(d);
  // F_d(z) has degree d+1 with coefficient F_{i,d} on z^{d-i}.
  return shift_coefficients(f.values());
}

RationalPoly h_polynomial_limit(int d) { return RationalPoly(limit_coefficients(d)); }

TransferMatrix transfer_matrix(int d) {
  TransferMatrix m(d);
  for (int i = -1; i <= d; ++i)
    for (int j = i; j <= d; ++j) m(i, j) = subdivision_count(i, j);
  return m;
}

ShiftMatrix shift_matrix(int d) {
  ShiftMatrix m(d);
  for (int i = -1; i <= d; ++i)
    for (int j = -1; j <= d; ++j) {
      const Integer& c = binomial(d - j, i + 1);
      m(i, j) = ((d + 1 + i + j) % 2 == 0) ? c : Integer(-c);
    }
  return m;
}

ShiftMatrix shift_matrix_inverse(int d) {
  ShiftMatrix m(d);
  for (int i = -1; i <= d; ++i)
    for (int j = -1; j <= d; ++j) m(i, j) = binomial(j + 1, d - i);
  return m;
}

DescentMatrix descent_matrix(int d) {
  if (d < 0) throw std::invalid_argument("descent_matrix: d must be >= 0");
  DescentMatrix h = DescentMatrix::identity(0);
  for (int dd = 1; dd <= d; ++dd) {
    DescentMatrix next(dd);
    auto prev = [&](int i, int l) -> Integer {
      if (i < -1 || i > dd - 1) return 0;
      return h(i, l);
    };
    for (int i = -1; i <= dd; ++i)
      for (int j = -1; j <= dd; ++j) {
        Integer acc = 0;
        for (int l = -1; l <= j - 1; ++l) acc += prev(i - 1, l);
        for (int l = j; l <= dd - 1; ++l) acc += prev(i, l);
        next(i, j) = acc;
      }
    h = std::move(next);
  }
  return h;
}

DescentMatrix descent_matrix_bruteforce(int d, int bound) {
  if (d < 0) throw std::invalid_argument("descent_matrix_bruteforce: d must be >= 0");
  if (d > bound)
    throw ResourceError("descent_matrix_bruteforce: d=" + std::to_string(d) + " exceeds bound " +
                        std::to_string(bound));
  const int n = d + 2;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  DescentMatrix h(d);
  do {
    int descents = 0;
    for (int p = 0; p + 1 < n; ++p)
      if (perm[static_cast<std::size_t>(p)] > perm[static_cast<std::size_t>(p + 1)]) ++descents;
    // A(d+2, i+1, j+2): i = descents - 1, j = first - 2
    const int i = descents - 1;
    const int j = perm.front() - 2;
    h(i, j) += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return h;
}

}  // namespace primeplex
