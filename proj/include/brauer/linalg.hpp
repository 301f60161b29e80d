// Exact rational sparse linear algebra: rank, nullspace, span closure.
//
// All elimination is fraction-free over the integers (rows are scaled to
// integer vectors, content-normalized after every combination).  The hot
// path runs on int64 coefficients with overflow checks; any overflow
// escalates the whole computation to GMP integers, so results are always
// exact.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace brauer {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational pow_rational(const Rational& base, unsigned long e) {
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

inline Int double_factorial(long k) {
  // (2r-1)!! with the usual conventions (-1)!! = 1!! = 1.
  if (k <= 0) return Int(1);
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Thrown by the int64 backend when a coefficient leaves the representable
// range; callers retry with the GMP backend.
struct Overflow : std::exception {
  const char* what() const noexcept override { return "int64 coefficient overflow"; }
};

// Thrown when a requested computation exceeds the configured size budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t chk_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t chk_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t chk_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

template <class I>
struct num_ops;

template <>
struct num_ops<std::int64_t> {
  static std::int64_t add(std::int64_t a, std::int64_t b) { return chk_add(a, b); }
  static std::int64_t sub(std::int64_t a, std::int64_t b) { return chk_sub(a, b); }
  static std::int64_t mul(std::int64_t a, std::int64_t b) { return chk_mul(a, b); }
  static std::int64_t div_exact(std::int64_t a, std::int64_t b) { return a / b; }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
    return std::gcd(a, b);
  }
  static std::int64_t neg(std::int64_t a) { return chk_sub(0, a); }
  static bool is_zero(std::int64_t a) { return a == 0; }
  static bool is_neg(std::int64_t a) { return a < 0; }
  static std::int64_t from_int(const Int& v) {
    if (!v.fits_slong_p()) throw Overflow{};
    return v.get_si();
  }
  static Int to_int(std::int64_t v) {
    Int r;
    mpz_set_si(r.get_mpz_t(), v);
    return r;
  }
};

template <>
struct num_ops<Int> {
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int div_exact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static Int neg(const Int& a) { return -a; }
  static bool is_zero(const Int& a) { return sgn(a) == 0; }
  static bool is_neg(const Int& a) { return sgn(a) < 0; }
  static Int from_int(const Int& v) { return v; }
  static Int to_int(const Int& v) { return v; }
};

}  // namespace detail

// Sparse integer row: (column, value) pairs sorted by column, values nonzero.
template <class I>
using SparseRow = std::vector<std::pair<std::int32_t, I>>;

using IntRow = SparseRow<Int>;

namespace detail {

// Divide a row by the gcd of its entries; empty rows pass through.
template <class I>
void normalize_content(SparseRow<I>& row) {
  using ops = num_ops<I>;
  if (row.empty()) return;
  I g = row.front().second;
  if (ops::is_neg(g)) g = ops::neg(g);
  for (std::size_t i = 1; i < row.size() && !(g == I(1)); ++i) g = ops::gcd(g, row[i].second);
  if (g == I(1)) {
    if (ops::is_neg(row.front().second)) {
      for (auto& [c, v] : row) v = ops::neg(v);
    }
    return;
  }
  bool flip = ops::is_neg(row.front().second);
  for (auto& [c, v] : row) {
    v = ops::div_exact(v, g);
    if (flip) v = ops::neg(v);
  }
}

// row := a*row + b*pivot, merged by column.
template <class I>
SparseRow<I> combine(const SparseRow<I>& row, const I& a, const SparseRow<I>& pivot, const I& b) {
  using ops = num_ops<I>;
  SparseRow<I> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() && j < pivot.size()) {
    if (row[i].first < pivot[j].first) {
      out.emplace_back(row[i].first, ops::mul(a, row[i].second));
      ++i;
    } else if (row[i].first > pivot[j].first) {
      out.emplace_back(pivot[j].first, ops::mul(b, pivot[j].second));
      ++j;
    } else {
      I v = ops::add(ops::mul(a, row[i].second), ops::mul(b, pivot[j].second));
      if (!ops::is_zero(v)) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < row.size(); ++i) out.emplace_back(row[i].first, ops::mul(a, row[i].second));
  for (; j < pivot.size(); ++j) out.emplace_back(pivot[j].first, ops::mul(b, pivot[j].second));
  return out;
}

}  // namespace detail

// Incremental row-echelon basis of a rational row space, kept as
// content-normalized integer rows.  Pivot choice is deterministic: a row is
// reduced until its leading column carries no pivot yet, then that column
// becomes its pivot (lowest-column rule; insertion order breaks ties).
template <class I>
class Echelon {
 public:
  explicit Echelon(std::int32_t cols) : cols_(cols), pivot_of_col_(cols, -1) {}

  std::int32_t cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces `row` against the basis.  Returns true (and stores the reduced
  // row) if it enlarges the span.
  bool insert(SparseRow<I> row) {
    reduce(row);
    if (row.empty()) return false;
    detail::normalize_content(row);
    std::int32_t lead = row.front().first;
    pivot_of_col_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  // Fully reduce `row`; empty result means membership in the span.
  void reduce(SparseRow<I>& row) const {
    using ops = detail::num_ops<I>;
    while (!row.empty()) {
      int p = pivot_of_col_[row.front().first];
      if (p < 0) return;
      const SparseRow<I>& piv = rows_[p];
      const I& a = row.front().second;
      const I& b = piv.front().second;
      I g = ops::gcd(a, b);
      I pa = ops::div_exact(b, g);
      I pb = ops::neg(ops::div_exact(a, g));
      row = detail::combine(row, pa, piv, pb);
      detail::normalize_content(row);
    }
  }

  bool contains(SparseRow<I> row) const {
    reduce(row);
    return row.empty();
  }

  const std::vector<SparseRow<I>>& rows() const { return rows_; }

  // Basis of the right kernel {x : R x = 0} of the row space, one vector per
  // free column, in ascending free-column order.  Vectors are scaled to
  // coprime integers with positive entry at the free column.
  std::vector<std::vector<Rational>> nullspace() const {
    using ops = detail::num_ops<I>;
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return rows_[x].front().first < rows_[y].front().first;
    });
    std::vector<std::vector<Rational>> basis;
    for (std::int32_t f = 0; f < cols_; ++f) {
      if (pivot_of_col_[f] >= 0) continue;
      std::vector<Rational> v(cols_, Rational(0));
      v[f] = 1;
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const SparseRow<I>& r = rows_[*it];
        std::int32_t pc = r.front().first;
        if (pc > f) continue;
        Rational acc(0);
        for (std::size_t t = 1; t < r.size(); ++t) {
          const auto& [c, val] = r[t];
          if (sgn(v[c]) != 0) acc += Rational(ops::to_int(val)) * v[c];
        }
        Rational lead(ops::to_int(r.front().second));
        v[pc] = -acc / lead;
      }
      scale_to_integer(v);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Reduced row echelon form over Q: unique canonical basis of the row span.
  std::vector<std::vector<Rational>> rref() const {
    using ops = detail::num_ops<I>;
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return rows_[x].front().first < rows_[y].front().first;
    });
    std::vector<std::vector<Rational>> out;
    out.reserve(rows_.size());
    for (int idx : order) {
      std::vector<Rational> v(cols_, Rational(0));
      for (const auto& [c, val] : rows_[idx]) v[c] = Rational(ops::to_int(val));
      out.push_back(std::move(v));
    }
    // Back-substitute bottom-up, then make pivots 1.
    for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
      std::int32_t pc = rows_[order[i]].front().first;
      Rational lead = out[i][pc];
      for (auto& x : out[i]) x /= lead;
      for (int j = 0; j < i; ++j) {
        Rational f = out[j][pc];
        if (sgn(f) == 0) continue;
        for (std::int32_t c = pc; c < cols_; ++c)
          if (sgn(out[i][c]) != 0) out[j][c] -= f * out[i][c];
      }
    }
    return out;
  }

  static void scale_to_integer(std::vector<Rational>& v) {
    Int lcm(1);
    for (const auto& q : v)
      if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    Int g(0);
    for (auto& q : v) {
      if (sgn(q) == 0) continue;
      q *= Rational(lcm);
      q.canonicalize();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    if (sgn(g) == 0) return;
    for (auto& q : v) {
      q /= Rational(g);
      q.canonicalize();
    }
  }

 private:
  std::int32_t cols_;
  std::vector<SparseRow<I>> rows_;
  std::vector<int> pivot_of_col_;
};

namespace detail {

// Clear denominators of a rational row, content-normalize.
template <class I>
SparseRow<I> to_integer_row(const std::vector<std::pair<std::int32_t, Rational>>& row) {
  using ops = num_ops<I>;
  Int lcm(1);
  for (const auto& [c, q] : row)
    if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  SparseRow<I> out;
  out.reserve(row.size());
  for (const auto& [c, q] : row) {
    if (sgn(q) == 0) continue;
    Int v = Int(q.get_num()) * (lcm / Int(q.get_den()));
    out.emplace_back(c, ops::from_int(v));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  normalize_content(out);
  return out;
}

}  // namespace detail

// Runs f with the int64 backend, retrying with GMP integers on overflow.
// f receives a tag value whose type selects the backend.
template <class Fn>
auto with_exact_backend(Fn&& f) {
  try {
    return f(std::int64_t{});
  } catch (const Overflow&) {
    return f(Int{});
  }
}

// Exact sparse rational matrix.  Immutable after construction apart from
// entry insertion; stored zeros are dropped.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int row_count() const { return rows_; }
  int col_count() const { return cols_; }

  void set(int r, int c, Rational v) {
    check_index(r, c);
    if (sgn(v) == 0)
      entries_.erase({r, c});
    else
      entries_[{r, c}] = std::move(v);
  }

  void add(int r, int c, const Rational& v) {
    check_index(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
      if (sgn(v) != 0) entries_.emplace(std::make_pair(r, c), v);
      return;
    }
    it->second += v;
    if (sgn(it->second) == 0) entries_.erase(it);
  }

  Rational get(int r, int c) const {
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
  }

  std::vector<std::vector<std::pair<std::int32_t, Rational>>> rows_as_vectors() const {
    std::vector<std::vector<std::pair<std::int32_t, Rational>>> rows(rows_);
    for (const auto& [rc, v] : entries_) rows[rc.first].emplace_back(rc.second, v);
    return rows;
  }

  int rank() const {
    return with_exact_backend([this](auto tag) {
      using I = decltype(tag);
      Echelon<I> ech(cols_);
      for (const auto& row : rows_as_vectors()) ech.insert(detail::to_integer_row<I>(row));
      return ech.rank();
    });
  }

  // Basis of the right kernel {v : M v = 0}.
  std::vector<std::vector<Rational>> nullspace() const {
    return with_exact_backend([this](auto tag) {
      using I = decltype(tag);
      Echelon<I> ech(cols_);
      for (const auto& row : rows_as_vectors()) ech.insert(detail::to_integer_row<I>(row));
      return ech.nullspace();
    });
  }

  // v must have col_count entries; returns M v.
  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (const auto& [rc, val] : entries_)
      if (sgn(v[rc.second]) != 0) out[rc.first] += val * v[rc.second];
    return out;
  }

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("SparseMatrix index out of range");
  }

  int rows_, cols_;
  std::map<std::pair<int, int>, Rational> entries_;
};

// Smallest subspace containing `seed` closed under `step`, as a canonical
// reduced-echelon basis.  `step` maps a vector in the current basis to the
// vectors obtained by applying each closure operation.
inline std::vector<std::vector<Rational>> span_saturate(
    const std::vector<std::vector<Rational>>& seed,
    const std::function<std::vector<std::vector<Rational>>(const std::vector<Rational>&)>& step) {
  std::size_t dim = 0;
  for (const auto& v : seed) dim = std::max(dim, v.size());
  return with_exact_backend([&](auto tag) {
    using I = decltype(tag);
    using ops = detail::num_ops<I>;
    Echelon<I> ech(static_cast<std::int32_t>(dim));
    std::vector<std::vector<Rational>> work;
    auto push = [&](const std::vector<Rational>& v) {
      std::vector<std::pair<std::int32_t, Rational>> sparse;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (sgn(v[c]) != 0) sparse.emplace_back(static_cast<std::int32_t>(c), v[c]);
      SparseRow<I> row = detail::to_integer_row<I>(sparse);
      ech.reduce(row);
      if (row.empty()) return;
      detail::normalize_content(row);
      std::vector<Rational> dense(dim, Rational(0));
      for (const auto& [c, val] : row) dense[c] = Rational(ops::to_int(val));
      ech.insert(std::move(row));
      work.push_back(std::move(dense));
    };
    for (const auto& v : seed) push(v);
    for (std::size_t i = 0; i < work.size(); ++i) {
      auto children = step(work[i]);
      for (const auto& ch : children) push(ch);
    }
    return ech.rref();
  });
}

}  // namespace brauer
