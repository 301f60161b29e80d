// Partitions, Young tableaux, hook lengths, Garnir elements, and the
// block-count combinatorics (types, standard sequences, generator index set)
// used to index kernel generators.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/linalg.hpp"

namespace brauer {

// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < rows() ? parts_[i] : 0; }

  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  bool contains(const Partition& other) const {
    if (other.rows() > rows()) return false;
    for (int i = 0; i < other.rows(); ++i)
      if (parts_[i] < other.parts_[i]) return false;
    return true;
  }

  bool all_parts_even() const {
    for (int p : parts_) {
      if (p % 2 != 0) return false;
    }
    return true;
  }

  Partition halved() const {
    std::vector<int> h;
    h.reserve(parts_.size());
    for (int p : parts_) h.push_back(p / 2);
    return Partition(h);
  }

  int column_length(int c) const {
    int len = 0;
    for (int p : parts_)
      if (p > c) ++len;
    return len;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

inline Partition rectangle(int height, int width) {
  return Partition(std::vector<int>(height, width));
}

// Product of hook lengths over all cells.
inline Int hook_product(const Partition& lambda) {
  Int h(1);
  for (int i = 0; i < lambda.rows(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      int arm = lambda.part(i) - j - 1;
      int leg = lambda.column_length(j) - i - 1;
      h *= arm + leg + 1;
    }
  }
  return h;
}

// k!/h_lambda, always an exact integer.
inline Int specht_dim(const Partition& lambda) {
  return factorial(lambda.weight()) / hook_product(lambda);
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

// All partitions of k, lexicographically descending.
inline std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  std::vector<int> acc;
  detail::partitions_rec(k, k, acc, out);
  return out;
}

// Even partitions of 2r whose diagram contains the (m+1) x (2n+2) rectangle,
// lexicographically descending.
inline std::vector<Partition> even_partitions_containing(int r, int m, int n) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  Partition rect = rectangle(m + 1, 2 * n + 2);
  std::vector<Partition> out;
  for (const Partition& lam : partitions_of(2 * r))
    if (lam.all_parts_even() && lam.contains(rect)) out.push_back(lam);
  return out;
}

// dim Ker in degree r for superdimension (m|2n): sum of Specht dimensions
// over even_partitions_containing(r, m, n).  Zero exactly when r < (m+1)(n+1).
inline Int ker_dim_formula(int m, int n, int r) {
  Int total(0);
  for (const Partition& lam : even_partitions_containing(r, m, n)) total += specht_dim(lam);
  return total;
}

// Permutations are stored in one-line form on 0-based points;
// composition is function composition: (a*b)(x) = a(b(x)).
using Perm = std::vector<int>;

inline Perm perm_identity(int k) {
  Perm p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline int perm_sign(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  int transpositions = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

inline Perm perm_transposition(int k, int a, int b) {
  Perm p = perm_identity(k);
  std::swap(p[a], p[b]);
  return p;
}

// A filling of a Young diagram with 1..k, stored row by row.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    int k = shape_.weight();
    std::vector<char> seen(k + 1, 0);
    if (static_cast<int>(rows_.size()) != shape_.rows())
      throw std::invalid_argument("tableau row count mismatch");
    for (int i = 0; i < shape_.rows(); ++i) {
      if (static_cast<int>(rows_[i].size()) != shape_.part(i))
        throw std::invalid_argument("tableau row length mismatch");
      for (int e : rows_[i]) {
        if (e < 1 || e > k || seen[e]) throw std::invalid_argument("tableau filling not a bijection");
        seen[e] = 1;
      }
    }
  }

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.weight(); }
  int at(int row, int col) const { return rows_[row][col]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool is_standard() const {
    for (int i = 0; i < shape_.rows(); ++i)
      for (int j = 0; j < shape_.part(i); ++j) {
        if (j + 1 < shape_.part(i) && rows_[i][j] >= rows_[i][j + 1]) return false;
        if (i + 1 < shape_.rows() && j < shape_.part(i + 1) && rows_[i][j] >= rows_[i + 1][j])
          return false;
      }
    return true;
  }

  std::vector<int> column(int c) const {
    std::vector<int> out;
    for (int i = 0; i < shape_.rows(); ++i)
      if (c < shape_.part(i)) out.push_back(rows_[i][c]);
    return out;
  }

  bool operator==(const Tableau& o) const { return shape_ == o.shape_ && rows_ == o.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Row filling 1,2,...,k along successive rows.
inline Tableau row_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    std::vector<int> row(lambda.part(i));
    for (int& x : row) x = next++;
    rows.push_back(std::move(row));
  }
  return Tableau(lambda, std::move(rows));
}

// Column filling 1,2,...,k down successive columns.
inline Tableau column_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows(lambda.rows());
  for (int i = 0; i < lambda.rows(); ++i) rows[i].resize(lambda.part(i));
  int next = 1;
  for (int c = 0; c < lambda.part(0); ++c)
    for (int i = 0; i < lambda.column_length(c); ++i) rows[i][c] = next++;
  return Tableau(lambda, std::move(rows));
}

// Entry-permuting action: entries e are replaced by sigma(e).  This is the
// fixed convention for which row_tableau(shape) * d_of(t) == t.
inline Tableau tableau_apply(const Tableau& t, const Perm& sigma) {
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& e : row) e = sigma[e - 1] + 1;
  return Tableau(t.shape(), std::move(rows));
}

// The unique permutation carrying the row tableau of t's shape onto t.
inline Perm d_of(const Tableau& t) {
  Tableau base = row_tableau(t.shape());
  Perm sigma(t.size());
  for (int i = 0; i < t.shape().rows(); ++i)
    for (int j = 0; j < t.shape().part(i); ++j) sigma[base.at(i, j) - 1] = t.at(i, j) - 1;
  return sigma;
}

namespace detail {

inline void standard_rec(const Partition& lambda, std::vector<std::vector<int>>& rows,
                         std::vector<int>& filled, int next, std::vector<Tableau>& out) {
  int k = lambda.weight();
  if (next > k) {
    out.push_back(Tableau(lambda, rows));
    return;
  }
  for (int i = 0; i < lambda.rows(); ++i) {
    int j = filled[i];
    if (j >= lambda.part(i)) continue;
    if (i > 0 && filled[i - 1] <= j) continue;  // cell above must be filled
    rows[i][j] = next;
    ++filled[i];
    standard_rec(lambda, rows, filled, next + 1, out);
    --filled[i];
  }
}

}  // namespace detail

// All standard tableaux of the given shape; deterministic order (entries are
// placed in increasing order, scanning candidate rows top to bottom).
inline std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  std::vector<std::vector<int>> rows(lambda.rows());
  for (int i = 0; i < lambda.rows(); ++i) rows[i].resize(lambda.part(i));
  std::vector<int> filled(lambda.rows(), 0);
  std::vector<Tableau> out;
  detail::standard_rec(lambda, rows, filled, 1, out);
  return out;
}

// Signed permutation sum, the common shape of Garnir elements and
// (anti)symmetrizers before they are embedded in a diagram algebra.
struct SignedPermSum {
  int degree = 0;
  std::vector<std::pair<Perm, int>> terms;  // (permutation, +-1)
};

namespace detail {

inline void subsets_rec(const std::vector<int>& pool, int want, std::size_t from,
                        std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == want) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    acc.push_back(pool[i]);
    subsets_rec(pool, want, i + 1, acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& pool, int want) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  subsets_rec(pool, want, 0, acc, out);
  return out;
}

}  // namespace detail

// Garnir element for entry sets X, Y (1-based entries, disjoint): the signed
// sum over the transposition-product coset representatives of
// Sym(X) x Sym(Y) in Sym(X u Y): equal-size subsets of X and Y paired off in
// increasing order.  Includes the identity.  `degree` is the ambient k.
inline SignedPermSum garnir_element(int degree, std::vector<int> X, std::vector<int> Y) {
  std::sort(X.begin(), X.end());
  std::sort(Y.begin(), Y.end());
  for (int x : X)
    if (std::binary_search(Y.begin(), Y.end(), x))
      throw std::invalid_argument("garnir_element: X and Y must be disjoint");
  SignedPermSum g;
  g.degree = degree;
  int kmax = static_cast<int>(std::min(X.size(), Y.size()));
  for (int k = 0; k <= kmax; ++k) {
    int sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& xs : detail::subsets_of_size(X, k)) {
      for (const auto& ys : detail::subsets_of_size(Y, k)) {
        Perm p = perm_identity(degree);
        for (int s = 0; s < k; ++s) std::swap(p[xs[s] - 1], p[ys[s] - 1]);
        g.terms.emplace_back(std::move(p), sign);
      }
    }
  }
  return g;
}

// Per-block occupancy counts of a strictly increasing sequence over
// [1, (m+1)(n+1)], block p covering (p-1)(m+1)+1 .. p(m+1).
inline std::vector<int> type_of_sequence(const std::vector<int>& seq, int m, int n) {
  std::vector<int> ty(n + 1, 0);
  int prev = 0;
  for (int v : seq) {
    if (v <= prev) throw std::invalid_argument("sequence must be strictly increasing");
    if (v < 1 || v > (m + 1) * (n + 1)) throw std::invalid_argument("sequence entry out of range");
    prev = v;
    ty[(v - 1) / (m + 1)] += 1;
  }
  return ty;
}

// The canonical sequence of a given type: the first a_p slots of block p.
inline std::vector<int> standard_sequence(const std::vector<int>& ty, int m, int n) {
  if (static_cast<int>(ty.size()) != n + 1)
    throw std::invalid_argument("type vector must have n+1 entries");
  std::vector<int> seq;
  for (int p = 0; p <= n; ++p) {
    if (ty[p] < 0 || ty[p] > m + 1) throw std::invalid_argument("type entry out of range");
    for (int s = 0; s < ty[p]; ++s) seq.push_back(p * (m + 1) + s + 1);
  }
  return seq;
}

struct SequencePair {
  std::vector<int> top;     // strictly increasing, indexes top strands
  std::vector<int> bottom;  // strictly increasing, indexes bottom strands
};

namespace detail {

// Weakly increasing type vectors of length n+1 with entries in [0, m+1].
inline std::vector<std::vector<int>> increasing_types(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc(n + 1, 0);
  while (true) {
    out.push_back(acc);
    int i = n;
    while (i >= 0 && acc[i] == m + 1) --i;
    if (i < 0) break;
    int v = acc[i] + 1;
    for (int j = i; j <= n; ++j) acc[j] = v;
  }
  return out;
}

}  // namespace detail

// Index set for the minimal-degree kernel generators: all pairs of standard
// sequences of weakly increasing types, of equal length, whose last type
// entries sum to at most m+1.  Includes the empty pair; deterministic order.
inline std::vector<SequencePair> generator_index_set(int m, int n) {
  auto types = detail::increasing_types(m, n);
  std::vector<SequencePair> out;
  for (const auto& ta : types) {
    for (const auto& tb : types) {
      int la = 0, lb = 0;
      for (int x : ta) la += x;
      for (int x : tb) lb += x;
      if (la != lb) continue;
      if (ta[n] + tb[n] > m + 1) continue;
      out.push_back({standard_sequence(ta, m, n), standard_sequence(tb, m, n)});
    }
  }
  return out;
}

}  // namespace brauer
