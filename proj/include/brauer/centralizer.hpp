// Independent dimension oracle for the invariant endomorphism algebras: the
// joint kernel of the orthosymplectic Lie superalgebra action on
// End(V^{(x)r}), with or without the disconnected reflection component.
//
// The computation never touches Brauer diagrams.  Internally it may use a
// split (hyperbolic) form on the even part, so that a diagonal Cartan is
// available and the commutant condition against it reduces to a coordinate
// selection; ranks of rational linear systems do not depend on the form
// chosen, so the resulting dimension is the same as for the orthonormal
// form.

#pragma once

#include <array>

#include "brauer/functor.hpp"

namespace brauer {

// Basis of the matrices X with (Xu, v) + (-1)^{[X][u]} (u, Xv) = 0, split by
// the parity of X.  Entries are integers in exact lowest terms.
struct OspBasis {
  std::vector<std::vector<std::vector<long>>> even;  // dim x dim integer matrices
  std::vector<std::vector<std::vector<long>>> odd;
};

inline OspBasis osp_basis(const SuperSpace& sp) {
  OspBasis out;
  int dim = sp.dim;
  for (int x_parity = 0; x_parity <= 1; ++x_parity) {
    // Unknowns: entries X[a][b] with parity[a]+parity[b] = x_parity (mod 2).
    std::vector<std::pair<int, int>> unknowns;
    std::vector<std::vector<int>> unknown_id(dim, std::vector<int>(dim, -1));
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        if ((sp.parity[a] + sp.parity[b]) % 2 == x_parity) {
          unknown_id[a][b] = static_cast<int>(unknowns.size());
          unknowns.emplace_back(a, b);
        }
    SparseMatrix sys(dim * dim, static_cast<int>(unknowns.size()));
    for (int u = 0; u < dim; ++u) {
      for (int v = 0; v < dim; ++v) {
        int row = u * dim + v;
        int sign = (x_parity && sp.parity[u]) ? -1 : 1;
        for (int a = 0; a < dim; ++a) {
          if (sp.gram[a][v] != 0 && unknown_id[a][u] >= 0)
            sys.add(row, unknown_id[a][u], Rational(sp.gram[a][v]));
          if (sp.gram[u][a] != 0 && unknown_id[a][v] >= 0)
            sys.add(row, unknown_id[a][v], Rational(sign * sp.gram[u][a]));
        }
      }
    }
    auto& bucket = x_parity == 0 ? out.even : out.odd;
    for (const auto& vec : sys.nullspace()) {
      std::vector<std::vector<long>> X(dim, std::vector<long>(dim, 0));
      for (std::size_t i = 0; i < vec.size(); ++i) {
        if (sgn(vec[i]) == 0) continue;
        auto [a, b] = unknowns[i];
        X[a][b] = vec[i].get_num().get_si();
      }
      bucket.push_back(std::move(X));
    }
  }
  return out;
}

inline int osp_dimension(const SuperSpace& sp) {
  OspBasis b = osp_basis(sp);
  return static_cast<int>(b.even.size() + b.odd.size());
}

namespace detail {

// Action of X on the r-th tensor power, with Koszul signs for odd X:
// column-indexed sparse form, entries (row, coeff) per column.
inline std::vector<std::vector<std::pair<long, long>>> tensor_action(
    const SuperSpace& sp, const std::vector<std::vector<long>>& X, int x_parity, int r) {
  long total = sp.tensor_dim(r);
  std::vector<std::vector<std::pair<long, long>>> cols(total);
  std::vector<std::vector<std::pair<int, long>>> by_col(sp.dim);
  for (int a = 0; a < sp.dim; ++a)
    for (int b = 0; b < sp.dim; ++b)
      if (X[a][b] != 0) by_col[b].emplace_back(a, X[a][b]);
  std::vector<int> digits(r);
  for (long x = 0; x < total; ++x) {
    decode_index(x, sp.dim, r, digits.data());
    int sign = 1;
    long place = 1;
    // place value of slot s: dim^{r-1-s}; iterate slots right to left so the
    // sign prefix can be accumulated left to right separately.
    std::vector<long> places(r);
    for (int s = r - 1; s >= 0; --s) {
      places[s] = place;
      place *= sp.dim;
    }
    for (int s = 0; s < r; ++s) {
      for (auto [a, val] : by_col[digits[s]]) {
        long y = x + (a - digits[s]) * places[s];
        cols[x].emplace_back(y, sign * val);
      }
      if (x_parity && sp.parity[digits[s]]) sign = -sign;
    }
  }
  return cols;
}

struct WeightModel {
  SuperSpace space;
  std::vector<std::vector<int>> weight;  // per basis vector
  bool has_reflection = false;
  std::vector<int> reflection_perm;      // signed permutation
  std::vector<int> reflection_sign;
};

// Internal model with a weight-diagonal Cartan: hyperbolic pairs on the even
// part when m >= 2, the standard symplectic pairs on the odd part.
inline WeightModel split_model(int m, int n) {
  WeightModel wm;
  int dim = m + 2 * n;
  int pairs = m / 2;
  std::vector<std::vector<int>> gram(dim, std::vector<int>(dim, 0));
  for (int p = 0; p < pairs; ++p) {
    gram[2 * p][2 * p + 1] = 1;
    gram[2 * p + 1][2 * p] = 1;
  }
  if (m % 2 == 1) gram[m - 1][m - 1] = 1;
  for (int i = 0; i < n; ++i) {
    gram[m + i][m + n + i] = 1;
    gram[m + n + i][m + i] = -1;
  }
  wm.space = make_superspace_with_gram(m, n, std::move(gram));

  int slots = pairs + n;
  wm.weight.assign(dim, std::vector<int>(slots, 0));
  for (int p = 0; p < pairs; ++p) {
    wm.weight[2 * p][p] = 1;
    wm.weight[2 * p + 1][p] = -1;
  }
  for (int i = 0; i < n; ++i) {
    wm.weight[m + i][pairs + i] = 1;
    wm.weight[m + n + i][pairs + i] = -1;
  }

  wm.reflection_perm.resize(dim);
  wm.reflection_sign.assign(dim, 1);
  for (int a = 0; a < dim; ++a) wm.reflection_perm[a] = a;
  if (m >= 2) {
    wm.has_reflection = true;
    wm.reflection_perm[0] = 1;
    wm.reflection_perm[1] = 0;
  } else if (m == 1) {
    wm.has_reflection = true;
    wm.reflection_sign[0] = -1;
  }
  return wm;
}

}  // namespace detail

// Dimension of {phi in End(V^{(x)r}) : X.phi = 0 for all X in the
// orthosymplectic algebra}, optionally also requiring invariance under the
// even reflection (the disconnected component of the isometry group).
inline long centralizer_dim(int m, int n, int r, bool include_reflection,
                            long budget = default_eval_budget()) {
  detail::WeightModel wm = detail::split_model(m, n);
  const SuperSpace& sp = wm.space;
  long block = sp.tensor_dim(r);
  if (block * block > budget)
    throw BudgetExceeded("centralizer_dim: " + std::to_string(block * block) +
                         " endomorphism coordinates exceed budget " + std::to_string(budget));
  OspBasis basis = osp_basis(sp);

  // Weight and parity of each tensor index.
  int slots = static_cast<int>(wm.weight.empty() ? 0 : wm.weight[0].size());
  std::vector<std::vector<int>> wt(block, std::vector<int>(slots, 0));
  std::vector<int> par(block, 0);
  std::vector<int> digits(std::max(r, 1));
  for (long x = 0; x < block; ++x) {
    detail::decode_index(x, sp.dim, r, digits.data());
    for (int s = 0; s < r; ++s) {
      for (int c = 0; c < slots; ++c) wt[x][c] += wm.weight[digits[s]][c];
      par[x] ^= sp.parity[digits[s]];
    }
  }

  // Reflection on the tensor power (signed permutation, parity even).
  std::vector<long> refl_image(block);
  std::vector<int> refl_sign(block);
  if (include_reflection && wm.has_reflection) {
    std::vector<int> out(std::max(r, 1));
    for (long x = 0; x < block; ++x) {
      detail::decode_index(x, sp.dim, r, digits.data());
      int sign = 1;
      for (int s = 0; s < r; ++s) {
        out[s] = wm.reflection_perm[digits[s]];
        sign *= wm.reflection_sign[digits[s]];
      }
      refl_image[x] = detail::encode_index(out.data(), sp.dim, r);
      refl_sign[x] = sign;
    }
  }

  std::map<std::vector<int>, std::vector<long>> buckets;
  for (long x = 0; x < block; ++x) buckets[wt[x]].push_back(x);
  // For the phi X term: indices sharing a weight, split by parity.
  std::map<std::vector<int>, std::array<std::vector<long>, 2>> buckets_by_parity;
  for (const auto& [w, members] : buckets)
    for (long x : members) buckets_by_parity[w][par[x]].push_back(x);

  long total_dim = 0;
  for (int phi_parity = 0; phi_parity <= 1; ++phi_parity) {
    // Select coordinates (i, j) with equal weights and the right parity.
    std::vector<std::pair<long, long>> unknowns;
    std::map<long, std::int32_t> unknown_id;  // packed i*block+j -> column
    for (const auto& [w, members] : buckets)
      for (long i : members)
        for (long j : members)
          if ((par[i] ^ par[j]) == phi_parity) {
            unknown_id[i * block + j] = static_cast<std::int32_t>(unknowns.size());
            unknowns.emplace_back(i, j);
          }
    if (unknowns.empty()) continue;

    long dim_phi = with_exact_backend([&](auto tag) -> long {
      using I = decltype(tag);
      Echelon<I> ech(static_cast<std::int32_t>(unknowns.size()));

      auto insert_rows = [&](std::map<long, SparseRow<I>>& rows) {
        using ops = detail::num_ops<I>;
        for (auto& [key, row] : rows) {
          std::sort(row.begin(), row.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          SparseRow<I> merged;
          merged.reserve(row.size());
          for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c) {
              merged.back().second = ops::add(merged.back().second, v);
              if (ops::is_zero(merged.back().second)) merged.pop_back();
            } else {
              merged.emplace_back(c, std::move(v));
            }
          }
          ech.insert(std::move(merged));
        }
        rows.clear();
      };

      // Reflection conjugation constraints first: they are 2-term rows.
      if (include_reflection && wm.has_reflection) {
        std::map<long, SparseRow<I>> rows;
        for (std::size_t uidx = 0; uidx < unknowns.size(); ++uidx) {
          auto [i, j] = unknowns[uidx];
          long i2 = refl_image[i], j2 = refl_image[j];
          auto it = unknown_id.find(i2 * block + j2);
          SparseRow<I>& row = rows[i * block + j];
          row.emplace_back(static_cast<std::int32_t>(uidx), I(1));
          if (it != unknown_id.end())
            row.emplace_back(it->second, I(-refl_sign[i] * refl_sign[j]));
        }
        insert_rows(rows);
      }

      // Super-commutator constraints for every basis element.
      for (int x_parity = 0; x_parity <= 1; ++x_parity) {
        const auto& bucket = x_parity == 0 ? basis.even : basis.odd;
        long phi_sign = (x_parity && phi_parity) ? -1 : 1;
        for (const auto& X : bucket) {
          auto act = detail::tensor_action(sp, X, x_parity, r);
          std::map<long, SparseRow<I>> rows;
          // X phi term: unknown phi[kk, jj] feeds output (i, jj) whenever
          // (tensor X)[i, kk] is nonzero.
          for (std::size_t uidx = 0; uidx < unknowns.size(); ++uidx) {
            auto [kk, jj] = unknowns[uidx];
            for (auto [i, val] : act[kk])
              rows[i * block + jj].emplace_back(static_cast<std::int32_t>(uidx), I(val));
          }
          // phi X term: (tensor X)[k2, j2] pairs unknown phi[ii, k2] with
          // output (ii, j2); the admissible ii share k2's weight, with
          // parity offset phi_parity.
          for (long j2 = 0; j2 < block; ++j2) {
            for (auto [k2, val] : act[j2]) {
              for (long ii : buckets_by_parity[wt[k2]][par[k2] ^ phi_parity]) {
                auto it = unknown_id.find(ii * block + k2);
                if (it == unknown_id.end()) continue;
                rows[ii * block + j2].emplace_back(it->second, I(-phi_sign * val));
              }
            }
          }
          insert_rows(rows);
        }
      }
      return static_cast<long>(unknowns.size()) - ech.rank();
    });
    total_dim += dim_phi;
  }
  return total_dim;
}

inline long centralizer_dim_group(int m, int n, int r, long budget = default_eval_budget()) {
  return centralizer_dim(m, n, r, /*include_reflection=*/true, budget);
}

inline long centralizer_dim_liealg(int m, int n, int r, long budget = default_eval_budget()) {
  return centralizer_dim(m, n, r, /*include_reflection=*/false, budget);
}

inline long centralizer_dim_group(const SuperSpace& sp, int r, long budget = default_eval_budget()) {
  return centralizer_dim_group(sp.m, sp.n, r, budget);
}

inline long centralizer_dim_liealg(const SuperSpace& sp, int r, long budget = default_eval_budget()) {
  return centralizer_dim_liealg(sp.m, sp.n, r, budget);
}

}  // namespace brauer
