// Evaluation of Brauer diagrams as exact matrices on tensor powers of an
// orthosymplectic superspace, and the rank/nullspace of the evaluation map
// in a fixed degree.
//
// A diagram is evaluated through its normal form: a bottom permutation, a
// layer of caps, a layer of cups, and a top permutation.  Permutations act
// as signed index shuffles (the sign is the Koszul sign of reordering the
// graded factors), caps pair indices against the bilinear form, and cups
// emit the canonical invariant pair.  Super-signs therefore never have to be
// special-cased per edge.

#pragma once

#include "brauer/algebra.hpp"

namespace brauer {

struct SuperSpace {
  int m = 0;
  int n = 0;
  int dim = 0;
  std::vector<int> parity;                // 0 for the first m, 1 for the last 2n
  std::vector<std::vector<int>> gram;     // entries in {0, 1, -1}
  std::vector<int> dual_index;            // dual basis vector, up to sign
  std::vector<int> dual_sign;

  long tensor_dim(int r) const {
    long d = 1;
    for (int i = 0; i < r; ++i) d *= dim;
    return d;
  }
};

// Even part orthonormal, odd part in standard symplectic pairing
// (f_i, f_{n+j}) = delta_ij = -(f_{n+j}, f_i).
inline SuperSpace make_superspace(int m, int n) {
  SuperSpace sp;
  sp.m = m;
  sp.n = n;
  sp.dim = m + 2 * n;
  sp.parity.assign(sp.dim, 0);
  for (int i = m; i < sp.dim; ++i) sp.parity[i] = 1;
  sp.gram.assign(sp.dim, std::vector<int>(sp.dim, 0));
  for (int i = 0; i < m; ++i) sp.gram[i][i] = 1;
  for (int i = 0; i < n; ++i) {
    sp.gram[m + i][m + n + i] = 1;
    sp.gram[m + n + i][m + i] = -1;
  }
  sp.dual_index.assign(sp.dim, 0);
  sp.dual_sign.assign(sp.dim, 1);
  for (int i = 0; i < m; ++i) sp.dual_index[i] = i;
  for (int i = 0; i < n; ++i) {
    sp.dual_index[m + i] = m + n + i;   // dual of f_i is -f_{n+i}
    sp.dual_sign[m + i] = -1;
    sp.dual_index[m + n + i] = m + i;   // dual of f_{n+i} is f_i
    sp.dual_sign[m + n + i] = 1;
  }
  return sp;
}

// A custom-form variant used internally (split even part); parities first m
// even, gram arbitrary even non-degenerate supersymmetric form.
inline SuperSpace make_superspace_with_gram(int m, int n, std::vector<std::vector<int>> gram) {
  SuperSpace sp = make_superspace(m, n);
  sp.gram = std::move(gram);
  // Recompute the dual basis: (dual_a, e_b) = delta_ab.  For the forms we
  // use, the dual of a basis vector is again +-1 times a basis vector.
  for (int a = 0; a < sp.dim; ++a) {
    int found = -1, sign = 0;
    for (int b = 0; b < sp.dim; ++b) {
      if (sp.gram[b][a] != 0) {
        found = b;
        sign = sp.gram[b][a];
        break;
      }
    }
    if (found < 0 || (sign != 1 && sign != -1))
      throw std::invalid_argument("gram must be a signed permutation form");
    sp.dual_index[a] = found;
    sp.dual_sign[a] = sign;
  }
  return sp;
}

namespace detail {

inline void decode_index(long x, int dim, int r, int* digits) {
  for (int s = r - 1; s >= 0; --s) {
    digits[s] = static_cast<int>(x % dim);
    x /= dim;
  }
}

inline long encode_index(const int* digits, int dim, int r) {
  long x = 0;
  for (int s = 0; s < r; ++s) x = x * dim + digits[s];
  return x;
}

}  // namespace detail

// Signed index shuffle representing a permutation on a tensor power: basis
// vector x maps to sign[x] * e_{image[x]}.
struct SignedPermAction {
  std::vector<long> image;
  std::vector<int> sign;
};

// Slot i of the source becomes slot sigma(i) of the target; the sign is the
// Koszul sign counting crossings of odd factors.
inline SignedPermAction eval_permutation(const SuperSpace& sp, const Perm& sigma, int r) {
  long total = sp.tensor_dim(r);
  SignedPermAction act;
  act.image.resize(total);
  act.sign.resize(total);
  std::vector<int> digits(r), out(r);
  for (long x = 0; x < total; ++x) {
    detail::decode_index(x, sp.dim, r, digits.data());
    int sign = 1;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (sigma[i] > sigma[j] && sp.parity[digits[i]] && sp.parity[digits[j]]) sign = -sign;
    for (int i = 0; i < r; ++i) out[sigma[i]] = digits[i];
    act.image[x] = detail::encode_index(out.data(), sp.dim, r);
    act.sign[x] = sign;
  }
  return act;
}

struct NormalForm {
  Perm top;     // permutation on l points
  int cups = 0;
  int through = 0;
  int caps = 0;
  Perm bottom;  // permutation on k points
};

// d = top o (I_t (x) cup^u) o (I_t (x) cap^a) o bottom, with no closed loops.
inline NormalForm normal_form_factorize(const BrauerDiagram& d) {
  int k = d.bottom_count();
  int l = d.top_count();
  std::vector<std::pair<int, int>> through;      // (bottom pos, top pos)
  std::vector<std::pair<int, int>> bottom_arcs;  // bottom positions, p < q
  std::vector<std::pair<int, int>> top_arcs;
  for (auto [a, b] : d.edges()) {
    bool at = d.is_top(a), bt = d.is_top(b);
    if (at && bt)
      top_arcs.emplace_back(a, b);
    else if (!at && !bt)
      bottom_arcs.emplace_back(a - l, b - l);
    else if (at && !bt)
      through.emplace_back(b - l, a);
    else
      through.emplace_back(a - l, b);
  }
  std::sort(through.begin(), through.end());
  std::sort(bottom_arcs.begin(), bottom_arcs.end());
  std::sort(top_arcs.begin(), top_arcs.end());

  NormalForm nf;
  nf.through = static_cast<int>(through.size());
  nf.caps = static_cast<int>(bottom_arcs.size());
  nf.cups = static_cast<int>(top_arcs.size());
  nf.bottom = perm_identity(k);
  nf.top = perm_identity(l);
  int t = nf.through;
  for (int s = 0; s < t; ++s) {
    nf.bottom[through[s].first] = s;
    nf.top[s] = through[s].second;
  }
  for (int c = 0; c < nf.caps; ++c) {
    nf.bottom[bottom_arcs[c].first] = t + 2 * c;
    nf.bottom[bottom_arcs[c].second] = t + 2 * c + 1;
  }
  for (int c = 0; c < nf.cups; ++c) {
    nf.top[t + 2 * c] = top_arcs[c].first;
    nf.top[t + 2 * c + 1] = top_arcs[c].second;
  }
  return nf;
}

// Recompose the normal form; used as a self-check and in tests.
inline BrauerDiagram normal_form_recompose(const NormalForm& nf) {
  int k = nf.through + 2 * nf.caps;
  int l = nf.through + 2 * nf.cups;
  BrauerDiagram mid_caps = identity_diagram(nf.through);
  for (int c = 0; c < nf.caps; ++c) mid_caps = tensor(mid_caps, BrauerDiagram(2, 0, {{0, 1}}));
  BrauerDiagram mid_cups = identity_diagram(nf.through);
  for (int c = 0; c < nf.cups; ++c) mid_cups = tensor(mid_cups, BrauerDiagram(0, 2, {{0, 1}}));
  auto step1 = compose(mid_caps, perm_to_diagram(nf.bottom, k));
  auto step2 = compose(mid_cups, step1.diagram);
  auto step3 = compose(perm_to_diagram(nf.top, l), step2.diagram);
  if (step1.loop_count || step2.loop_count || step3.loop_count)
    throw std::logic_error("normal form recomposition produced loops");
  return step3.diagram;
}

// Nonzero entries of the evaluated diagram: (out_index, in_index, value).
inline std::vector<std::tuple<long, long, int>> eval_diagram_entries(const SuperSpace& sp,
                                                                     const BrauerDiagram& d) {
  int k = d.bottom_count();
  int l = d.top_count();
  NormalForm nf = normal_form_factorize(d);
  int t = nf.through, a = nf.caps, u = nf.cups;
  SignedPermAction bot = eval_permutation(sp, nf.bottom, k);
  SignedPermAction top = eval_permutation(sp, nf.top, l);

  std::vector<std::tuple<long, long, int>> out;
  std::vector<int> digits(std::max(k, 1)), mid(std::max(l, 1));
  long total_in = sp.tensor_dim(k);
  long cup_total = sp.tensor_dim(u);
  std::vector<int> cup_digits(std::max(u, 1));
  for (long x = 0; x < total_in; ++x) {
    long x1 = bot.image[x];
    int s1 = bot.sign[x];
    detail::decode_index(x1, sp.dim, k, digits.data());
    int cap_factor = 1;
    for (int c = 0; c < a; ++c) {
      cap_factor *= sp.gram[digits[t + 2 * c]][digits[t + 2 * c + 1]];
      if (cap_factor == 0) break;
    }
    if (cap_factor == 0) continue;
    for (long cx = 0; cx < cup_total; ++cx) {
      detail::decode_index(cx, sp.dim, u, cup_digits.data());
      int cup_factor = 1;
      for (int s = 0; s < t; ++s) mid[s] = digits[s];
      for (int c = 0; c < u; ++c) {
        int first = cup_digits[c];
        mid[t + 2 * c] = first;
        mid[t + 2 * c + 1] = sp.dual_index[first];
        cup_factor *= sp.dual_sign[first];
      }
      long y1 = detail::encode_index(mid.data(), sp.dim, l);
      out.emplace_back(top.image[y1], x, s1 * cap_factor * cup_factor * top.sign[y1]);
    }
  }
  return out;
}

// Evaluated diagram as a dim^l x dim^k exact matrix.
inline SparseMatrix eval_diagram(const SuperSpace& sp, const BrauerDiagram& d) {
  SparseMatrix mat(static_cast<int>(sp.tensor_dim(d.top_count())),
                   static_cast<int>(sp.tensor_dim(d.bottom_count())));
  for (auto [out, in, val] : eval_diagram_entries(sp, d))
    mat.add(static_cast<int>(out), static_cast<int>(in), Rational(val));
  return mat;
}

enum class Elementary { Strand, Crossing, Cap, Cup };

inline SparseMatrix eval_elementary(const SuperSpace& sp, Elementary which) {
  switch (which) {
    case Elementary::Strand: return eval_diagram(sp, identity_diagram(1));
    case Elementary::Crossing: return eval_diagram(sp, generator_s(1, 2));
    case Elementary::Cap: return eval_diagram(sp, BrauerDiagram(2, 0, {{0, 1}}));
    case Elementary::Cup: return eval_diagram(sp, BrauerDiagram(0, 2, {{0, 1}}));
  }
  throw std::logic_error("unreachable");
}

inline SparseMatrix eval_element(const SuperSpace& sp, const Element& e) {
  if (e.delta() != make_rational(sp.m - 2 * sp.n))
    throw std::invalid_argument("eval_element: element delta differs from m - 2n");
  SparseMatrix mat(static_cast<int>(sp.tensor_dim(e.top_count())),
                   static_cast<int>(sp.tensor_dim(e.bottom_count())));
  for (const auto& [d, c] : e.terms())
    for (auto [out, in, val] : eval_diagram_entries(sp, d))
      mat.add(static_cast<int>(out), static_cast<int>(in), c * Rational(val));
  return mat;
}

inline bool eval_is_zero(const SuperSpace& sp, const Element& e) {
  return eval_element(sp, e).nonzero_count() == 0;
}

// Exact zero test streamed over input basis vectors: never materializes the
// evaluated matrix, so it scales to tensor powers where eval_element cannot.
// Requires integral coefficients after clearing one common denominator.
inline bool eval_is_zero_streaming(const SuperSpace& sp, const Element& e) {
  int k = e.bottom_count();
  int l = e.top_count();
  Int lcm(1);
  for (const auto& [d, c] : e.terms())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  struct Term {
    NormalForm nf;
    std::int64_t coeff;
  };
  std::vector<Term> terms;
  for (const auto& [d, c] : e.terms()) {
    Int scaled = Int(c.get_num()) * (lcm / Int(c.get_den()));
    if (!scaled.fits_slong_p()) throw Overflow{};
    terms.push_back({normal_form_factorize(d), scaled.get_si()});
  }

  auto koszul = [&](const Perm& sigma, const int* digits, int r) {
    int sign = 1;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (sigma[i] > sigma[j] && sp.parity[digits[i]] && sp.parity[digits[j]]) sign = -sign;
    return sign;
  };

  long total_in = sp.tensor_dim(k);
  long total_out = sp.tensor_dim(l);
  std::vector<std::int64_t> acc(total_out, 0);
  std::vector<long> touched;
  std::vector<int> digits(std::max(k, 1)), permuted(std::max(k, 1)), mid(std::max(l, 1)),
      out(std::max(l, 1)), cup_digits(std::max(l, 1));
  for (long x = 0; x < total_in; ++x) {
    touched.clear();
    for (const Term& term : terms) {
      const NormalForm& nf = term.nf;
      int t = nf.through, a = nf.caps, u = nf.cups;
      detail::decode_index(x, sp.dim, k, digits.data());
      int s1 = koszul(nf.bottom, digits.data(), k);
      for (int i = 0; i < k; ++i) permuted[nf.bottom[i]] = digits[i];
      int cap_factor = 1;
      for (int c = 0; c < a; ++c) {
        cap_factor *= sp.gram[permuted[t + 2 * c]][permuted[t + 2 * c + 1]];
        if (cap_factor == 0) break;
      }
      if (cap_factor == 0) continue;
      long cup_total = sp.tensor_dim(u);
      for (long cx = 0; cx < cup_total; ++cx) {
        detail::decode_index(cx, sp.dim, u, cup_digits.data());
        int cup_factor = 1;
        for (int s = 0; s < t; ++s) mid[s] = permuted[s];
        for (int c = 0; c < u; ++c) {
          int first = cup_digits[c];
          mid[t + 2 * c] = first;
          mid[t + 2 * c + 1] = sp.dual_index[first];
          cup_factor *= sp.dual_sign[first];
        }
        int s2 = koszul(nf.top, mid.data(), l);
        for (int i = 0; i < l; ++i) out[nf.top[i]] = mid[i];
        long y = detail::encode_index(out.data(), sp.dim, l);
        if (acc[y] == 0) touched.push_back(y);
        acc[y] = detail::chk_add(
            acc[y], detail::chk_mul(term.coeff, s1 * cap_factor * cup_factor * s2));
      }
    }
    for (long y : touched)
      if (acc[y] != 0) return false;
    for (long y : touched) acc[y] = 0;
  }
  return true;
}

inline long default_eval_budget() { return 10'000'000; }

// Evaluation matrix of a whole degree: row per diagram, columns indexed by
// the flattened (out, in) pair.
inline SparseMatrix f_matrix(const SuperSpace& sp, int r, long budget = default_eval_budget()) {
  long cols = sp.tensor_dim(2 * r);
  if (cols > budget)
    throw BudgetExceeded("f_matrix: " + std::to_string(cols) + " columns exceed budget " +
                         std::to_string(budget));
  DiagramBasis basis(r, r);
  long block = sp.tensor_dim(r);
  SparseMatrix mat(basis.size(), static_cast<int>(cols));
  for (int i = 0; i < basis.size(); ++i)
    for (auto [out, in, val] : eval_diagram_entries(sp, basis.diagram(i)))
      mat.set(i, static_cast<int>(out * block + in), Rational(val));
  return mat;
}

struct EvalRank {
  int rank = 0;
  int nullity = 0;
  std::vector<std::vector<Rational>> kernel_coordinates;  // over DiagramBasis(r,r)
};

// Exact rank and left kernel of the evaluation map in degree r.  Works on
// the transposed system so the elimination runs over the diagram
// coordinates, which is the small side.
inline EvalRank eval_rank(const SuperSpace& sp, int r, long budget = default_eval_budget()) {
  long cols = sp.tensor_dim(2 * r);
  if (cols > budget)
    throw BudgetExceeded("eval_rank: " + std::to_string(cols) + " flattened columns exceed budget " +
                         std::to_string(budget));
  DiagramBasis basis(r, r);
  long block = sp.tensor_dim(r);

  struct Triple {
    long flat;
    std::int32_t diag;
    std::int32_t val;
  };
  std::vector<Triple> triples;
  for (int i = 0; i < basis.size(); ++i)
    for (auto [out, in, val] : eval_diagram_entries(sp, basis.diagram(i)))
      triples.push_back({out * block + in, i, val});
  std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
    return a.flat < b.flat || (a.flat == b.flat && a.diag < b.diag);
  });

  return with_exact_backend([&](auto tag) {
    using I = decltype(tag);
    Echelon<I> ech(basis.size());
    std::size_t i = 0;
    while (i < triples.size()) {
      std::size_t j = i;
      SparseRow<I> row;
      while (j < triples.size() && triples[j].flat == triples[i].flat) {
        row.emplace_back(triples[j].diag, I(triples[j].val));
        ++j;
      }
      ech.insert(std::move(row));
      i = j;
    }
    EvalRank out;
    out.rank = ech.rank();
    out.nullity = basis.size() - ech.rank();
    out.kernel_coordinates = ech.nullspace();
    return out;
  });
}

inline int rank_f(const SuperSpace& sp, int r, long budget = default_eval_budget()) {
  return eval_rank(sp, r, budget).rank;
}

// Kernel of the evaluation map lifted back to elements.
inline std::vector<Element> ker_f_basis(const SuperSpace& sp, int r,
                                        long budget = default_eval_budget()) {
  EvalRank er = eval_rank(sp, r, budget);
  DiagramBasis basis(r, r);
  Rational delta = make_rational(sp.m - 2 * sp.n);
  std::vector<Element> out;
  for (const auto& v : er.kernel_coordinates) out.push_back(basis.element(v, delta, r, r));
  return out;
}

}  // namespace brauer
