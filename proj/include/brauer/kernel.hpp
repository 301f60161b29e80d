// The named annihilator elements of tensor space for superdimension (m|2n):
// the minimal-degree seed element and its normalized and conjugated forms,
// the standard-tableau bases, the bent generator families, the single
// generator in the (1|2n) case, and the classical symplectic/orthogonal
// idempotents.

#pragma once

#include "brauer/algebra.hpp"

namespace brauer {

struct OspParams {
  int m = 0;
  int n = 0;

  OspParams(int m_, int n_) : m(m_), n(n_) {
    if (m < 0 || n < 0) throw std::invalid_argument("superdimension parameters must be nonnegative");
  }

  int critical_degree() const { return (m + 1) * (n + 1); }           // r_c
  Partition critical_shape() const { return rectangle(m + 1, 2 * n + 2); }   // lambda_c
  Partition half_critical_shape() const { return rectangle(m + 1, n + 1); }  // mu_c
  Rational delta() const { return make_rational(m - 2 * n); }

  // Scale making the normalized seed element integral.
  Int arc_scale() const {
    return pow_int(pow_int(Int(2), n + 1) * factorial(n + 1), m + 1);
  }

  // Quasi-idempotent constant: conjugated seed squares to this multiple.
  Int quasi_idempotent_constant() const {
    return pow_int(factorial(m + 1), n + 1) * hook_product(half_critical_shape());
  }
};

// Product of the cap-cup generators on strands 1-2, 3-4, ..., 2i-1..2i.
inline Element adjacent_caps(int r, int i, const Rational& delta) {
  Element e = Element::unit(r, delta);
  for (int j = 1; j <= i; ++j) e = e * element_e(2 * j - 1, r, delta);
  return e;
}

// x_(r) E(i) x_(r): full symmetrizers around i nested cap-cup pairs.
inline Element xi_element(int r, int i, const Rational& delta) {
  if (i < 0 || 2 * i > r) throw std::out_of_range("xi_element: need 0 <= i <= r/2");
  Element x = symmetrizer(r, delta);
  return x * adjacent_caps(r, i, delta) * x;
}

// The sum of all (r,r)-diagrams, built from the weighted symmetrized
// cap-cup elements.
inline Element lehrer_zhang(int r, const Rational& delta) {
  if (r < 1) throw std::invalid_argument("lehrer_zhang: r >= 1");
  Element acc(r, r, delta);
  for (int i = 0; 2 * i <= r; ++i) {
    Int denom = pow_int(pow_int(Int(2), i) * factorial(i), 2) * factorial(r - 2 * i);
    acc = acc + xi_element(r, i, delta).scaled(Rational(1) / Rational(denom));
  }
  return acc;
}

// Shuffle permutation carrying the row filling of the half-critical
// rectangle onto its column filling; acts on 0-based points.
inline Perm half_shape_shuffle(const OspParams& p) {
  return d_of(column_tableau(p.half_critical_shape()));
}

namespace detail {

// (2r,0)-element obtained by closing off a group-algebra element against the
// adjacent-arcs diagram.  Multiplies factor by factor to keep supports small.
inline Element close_against_arcs(int r2, const std::vector<Element>& factors,
                                  const Rational& delta) {
  Element acc = Element::from_diagram(a_hat_diagram(r2 / 2), delta);
  for (const Element& f : factors) acc = acc * f;
  return acc;
}

}  // namespace detail

// Seed annihilator in the critical degree, built by bending the arc closure
// of the critical-shape Young symmetrizer.
inline Element kernel_seed_via_arcs(const OspParams& p) {
  int rc = p.critical_degree();
  Tableau t = row_tableau(p.critical_shape());
  Element x = young_x(t, p.delta());
  Element y = young_y(t, p.delta());
  return bend_up(detail::close_against_arcs(2 * rc, {x, y}, p.delta()));
}

// Normalized seed: column sandwich of a tensor power of the all-diagram sum.
// Coefficients are provably integral; asserted here.
inline Element kernel_seed_normalized(const OspParams& p) {
  Element lz = lehrer_zhang(p.n + 1, p.delta());
  Element mid = lz;
  for (int i = 1; i <= p.m; ++i) mid = mid.tensor_with(lz);
  Element y = young_y(row_tableau(p.half_critical_shape()), p.delta());
  Element result = y * mid * y;
  for (const auto& [d, c] : result.terms())
    if (c.get_den() != 1)
      throw std::logic_error("kernel_seed_normalized: non-integral coefficient");
  return result;
}

// Seed annihilator, scaled form of the normalized one.
inline Element kernel_seed(const OspParams& p) {
  return kernel_seed_normalized(p).scaled(Rational(p.arc_scale()));
}

// Conjugate of the normalized seed by the half-shape shuffle on both rows;
// a quasi-idempotent with constant quasi_idempotent_constant().
inline Element kernel_quasi_idempotent(const OspParams& p) {
  Perm w = half_shape_shuffle(p);
  Element wd = from_perm(w, p.delta());
  Element wdinv = from_perm(perm_inverse(w), p.delta());
  return wd * kernel_seed_normalized(p) * wdinv;
}

// Same element assembled from alternating blocks joined by the shuffle.
inline Element kernel_quasi_idempotent_blocks(const OspParams& p) {
  Element a = antisymmetrizer(p.m + 1, p.delta());
  Element atens = a;
  for (int i = 1; i <= p.n; ++i) atens = atens.tensor_with(a);
  Element b = lehrer_zhang(p.n + 1, p.delta());
  Element btens = b;
  for (int i = 1; i <= p.m; ++i) btens = btens.tensor_with(b);
  Perm w = half_shape_shuffle(p);
  Element wd = from_perm(w, p.delta());
  Element wdinv = from_perm(perm_inverse(w), p.delta());
  return atens * wd * btens * wdinv * atens;
}

// Bent generator: the quasi-idempotent with the listed top strands swung to
// the bottom row and vice versa.  Sequences are strand positions in
// [1, r_c]; equal lengths keep the element square.
inline Element kernel_generator(const OspParams& p, const std::vector<int>& top_seq,
                                const std::vector<int>& bottom_seq) {
  if (top_seq.size() != bottom_seq.size())
    throw std::invalid_argument("kernel_generator: sequence length mismatch");
  return bend_strands(kernel_quasi_idempotent(p), top_seq, bottom_seq);
}

// Annihilator attached to an even shape containing the critical rectangle,
// in degree r = |shape|/2: scaled column sandwich of all-diagram sums.
inline Element kernel_element_for_shape(const OspParams& p, const Partition& shape) {
  if (!shape.all_parts_even() || !shape.contains(p.critical_shape()))
    throw std::invalid_argument("kernel_element_for_shape: invalid shape");
  Rational delta = p.delta();
  Element mid = lehrer_zhang(shape.part(0) / 2, delta);
  Int scale = pow_int(Int(2), shape.part(0) / 2) * factorial(shape.part(0) / 2);
  for (int i = 1; i < shape.rows(); ++i) {
    mid = mid.tensor_with(lehrer_zhang(shape.part(i) / 2, delta));
    scale *= pow_int(Int(2), shape.part(i) / 2) * factorial(shape.part(i) / 2);
  }
  Element y = young_y(row_tableau(shape.halved()), delta);
  return (y * mid * y).scaled(Rational(scale));
}

// The same element through the arc closure of the shape's symmetrizer.
inline Element kernel_element_for_shape_via_arcs(const OspParams& p, const Partition& shape) {
  if (!shape.all_parts_even() || !shape.contains(p.critical_shape()))
    throw std::invalid_argument("kernel_element_for_shape: invalid shape");
  int r = shape.weight() / 2;
  Tableau t = row_tableau(shape);
  Element x = young_x(t, p.delta());
  Element y = young_y(t, p.delta());
  return bend_up(detail::close_against_arcs(2 * r, {x, y}, p.delta()));
}

// Basis of the critical-degree annihilator: one element per standard tableau
// of the critical shape.
inline std::vector<Element> kernel_basis_min(const OspParams& p) {
  Element seed = kernel_seed(p);
  std::vector<Element> out;
  for (const Tableau& t : standard_tableaux(p.critical_shape()))
    out.push_back(star_act(d_of(t), seed));
  return out;
}

// Basis of the degree-r annihilator, indexed by standard tableaux over all
// admissible even shapes.  Empty when r is below the critical degree.
inline std::vector<Element> kernel_basis(const OspParams& p, int r) {
  std::vector<Element> out;
  for (const Partition& shape : even_partitions_containing(r, p.m, p.n)) {
    Element seed = kernel_element_for_shape(p, shape);
    for (const Tableau& t : standard_tableaux(shape))
      out.push_back(star_act(d_of(t), seed));
  }
  return out;
}

// Minimal-degree generator family: bent quasi-idempotents over the
// increasing-type index set.
inline std::vector<Element> kernel_generators_min(const OspParams& p) {
  Element qi = kernel_quasi_idempotent(p);
  std::vector<Element> out;
  for (const SequencePair& pr : generator_index_set(p.m, p.n))
    out.push_back(bend_strands(qi, pr.top, pr.bottom));
  return out;
}

// The same family embedded in degree r by identity strands.
inline std::vector<Element> kernel_generators(const OspParams& p, int r) {
  if (r < p.critical_degree())
    throw std::invalid_argument("kernel_generators: r below critical degree");
  Element qi = kernel_quasi_idempotent(p);
  std::vector<Element> out;
  for (const SequencePair& pr : generator_index_set(p.m, p.n))
    out.push_back(pad_bent(qi, pr.top, pr.bottom, r));
  return out;
}

// Single ideal generator for superdimension (1|2n): the bent quasi-idempotent
// whose sequences take one strand from every block.
inline Element osp12n_single_generator(int n) {
  OspParams p(1, n);
  std::vector<int> seq = standard_sequence(std::vector<int>(n + 1, 1), 1, n);
  return kernel_generator(p, seq, seq);
}

// Classical symplectic idempotent: the normalized all-diagram sum.
inline Element symplectic_idempotent(int n) {
  return lehrer_zhang(n + 1, make_rational(-2 * n)).scaled(Rational(1) / Rational(factorial(n + 1)));
}

// Classical orthogonal family: bent antisymmetrizers.  The k-th element
// bends the first k strands on both rows; scaled to an idempotent.
inline Element orthogonal_bent_antisymmetrizer(int m, int k) {
  if (k < 0 || k > m + 1) throw std::out_of_range("orthogonal idempotent index");
  std::vector<int> seq;
  for (int s = 1; s <= k; ++s) seq.push_back(s);
  return bend_strands(antisymmetrizer(m + 1, make_rational(m)), seq, seq);
}

inline Element orthogonal_idempotent(int m, int k) {
  Rational scale = Rational(1) / Rational(factorial(k) * factorial(m + 1 - k));
  return orthogonal_bent_antisymmetrizer(m, k).scaled(scale);
}

// Tensor product of two antisymmetrizers of complementary sizes.
inline Element orthogonal_antisymmetrizer_pair(int m, int k) {
  if (k < 0 || k > m + 1) throw std::out_of_range("antisymmetrizer pair index");
  Rational delta = make_rational(m);
  if (k == 0) return antisymmetrizer(m + 1, delta);
  if (k == m + 1) return antisymmetrizer(m + 1, delta);
  return antisymmetrizer(m + 1 - k, delta).tensor_with(antisymmetrizer(k, delta));
}

// Signed sum over permutations of the given 1-based entry set, as an element
// on k strands.
inline Element alternating_sum_on(int k, const std::vector<int>& entries, const Rational& delta) {
  std::vector<int> zero_based;
  for (int e : entries) zero_based.push_back(e - 1);
  Element out(k, k, delta);
  for (const Perm& p : detail::set_stabilizer(k, {zero_based}))
    out.add_term(perm_to_diagram(p, k), Rational(perm_sign(p)));
  return out;
}

namespace detail {

// Conjugate of a point of the interleaved label set 1..2r by the half-shape
// shuffle: odd labels move with w on the top row, even with w on the bottom.
inline int shuffle_on_labels(const Perm& w, int label1) {
  int k = (label1 + 1) / 2;           // 1-based strand
  int wk = w[k - 1] + 1;              // 1-based image strand
  return label1 % 2 == 1 ? 2 * wk - 1 : 2 * wk;
}

}  // namespace detail

// Exact vanishing of the Garnir combination applied to the normalized seed.
// i_seq / j_seq are sequences of odd / even interleaved labels in [1, 2r_c];
// the relation only holds when the p-th and q-th block counts overfill a
// column, hence the precondition.
inline bool garnir_relation_check(const OspParams& p, int block_p, int block_q,
                                  const std::vector<int>& i_seq, const std::vector<int>& j_seq) {
  int rc = p.critical_degree();
  auto strand_positions = [&](const std::vector<int>& labels, bool odd) {
    std::vector<int> pos;
    for (int v : labels) {
      if (v < 1 || v > 2 * rc || (v % 2 == 1) != odd)
        throw std::invalid_argument("garnir_relation_check: bad label sequence");
      pos.push_back((v + 1) / 2);
    }
    return pos;
  };
  std::vector<int> ipos = strand_positions(i_seq, true);
  std::vector<int> jpos = strand_positions(j_seq, false);
  std::vector<int> ta = type_of_sequence(ipos, p.m, p.n);
  std::vector<int> tb = type_of_sequence(jpos, p.m, p.n);
  if (block_p < 1 || block_p > p.n + 1 || block_q < 1 || block_q > p.n + 1)
    throw std::invalid_argument("garnir_relation_check: block out of range");
  if (ta[block_p - 1] + tb[block_q - 1] <= p.m + 1)
    throw std::invalid_argument(
        "garnir_relation_check: blocks do not overfill a column (nothing to check)");

  Perm winv = perm_inverse(half_shape_shuffle(p));
  std::vector<int> X, Y;
  for (std::size_t s = 0; s < i_seq.size(); ++s) {
    int block = (ipos[s] - 1) / (p.m + 1) + 1;
    if (block == block_p) X.push_back(detail::shuffle_on_labels(winv, i_seq[s]));
  }
  for (std::size_t s = 0; s < j_seq.size(); ++s) {
    int block = (jpos[s] - 1) / (p.m + 1) + 1;
    if (block == block_q) Y.push_back(detail::shuffle_on_labels(winv, j_seq[s]));
  }

  Element seed = kernel_seed_normalized(p);
  Element acc(rc, rc, p.delta());
  for (const auto& [sigma, sign] : garnir_element(2 * rc, X, Y).terms) {
    Element moved = star_act(perm_inverse(sigma), seed).scaled(Rational(sign));
    acc = acc + moved;
  }
  return acc.is_zero();
}

}  // namespace brauer
