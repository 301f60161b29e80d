// Formal linear combinations of Brauer diagrams: the spaces B_k^l(delta) and
// the Brauer algebra B_r(delta), with the group algebra of the symmetric
// group sitting inside via permutation diagrams.
//
// Elements are templated on the coefficient ring so that the same arithmetic
// runs with exact rationals (delta a fixed rational) and with polynomials in
// an indeterminate delta (used by the presentation-relation checks).

#pragma once

#include <functional>
#include <map>
#include <vector>

#include "brauer/diagram.hpp"
#include "brauer/linalg.hpp"

namespace brauer {

// Polynomial in delta with rational coefficients.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(long v) { if (v != 0) c_ = {Rational(v)}; }
  explicit DeltaPoly(Rational v) { if (sgn(v) != 0) c_ = {std::move(v)}; }

  static DeltaPoly indeterminate() {
    DeltaPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  DeltaPoly& operator+=(const DeltaPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  DeltaPoly operator*(const DeltaPoly& o) const {
    if (is_zero() || o.is_zero()) return DeltaPoly();
    DeltaPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
  }

  DeltaPoly operator-() const {
    DeltaPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  bool operator==(const DeltaPoly& o) const { return c_ == o.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      if (!s.empty()) s += " + ";
      s += to_string(c_[i]);
      if (i == 1) s += "*d";
      if (i > 1) s += "*d^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // c_[i] multiplies delta^i
};

namespace detail {

template <class R>
struct coeff_ops {
  static bool is_zero(const R& v) { return v.is_zero(); }
  static R pow(const R& base, int e) {
    R r(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }
};

template <>
struct coeff_ops<Rational> {
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static Rational pow(const Rational& base, int e) {
    return pow_rational(base, static_cast<unsigned long>(e));
  }
};

}  // namespace detail

template <class R>
class BasicElement {
 public:
  BasicElement(int k, int l, R delta) : k_(k), l_(l), delta_(std::move(delta)) {}

  static BasicElement from_diagram(const BrauerDiagram& d, R delta) {
    BasicElement e(d.bottom_count(), d.top_count(), std::move(delta));
    e.add_term(d, R(1));
    return e;
  }

  static BasicElement unit(int r, R delta) {
    return from_diagram(identity_diagram(r), std::move(delta));
  }

  int bottom_count() const { return k_; }
  int top_count() const { return l_; }
  const R& delta() const { return delta_; }
  const std::map<BrauerDiagram, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const BrauerDiagram& d, const R& c) {
    if (d.bottom_count() != k_ || d.top_count() != l_)
      throw std::invalid_argument("term signature mismatch");
    if (detail::coeff_ops<R>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_ops<R>::is_zero(it->second)) terms_.erase(it);
    }
  }

  R coeff(const BrauerDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? R(0) : it->second;
  }

  BasicElement operator+(const BasicElement& o) const {
    check_same_space(o);
    BasicElement r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
  }

  BasicElement operator-(const BasicElement& o) const {
    check_same_space(o);
    BasicElement r = *this;
    for (const auto& [d, c] : o.terms_) {
      R neg = -c;
      r.add_term(d, neg);
    }
    return r;
  }

  BasicElement scaled(const R& f) const {
    BasicElement r(k_, l_, delta_);
    if (detail::coeff_ops<R>::is_zero(f)) return r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, c * f);
    return r;
  }

  // Composition product, bilinear in the diagrams, with delta^loops weights.
  BasicElement operator*(const BasicElement& o) const {
    if (k_ != o.l_) throw std::invalid_argument("multiply: signature mismatch");
    if (!(delta_ == o.delta_)) throw std::invalid_argument("multiply: delta mismatch");
    BasicElement r(o.k_, l_, delta_);
    for (const auto& [d1, c1] : terms_) {
      for (const auto& [d2, c2] : o.terms_) {
        auto res = compose(d1, d2);
        R c = c1 * c2;
        if (res.loop_count > 0) c = c * detail::coeff_ops<R>::pow(delta_, res.loop_count);
        r.add_term(res.diagram, c);
      }
    }
    return r;
  }

  BasicElement tensor_with(const BasicElement& o) const {
    if (!(delta_ == o.delta_)) throw std::invalid_argument("tensor: delta mismatch");
    BasicElement r(k_ + o.k_, l_ + o.l_, delta_);
    for (const auto& [d1, c1] : terms_)
      for (const auto& [d2, c2] : o.terms_) r.add_term(tensor(d1, d2), c1 * c2);
    return r;
  }

  bool operator==(const BasicElement& o) const {
    return k_ == o.k_ && l_ == o.l_ && delta_ == o.delta_ && terms_ == o.terms_;
  }

 private:
  void check_same_space(const BasicElement& o) const {
    if (k_ != o.k_ || l_ != o.l_) throw std::invalid_argument("signature mismatch");
    if (!(delta_ == o.delta_)) throw std::invalid_argument("delta mismatch");
  }

  int k_, l_;
  R delta_;
  std::map<BrauerDiagram, R> terms_;
};

using Element = BasicElement<Rational>;
using SymElement = BasicElement<DeltaPoly>;

inline Element element_s(int i, int r, const Rational& delta) {
  return Element::from_diagram(generator_s(i, r), delta);
}
inline Element element_e(int i, int r, const Rational& delta) {
  return Element::from_diagram(generator_e(i, r), delta);
}

// --- permutation-supported elements -------------------------------------

template <class R>
BasicElement<R> from_signed_perms(int k, const R& delta,
                                  const std::vector<std::pair<Perm, int>>& terms) {
  BasicElement<R> e(k, k, delta);
  for (const auto& [p, s] : terms) e.add_term(perm_to_diagram(p, k), R(s));
  return e;
}

inline Element from_perm(const Perm& p, const Rational& delta) {
  return Element::from_diagram(perm_to_diagram(p, static_cast<int>(p.size())), delta);
}

// Coefficient-preserving inversion of every permutation term.
template <class R>
BasicElement<R> sharp(const BasicElement<R>& e) {
  if (e.bottom_count() != e.top_count())
    throw std::invalid_argument("sharp: element must be square");
  BasicElement<R> r(e.bottom_count(), e.top_count(), e.delta());
  for (const auto& [d, c] : e.terms()) {
    if (!d.is_permutation())
      throw std::invalid_argument("sharp: non-permutation support");
    r.add_term(perm_to_diagram(perm_inverse(d.to_permutation()), d.bottom_count()), c);
  }
  return r;
}

// Full symmetrizer on k strands: sum of all permutation diagrams.
template <class R>
BasicElement<R> symmetrizer(int k, const R& delta) {
  BasicElement<R> e(k, k, delta);
  Perm p = perm_identity(k);
  do {
    e.add_term(perm_to_diagram(p, k), R(1));
  } while (std::next_permutation(p.begin(), p.end()));
  return e;
}

// Full antisymmetrizer on k strands: signed sum of all permutation diagrams.
template <class R>
BasicElement<R> antisymmetrizer(int k, const R& delta) {
  BasicElement<R> e(k, k, delta);
  Perm p = perm_identity(k);
  do {
    e.add_term(perm_to_diagram(p, k), R(perm_sign(p)));
  } while (std::next_permutation(p.begin(), p.end()));
  return e;
}

namespace detail {

// All permutations of {0..k-1} stabilizing each listed entry set.
inline void set_stabilizer_rec(const std::vector<std::vector<int>>& sets, std::size_t which,
                               Perm& acc, std::vector<Perm>& out) {
  if (which == sets.size()) {
    out.push_back(acc);
    return;
  }
  std::vector<int> target = sets[which];
  std::sort(target.begin(), target.end());
  std::vector<int> image = target;
  do {
    for (std::size_t i = 0; i < target.size(); ++i) acc[target[i]] = image[i];
    set_stabilizer_rec(sets, which + 1, acc, out);
  } while (std::next_permutation(image.begin(), image.end()));
  for (int v : target) acc[v] = v;
}

inline std::vector<Perm> set_stabilizer(int k, const std::vector<std::vector<int>>& sets) {
  Perm acc = perm_identity(k);
  std::vector<Perm> out;
  set_stabilizer_rec(sets, 0, acc, out);
  return out;
}

}  // namespace detail

// Row symmetrizer of a tableau: sum over permutations preserving each row.
inline Element young_x(const Tableau& t, const Rational& delta) {
  int k = t.size();
  std::vector<std::vector<int>> rows;
  for (const auto& row : t.rows()) {
    std::vector<int> zero_based;
    for (int e : row) zero_based.push_back(e - 1);
    rows.push_back(zero_based);
  }
  Element out(k, k, delta);
  for (const Perm& p : detail::set_stabilizer(k, rows)) out.add_term(perm_to_diagram(p, k), Rational(1));
  return out;
}

// Signed column sum of a tableau.
inline Element young_y(const Tableau& t, const Rational& delta) {
  int k = t.size();
  std::vector<std::vector<int>> cols;
  for (int c = 0; c < t.shape().part(0); ++c) {
    std::vector<int> col;
    for (int e : t.column(c)) col.push_back(e - 1);
    cols.push_back(col);
  }
  Element out(k, k, delta);
  for (const Perm& p : detail::set_stabilizer(k, cols))
    out.add_term(perm_to_diagram(p, k), Rational(perm_sign(p)));
  return out;
}

// Young symmetrizer x * y on the tableau; squares to hook_product * itself.
inline Element young_symmetrizer(const Tableau& t, const Rational& delta) {
  return young_x(t, delta) * young_y(t, delta);
}

// All k! fillings of the shape, row by row.
inline std::vector<Tableau> all_tableaux(const Partition& lambda) {
  int k = lambda.weight();
  Perm p = perm_identity(k);
  std::vector<Tableau> out;
  do {
    std::vector<std::vector<int>> rows;
    int pos = 0;
    for (int i = 0; i < lambda.rows(); ++i) {
      std::vector<int> row;
      for (int j = 0; j < lambda.part(i); ++j) row.push_back(p[pos++] + 1);
      rows.push_back(row);
    }
    out.push_back(Tableau(lambda, rows));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Exact check of the resolution of the identity into the canonical central
// idempotent pieces of the group algebra of Sym_k.  Cost grows as (k!)^2,
// hence the configurable bound.
inline bool identity_resolution_check(int k, int bound = 4) {
  if (k > bound)
    throw BudgetExceeded("identity_resolution_check: k exceeds configured bound " +
                         std::to_string(bound));
  Rational delta(0);
  Element sum(k, k, delta);
  for (const Partition& lam : partitions_of(k)) {
    Rational h(hook_product(lam));
    Rational weight = Rational(1) / (h * h);
    for (const Tableau& t : all_tableaux(lam))
      sum = sum + young_symmetrizer(t, delta).scaled(weight);
  }
  return sum == Element::unit(k, delta);
}

// --- the bending isomorphisms and the 2r-point symmetric group action ----

// (2r,0)-element -> (r,r)-element: compose with the nested-arc and shuffle
// diagrams.  Linear in the input.
template <class R>
BasicElement<R> bend_up(const BasicElement<R>& a) {
  if (a.top_count() != 0 || a.bottom_count() % 2 != 0)
    throw std::invalid_argument("bend_up: need a (2r,0)-element");
  int r = a.bottom_count() / 2;
  BasicElement<R> ir = BasicElement<R>::unit(r, a.delta());
  BasicElement<R> omega =
      BasicElement<R>::from_diagram(omega_diagram(r), a.delta());
  BasicElement<R> ur = BasicElement<R>::from_diagram(u_r_diagram(r), a.delta());
  return (ir.tensor_with(a) * ir.tensor_with(omega)) * ur.tensor_with(ir);
}

// (r,r)-element -> (2r,0)-element, inverse of bend_up.
template <class R>
BasicElement<R> bend_down(const BasicElement<R>& d) {
  if (d.top_count() != d.bottom_count())
    throw std::invalid_argument("bend_down: need an (r,r)-element");
  int r = d.bottom_count();
  BasicElement<R> ir = BasicElement<R>::unit(r, d.delta());
  BasicElement<R> ar = BasicElement<R>::from_diagram(a_r_diagram(r), d.delta());
  BasicElement<R> omega_inv =
      BasicElement<R>::from_diagram(perm_to_diagram(perm_inverse(omega_perm(r)), 2 * r), d.delta());
  return (ar * ir.tensor_with(d)) * omega_inv;
}

// 0-based interleaving label of a vertex of an (r,r)-diagram: top position j
// gets label 2j, bottom position i gets label 2i+1.  Under this labelling the
// 2r-point symmetric group acts on (r,r)-diagrams by pure relabelling.
inline int vertex_label(const BrauerDiagram& d, int v) {
  int r = d.top_count();
  return d.is_top(v) ? 2 * v : 2 * (v - r) + 1;
}

inline int label_vertex(int r, int label) {
  return label % 2 == 0 ? label / 2 : r + (label - 1) / 2;
}

// sigma * D for sigma in Sym_{2r} acting on the interleaved labels.
inline BrauerDiagram star_act(const Perm& sigma, const BrauerDiagram& d) {
  int r = d.top_count();
  if (d.bottom_count() != r || static_cast<int>(sigma.size()) != 2 * r)
    throw std::invalid_argument("star_act: size mismatch");
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : d.edges())
    edges.emplace_back(label_vertex(r, sigma[vertex_label(d, a)]),
                       label_vertex(r, sigma[vertex_label(d, b)]));
  return BrauerDiagram(r, r, edges);
}

// sigma * A for a (2r,0)-diagram: vertices are labelled 0..2r-1 left to right.
inline BrauerDiagram star_act_arcs(const Perm& sigma, const BrauerDiagram& a) {
  if (a.top_count() != 0 || static_cast<int>(sigma.size()) != a.bottom_count())
    throw std::invalid_argument("star_act_arcs: size mismatch");
  std::vector<std::pair<int, int>> edges;
  for (auto [x, y] : a.edges()) edges.emplace_back(sigma[x], sigma[y]);
  return BrauerDiagram(a.bottom_count(), 0, edges);
}

template <class R>
BasicElement<R> star_act(const Perm& sigma, const BasicElement<R>& e) {
  BasicElement<R> out(e.bottom_count(), e.top_count(), e.delta());
  for (const auto& [d, c] : e.terms()) out.add_term(star_act(sigma, d), c);
  return out;
}

template <class R>
BasicElement<R> star_act_arcs(const Perm& sigma, const BasicElement<R>& e) {
  BasicElement<R> out(e.bottom_count(), e.top_count(), e.delta());
  for (const auto& [d, c] : e.terms()) out.add_term(star_act_arcs(sigma, d), c);
  return out;
}

// Linear extension of the star action to group-algebra coefficients:
// (sum c_sigma sigma) * e = sum c_sigma (sigma * e).
template <class R>
BasicElement<R> star_act(const BasicElement<R>& alpha, const BasicElement<R>& e) {
  BasicElement<R> out(e.bottom_count(), e.top_count(), e.delta());
  for (const auto& [d, c] : alpha.terms()) {
    if (!d.is_permutation()) throw std::invalid_argument("star_act: alpha must be permutations");
    Perm sigma = d.to_permutation();
    BasicElement<R> part = e.top_count() == 0 ? star_act_arcs(sigma, e) : star_act(sigma, e);
    for (const auto& [dd, cc] : part.terms()) out.add_term(dd, cc * c);
  }
  return out;
}

// Embedding of a pair (top_perm, bottom_perm) in Sym_r x Sym_r into the
// 2r-point group acting on interleaved labels.
inline Perm h_embed(const Perm& top, const Perm& bottom) {
  int r = static_cast<int>(top.size());
  Perm out(2 * r);
  for (int j = 0; j < r; ++j) {
    out[2 * j] = 2 * top[j];
    out[2 * j + 1] = 2 * bottom[j] + 1;
  }
  return out;
}

// --- strand bending and padding ------------------------------------------

// Swings the listed top strands (1-based positions, strictly increasing) down
// to the right end of the bottom row and the listed bottom strands up to the
// right end of the top row, preserving the pictured order (the first listed
// strand lands outermost).
inline BrauerDiagram bend_strands(const BrauerDiagram& d, const std::vector<int>& top_seq,
                                  const std::vector<int>& bottom_seq) {
  int r = d.top_count();
  if (d.bottom_count() != r) throw std::invalid_argument("bend_strands: need an (r,r)-diagram");
  int k = static_cast<int>(top_seq.size());
  int l = static_cast<int>(bottom_seq.size());
  std::vector<char> top_moved(r, 0), bottom_moved(r, 0);
  int prev = 0;
  for (int v : top_seq) {
    if (v <= prev || v > r) throw std::invalid_argument("bend_strands: bad top sequence");
    prev = v;
    top_moved[v - 1] = 1;
  }
  prev = 0;
  for (int v : bottom_seq) {
    if (v <= prev || v > r) throw std::invalid_argument("bend_strands: bad bottom sequence");
    prev = v;
    bottom_moved[v - 1] = 1;
  }
  int new_l = r - k + l;
  int new_k = r - l + k;

  // new positions (0-based vertex indices in the result)
  std::vector<int> map(2 * r);
  int next_top = 0;
  for (int j = 0; j < r; ++j)
    if (!top_moved[j]) map[j] = next_top++;
  int next_bottom = new_l;
  for (int i = 0; i < r; ++i)
    if (!bottom_moved[i]) map[r + i] = next_bottom++;
  for (int s = 0; s < k; ++s) map[top_seq[s] - 1] = new_l + (new_k - 1 - s);
  for (int t = 0; t < l; ++t) map[r + bottom_seq[t] - 1] = new_l - 1 - t;

  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : d.edges()) edges.emplace_back(map[a], map[b]);
  return BrauerDiagram(new_k, new_l, edges);
}

template <class R>
BasicElement<R> bend_strands(const BasicElement<R>& e, const std::vector<int>& top_seq,
                             const std::vector<int>& bottom_seq) {
  int r = e.top_count();
  int new_l = r - static_cast<int>(top_seq.size()) + static_cast<int>(bottom_seq.size());
  int new_k = r + static_cast<int>(top_seq.size()) - static_cast<int>(bottom_seq.size());
  BasicElement<R> out(new_k, new_l, e.delta());
  for (const auto& [d, c] : e.terms()) out.add_term(bend_strands(d, top_seq, bottom_seq), c);
  return out;
}

// Embeds a bent (r_c,r_c)-element into r strands: unequal sequence lengths
// are closed off with caps or cups, the rest is padded with identity strands.
template <class R>
BasicElement<R> pad_bent(const BasicElement<R>& e, const std::vector<int>& top_seq,
                         const std::vector<int>& bottom_seq, int r) {
  int rc = e.top_count();
  if (e.bottom_count() != rc) throw std::invalid_argument("pad_bent: need an (rc,rc)-element");
  int k = static_cast<int>(top_seq.size());
  int l = static_cast<int>(bottom_seq.size());
  int occupied = rc + std::abs(k - l);
  if (r < occupied) throw std::invalid_argument("pad_bent: r too small");
  BasicElement<R> bent = bend_strands(e, top_seq, bottom_seq);
  const R& delta = e.delta();
  BasicElement<R> cap = BasicElement<R>::from_diagram(BrauerDiagram(2, 0, {{0, 1}}), delta);
  BasicElement<R> cup = BasicElement<R>::from_diagram(BrauerDiagram(0, 2, {{0, 1}}), delta);
  for (int t = 0; t < l - k; ++t) bent = bent.tensor_with(cap);
  for (int t = 0; t < k - l; ++t) bent = bent.tensor_with(cup);
  if (r > occupied) bent = bent.tensor_with(BasicElement<R>::unit(r - occupied, delta));
  return bent;
}

// --- coordinates and saturation -------------------------------------------

// Fixed coordinate system on B_k^l: index in enumerate_diagrams(k, l).
class DiagramBasis {
 public:
  DiagramBasis(int k, int l) : diagrams_(enumerate_diagrams(k, l)) {
    for (std::size_t i = 0; i < diagrams_.size(); ++i)
      index_[diagrams_[i]] = static_cast<std::int32_t>(i);
  }

  int size() const { return static_cast<int>(diagrams_.size()); }
  const BrauerDiagram& diagram(int i) const { return diagrams_[i]; }
  std::int32_t index(const BrauerDiagram& d) const { return index_.at(d); }

  std::vector<Rational> coordinates(const Element& e) const {
    std::vector<Rational> v(diagrams_.size(), Rational(0));
    for (const auto& [d, c] : e.terms()) v[index(d)] = c;
    return v;
  }

  Element element(const std::vector<Rational>& v, const Rational& delta, int k, int l) const {
    Element e(k, l, delta);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) e.add_term(diagrams_[i], v[i]);
    return e;
  }

 private:
  std::vector<BrauerDiagram> diagrams_;
  std::map<BrauerDiagram, std::int32_t> index_;
};

namespace detail {

// Precomputed action of one closure operation on basis diagrams:
// basis index -> (image index, number of closed loops).
struct DiagramOp {
  std::vector<std::pair<std::int32_t, std::int8_t>> image;
};

template <class I>
SparseRow<I> apply_op(const DiagramOp& op, const SparseRow<I>& row, const I& delta) {
  using ops = num_ops<I>;
  SparseRow<I> out;
  out.reserve(row.size());
  for (const auto& [col, val] : row) {
    auto [to, loops] = op.image[col];
    I v = val;
    for (int t = 0; t < loops; ++t) v = ops::mul(v, delta);
    if (!ops::is_zero(v)) out.emplace_back(to, std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow<I> merged;
  merged.reserve(out.size());
  for (auto& [c, v] : out) {
    if (!merged.empty() && merged.back().first == c) {
      merged.back().second = ops::add(merged.back().second, v);
      if (ops::is_zero(merged.back().second)) merged.pop_back();
    } else {
      merged.emplace_back(c, std::move(v));
    }
  }
  return merged;
}

template <class I>
std::vector<std::vector<Rational>> saturate_with_ops(const DiagramBasis& basis,
                                                     const std::vector<Element>& seeds,
                                                     const std::vector<DiagramOp>& ops_list,
                                                     const Int& delta_int) {
  using ops = num_ops<I>;
  I delta = ops::from_int(delta_int);
  Echelon<I> ech(basis.size());
  std::vector<SparseRow<I>> work;
  auto push = [&](SparseRow<I> row) {
    ech.reduce(row);
    if (row.empty()) return;
    normalize_content(row);
    ech.insert(row);
    work.push_back(std::move(row));
  };
  for (const Element& s : seeds) {
    std::vector<std::pair<std::int32_t, Rational>> sparse;
    for (const auto& [d, c] : s.terms()) sparse.emplace_back(basis.index(d), c);
    std::sort(sparse.begin(), sparse.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    push(to_integer_row<I>(sparse));
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const DiagramOp& op : ops_list) {
      SparseRow<I> child = apply_op<I>(op, work[i], delta);
      push(std::move(child));
    }
  }
  return ech.rref();
}

}  // namespace detail

// Basis (reduced echelon form over the diagram coordinates) of the smallest
// subspace of B_r(delta) containing the generators and closed under left and
// right multiplication by every s_i and e_i.  delta must be an integer here
// (it always is for the superdimension parameters).
inline std::vector<std::vector<Rational>> ideal_saturate(const std::vector<Element>& gens,
                                                         const DiagramBasis& basis) {
  if (gens.empty()) return {};
  int r = gens.front().bottom_count();
  Rational delta = gens.front().delta();
  if (delta.get_den() != 1) throw std::invalid_argument("ideal_saturate: integer delta required");
  std::vector<detail::DiagramOp> ops_list;
  for (int i = 1; i <= r - 1; ++i) {
    for (bool left : {true, false}) {
      for (bool use_e : {false, true}) {
        BrauerDiagram g = use_e ? generator_e(i, r) : generator_s(i, r);
        detail::DiagramOp op;
        op.image.resize(basis.size());
        for (int t = 0; t < basis.size(); ++t) {
          auto res = left ? compose(g, basis.diagram(t)) : compose(basis.diagram(t), g);
          op.image[t] = {basis.index(res.diagram), static_cast<std::int8_t>(res.loop_count)};
        }
        ops_list.push_back(std::move(op));
      }
    }
  }
  Int delta_int = delta.get_num();
  return with_exact_backend([&](auto tag) {
    using I = decltype(tag);
    return detail::saturate_with_ops<I>(basis, gens, ops_list, delta_int);
  });
}

// Basis of the closure of `seed` under the 2r-point symmetric group action
// (adjacent transpositions act by relabelling, so no delta weights arise).
inline std::vector<std::vector<Rational>> module_saturate(const Element& seed,
                                                          const DiagramBasis& basis) {
  int r = seed.bottom_count();
  std::vector<detail::DiagramOp> ops_list;
  for (int i = 0; i < 2 * r - 1; ++i) {
    Perm s = perm_transposition(2 * r, i, i + 1);
    detail::DiagramOp op;
    op.image.resize(basis.size());
    for (int t = 0; t < basis.size(); ++t)
      op.image[t] = {basis.index(star_act(s, basis.diagram(t))), 0};
    ops_list.push_back(std::move(op));
  }
  return with_exact_backend([&](auto tag) {
    using I = decltype(tag);
    return detail::saturate_with_ops<I>(basis, {seed}, ops_list, Int(0));
  });
}

// Canonical reduced echelon basis of the span of the given elements.
inline std::vector<std::vector<Rational>> span_basis(const std::vector<Element>& elems,
                                                     const DiagramBasis& basis) {
  return with_exact_backend([&](auto tag) {
    using I = decltype(tag);
    Echelon<I> ech(basis.size());
    for (const Element& e : elems) {
      std::vector<std::pair<std::int32_t, Rational>> sparse;
      for (const auto& [d, c] : e.terms()) sparse.emplace_back(basis.index(d), c);
      std::sort(sparse.begin(), sparse.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      ech.insert(detail::to_integer_row<I>(sparse));
    }
    return ech.rref();
  });
}

// --- element serialization -------------------------------------------------

inline nlohmann::json element_to_json(const Element& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [d, c] : e.terms())
    terms.push_back({{"diagram", diagram_to_json(d)}, {"coeff", to_string(c)}});
  return {{"k", e.bottom_count()},
          {"l", e.top_count()},
          {"delta", to_string(e.delta())},
          {"terms", terms}};
}

inline Element element_from_json(const nlohmann::json& j) {
  Element e(j.at("k").get<int>(), j.at("l").get<int>(),
            parse_rational(j.at("delta").get<std::string>()));
  for (const auto& t : j.at("terms"))
    e.add_term(diagram_from_json(t.at("diagram")), parse_rational(t.at("coeff").get<std::string>()));
  return e;
}

}  // namespace brauer
