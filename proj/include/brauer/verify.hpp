// Named verification suites: each runs a family of exact identity and
// dimension checks and returns a Report.  The acceptance harness and the
// command-line driver are thin wrappers around these.

#pragma once

#include <optional>

#include "brauer/centralizer.hpp"
#include "brauer/kernel.hpp"
#include "brauer/report.hpp"

namespace brauer {

struct VerifyOptions {
  long budget = default_eval_budget();
  bool slow = false;
  std::uint64_t seed = 0x5eedULL;
  std::optional<Rational> delta_override;
};

namespace detail {

class VerifyRng {
 public:
  explicit VerifyRng(std::uint64_t seed) : state_(seed ? seed : 1) {}
  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  unsigned below(unsigned bound) { return static_cast<unsigned>(next() % bound); }
  Perm perm(int k) {
    Perm p = perm_identity(k);
    for (int i = k - 1; i > 0; --i) std::swap(p[i], p[rng_below(i + 1)]);
    return p;
  }
  BrauerDiagram square_diagram(int r) {
    std::vector<int> verts(2 * r);
    for (int i = 0; i < 2 * r; ++i) verts[i] = i;
    for (int i = 2 * r - 1; i > 0; --i) std::swap(verts[i], verts[rng_below(i + 1)]);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 2 * r; i += 2) edges.emplace_back(verts[i], verts[i + 1]);
    return BrauerDiagram(r, r, edges);
  }

 private:
  unsigned rng_below(int bound) { return below(static_cast<unsigned>(bound)); }
  std::uint64_t state_;
};

inline const std::vector<OspParams>& acceptance_params() {
  static const std::vector<OspParams> params = {OspParams(0, 1), OspParams(0, 2), OspParams(1, 0),
                                                OspParams(2, 0), OspParams(1, 1)};
  return params;
}

inline std::string param_tag(const OspParams& p) {
  return "(" + std::to_string(p.m) + "|" + std::to_string(2 * p.n) + ")";
}

inline std::vector<std::vector<Rational>> kernel_model(const OspParams& p, int r,
                                                       const DiagramBasis& basis) {
  return span_basis(kernel_basis(p, r), basis);
}

}  // namespace detail

// Presentation relations of the diagram algebra with an indeterminate (or
// overridden) loop parameter, in all degrees up to r_max.
inline Report verify_relations(const VerifyOptions& opt = {}, int r_max = 5) {
  ReportBuilder rb("relations");
  rb.param("r_max", std::to_string(r_max));
  DeltaPoly d = opt.delta_override ? DeltaPoly(*opt.delta_override) : DeltaPoly::indeterminate();
  rb.param("delta", opt.delta_override ? to_string(*opt.delta_override) : "indeterminate");

  auto S = [&](int i, int r) { return SymElement::from_diagram(generator_s(i, r), d); };
  auto E = [&](int i, int r) { return SymElement::from_diagram(generator_e(i, r), d); };

  auto family = [&](const std::string& name, auto&& pred) {
    rb.check(name, [&] {
      int checked = 0;
      bool ok = true;
      for (int r = 2; r <= r_max && ok; ++r) ok = pred(r, checked);
      return std::pair<std::string, std::string>("all hold",
                                                 ok ? "all hold" : "violated");
    });
  };

  family("involutions s_i^2 = 1", [&](int r, int& count) {
    SymElement one = SymElement::unit(r, d);
    for (int i = 1; i < r; ++i, ++count)
      if (!(S(i, r) * S(i, r) == one)) return false;
    return true;
  });
  family("loop absorption e_i^2 = delta e_i", [&](int r, int& count) {
    for (int i = 1; i < r; ++i, ++count)
      if (!(E(i, r) * E(i, r) == E(i, r).scaled(d))) return false;
    return true;
  });
  family("unit absorption e_i s_i = e_i = s_i e_i", [&](int r, int& count) {
    for (int i = 1; i < r; ++i, ++count)
      if (!(E(i, r) * S(i, r) == E(i, r) && S(i, r) * E(i, r) == E(i, r))) return false;
    return true;
  });
  family("braid relation", [&](int r, int& count) {
    for (int i = 1; i + 1 < r; ++i, ++count)
      if (!(S(i, r) * S(i + 1, r) * S(i, r) == S(i + 1, r) * S(i, r) * S(i + 1, r))) return false;
    return true;
  });
  family("contraction e_i e_{i+1} e_i = e_i", [&](int r, int& count) {
    for (int i = 1; i + 1 < r; ++i, ++count)
      if (!(E(i, r) * E(i + 1, r) * E(i, r) == E(i, r))) return false;
    return true;
  });
  family("contraction e_{i+1} e_i e_{i+1} = e_{i+1}", [&](int r, int& count) {
    for (int i = 1; i + 1 < r; ++i, ++count)
      if (!(E(i + 1, r) * E(i, r) * E(i + 1, r) == E(i + 1, r))) return false;
    return true;
  });
  family("slide s_i e_{i+1} e_i = s_{i+1} e_i", [&](int r, int& count) {
    for (int i = 1; i + 1 < r; ++i, ++count)
      if (!(S(i, r) * E(i + 1, r) * E(i, r) == S(i + 1, r) * E(i, r))) return false;
    return true;
  });
  family("slide e_{i+1} e_i s_{i+1} = e_{i+1} s_i", [&](int r, int& count) {
    for (int i = 1; i + 1 < r; ++i, ++count)
      if (!(E(i + 1, r) * E(i, r) * S(i + 1, r) == E(i + 1, r) * S(i, r))) return false;
    return true;
  });
  family("far commutation of crossings", [&](int r, int& count) {
    for (int i = 1; i < r; ++i)
      for (int j = i + 2; j < r; ++j, ++count)
        if (!(S(i, r) * S(j, r) == S(j, r) * S(i, r))) return false;
    return true;
  });
  family("far commutation with caps", [&](int r, int& count) {
    for (int i = 1; i < r; ++i)
      for (int j = i + 2; j < r; ++j, ++count)
        if (!(S(i, r) * E(j, r) == E(j, r) * S(i, r) && E(i, r) * E(j, r) == E(j, r) * E(i, r)))
          return false;
    return true;
  });
  return rb.take();
}

// The bending isomorphisms and the 2r-point symmetric group action.
inline Report verify_actions(const VerifyOptions& opt = {}) {
  ReportBuilder rb("actions");
  rb.param("seed", std::to_string(opt.seed));
  detail::VerifyRng rng(opt.seed);
  Rational delta = make_rational(-1);

  rb.check("bending maps are mutually inverse (all arcs on 6 points)", [&] {
    int good = 0, total = 0;
    for (const BrauerDiagram& d : enumerate_diagrams(6, 0)) {
      Element e = Element::from_diagram(d, delta);
      ++total;
      if (bend_down(bend_up(e)) == e) ++good;
    }
    for (const BrauerDiagram& d : enumerate_diagrams(3, 3)) {
      Element e = Element::from_diagram(d, delta);
      ++total;
      if (bend_up(bend_down(e)) == e) ++good;
    }
    return std::pair(ReportBuilder::str(total), ReportBuilder::str(good));
  });

  rb.check("bending is equivariant for the point action", [&] {
    int good = 0;
    for (int trial = 0; trial < 30; ++trial) {
      int r = 2 + rng.below(2);
      Perm sigma = rng.perm(2 * r);
      Element ed = Element::from_diagram(rng.square_diagram(r), delta);
      if (star_act(sigma, ed) == bend_up(star_act_arcs(sigma, bend_down(ed)))) ++good;
    }
    return std::pair(std::string("30"), ReportBuilder::str(good));
  });

  rb.check("parabolic pairs act by two-sided composition", [&] {
    int good = 0;
    for (int trial = 0; trial < 30; ++trial) {
      int r = 2 + rng.below(3);
      Perm top = rng.perm(r), bottom = rng.perm(r);
      Element ed = Element::from_diagram(rng.square_diagram(r), delta);
      Element lhs = star_act(h_embed(top, bottom), ed);
      Element rhs = from_perm(top, delta) * ed * from_perm(perm_inverse(bottom), delta);
      if (lhs == rhs) ++good;
    }
    return std::pair(std::string("30"), ReportBuilder::str(good));
  });

  rb.check("left module axiom on random pairs", [&] {
    int good = 0;
    for (int trial = 0; trial < 40; ++trial) {
      Perm a = rng.perm(6), b = rng.perm(6);
      BrauerDiagram d = rng.square_diagram(3);
      if (star_act(perm_compose(a, b), d) == star_act(a, star_act(b, d))) ++good;
    }
    return std::pair(std::string("40"), ReportBuilder::str(good));
  });

  rb.check("identity strands generate everything under the action", [&] {
    DiagramBasis basis(3, 3);
    auto closure = module_saturate(Element::unit(3, delta), basis);
    return std::pair(ReportBuilder::str(basis.size()), ReportBuilder::str(closure.size()));
  });
  return rb.take();
}

// The all-diagram sum and its symmetrized-cap expansion.
inline Report verify_lz(const VerifyOptions& = {}) {
  ReportBuilder rb("lz");
  Rational delta = make_rational(-2);
  for (int r = 1; r <= 4; ++r) {
    rb.check("degree " + std::to_string(r) + ": weighted cap sum hits every diagram once", [&] {
      Element lz = lehrer_zhang(r, delta);
      bool ok = true;
      auto all = enumerate_diagrams(r, r);
      if (lz.term_count() != all.size()) ok = false;
      for (const BrauerDiagram& d : all)
        if (lz.coeff(d) != Rational(1)) ok = false;
      return std::pair(std::string("uniform"), std::string(ok ? "uniform" : "not uniform"));
    });
  }
  for (int r = 1; r <= 4; ++r) {
    rb.check("degree " + std::to_string(r) + ": full symmetrizer sweeps the identity orbit", [&] {
      Element lhs = star_act(symmetrizer(2 * r, delta), Element::unit(r, delta));
      Element rhs =
          lehrer_zhang(r, delta).scaled(Rational(pow_int(Int(2), r) * factorial(r)));
      return std::pair(std::string("equal"), std::string(lhs == rhs ? "equal" : "different"));
    });
  }
  return rb.take();
}

// Seed annihilator identities: dual construction routes, integrality,
// quasi-idempotency.
inline Report verify_phi(const VerifyOptions& = {}) {
  ReportBuilder rb("phi");
  for (const OspParams& p : detail::acceptance_params()) {
    std::string tag = detail::param_tag(p);
    rb.check(tag + " seed element: both routes agree and are nonzero", [&] {
      Element direct = kernel_seed(p);
      Element via_arcs = kernel_seed_via_arcs(p);
      bool ok = !direct.is_zero() && direct == via_arcs;
      return std::pair(std::string("equal, nonzero"),
                       std::string(ok ? "equal, nonzero" : "mismatch"));
    });
    rb.check(tag + " normalized seed has integral coefficients", [&] {
      kernel_seed_normalized(p);  // integrality asserted at construction
      return std::pair(std::string("integral"), std::string("integral"));
    });
    rb.check(tag + " conjugated seed: both routes agree", [&] {
      bool ok = kernel_quasi_idempotent(p) == kernel_quasi_idempotent_blocks(p);
      return std::pair(std::string("equal"), std::string(ok ? "equal" : "mismatch"));
    });
    rb.check(tag + " quasi-idempotent square constant " +
                 p.quasi_idempotent_constant().get_str(),
             [&] {
               Element qi = kernel_quasi_idempotent(p);
               bool ok = qi * qi == qi.scaled(Rational(p.quasi_idempotent_constant()));
               return std::pair(std::string("exact"), std::string(ok ? "exact" : "violated"));
             });
    rb.check(tag + " shape elements: both routes agree on degrees rc, rc+1", [&] {
      int bad = 0, total = 0;
      for (int r = p.critical_degree(); r <= p.critical_degree() + 1; ++r) {
        for (const Partition& shape : even_partitions_containing(r, p.m, p.n)) {
          ++total;
          if (!(kernel_element_for_shape(p, shape) == kernel_element_for_shape_via_arcs(p, shape)))
            ++bad;
        }
      }
      return std::pair("0 of " + std::to_string(total) + " mismatched",
                       std::to_string(bad) + " of " + std::to_string(total) + " mismatched");
    });
  }
  rb.check("(1|2) leading symmetrizer term survives", [&] {
    OspParams p(1, 1);
    Element x_half = young_x(row_tableau(p.half_critical_shape()), p.delta());
    bool ok = !(x_half * kernel_seed(p)).is_zero();
    return std::pair(std::string("nonzero"), std::string(ok ? "nonzero" : "zero"));
  });
  return rb.take();
}

// Standard-tableau bases of the annihilator, checked against the evaluation
// kernel.
inline Report verify_basis(const VerifyOptions& opt = {}) {
  ReportBuilder rb("basis");
  {
    OspParams p(1, 1);
    SuperSpace sp = make_superspace(1, 1);
    DiagramBasis coords(4, 4);
    auto basis = kernel_basis_min(p);
    rb.check_eq("(1|2) minimal basis cardinality", 14, basis.size());
    rb.check_eq("(1|2) minimal basis rank", 14, span_basis(basis, coords).size());
    rb.check("(1|2) minimal basis spans the evaluation kernel", [&] {
      bool ok = span_basis(basis, coords) == span_basis(ker_f_basis(sp, 4, opt.budget), coords);
      return std::pair(std::string("equal spans"), std::string(ok ? "equal spans" : "different"));
    });
    rb.check("(1|2) cap generators annihilate the basis", [&] {
      bool ok = true;
      for (const Element& psi : basis)
        for (int i = 1; i <= 3; ++i) {
          Element e = element_e(i, 4, p.delta());
          if (!(e * psi).is_zero() || !(psi * e).is_zero()) ok = false;
        }
      return std::pair(std::string("all zero"), std::string(ok ? "all zero" : "nonzero"));
    });
  }
  {
    OspParams p(0, 1);
    SuperSpace sp = make_superspace(0, 1);
    DiagramBasis coords(2, 2);
    auto basis = kernel_basis_min(p);
    rb.check_eq("(0|2) minimal basis cardinality", 1, basis.size());
    rb.check("(0|2) minimal basis spans the evaluation kernel", [&] {
      bool ok = span_basis(basis, coords) == span_basis(ker_f_basis(sp, 2, opt.budget), coords);
      return std::pair(std::string("equal spans"), std::string(ok ? "equal spans" : "different"));
    });
  }
  {
    OspParams p(1, 1);
    SuperSpace sp = make_superspace(1, 1);
    rb.check("(1|2) degree-5 basis: 342 elements spanning the kernel", [&] {
      DiagramBasis coords(5, 5);
      auto basis = kernel_basis(p, 5);
      auto model = span_basis(basis, coords);
      auto from_f = span_basis(ker_f_basis(sp, 5, opt.budget), coords);
      bool ok = basis.size() == 342 && model.size() == 342 && model == from_f;
      return std::pair(std::string("342, equal spans"),
                       ok ? std::string("342, equal spans")
                          : std::to_string(basis.size()) + " elements, rank " +
                                std::to_string(model.size()));
    });
  }
  {
    OspParams p(0, 1);
    SuperSpace sp = make_superspace(0, 1);
    rb.check("(0|2) degree-3 basis: 10 elements spanning the kernel", [&] {
      DiagramBasis coords(3, 3);
      auto basis = kernel_basis(p, 3);
      auto model = span_basis(basis, coords);
      auto from_f = span_basis(ker_f_basis(sp, 3, opt.budget), coords);
      bool ok = basis.size() == 10 && model.size() == 10 && model == from_f;
      return std::pair(std::string("10, equal spans"),
                       ok ? std::string("10, equal spans") : std::string("mismatch"));
    });
  }
  return rb.take();
}

// Garnir vanishing, the worked coset example, and the seed relations.
inline Report verify_garnir(const VerifyOptions& = {}) {
  ReportBuilder rb("garnir");

  rb.check("column-overfull Garnir sums kill the symmetrizer (shapes up to weight 6)", [&] {
    Rational delta(0);
    long cases = 0, failures = 0;
    for (int k = 2; k <= 6; ++k) {
      for (const Partition& lam : partitions_of(k)) {
        if (lam.part(0) < 2) continue;
        for (const Tableau& t : {row_tableau(lam), column_tableau(lam)}) {
          Element c = young_symmetrizer(t, delta);
          for (int ci = 0; ci + 1 < lam.part(0); ++ci) {
            for (int cj = ci + 1; cj < lam.part(0); ++cj) {
              std::vector<int> X = t.column(ci), Y = t.column(cj);
              for (int xs = 1; xs <= std::min<int>(3, X.size()); ++xs) {
                for (int ys = 1; ys <= std::min<int>(3, Y.size()); ++ys) {
                  if (xs + ys <= lam.column_length(ci)) continue;
                  std::vector<int> Xsub(X.begin(), X.begin() + xs);
                  std::vector<int> Ysub(Y.begin(), Y.begin() + ys);
                  ++cases;
                  Element g = from_signed_perms(k, delta,
                                                garnir_element(k, Xsub, Ysub).terms);
                  if (!(c * g).is_zero()) ++failures;
                }
              }
            }
          }
        }
      }
    }
    return std::pair("0 failures of " + std::to_string(cases),
                     std::to_string(failures) + " failures of " + std::to_string(cases));
  });

  rb.check("worked coset example on rows (1,3,4),(2,5)", [&] {
    Tableau t(Partition({3, 2}), {{1, 3, 4}, {2, 5}});
    Rational delta(0);
    Element g = from_signed_perms(5, delta, garnir_element(5, {1, 2}, {3, 5}).terms);
    Element expect(5, 5, delta);
    auto tr = [&](std::initializer_list<std::pair<int, int>> swaps, int sign) {
      Perm p = perm_identity(5);
      for (auto [a, b] : swaps) std::swap(p[a - 1], p[b - 1]);
      expect.add_term(perm_to_diagram(p, 5), Rational(sign));
    };
    tr({}, 1);
    tr({{2, 3}}, -1);
    tr({{2, 5}}, -1);
    tr({{1, 3}}, -1);
    tr({{1, 5}}, -1);
    tr({{1, 3}, {2, 5}}, 1);
    bool ok = g == expect && (young_symmetrizer(t, delta) * g).is_zero();
    return std::pair(std::string("verbatim, annihilating"),
                     std::string(ok ? "verbatim, annihilating" : "mismatch"));
  });

  rb.check("(1|2) seed relation: hat - (34)*hat - (47)*hat = 0", [&] {
    OspParams p(1, 1);
    Element hat = kernel_seed_normalized(p);
    Element diff = hat - star_act(perm_transposition(8, 2, 3), hat) -
                   star_act(perm_transposition(8, 3, 6), hat);
    return std::pair(std::string("zero"), std::string(diff.is_zero() ? "zero" : "nonzero"));
  });

  rb.check("(1|2) all overfull block pairs vanish on the seed", [&] {
    OspParams p(1, 1);
    auto types = std::vector<std::vector<int>>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
    long cases = 0, failures = 0;
    for (const auto& ta : types) {
      for (const auto& tb : types) {
        std::vector<int> ipos = standard_sequence(ta, 1, 1);
        std::vector<int> jpos = standard_sequence(tb, 1, 1);
        std::vector<int> ilab, jlab;
        for (int v : ipos) ilab.push_back(2 * v - 1);
        for (int v : jpos) jlab.push_back(2 * v);
        for (int bp = 1; bp <= 2; ++bp)
          for (int bq = 1; bq <= 2; ++bq) {
            if (ta[bp - 1] + tb[bq - 1] <= 2) continue;
            ++cases;
            if (!garnir_relation_check(p, bp, bq, ilab, jlab)) ++failures;
          }
      }
    }
    return std::pair("0 failures of " + std::to_string(cases),
                     std::to_string(failures) + " failures of " + std::to_string(cases));
  });
  return rb.take();
}

// Minimal-degree generators: the bent family generates the whole kernel as a
// two-sided ideal.
inline Report verify_generators(const VerifyOptions& opt = {}) {
  ReportBuilder rb("generators");
  {
    OspParams p(1, 1);
    SuperSpace sp = make_superspace(1, 1);
    DiagramBasis coords(4, 4);
    auto gens = kernel_generators_min(p);
    rb.check_eq("(1|2) generator count", 3, gens.size());
    rb.check("(1|2) cap generators annihilate the family", [&] {
      bool ok = true;
      for (const Element& g : gens)
        for (int i = 1; i <= 3; ++i) {
          Element e = element_e(i, 4, p.delta());
          if (!(e * g).is_zero() || !(g * e).is_zero()) ok = false;
        }
      return std::pair(std::string("all zero"), std::string(ok ? "all zero" : "nonzero"));
    });
    rb.check("(1|2) ideal closure equals the evaluation kernel (dim 14)", [&] {
      auto closure = ideal_saturate(gens, coords);
      auto kernel = span_basis(ker_f_basis(sp, 4, opt.budget), coords);
      bool ok = closure.size() == 14 && closure == kernel;
      return std::pair(std::string("dim 14, equal"),
                       ok ? std::string("dim 14, equal")
                          : "dim " + std::to_string(closure.size()));
    });
  }
  {
    OspParams p(0, 1);
    SuperSpace sp = make_superspace(0, 1);
    DiagramBasis coords(2, 2);
    auto gens = kernel_generators_min(p);
    rb.check_eq("(0|2) generator count", 1, gens.size());
    rb.check("(0|2) ideal closure equals the evaluation kernel (dim 1)", [&] {
      auto closure = ideal_saturate(gens, coords);
      auto kernel = span_basis(ker_f_basis(sp, 2, opt.budget), coords);
      bool ok = closure.size() == 1 && closure == kernel;
      return std::pair(std::string("dim 1, equal"),
                       ok ? std::string("dim 1, equal") : std::string("mismatch"));
    });
  }
  return rb.take();
}

// Degree-stability: the embedded generator family and the single module
// generator both exhaust the kernel above the critical degree.
inline Report verify_sft(const VerifyOptions& opt = {}) {
  ReportBuilder rb("sft");
  {
    OspParams p(1, 1);
    SuperSpace sp = make_superspace(1, 1);
    rb.check("(1|2) degree 5: embedded generators exhaust the kernel (dim 342)", [&] {
      DiagramBasis coords(5, 5);
      auto closure = ideal_saturate(kernel_generators(p, 5), coords);
      auto kernel = span_basis(ker_f_basis(sp, 5, opt.budget), coords);
      bool ok = closure.size() == 342 && closure == kernel;
      return std::pair(std::string("dim 342, equal"),
                       ok ? std::string("dim 342, equal")
                          : "dim " + std::to_string(closure.size()));
    });
    rb.check("(1|2) degree 5: the padded seed generates the kernel as a point-action module",
             [&] {
               DiagramBasis coords(5, 5);
               Element seed =
                   kernel_seed_normalized(p).tensor_with(Element::unit(1, p.delta()));
               auto closure = module_saturate(seed, coords);
               auto kernel = span_basis(ker_f_basis(sp, 5, opt.budget), coords);
               bool ok = closure.size() == 342 && closure == kernel;
               return std::pair(std::string("dim 342, equal"),
                                ok ? std::string("dim 342, equal")
                                   : "dim " + std::to_string(closure.size()));
             });
  }
  {
    OspParams p(0, 1);
    SuperSpace sp = make_superspace(0, 1);
    rb.check("(0|2) degree 3: the padded seed generates the kernel as a point-action module",
             [&] {
               DiagramBasis coords(3, 3);
               Element seed =
                   kernel_seed_normalized(p).tensor_with(Element::unit(1, p.delta()));
               auto closure = module_saturate(seed, coords);
               auto kernel = span_basis(ker_f_basis(sp, 3, opt.budget), coords);
               bool ok = closure.size() == 10 && closure == kernel;
               return std::pair(std::string("dim 10, equal"),
                                ok ? std::string("dim 10, equal")
                                   : "dim " + std::to_string(closure.size()));
             });
  }
  return rb.take();
}

// Single generation for superdimension (1|2n).
inline Report verify_osp12n(const VerifyOptions& opt = {}) {
  ReportBuilder rb("osp12n");
  rb.param("slow", opt.slow ? "true" : "false");
  {
    OspParams p(1, 1);
    SuperSpace sp = make_superspace(1, 1);
    Element e = osp12n_single_generator(1);
    rb.check("(1|2): the one-strand-per-block generator lies in the kernel", [&] {
      return std::pair(std::string("zero image"),
                       std::string(eval_is_zero(sp, e) ? "zero image" : "nonzero image"));
    });
    rb.check("(1|2): its ideal closure is the whole kernel (dim 14)", [&] {
      DiagramBasis coords(4, 4);
      auto closure = ideal_saturate({e}, coords);
      auto kernel = span_basis(ker_f_basis(sp, 4, opt.budget), coords);
      bool ok = closure.size() == 14 && closure == kernel;
      return std::pair(std::string("dim 14, equal"),
                       ok ? std::string("dim 14, equal")
                          : "dim " + std::to_string(closure.size()));
    });
    rb.check("(1|2): the generator is not quasi-idempotent", [&] {
      Element sq = e * e;
      bool proportional = false;
      if (!sq.is_zero() && sq.term_count() == e.term_count()) {
        Rational ratio = sq.terms().begin()->second / e.terms().begin()->second;
        proportional = e.scaled(ratio) == sq;
      }
      return std::pair(std::string("not proportional"),
                       std::string(proportional ? "proportional" : "not proportional"));
    });
  }
  for (int m = 2; m <= 3; ++m) {
    rb.check("column alternation identity on two-column shape, " + std::to_string(m) + " rows",
             [&] {
               Partition lam(std::vector<int>(m, 2));
               Rational delta(0);
               Element c = young_symmetrizer(row_tableau(lam), delta);
               Element t12 = from_perm(perm_transposition(2 * m, 0, 1), delta);
               std::vector<int> first_column;
               for (int i = 0; i < m; ++i) first_column.push_back(2 * i + 1);
               Element alt = alternating_sum_on(2 * m, first_column, delta);
               bool ok = c * t12 * alt == c.scaled(Rational(factorial(m - 1)));
               return std::pair(std::string("identity holds"),
                                std::string(ok ? "identity holds" : "violated"));
             });
  }
  if (opt.slow) {
    OspParams p(1, 2);
    rb.check("(1|4) [slow]: generator image is exactly zero on the 5^6 tensor power", [&] {
      Element e = osp12n_single_generator(2);
      bool ok = eval_is_zero_streaming(make_superspace(1, 2), e);
      return std::pair(std::string("zero image"),
                       std::string(ok ? "zero image" : "nonzero image"));
    });
    rb.check("(1|4) [slow]: ideal closure equals the tableau-model kernel (dim 132)", [&] {
      DiagramBasis coords(6, 6);
      Element e = osp12n_single_generator(2);
      auto closure = ideal_saturate({e}, coords);
      auto model = span_basis(kernel_basis_min(p), coords);
      bool ok = closure.size() == 132 && closure == model &&
                Int(132) == ker_dim_formula(1, 2, 6);
      return std::pair(std::string("dim 132, equal"),
                       ok ? std::string("dim 132, equal")
                          : "dim " + std::to_string(closure.size()));
    });
  }
  return rb.take();
}

// Classical orthogonal and symplectic specializations.
inline Report verify_classical(const VerifyOptions& opt = {}) {
  ReportBuilder rb("classical");
  for (int n = 0; n <= 2; ++n) {
    rb.check("symplectic rank " + std::to_string(2 * n) + ": normalized sum is idempotent", [&] {
      Element e = symplectic_idempotent(n);
      return std::pair(std::string("idempotent"),
                       std::string(e * e == e ? "idempotent" : "not idempotent"));
    });
  }
  for (int n = 1; n <= 2; ++n) {
    rb.check("symplectic rank " + std::to_string(2 * n) + ": idempotent generates the kernel",
             [&] {
               int rc = n + 1;
               SuperSpace sp = make_superspace(0, n);
               DiagramBasis coords(rc, rc);
               auto closure = ideal_saturate({symplectic_idempotent(n)}, coords);
               auto kernel = span_basis(ker_f_basis(sp, rc, opt.budget), coords);
               bool ok = closure == kernel;
               return std::pair(std::string("equal"), std::string(ok ? "equal" : "different"));
             });
  }
  {
    // One degree above critical for the smallest symplectic group.
    rb.check("symplectic rank 2, degree 3: embedded idempotent still generates", [&] {
      SuperSpace sp = make_superspace(0, 1);
      DiagramBasis coords(3, 3);
      Element lifted =
          symplectic_idempotent(1).tensor_with(Element::unit(1, make_rational(-2)));
      auto closure = ideal_saturate({lifted}, coords);
      auto kernel = span_basis(ker_f_basis(sp, 3, opt.budget), coords);
      bool ok = closure.size() == 10 && closure == kernel;
      return std::pair(std::string("dim 10, equal"),
                       ok ? std::string("dim 10, equal")
                          : "dim " + std::to_string(closure.size()));
    });
  }
  for (int m = 0; m <= 3; ++m) {
    rb.check("orthogonal rank " + std::to_string(m) + ": all bent antisymmetrizers idempotent",
             [&] {
               bool ok = true;
               for (int k = 0; k <= m + 1; ++k) {
                 Element ek = orthogonal_idempotent(m, k);
                 if (!(ek * ek == ek)) ok = false;
               }
               return std::pair(std::string("all idempotent"),
                                std::string(ok ? "all idempotent" : "violation"));
             });
  }
  for (int m = 1; m <= 3; ++m) {
    rb.check("orthogonal rank " + std::to_string(m) + ": middle idempotent generates the kernel",
             [&] {
               SuperSpace sp = make_superspace(m, 0);
               DiagramBasis coords(m + 1, m + 1);
               Element mid = orthogonal_idempotent(m, (m + 1) / 2);
               auto closure = ideal_saturate({mid}, coords);
               auto kernel = span_basis(ker_f_basis(sp, m + 1, opt.budget), coords);
               bool ok = closure == kernel;
               return std::pair(std::string("equal (dim " + std::to_string(kernel.size()) + ")"),
                                std::string(ok ? "equal (dim " + std::to_string(closure.size()) +
                                                     ")"
                                               : "different"));
             });
  }
  return rb.take();
}

// Comparison of the group and Lie-superalgebra endomorphism algebras.
inline Report verify_osp_end(const VerifyOptions& opt = {}) {
  ReportBuilder rb("osp-end");
  for (int r = 1; r <= 4; ++r) {
    rb.check("(1|2) degree " + std::to_string(r) + ": group and algebra centralizers agree",
             [&] {
               long g = centralizer_dim_group(1, 1, r, opt.budget);
               long a = centralizer_dim_liealg(1, 1, r, opt.budget);
               return std::pair(ReportBuilder::str(g), ReportBuilder::str(a));
             });
  }
  rb.check("(2|2) degree 3: algebra centralizer strictly larger", [&] {
    long g = centralizer_dim_group(2, 1, 3, opt.budget);
    long a = centralizer_dim_liealg(2, 1, 3, opt.budget);
    return std::pair(std::string("strict"), a > g ? std::string("strict") : std::string("equal"));
  });
  rb.check("(2|0) degree 1: algebra centralizer strictly larger", [&] {
    long g = centralizer_dim_group(2, 0, 1, opt.budget);
    long a = centralizer_dim_liealg(2, 0, 1, opt.budget);
    return std::pair(std::string("strict"), a > g ? std::string("strict") : std::string("equal"));
  });
  // Isomorphism verdicts: the diagram algebra matches the algebra
  // centralizer exactly below the stated thresholds.
  auto verdict = [&](int m, int n, int r) {
    long dim_b = double_factorial(2 * r - 1).get_si();
    long a = centralizer_dim_liealg(m, n, r, opt.budget);
    bool is_iso = a == dim_b;
    bool threshold = (m % 2 == 1) ? r < (m + 1) * (n + 1) : r < m * n + m / 2;
    return std::pair(std::string(threshold ? "isomorphic" : "proper quotient or smaller"),
                     std::string(is_iso ? "isomorphic" : "proper quotient or smaller"));
  };
  for (int r = 1; r <= 4; ++r)
    rb.check("(1|2) degree " + std::to_string(r) + ": endomorphism algebra verdict",
             [&] { return verdict(1, 1, r); });
  rb.check("(2|2) degree 3: endomorphism algebra verdict", [&] { return verdict(2, 1, 3); });
  rb.check("(2|0) degree 1: endomorphism algebra verdict", [&] { return verdict(2, 0, 1); });
  rb.check("(2|0) degree 2: endomorphism algebra verdict", [&] { return verdict(2, 0, 2); });
  rb.check("(3|0) degree 3: endomorphism algebra verdict", [&] { return verdict(3, 0, 3); });
  return rb.take();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "actions", "lz",
                                                 "phi",       "basis",   "garnir",
                                                 "generators", "sft",    "osp12n",
                                                 "classical", "osp-end"};
  return names;
}

inline Report verify_suite(const std::string& name, const VerifyOptions& opt = {}) {
  if (name == "relations") return verify_relations(opt);
  if (name == "actions") return verify_actions(opt);
  if (name == "lz") return verify_lz(opt);
  if (name == "phi") return verify_phi(opt);
  if (name == "basis") return verify_basis(opt);
  if (name == "garnir") return verify_garnir(opt);
  if (name == "generators") return verify_generators(opt);
  if (name == "sft") return verify_sft(opt);
  if (name == "osp12n") return verify_osp12n(opt);
  if (name == "classical") return verify_classical(opt);
  if (name == "osp-end") return verify_osp_end(opt);
  throw std::invalid_argument("unknown suite: " + name);
}

// Dimension table rows for degrees 1..r_max.
struct DimRow {
  int r;
  Int dim_algebra;   // (2r-1)!!
  int critical;      // r_c
  Int predicted_kernel;
};

inline std::vector<DimRow> dimension_table(int m, int n, int r_max) {
  std::vector<DimRow> rows;
  for (int r = 1; r <= r_max; ++r)
    rows.push_back({r, double_factorial(2 * r - 1), (m + 1) * (n + 1), ker_dim_formula(m, n, r)});
  return rows;
}

inline Report cmd_dims(int m, int n, int r_max) {
  ReportBuilder rb("dims");
  rb.param("m", std::to_string(m));
  rb.param("n", std::to_string(n));
  rb.param("r_max", std::to_string(r_max));
  for (const DimRow& row : dimension_table(m, n, r_max)) {
    rb.check("r=" + std::to_string(row.r) + " dim=" + row.dim_algebra.get_str() +
                 " rc=" + std::to_string(row.critical) + " ker=" + row.predicted_kernel.get_str(),
             [&] {
               bool zero = row.predicted_kernel == 0;
               bool below = row.r < row.critical;
               return std::pair(std::string("kernel vanishes iff below critical degree"),
                                std::string(zero == below
                                                ? "kernel vanishes iff below critical degree"
                                                : "threshold violated"));
             });
  }
  return rb.take();
}

inline Report cmd_kernel_rank(int m, int n, int r, long budget = default_eval_budget()) {
  ReportBuilder rb("kernel-rank");
  rb.param("m", std::to_string(m));
  rb.param("n", std::to_string(n));
  rb.param("r", std::to_string(r));
  rb.param("delta", std::to_string(m - 2 * n));
  rb.check("rank + predicted kernel = diagram count; kernel vanishes iff below critical degree",
           [&] {
             SuperSpace sp = make_superspace(m, n);
             EvalRank er = eval_rank(sp, r, budget);
             Int predicted = ker_dim_formula(m, n, r);
             Int dim_b = double_factorial(2 * r - 1);
             bool threshold = (er.nullity == 0) == (r < (m + 1) * (n + 1));
             Int expected_rank = dim_b - predicted;
             std::string got = "rank " + std::to_string(er.rank) + ", nullity " +
                               std::to_string(er.nullity) +
                               (threshold ? ", threshold consistent" : ", threshold violated");
             return std::pair(std::string("rank " + expected_rank.get_str() + ", nullity " +
                                          predicted.get_str() + ", threshold consistent"),
                              got);
           });
  return rb.take();
}

}  // namespace brauer
