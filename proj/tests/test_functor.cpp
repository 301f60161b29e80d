#include <catch2/catch.hpp>

#include "brauer/centralizer.hpp"
#include "brauer/kernel.hpp"
#include "test_rng.hpp"

using namespace brauer;

namespace {

BrauerDiagram random_diagram(TestRng& rng, int k, int l) {
  std::vector<int> verts(k + l);
  for (int i = 0; i < k + l; ++i) verts[i] = i;
  for (int i = k + l - 1; i > 0; --i) std::swap(verts[i], verts[rng.below(i + 1)]);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k + l; i += 2) edges.emplace_back(verts[i], verts[i + 1]);
  return BrauerDiagram(k, l, edges);
}

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.row_count(), b.col_count());
  std::vector<std::vector<std::pair<int, Rational>>> brows(b.row_count());
  for (const auto& [rc, v] : b.entries()) brows[rc.first].emplace_back(rc.second, v);
  for (const auto& [rc, v] : a.entries())
    for (const auto& [c2, v2] : brows[rc.second]) out.add(rc.first, c2, v * v2);
  return out;
}

bool matrix_equal(const SparseMatrix& a, const SparseMatrix& b) {
  return a.row_count() == b.row_count() && a.col_count() == b.col_count() &&
         a.entries() == b.entries();
}

}  // namespace

TEST_CASE("superspace construction") {
  SuperSpace sp = make_superspace(1, 0);
  CHECK(sp.gram == std::vector<std::vector<int>>{{1}});

  SuperSpace sp01 = make_superspace(0, 1);
  CHECK(sp01.gram == std::vector<std::vector<int>>{{0, 1}, {-1, 0}});

  SuperSpace sp11 = make_superspace(1, 1);
  CHECK(sp11.dim == 3);
  CHECK(sp11.parity == std::vector<int>{0, 1, 1});
  CHECK(sp11.gram[0][0] == 1);
  CHECK(sp11.gram[1][2] == 1);
  CHECK(sp11.gram[2][1] == -1);
}

TEST_CASE("elementary evaluations") {
  SuperSpace sp = make_superspace(1, 1);

  // Crossing squares to the identity and picks up a sign on odd (x) odd.
  SparseMatrix tau = eval_elementary(sp, Elementary::Crossing);
  CHECK(matrix_equal(matmul(tau, tau), eval_diagram(sp, identity_diagram(2))));
  // f (x) f with f the first odd vector: index 1*3+1 = 4.
  CHECK(tau.get(4, 4) == Rational(-1));

  // Cap after cup is multiplication by m - 2n.
  SparseMatrix cap = eval_elementary(sp, Elementary::Cap);
  SparseMatrix cup = eval_elementary(sp, Elementary::Cup);
  SparseMatrix capcup = matmul(cap, cup);
  CHECK(capcup.get(0, 0) == Rational(sp.m - 2 * sp.n));

  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      SuperSpace s = make_superspace(m, n);
      SparseMatrix cc = matmul(eval_elementary(s, Elementary::Cap), eval_elementary(s, Elementary::Cup));
      CHECK(cc.get(0, 0) == Rational(m - 2 * n));
    }
}

TEST_CASE("normal form factorization round trip") {
  for (const BrauerDiagram& d : enumerate_diagrams(4, 4))
    CHECK(normal_form_recompose(normal_form_factorize(d)) == d);
  for (const BrauerDiagram& d : enumerate_diagrams(3, 1))
    CHECK(normal_form_recompose(normal_form_factorize(d)) == d);
  for (const BrauerDiagram& d : enumerate_diagrams(0, 4))
    CHECK(normal_form_recompose(normal_form_factorize(d)) == d);

  NormalForm nf = normal_form_factorize(perm_to_diagram(Perm{2, 0, 1}, 3));
  CHECK(nf.through == 3);
  CHECK(nf.caps == 0);
  CHECK(nf.cups == 0);

  NormalForm nf2 = normal_form_factorize(a_hat_diagram(1));
  CHECK(nf2.caps == 1);
  CHECK(nf2.through == 0);
}

TEST_CASE("evaluation is functorial on composition and tensor") {
  SuperSpace sp = make_superspace(1, 1);
  TestRng rng(59);
  int composed = 0;
  for (int trial = 0; composed < 200; ++trial) {
    int l = 1 + rng.below(3);
    int p = rng.below(4);
    int k = rng.below(4);
    if ((l + p) % 2 || (l + k) % 2) continue;
    BrauerDiagram d1 = random_diagram(rng, l, p);
    BrauerDiagram d2 = random_diagram(rng, k, l);
    auto res = compose(d1, d2);
    SparseMatrix lhs = eval_diagram(sp, res.diagram);
    Rational weight = pow_rational(make_rational(sp.m - 2 * sp.n), res.loop_count);
    SparseMatrix rhs = matmul(eval_diagram(sp, d1), eval_diagram(sp, d2));
    SparseMatrix scaled(lhs.row_count(), lhs.col_count());
    for (const auto& [rc, v] : lhs.entries()) scaled.set(rc.first, rc.second, v * weight);
    CHECK(matrix_equal(scaled, rhs));
    ++composed;
  }

  // Tensor functoriality: eval(d1 (x) d2) = eval(d1) (x) eval(d2).
  for (int trial = 0; trial < 20; ++trial) {
    BrauerDiagram d1 = random_diagram(rng, 1, 1);
    BrauerDiagram d2 = random_diagram(rng, 2, 2);
    SparseMatrix a = eval_diagram(sp, d1);
    SparseMatrix b = eval_diagram(sp, d2);
    SparseMatrix t = eval_diagram(sp, tensor(d1, d2));
    long rows_b = b.row_count(), cols_b = b.col_count();
    for (const auto& [rc, v] : a.entries())
      for (const auto& [rc2, v2] : b.entries()) {
        long out = rc.first * rows_b + rc2.first;
        long in = rc.second * cols_b + rc2.second;
        CHECK(t.get(static_cast<int>(out), static_cast<int>(in)) == v * v2);
      }
    CHECK(t.nonzero_count() == a.nonzero_count() * b.nonzero_count());
  }
}

TEST_CASE("evaluation matches the algebra by squaring a cap-cup generator") {
  SuperSpace sp = make_superspace(0, 1);
  SparseMatrix e1 = eval_diagram(sp, generator_e(1, 2));
  SparseMatrix sq = matmul(e1, e1);
  // e^2 = delta e with delta = -2.
  SparseMatrix scaled(e1.row_count(), e1.col_count());
  for (const auto& [rc, v] : e1.entries()) scaled.set(rc.first, rc.second, v * Rational(-2));
  CHECK(matrix_equal(sq, scaled));
}

TEST_CASE("evaluation kills the quasi-idempotent") {
  OspParams p(1, 1);
  SuperSpace sp = make_superspace(1, 1);
  CHECK(eval_is_zero(sp, kernel_quasi_idempotent(p)));
  CHECK(eval_is_zero(sp, kernel_seed(p)));
  CHECK_FALSE(eval_is_zero(sp, lehrer_zhang(4, p.delta())));

  for (const Element& g : kernel_generators_min(p)) {
    CHECK(eval_is_zero(sp, g));
    CHECK(eval_is_zero_streaming(sp, g));
  }
}

TEST_CASE("f_matrix shapes") {
  CHECK(f_matrix(make_superspace(1, 1), 4).row_count() == 105);
  CHECK(f_matrix(make_superspace(1, 1), 4).col_count() == 6561);
  CHECK(f_matrix(make_superspace(0, 1), 2).col_count() == 16);
  CHECK(f_matrix(make_superspace(1, 0), 2).col_count() == 1);
  CHECK_THROWS_AS(f_matrix(make_superspace(1, 1), 8), BudgetExceeded);
}

TEST_CASE("ranks and kernels in small degrees") {
  SuperSpace sp11 = make_superspace(1, 1);
  CHECK(rank_f(sp11, 3) == 15);

  EvalRank er = eval_rank(sp11, 4);
  CHECK(er.rank == 91);
  CHECK(er.nullity == 14);

  SuperSpace sp01 = make_superspace(0, 1);
  EvalRank er01 = eval_rank(sp01, 2);
  CHECK(er01.rank == 2);
  CHECK(er01.nullity == 1);

  // Kernel elements evaluate to zero.
  auto kb = ker_f_basis(sp01, 2);
  REQUIRE(kb.size() == 1);
  CHECK(eval_is_zero(sp01, kb[0]));

  SuperSpace sp10 = make_superspace(1, 0);
  CHECK(rank_f(sp10, 2) == 1);
  CHECK(rank_f(sp10, 3) == 1);
}

TEST_CASE("kernel basis from elements spans the evaluation kernel") {
  OspParams p(1, 1);
  SuperSpace sp = make_superspace(1, 1);
  DiagramBasis coords(4, 4);
  auto from_f = span_basis(ker_f_basis(sp, 4), coords);
  auto from_tableaux = span_basis(kernel_basis_min(p), coords);
  CHECK(from_f == from_tableaux);
}

TEST_CASE("orthosymplectic algebra dimensions") {
  CHECK(osp_dimension(make_superspace(0, 1)) == 3);
  CHECK(osp_dimension(make_superspace(1, 1)) == 5);
  CHECK(osp_dimension(make_superspace(2, 0)) == 1);
  CHECK(osp_dimension(make_superspace(2, 1)) == 8);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 2; ++n)
      CHECK(osp_dimension(make_superspace(m, n)) == m * (m - 1) / 2 + n * (2 * n + 1) + 2 * m * n);
}

TEST_CASE("algebra elements annihilate the elementary invariants") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {0, 2}, {2, 1}}) {
    SuperSpace sp = make_superspace(m, n);
    OspBasis basis = osp_basis(sp);
    SparseMatrix cup = eval_elementary(sp, Elementary::Cup);
    SparseMatrix cap = eval_elementary(sp, Elementary::Cap);
    SparseMatrix tau = eval_elementary(sp, Elementary::Crossing);
    for (int x_parity = 0; x_parity <= 1; ++x_parity) {
      for (const auto& X : (x_parity == 0 ? basis.even : basis.odd)) {
        auto act = brauer::detail::tensor_action(sp, X, x_parity, 2);
        SparseMatrix rho2(sp.dim * sp.dim, sp.dim * sp.dim);
        for (long c = 0; c < sp.dim * sp.dim; ++c)
          for (auto [row, val] : act[c]) rho2.add(static_cast<int>(row), static_cast<int>(c), Rational(val));
        CHECK(matmul(rho2, cup).nonzero_count() == 0);
        // X . cap = -cap rho_2(X) = 0.
        CHECK(matmul(cap, rho2).nonzero_count() == 0);
        // X . tau = rho_2(X) tau - tau rho_2(X) = 0 (tau is parity even).
        SparseMatrix lhs = matmul(rho2, tau);
        SparseMatrix rhs = matmul(tau, rho2);
        CHECK(matrix_equal(lhs, rhs));
      }
    }
  }
}

TEST_CASE("centralizer dimensions cross-check the ranks") {
  CHECK(centralizer_dim_group(0, 1, 2) == 2);
  CHECK(centralizer_dim_group(1, 0, 2) == 1);
  CHECK(centralizer_dim_group(1, 1, 2) == 3);
  CHECK(centralizer_dim_group(1, 1, 3) == 15);
  CHECK(centralizer_dim_group(2, 0, 3) == rank_f(make_superspace(2, 0), 3));
  CHECK(centralizer_dim_group(0, 2, 3) == rank_f(make_superspace(0, 2), 3));

  // The algebra-only centralizer can be strictly larger.
  CHECK(centralizer_dim_liealg(2, 0, 1) == 2);
  CHECK(centralizer_dim_group(2, 0, 1) == 1);
  CHECK(centralizer_dim_liealg(1, 1, 2) == 3);
}
