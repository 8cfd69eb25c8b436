#include <doctest.h>

#include "qalg/embedding.hpp"

using namespace qalg;

TEST_SUITE("embedding") {

TEST_CASE("grid index maps") {
  CHECK(index_to_grid(1, 3, 2) == std::pair{1, 1});
  CHECK(index_to_grid(5, 3, 2) == std::pair{3, 1});
  CHECK(grid_to_index(2, 2, 2) == 4);
  CHECK(index_to_grid(4, 2, 2) == std::pair{2, 2});
  for (int k1 = 1; k1 <= 6; ++k1) {
    for (int k2 = 1; k2 <= 6; ++k2) {
      const IndexMap map(k1, k2);
      for (int i = 1; i <= k1 * k2; ++i) {
        const auto [mu, s] = map.to_grid(i);
        CHECK(map.to_flat(mu, s) == i);
      }
    }
  }
  CHECK_THROWS(index_to_grid(7, 3, 2));
  CHECK_THROWS(grid_to_index(1, 3, 2));
}

TEST_CASE("three routes agree") {
  for (auto [k1, k2] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {1, 4}, {3, 1}}) {
    const RootConfig root = RootConfig::for_embedding(k1, k2);
    for (int m = 0; m <= 2; ++m) {
      const Sector s = Sector::make(k1 * k2, m, root);
      const EmbeddedSet boson = embed_boson_route(k1, k2, s);
      CHECK(route_differences(boson, embed_delta_route(k1, k2, s)).empty());
      CHECK(route_differences(boson, embed_weyl_route(k1, k2, s)).empty());
      CHECK(route_differences(boson, embed_weyl_route(k1, k2, s, LambdaConvention::corrected, true)).empty());
    }
  }
}

TEST_CASE("family sizes and degenerate factors") {
  const RootConfig root = RootConfig::for_embedding(1, 4);
  const EmbeddedSet set = embed_boson_route(1, 4, Sector::make(4, 1, root));
  CHECK(set.x_raise.empty());
  CHECK(set.h_mu.empty());
  CHECK(set.z_raise.size() == 3);

  const RootConfig r22 = RootConfig::for_embedding(2, 2);
  const EmbeddedSet vac = embed_boson_route(2, 2, Sector::make(4, 0, r22));
  CHECK(vac.x_raise[0].is_zero());
  CHECK(vac.z_lower[0].is_zero());
  CHECK(vac.x_raise[0].domain().dim() == 1);
}

TEST_CASE("Cartan elements are sums of flat Cartan elements") {
  const RootConfig root = RootConfig::for_embedding(3, 2);
  const Sector s = Sector::make(6, 2, root);
  const EmbeddedSet set = embed_boson_route(3, 2, s);
  const GeneratorSet g = cartan_weyl(s);
  // HZ^s = sum over mu of H((mu-1)k2+s); HX_mu = sum over s of H(i, i+k2).
  CHECK(set.h_s[0] == g.chevalley_cartan(1) + g.chevalley_cartan(3) + g.chevalley_cartan(5));
  CHECK(set.h_mu[0] == g.cartan(1, 3) + g.cartan(2, 4));
  CHECK(set.h_mu[1] == g.cartan(3, 5) + g.cartan(4, 6));
}

TEST_CASE("printed Lambda disagrees with the boson route") {
  const RootConfig root = RootConfig::for_embedding(2, 2);
  const Sector s = Sector::make(4, 2, root);
  CHECK_FALSE(route_differences(embed_boson_route(2, 2, s), embed_weyl_route(2, 2, s, LambdaConvention::printed))
                  .empty());
  CHECK_THROWS_AS(embed_weyl_route(2, 2, Sector::make(4, 1, RootConfig(2))), RootError);
}

TEST_CASE("classical limit") {
  const RootConfig root = RootConfig::for_embedding(2, 2);
  const Sector s = Sector::make(4, 1, root);
  const ClassicalEmbeddedSet limit = classical_limit(embed_boson_route(2, 2, s));
  CHECK(route_differences(limit, classical_display(2, 2, s)).empty());
  CHECK(commutator(limit.x_raise[0], limit.x_lower[0]) == limit.h_mu[0]);
  CHECK(commutator(limit.x_raise[0], limit.z_lower[0]).is_zero());

  // X+1 at q = 1 is a+(1)a-(3) + a+(2)a-(4).
  const Sector& sec = s;
  SparseOperator<Rational> hops(sec, sec);
  for (auto [to, from] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}}) {
    for (std::size_t j = 0; j < sec.dim(); ++j) {
      Occupation occ = sec.state(j);
      if (occ[from - 1] == 0) continue;
      const int c = occ[from - 1];
      --occ[from - 1];
      ++occ[to - 1];
      hops.add_to(*sec.index_of(occ), j, Rational(c));
    }
  }
  CHECK(limit.x_raise[0] == hops);
}

TEST_CASE("synthesized embedded generator sets") {
  const RootConfig root = RootConfig::for_embedding(3, 2);
  const Sector s = Sector::make(6, 2, root);
  const auto [x, z] = embedded_generator_sets(embed_boson_route(3, 2, s));
  CHECK(x.n() == 3);
  CHECK(z.n() == 2);
  CHECK(x.raising(1, 3) == q_commutator(x.raising(1, 2), x.raising(2, 3), QExponent(1)));
}

}
