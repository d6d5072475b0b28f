#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tiltkit/alcove.hpp"
#include "tiltkit/error.hpp"

using namespace tiltkit;
using fx::s0;
using fx::s1;

namespace {

std::set<IntVec> brute_domain(const RootDatum& d, Int ell, Int radius, bool dot_shift) {
  std::set<IntVec> out;
  for (const auto& mu : oracle::box_points(d.rank(), radius)) {
    IntVec v = dot_shift ? add(scale(2, mu), d.two_rho_vee()) : scale(2, mu);
    bool ok = true;
    for (const auto& a : d.positive_roots()) {
      Int p = dot(v, a);
      if (p < 0 || p > 2 * ell) ok = false;
    }
    if (ok) out.insert(mu);
  }
  return out;
}

}  // namespace

TEST_SUITE("alcove") {
  TEST_CASE("affine root evaluation") {
    auto d = fx::datum("A1");
    CHECK(eval_affine_root(*d, AffineRoot{0, 1}, QPoint::integral({3}), 4) == Rational(7));
    CHECK(eval_affine_root(*d, AffineRoot{0, 0}, QPoint{{1}, 2}, 4) == Rational(1, 2));
    CHECK(eval_affine_root(*d, AffineRoot{1, 1}, QPoint::integral({3}), 4) == Rational(1));
  }

  TEST_CASE("reflections match the shifted action of affine reflections") {
    std::mt19937 rng(5);
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
      auto g = fx::group(t);
      const auto& d = g->datum();
      std::uniform_int_distribution<int> root(0, static_cast<int>(d.num_roots()) - 1);
      std::uniform_int_distribution<Int> m(-3, 3), c(-8, 8);
      for (int trial = 0; trial < 50; ++trial) {
        AffineRoot a{root(rng), m(rng)};
        IntVec v(d.rank());
        for (auto& x : v) x = c(rng);
        QPoint r = reflect(d, a, QPoint::integral(v), 3);
        CHECK(r == QPoint::integral(g->act(g->affine_reflection(a.root_index, a.m), v, 3, ActionMode::cdot)));
        CHECK(reflect(d, a, r, 3) == QPoint::integral(v));
        // the reflection negates the affine root
        CHECK(eval_affine_root(d, a, r, 3) == -eval_affine_root(d, a, QPoint::integral(v), 3));
      }
    }
    auto g = fx::group("A1");
    for (int s = 0; s < g->num_generators(); ++s) {
      auto [ri, m] = g->simple_reflections().affine_roots[s];
      for (Int v = -5; v <= 5; ++v)
        CHECK(reflect(g->datum(), AffineRoot{ri, m}, QPoint::integral({v}), 3) ==
              QPoint::integral(g->act(g->generator(s), IntVec{v}, 3, ActionMode::cdot)));
    }
  }

  TEST_CASE("closed fundamental alcove") {
    auto d = fx::datum("A1");
    CHECK(in_closed_fundamental_alcove(*d, QPoint::integral({0}), 3));
    CHECK(in_closed_fundamental_alcove(*d, QPoint::integral({-3}), 3));
    CHECK(in_closed_fundamental_alcove(*d, QPoint{{-5}, 2}, 3));
    CHECK_FALSE(in_closed_fundamental_alcove(*d, QPoint::integral({1}), 3));
    CHECK_FALSE(in_closed_fundamental_alcove(*d, QPoint{{-7}, 2}, 3));
    auto a2 = fx::datum("A2");
    CHECK(in_closed_fundamental_alcove(*a2, QPoint::integral({-1, -2}), 3));
    CHECK_FALSE(in_closed_fundamental_alcove(*a2, QPoint::integral({-2, -2}), 3));
  }

  TEST_CASE("fundamental domains in A1") {
    auto d = fx::datum("A1");
    CHECK(dot_fundamental_reps(*d, 3) == std::vector<IntVec>{{-1}, {0}, {1}, {2}});
    CHECK(box_fundamental_reps(*d, 3) == std::vector<IntVec>{{0}, {1}, {2}, {3}});
  }

  TEST_CASE("fundamental domains agree with a lattice scan") {
    for (const char* t : {"A2", "B2", "G2", "A1xA1"})
      for (auto iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
        auto d = fx::datum(t, iso);
        if (!d->rho_vee_integral()) continue;
        for (Int ell : {1, 2, 3, 5}) {
          auto dot_reps = dot_fundamental_reps(*d, ell);
          auto box_reps = box_fundamental_reps(*d, ell);
          CAPTURE(t);
          CAPTURE(ell);
          CHECK(std::set<IntVec>(dot_reps.begin(), dot_reps.end()) == brute_domain(*d, ell, 4 * ell + 4, true));
          CHECK(std::set<IntVec>(box_reps.begin(), box_reps.end()) == brute_domain(*d, ell, 4 * ell + 4, false));
        }
      }
  }

  TEST_CASE("projection examples") {
    auto g = fx::group("A1");
    CHECK(project_to_fundamental(*g, IntVec{4}, 3, ActionMode::dot).representative == IntVec{0});
    CHECK(project_to_fundamental(*g, IntVec{5}, 3, ActionMode::dot).representative == IntVec{-1});
    CHECK(project_to_fundamental(*g, IntVec{11}, 3, ActionMode::dot).representative == IntVec{-1});
    CHECK(project_to_fundamental(*g, IntVec{-3}, 3, ActionMode::dot).representative == IntVec{1});
    CHECK(project_to_fundamental(*g, IntVec{5}, 3, ActionMode::box).representative == IntVec{1});
    CHECK(project_to_fundamental(*g, IntVec{-1}, 3, ActionMode::box).representative == IntVec{1});
    CHECK(project_to_fundamental(*g, IntVec{5}, 3, ActionMode::cdot).representative == IntVec{-1});
    CHECK_THROWS_AS(project_to_fundamental(*g, IntVec{1, 2}, 3, ActionMode::dot), ValidationError);
    CHECK_THROWS_AS(project_to_fundamental(*g, IntVec{1}, 0, ActionMode::dot), ValidationError);
  }

  TEST_CASE("projection classes are the orbits") {
    for (const char* t : {"A1", "A2", "B2", "G2"}) {
      auto g = fx::group(t);
      const Int inner = g->datum().rank() == 1 ? 20 : 5;
      const Int outer = g->datum().rank() == 1 ? 40 : 12;
      for (Int ell : {2, 3})
        for (auto mode : {ActionMode::dot, ActionMode::box, ActionMode::cdot}) {
          auto orbits = oracle::orbit_partition(*g, inner, outer, ell, mode);
          std::map<IntVec, IntVec> reps;
          auto fund = mode == ActionMode::dot ? dot_fundamental_reps(g->datum(), ell)
                                              : box_fundamental_reps(g->datum(), ell);
          std::set<IntVec> fund_set(fund.begin(), fund.end());
          for (const auto& [mu, cls] : orbits) {
            Projection p = project_to_fundamental(*g, mu, ell, mode);
            CHECK(g->act(p.witness, p.representative, ell, mode) == mu);
            CHECK(fund_set.count(mode == ActionMode::cdot ? negate(p.representative) : p.representative) == 1);
            reps[mu] = p.representative;
          }
          // union-find classes can only be finer than the true orbits, and the
          // witnesses already place each point in the orbit of its representative
          std::map<int, IntVec> class_rep;
          for (const auto& [mu, cls] : orbits) CHECK(class_rep.emplace(cls, reps[mu]).first->second == reps[mu]);
          if (g->datum().rank() == 1 || std::string(t) == "A2") CHECK(oracle::same_partition(orbits, reps));
        }
    }
  }

  TEST_CASE("facets in A1") {
    auto g = fx::group("A1");
    auto f0 = facet_stabilizer(*g, IntVec{0}, 3);
    CHECK(f0.kind == FacetKind::thin);
    CHECK(f0.stabilizer_generators == std::vector<int>{s1});
    CHECK(f0.stabilizer_order == 2);
    CHECK(f0.vanishing == std::vector<AffineRoot>{{0, 0}});
    auto f1 = facet_stabilizer(*g, IntVec{1}, 3);
    CHECK(f1.kind == FacetKind::full);
    CHECK(f1.stabilizer_order == 1);
    CHECK(f1.vanishing.empty());
    auto f3 = facet_stabilizer(*g, IntVec{3}, 3);
    CHECK(f3.kind == FacetKind::partial);
    CHECK(f3.stabilizer_generators == std::vector<int>{s0});
    CHECK(f3.base_point == QPoint::integral({-3}));
    CHECK_THROWS_AS(facet_stabilizer(*g, IntVec{4}, 3), ValidationError);
    CHECK(to_string(FacetKind::partial) == "partial");
    CHECK(parse_facet_kind("thin") == FacetKind::thin);
  }

  TEST_CASE("facet stabilizers match a brute-force count") {
    for (const char* t : {"A2", "B2", "G2"}) {
      auto g = fx::group(t);
      // the longest element of a finite parabolic here has length at most 6
      auto ball = g->enumerate(6);
      for (Int ell : {2, 4})
        for (const auto& lam : box_fundamental_reps(g->datum(), ell)) {
          auto f = facet_stabilizer(*g, lam, ell);
          IntVec base = negate(lam);
          std::size_t fixers = 0;
          for (const auto& x : ball) fixers += g->act(x, base, ell, ActionMode::cdot) == base;
          CHECK(f.stabilizer_order == fixers);
          for (const auto& a : f.vanishing) CHECK(eval_affine_root(g->datum(), a, f.base_point, ell) == 0);
        }
    }
  }
}
