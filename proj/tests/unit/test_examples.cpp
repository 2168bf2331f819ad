#include "doctest.h"
#include "json.hpp"
#include "parsum/cylinder.hpp"
#include "parsum/fixed.hpp"
#include "parsum/suites.hpp"

using namespace parsum;

TEST_CASE("structure map of a swapping injection reverses two entries") {
  Phi<SymCat> phi;
  auto x = phi.make({{1, 1}, {2, 1}});
  ApRow u = ApRow::finite_permutation({{1, 5}, {5, 1}, {2, 3}, {3, 2}});
  CHECK(phi.u_circ(u, x).f.perm == Perm({2, 1}));
  CHECK(phi.u_circ(ApRow::affine(2, 0), x).f.perm == Perm({1, 2}));
  CHECK(phi.u_circ_inverse(u, x) == u_circ_inverse_generic(phi, u, x));
}

TEST_CASE("Phi drops unit entries and Phi(F) drops entries sent to the unit") {
  Phi<FreePerm> words;
  auto x = words.make({{1, {}}, {2, {1, 1}}, {4, {2}}});
  CHECK(words.support(x) == FinSet{2, 4});
  auto F = phi_functor(words, delete_letter(1));
  CHECK(words.support(F.obj(x)) == FinSet{4});
}

TEST_CASE("Sigma braiding squares to the identity on a small example") {
  Phi<SymCat> phi;
  Sigma<Phi<SymCat>> sigma(phi);
  Sigma<Phi<SymCat>>::Object x{phi.make({{1, 2}})}, y{phi.make({{1, 1}}), phi.make({{2, 1}})};
  auto tau = sigma.braiding(x, y);
  CHECK(sigma.cod(tau) == sigma.tensor_obj(y, x));
  CHECK(sigma.compose(sigma.braiding(y, x), tau) == sigma.identity(sigma.tensor_obj(x, y)));
  // arity mismatch
  CHECK_THROWS_AS(sigma.make_morphism(canonical_interleave(1), phi.identity(sigma.realize(y)),
                                      canonical_interleave(1), y, y),
                  Error);
}

TEST_CASE("T preimages are reached exactly") {
  Phi<SymCat> phi;
  TFunctor<SymCat> t{Sigma<Phi<SymCat>>(phi)};
  CHECK(t.obj(t.object_preimage(3)) == 3u);
  CHECK(t.obj(t.object_preimage(0)) == 0u);
}

TEST_CASE("S on the empty object and the singleton preimage") {
  Phi<SymCat> p;
  Theta<Phi<SymCat>> theta(p);
  SFunctor<Phi<SymCat>> S{theta};
  CHECK(S.obj(theta.make_theta(FinSet{}, {})) == p.zero());
  auto y = p.make({{2, 1}, {3, 2}});
  auto pre = S.preimage(y);
  CHECK(theta.support(pre) == FinSet{1});
  // row 1 of the default global injection is the odd numbers
  CHECK(S.obj(pre) == p.act_obj(ApRow::affine(2, -1), y));
  CHECK(p.compose(S.essential_iso_inverse(y), S.essential_iso(y)) == p.identity(S.obj(pre)));
}

TEST_CASE("inclusion iso for an entry that is a 2-tuple") {
  Phi<SymCat> p;
  Theta<Phi<SymCat>> theta(p);
  ThetaInclusion<Phi<SymCat>> incl{theta};
  Phi<Sigma<Phi<SymCat>>>::Object z = theta.make({{3, {p.make({{1, 1}}), p.make({{1, 2}})}}});
  auto pre = incl.preimage(z);
  CHECK(theta.contains(pre));
  // canonical_interleave(2) sends position 1 of the two entries to 1 and 2
  CHECK(theta.entries_of(pre) == std::vector<Phi<SymCat>::Object>{p.make({{1, 1}, {2, 2}})});
  auto iso = incl.iso(z, false);
  CHECK(iso.src == pre);
  CHECK(iso.dst == z);
  CHECK(theta.compose(incl.iso(z, true), iso) == theta.identity(pre));
}

TEST_CASE("cyclic embedding for q = 3 and q = 6") {
  CyclicEmbedding g3(3);
  CHECK(g3.block_size() == 4);
  CHECK(g3.generator()(1) == 2);
  CHECK(g3.generator()(2) == 3);
  CHECK(g3.generator()(3) == 1);
  CHECK(g3.generator()(4) == 4);
  CHECK(g3.generator()(5) == 6);
  CHECK(equal(CyclicEmbedding(1).generator(), ApRow::identity()));
  // 12 = 6 + 3 + 2 + 1 points per block
  CyclicEmbedding g6(6);
  CHECK(g6.block_size() == 12);
  CHECK(g6.orbit(7) == FinSet{7, 8, 9});
  CHECK(g6.orbit(12) == FinSet{12});
  CHECK(g6.orbits_of_size(2, 2) == std::vector<FinSet>{FinSet{10, 11}, FinSet{22, 23}});
  CHECK_FALSE(g6.equivariant_bijection(1, 7));
}

TEST_CASE("Pi objects, fixedness and a_G") {
  Phi<SymCat> p;
  CyclicEmbedding g(3);
  CHECK(pi_obj(p, 1, FinSet{}) == p.zero());
  CHECK(pi_obj(p, 0, FinSet{1, 2, 3}) == p.zero());
  auto pi = pi_obj(p, 1, FinSet{1, 2, 3});
  CHECK(p.support(pi) == FinSet{1, 2, 3});
  CHECK(is_fixed_obj(p, g, pi));
  CHECK_FALSE(is_fixed_obj(p, g, pi_obj(p, 1, FinSet{1, 2})));
  CHECK(a_G<SymCat>(p, {}) == p.zero());
  CHECK_THROWS_AS(a_G<SymCat>(p, {{1, FinSet{1, 2, 3}}, {2, FinSet{1, 2, 3}}}), Error);

  auto h = homomorphism_iso(p, 1, FinSet{1, 2, 3}, 2, FinSet{5, 6, 7}, *g.equivariant_bijection(5, 1));
  CHECK(h.dst == pi_obj(p, 3, FinSet{1, 2, 3}));
  CHECK(is_fixed_mor(p, g, h));
}

TEST_CASE("path components of small sequences follow the total") {
  Phi<SymCat> p;
  std::vector<Phi<SymCat>::Object> xs;
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) xs.push_back(p.make({{1, a}, {2, b}}));
  auto comps = path_components(xs.size(), [&](std::size_t i, std::size_t j) { return hom_nonempty(p, xs[i], xs[j]); });
  // totals 0..4
  CHECK(comps.size() == 5);
  CHECK(comps[0] == std::vector<std::size_t>{0});
  CHECK(comps[2] == std::vector<std::size_t>{2, 4, 6});
}

TEST_CASE("reports are deterministic and well formed") {
  SuiteConfig config;
  config.cases = 10;
  config.seed = 7;
  auto a = run_suites({"sigma-perm-axioms", "fixed-points"}, config).json();
  auto b = run_suites({"sigma-perm-axioms", "fixed-points"}, config).json();
  CHECK(a == b);
  auto doc = nlohmann::json::parse(a);
  CHECK(doc["format"] == "parsum-verification-report");
  CHECK(doc["suites"].size() == 2);
  CHECK(doc["summary"]["failed"] == 0);
  // a suite's results do not depend on which other suites run
  auto alone = nlohmann::json::parse(run_suites({"fixed-points"}, config).json());
  CHECK(alone["suites"][0] == doc["suites"][1]);
}

TEST_CASE("bad selections are rejected") {
  CHECK_THROWS_AS(run_suites({"no-such-suite"}, SuiteConfig{}), Error);
  SuiteConfig bad;
  bad.instance = "groups";
  CHECK_THROWS_AS(run_suites({"all"}, bad), Error);
  CHECK_THROWS_AS(run_demo("no-such-demo"), Error);
  for (const auto& name : demo_names()) CHECK_FALSE(run_demo(name).empty());
}
