#include <algorithm>

#include "doctest.h"
#include "parsum/cylinder.hpp"
#include "parsum/fault.hpp"
#include "parsum/laws.hpp"
#include "parsum/sampling.hpp"

using namespace parsum;

namespace {

bool all_pass(const std::vector<PropertyResult>& ps) {
  return std::all_of(ps.begin(), ps.end(), [](const PropertyResult& p) { return p.passed; });
}

std::string failures(const std::vector<PropertyResult>& ps) {
  std::string out;
  for (const auto& p : ps)
    if (!p.passed) out += p.name + ": " + p.counterexample->message + "\n";
  return out;
}

}  // namespace

TEST_CASE("instances satisfy the permutative axioms") {
  Rng rng(1);
  auto a = check_permutative(SymCat{}, Sampler<SymCat>{}, rng, 50);
  auto b = check_permutative(MatCat<>{}, Sampler<MatCat<>>{}, rng, 50);
  auto c = check_permutative(FreePerm{}, Sampler<FreePerm>{}, rng, 50);
  CHECK_MESSAGE(all_pass(a), failures(a));
  CHECK_MESSAGE(all_pass(b), failures(b));
  CHECK_MESSAGE(all_pass(c), failures(c));
}

TEST_CASE("a broken braiding is caught with a counterexample") {
  ScopedFault fault(Fault::symcat_braiding);
  Rng rng(1);
  auto ps = check_permutative(SymCat{}, Sampler<SymCat>{}, rng, 50);
  CHECK_FALSE(all_pass(ps));
  auto bad = std::find_if(ps.begin(), ps.end(), [](const PropertyResult& p) { return !p.passed; });
  REQUIRE(bad != ps.end());
  REQUIRE(bad->counterexample);
  CHECK_FALSE(bad->counterexample->terms.empty());
}

TEST_CASE("Phi instances are parsummable") {
  Rng rng(2);
  Phi<SymCat> phi;
  Sampler<Phi<SymCat>> s{phi, {}};
  auto ps = check_parsummable(phi, s, rng, 40, {true});
  CHECK_MESSAGE(all_pass(ps), failures(ps));
  for (int law = 1; law <= 4; ++law) CHECK(check_generalized_action(law, phi, s, rng, 40).passed);
  for (int law = 1; law <= 6; ++law) CHECK(check_structure_maps(law, phi, s, rng, 40).passed);
  CHECK(check_support_change(phi, s, rng, 40).passed);
}

TEST_CASE("Sigma of Phi is permutative") {
  Rng rng(3);
  Phi<FreePerm> phi;
  Sigma<Phi<FreePerm>> sigma(phi);
  Sampler<Sigma<Phi<FreePerm>>> s{sigma, {phi, {}}};
  auto ps = check_permutative(sigma, s, rng, 30);
  CHECK_MESSAGE(all_pass(ps), failures(ps));
}

TEST_CASE("cylinder of S compiles and its legs are parsummable morphisms") {
  Rng rng(4);
  Phi<SymCat> p;
  Sampler<Phi<SymCat>> ps{p, {}};
  Theta<Phi<SymCat>> theta(p);
  Sampler<Theta<Phi<SymCat>>> ts(theta, ps);
  SFunctor<Phi<SymCat>> S{theta};
  auto sp = check_sum_preserving(S.as_functor(), theta, p, ts, rng, 20);
  CHECK_MESSAGE(all_pass(sp), failures(sp));
  auto eq = check_equivalence(S.as_functor(), S.witness(), theta, p, ts, ps, rng, 20);
  CHECK_MESSAGE(all_pass(eq), failures(eq));

  Cylinder<Theta<Phi<SymCat>>, Phi<SymCat>> cyl{theta, p, S.as_functor()};
  auto k = cyl.cyl();
  Sampler<decltype(k)> ks{k, {ts, ps}, ps};
  auto i1 = check_parsum_morphism(cyl.i1(), theta, k, ts, rng, 20);
  CHECK_MESSAGE(all_pass(i1), failures(i1));
  auto i2 = check_parsum_morphism(cyl.i2(), p, k, ps, rng, 20);
  CHECK_MESSAGE(all_pass(i2), failures(i2));
  auto laws = check_parsummable(k, ks, rng, 20);
  CHECK_MESSAGE(all_pass(laws), failures(laws));
  auto w1 = check_equivalence(cyl.i1(), cyl.i1_witness(S.witness()), theta, k, ts, ks, rng, 20);
  CHECK_MESSAGE(all_pass(w1), failures(w1));
  auto w2 = check_equivalence(cyl.i2(), cyl.i2_witness(), p, k, ps, ks, rng, 20);
  CHECK_MESSAGE(all_pass(w2), failures(w2));
  auto wh = check_equivalence(cyl.hat(), cyl.hat_witness(), k, p, ks, ps, rng, 20);
  CHECK_MESSAGE(all_pass(wh), failures(wh));
}
