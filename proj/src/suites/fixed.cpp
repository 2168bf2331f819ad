#include <numeric>

#include "context.hpp"
#include "parsum/fixed.hpp"
#include "parsum/laws.hpp"

namespace parsum::suites {

namespace {

using detail::same;
using P = Phi<SymCat>;

bool same_parts(const std::vector<OrbitAssignment<SymCat>>& a, const std::vector<OrbitAssignment<SymCat>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].object != b[i].object || !(a[i].orbit == b[i].orbit)) return false;
  return true;
}

std::string show_parts(const std::vector<OrbitAssignment<SymCat>>& parts) {
  std::string s;
  for (const auto& part : parts) s += part.orbit.str() + ":" + std::to_string(part.object) + " ";
  return s;
}

// Random disjoint orbits with nonunit objects.
std::vector<OrbitAssignment<SymCat>> random_assignment(const CyclicEmbedding& g, Rng& r) {
  std::vector<OrbitAssignment<SymCat>> parts;
  FinSet used;
  auto count = uniform(r, 0, 3);
  for (Nat i = 0; i < count; ++i) {
    FinSet o = g.orbit(uniform(r, 1, 4 * g.block_size()));
    if (o.intersects(used)) continue;
    used = used.unite(o);
    parts.push_back({static_cast<std::size_t>(uniform(r, 1, 3)), o});
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.orbit[0] < b.orbit[0]; });
  return parts;
}

SuiteResult fixed_points(const SuiteConfig& config) {
  Context ctx(config, "fixed-points", "fixed objects under a cyclic group acting through one injection");
  if (!ctx.wants("symcat")) return ctx.finish();
  P phi;
  Rng& rng = ctx.rng();
  std::size_t n = ctx.cases();
  const Nat window = static_cast<Nat>(std::max<std::size_t>(config.window, 500));

  ctx.add("", run_cases("generator-order", "g^q = id and g^k != id for 0 < k < q, q = 1..6", 6,
                        [&](std::size_t i, Witness& w) {
                          CyclicEmbedding g(i + 1);
                          w.term("g", g.generator().str());
                          if (!g.generator().is_bijective()) {
                            w.fail("generator is not a bijection");
                            return false;
                          }
                          for (std::size_t k = 1; k <= g.order(); ++k) {
                            ApRow gk = g.power(k);
                            bool identity = equal(gk, ApRow::identity());
                            bool pointwise = true;
                            for (Nat j = 1; j <= window && pointwise; ++j) pointwise = gk(j) == j;
                            if (identity != pointwise || identity != (k == g.order())) {
                              w.fail("g^" + std::to_string(k) + " has the wrong order behaviour");
                              return false;
                            }
                          }
                          return true;
                        }));

  ctx.add("", run_cases("order-three-example", "for q = 3 the generator starts 2, 3, 1, 4", 1,
                        [&](std::size_t, Witness& w) {
                          CyclicEmbedding g(3);
                          std::vector<Nat> got;
                          for (Nat j = 1; j <= 4; ++j) got.push_back(g.generator()(j));
                          w.term("g", g.generator().str());
                          return w.expect(got == std::vector<Nat>{2, 3, 1, 4}, "unexpected values");
                        }));

  ctx.add("", run_cases("stabilizer-counts",
                        "in each block g^k fixes the sum of the divisors d of q that divide k", 6 * 3,
                        [&](std::size_t i, Witness& w) {
                          CyclicEmbedding g(i % 6 + 1);
                          Nat block = static_cast<Nat>(i / 6);
                          std::size_t q = g.order();
                          for (std::size_t k = 0; k < q; ++k) {
                            ApRow gk = g.power(k);
                            Nat fixed = 0, expect = 0;
                            for (Nat j = block * g.block_size() + 1; j <= (block + 1) * g.block_size(); ++j)
                              fixed += gk(j) == j ? 1 : 0;
                            for (std::size_t d = 1; d <= q; ++d)
                              if (q % d == 0 && k % d == 0) expect += static_cast<Nat>(d);
                            if (fixed != expect) {
                              w.fail("q=" + std::to_string(q) + " k=" + std::to_string(k) + ": " +
                                     std::to_string(fixed) + " fixed points, expected " + std::to_string(expect));
                              return false;
                            }
                          }
                          return true;
                        }));

  // every object on {1..9} with entries 0..2
  {
    CyclicEmbedding g(3);
    std::size_t total = 1;
    for (int i = 0; i < 9; ++i) total *= 3;
    std::size_t fixed_count = 0;
    auto result = run_cases("decomposition-exhaustive",
                            "a fixed object on {1..9} is the sum of Pi(X_s, S) over its orbits", total,
                            [&](std::size_t c, Witness& w) {
                              std::map<Nat, std::size_t> entries;
                              for (Nat pos = 1, rest = static_cast<Nat>(c); pos <= 9; ++pos, rest /= 3)
                                entries.emplace(pos, static_cast<std::size_t>(rest % 3));
                              auto x = phi.make(entries);
                              bool closed = g.closed(phi.support(x));
                              bool fixed = is_fixed_obj(phi, g, x);
                              if (!fixed) return true;
                              ++fixed_count;
                              w.term("X", phi.show(x));
                              if (!closed) {
                                w.fail("fixed object with a support that is not closed");
                                return false;
                              }
                              auto parts = decompose(phi, g, x);
                              for (const auto& part : parts)
                                if (!is_fixed_obj(phi, g, pi_obj(phi, part.object, part.orbit))) {
                                  w.fail("Pi over " + part.orbit.str() + " is not fixed");
                                  return false;
                                }
                              return same(w, phi, "a_G(decompose X)", a_G(phi, parts), "X", x);
                            });
    ctx.add("", result);
    ctx.add("", run_cases("decomposition-exhaustive-count", "the enumeration above meets 3^4 = 81 fixed objects", 1,
                          [&](std::size_t, Witness& w) {
                            w.term("count", std::to_string(fixed_count));
                            return w.expect(!result.passed || fixed_count == 81, "unexpected number of fixed objects");
                          }));
  }

  ctx.add("", run_property("fixed-iff-constant-on-orbits",
                           "a_G of orbit assignments is fixed and decomposes back; moving one entry breaks it", n, rng,
                           [&](Rng& r, Witness& w) {
                             CyclicEmbedding g(static_cast<std::size_t>(uniform(r, 1, 6)));
                             auto parts = random_assignment(g, r);
                             auto x = a_G(phi, parts);
                             w.term("q", std::to_string(g.order()));
                             w.term("X", phi.show(x));
                             if (!is_fixed_obj(phi, g, x)) {
                               w.fail("a_G is not fixed");
                               return false;
                             }
                             if (!same_parts(decompose(phi, g, x), parts)) {
                               w.term("decomposition", show_parts(decompose(phi, g, x)));
                               w.fail("decompose does not invert a_G");
                               return false;
                             }
                             for (const auto& part : parts)
                               if (part.orbit.size() > 1) {
                                 FinSet single{part.orbit[0]};
                                 auto broken = phi.make({{part.orbit[0], part.object}});
                                 if (g.closed(single) || is_fixed_obj(phi, g, broken)) {
                                   w.fail("a single point of a nontrivial orbit counts as fixed");
                                   return false;
                                 }
                               }
                             return true;
                           }));

  ctx.add("", run_property("transport-fixed", "the coherence iso Pi(X, S) -> Pi(X, T) along an equivariant bijection is fixed",
                           n, rng, [&](Rng& r, Witness& w) {
                             CyclicEmbedding g(static_cast<std::size_t>(uniform(r, 1, 6)));
                             std::size_t q = g.order();
                             std::vector<std::size_t> divs;
                             for (std::size_t d = 1; d <= q; ++d)
                               if (q % d == 0) divs.push_back(d);
                             std::size_t d = divs[static_cast<std::size_t>(uniform(r, 0, static_cast<Nat>(divs.size()) - 1))];
                             auto orbits = g.orbits_of_size(d, 3);
                             FinSet s = orbits[static_cast<std::size_t>(uniform(r, 0, 2))];
                             FinSet t = orbits[static_cast<std::size_t>(uniform(r, 0, 2))];
                             Nat start = t[static_cast<std::size_t>(uniform(r, 0, static_cast<Nat>(t.size()) - 1))];
                             auto alpha = g.equivariant_bijection(s[0], start);
                             std::size_t x = static_cast<std::size_t>(uniform(r, 1, 3));
                             w.term("S", s.str());
                             w.term("T", t.str());
                             if (!alpha) {
                               w.fail("no equivariant bijection between orbits of equal size");
                               return false;
                             }
                             auto f = pi_transport(phi, x, s, *alpha);
                             w.term("f", phi.show(f));
                             return w.expect(is_fixed_mor(phi, g, f), "transport is not fixed") &&
                                    same(w, phi, "cod", f.dst, "Pi(X, T)", pi_obj(phi, x, t));
                           }));

  ctx.add("", run_property("homomorphism-iso-fixed",
                           "Pi(X1, S1) + Pi(X2, S2) -> Pi(X1 X2, S1) is fixed with the right ends", n, rng,
                           [&](Rng& r, Witness& w) {
                             CyclicEmbedding g(static_cast<std::size_t>(uniform(r, 1, 6)));
                             std::size_t q = g.order();
                             auto orbits = g.orbits_of_size(q, 3);
                             FinSet s1 = orbits[0], s2 = orbits[static_cast<std::size_t>(uniform(r, 1, 2))];
                             Nat start = s1[static_cast<std::size_t>(uniform(r, 0, static_cast<Nat>(q) - 1))];
                             auto alpha = g.equivariant_bijection(s2[0], start);
                             std::size_t x1 = static_cast<std::size_t>(uniform(r, 1, 2));
                             std::size_t x2 = static_cast<std::size_t>(uniform(r, 1, 2));
                             w.term("S1", s1.str());
                             w.term("S2", s2.str());
                             auto h = homomorphism_iso(phi, x1, s1, x2, s2, *alpha);
                             w.term("h", phi.show(h));
                             return w.expect(is_fixed_mor(phi, g, h), "homomorphism iso is not fixed") &&
                                    same(w, phi, "dom", h.src, "sum", phi.sum_obj(pi_obj(phi, x1, s1), pi_obj(phi, x2, s2))) &&
                                    same(w, phi, "cod", h.dst, "Pi(X1 X2, S1)", pi_obj(phi, x1 + x2, s1));
                           }));

  // path components of the zig-zag relation on small objects
  {
    std::vector<P::Object> objects;
    for (std::size_t c = 0; c < 64; ++c)
      objects.push_back(phi.make({{1, c % 4}, {2, c / 4 % 4}, {3, c / 16}}));
    ctx.add("", run_cases("components-by-total",
                          "objects on {1,2,3} with entries 0..3 are connected iff their totals agree", 1,
                          [&](std::size_t, Witness& w) {
                            auto comps = path_components(objects.size(), [&](std::size_t i, std::size_t j) {
                              return hom_nonempty(phi, objects[i], objects[j]);
                            });
                            std::map<std::size_t, std::vector<std::size_t>> by_total;
                            for (std::size_t i = 0; i < objects.size(); ++i) by_total[phi.total(objects[i])].push_back(i);
                            std::vector<std::vector<std::size_t>> expect;
                            for (auto& [t, ids] : by_total) expect.push_back(ids);
                            std::sort(expect.begin(), expect.end());
                            w.term("components", std::to_string(comps.size()));
                            w.term("totals", std::to_string(expect.size()));
                            return w.expect(comps == expect, "components differ from the partition by total") &&
                                   w.expect(path_components(0, [](std::size_t, std::size_t) { return true; }).empty(),
                                            "empty enumeration has components");
                          }));
  }

  ctx.add("", run_property("trivial-group-points", "for q = 1, decompose is a left inverse of a_G on point assignments",
                           n, rng, [&](Rng& r, Witness& w) {
                             CyclicEmbedding g(1);
                             auto parts = random_assignment(g, r);
                             auto x = a_G(phi, parts);
                             w.term("X", phi.show(x));
                             auto other = a_G(phi, random_assignment(g, r));
                             w.term("Y", phi.show(other));
                             bool connected = hom_nonempty(phi, x, other) || hom_nonempty(phi, other, x);
                             return w.expect(same_parts(decompose(phi, g, x), parts), "decompose is not a left inverse") &&
                                    w.expect(connected == (phi.total(x) == phi.total(other)),
                                             "connectedness disagrees with the totals");
                           }));
  return ctx.finish();
}

}  // namespace

void add_fixed_suites(std::vector<SuiteInfo>& out) {
  out.push_back({"fixed-points", "fixed objects under a cyclic group acting through one injection", fixed_points});
}

}  // namespace parsum::suites
