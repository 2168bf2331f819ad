#include <algorithm>
#include <set>

#include "context.hpp"
#include "parsum/category.hpp"
#include "parsum/laws.hpp"

namespace parsum::suites {

namespace {

// Every value of the row below bound, read off the segment description.
std::set<Nat> image_below(const ApRow& r, Nat bound) {
  std::set<Nat> out;
  for (const auto& [j, v] : r.exceptions())
    if (v < bound) out.insert(v);
  for (const auto& s : r.segments())
    for (Nat v = s.image; v < bound; v += s.step) out.insert(v);
  return out;
}

// Two rows that agree on 1..max cutoff + 2 lcm(periods) agree everywhere.
Nat agreement_bound(const ApRow& a, const ApRow& b, Nat window) {
  return std::max(window, std::max(a.cutoff(), b.cutoff()) + 2 * checked_lcm(a.period(), b.period()));
}

bool pointwise_equal(const ApRow& a, const ApRow& b, Nat bound) {
  for (Nat j = 1; j <= bound; ++j)
    if (a(j) != b(j)) return false;
  return true;
}

// A common intersection point of two images, if any, lies below this bound.
Nat meeting_bound(const ApRow& a, const ApRow& b) {
  Nat top = 0, steps = 1;
  for (const ApRow* r : {&a, &b}) {
    for (const auto& [j, v] : r->exceptions()) top = std::max(top, v);
    for (const auto& s : r->segments()) {
      top = std::max(top, s.image);
      steps = checked_lcm(steps, s.step);
    }
  }
  return std::max<Nat>(1000, top + steps + 1);
}

SuiteResult inj_soundness(const SuiteConfig& config) {
  Context ctx(config, "inj-soundness", "injection algebra against pointwise brute force");
  Nat window = static_cast<Nat>(config.window);
  auto sample = [](Rng& r) { return random_injection(r, static_cast<std::size_t>(uniform(r, 1, 3))); };

  ctx.add("", run_property("injective-on-window", "(a, j) |-> phi(a, j) is injective into omega", ctx.cases(),
                           ctx.rng(), [&](Rng& r, Witness& w) {
                             ApInjection phi = sample(r);
                             w.term("phi", phi.str());
                             std::set<Nat> seen;
                             for (Nat a : phi.labels())
                               for (Nat j = 1; j <= window; ++j) {
                                 Nat v = phi.apply(a, j);
                                 if (v < 1 || !seen.insert(v).second) {
                                   w.fail("value " + std::to_string(v) + " repeated or not positive at (" +
                                          std::to_string(a) + ", " + std::to_string(j) + ")");
                                   return false;
                                 }
                               }
                             return true;
                           }));

  ctx.add("", run_property("preimage-inverts-apply", "preimage(phi(a, j)) = (a, j); preimage(n) = (a, j) => phi(a, j) = n",
                           ctx.cases(), ctx.rng(), [&](Rng& r, Witness& w) {
                             ApInjection phi = sample(r);
                             w.term("phi", phi.str());
                             for (Nat a : phi.labels())
                               for (Nat j = 1; j <= window; ++j) {
                                 auto back = phi.preimage(phi.apply(a, j));
                                 if (!back || *back != std::pair<Nat, Nat>{a, j}) {
                                   w.fail("preimage misses (" + std::to_string(a) + ", " + std::to_string(j) + ")");
                                   return false;
                                 }
                               }
                             for (Nat n = 1; n <= window; ++n)
                               if (auto back = phi.preimage(n); back && phi.apply(back->first, back->second) != n) {
                                 w.fail("preimage of " + std::to_string(n) + " is not a preimage");
                                 return false;
                               }
                             return true;
                           }));

  ctx.add("", run_property("equality-decision", "equal(phi, psi) iff phi and psi agree pointwise", ctx.cases(),
                           ctx.rng(), [&](Rng& r, Witness& w) {
                             ApInjection phi = sample(r);
                             ApInjection other = random_injection(r, phi.size());
                             w.term("phi", phi.str());
                             w.term("psi", other.str());
                             if (!equal(phi, ApInjection::parse(phi.str()))) {
                               w.fail("text round trip is not equal");
                               return false;
                             }
                             for (std::size_t k = 0; k < phi.size(); ++k) {
                               const ApRow& u = phi.rows()[k];
                               const ApRow& v = other.rows()[k];
                               if (equal(u, v) != pointwise_equal(u, v, agreement_bound(u, v, window))) {
                                 w.fail("equal() disagrees with pointwise comparison on row " + std::to_string(k + 1));
                                 return false;
                               }
                               // u followed by swapping u(j0) with u(j0)+1 differs from u at j0 only
                               Nat j0 = uniform(r, 1, window), x = u(j0);
                               ApRow moved = compose(ApRow::finite_permutation({{x, x + 1}, {x + 1, x}}), u);
                               if (equal(u, moved) || pointwise_equal(u, moved, agreement_bound(u, moved, window))) {
                                 w.term("perturbed", moved.str());
                                 w.fail("perturbed row reported equal");
                                 return false;
                               }
                               if (!equal(compose(u, ApRow::identity()), u)) {
                                 w.fail("u o id is not equal to u");
                                 return false;
                               }
                             }
                             return true;
                           }));

  ctx.add("", run_property("disjointness-decision", "images_disjoint(u, v) iff no common value (brute force)",
                           ctx.cases(), ctx.rng(), [&](Rng& r, Witness& w) {
                             ApRow u = sample(r).rows().front(), v = sample(r).rows().front();
                             w.term("u", u.str());
                             w.term("v", v.str());
                             Nat bound = meeting_bound(u, v);
                             auto iu = image_below(u, bound), iv = image_below(v, bound);
                             bool brute = std::none_of(iu.begin(), iu.end(), [&](Nat x) { return iv.count(x) > 0; });
                             if (images_disjoint(u, v) != brute) {
                               w.fail(std::string("images_disjoint says ") + (brute ? "overlap" : "disjoint") +
                                      ", brute force below " + std::to_string(bound) + " disagrees");
                               return false;
                             }
                             // the segment description used above agrees with evaluation
                             for (Nat j = 1; j <= window; ++j)
                               if (u(j) < bound && !iu.count(u(j))) {
                                 w.fail("segment description misses u(" + std::to_string(j) + ")");
                                 return false;
                               }
                             return true;
                           }));
  return ctx.finish();
}

// The ten permutations of size at most 3, listed by size.
std::vector<Perm> small_perms() {
  std::vector<Perm> out;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const Perm& p : all_perms(n)) out.push_back(p);
  return out;
}

SuiteResult barratt_eccles(const SuiteConfig& config) {
  Context ctx(config, "barratt-eccles", "block shuffles and the operad structure maps, exhaustively");
  const auto small = small_perms();

  // index -> (sigma in S_k, block sizes or block permutations), k <= 4
  struct Case {
    Perm sigma;
    std::vector<std::size_t> digits;
  };
  auto enumerate = [](std::size_t radix) {
    std::vector<Case> cases;
    for (std::size_t k = 0; k <= 4; ++k) {
      std::size_t combos = 1;
      for (std::size_t i = 0; i < k; ++i) combos *= radix;
      for (const Perm& s : all_perms(k))
        for (std::size_t c = 0; c < combos; ++c) {
          std::vector<std::size_t> digits;
          for (std::size_t i = 0, rest = c; i < k; ++i, rest /= radix) digits.push_back(rest % radix);
          cases.push_back({s, digits});
        }
    }
    return cases;
  };

  auto sizes_cases = enumerate(4);
  ctx.add("", run_cases("block-shuffle-formula",
                        "element m of block l lands after all blocks placed before slot sigma(l)", sizes_cases.size(),
                        [&](std::size_t i, Witness& w) {
                          const auto& [sigma, sizes] = sizes_cases[i];
                          std::vector<std::size_t> expect;
                          for (std::size_t l = 1; l <= sizes.size(); ++l) {
                            std::size_t offset = 0;
                            for (std::size_t l2 = 1; l2 <= sizes.size(); ++l2)
                              if (sigma(l2) < sigma(l)) offset += sizes[l2 - 1];
                            for (std::size_t m = 1; m <= sizes[l - 1]; ++m) expect.push_back(offset + m);
                          }
                          Perm got = block_shuffle(sigma, sizes);
                          if (got.one_line() == expect) return true;
                          w.term("sigma", sigma.str());
                          w.term("block_shuffle", got.str());
                          w.fail("block shuffle differs from the offset formula");
                          return false;
                        }));

  auto perm_cases = enumerate(small.size());
  ctx.add("", run_cases("structure-map-two-expressions",
                        "block_shuffle(sigma) o (pi_1 + ... + pi_k) = (pi_s^-1(1) + ...) o block_shuffle(sigma)",
                        perm_cases.size(), [&](std::size_t i, Witness& w) {
                          const auto& [sigma, digits] = perm_cases[i];
                          std::vector<Perm> pis;
                          for (std::size_t d : digits) pis.push_back(small[d]);
                          Perm a = be_compose(sigma, pis), b = be_compose_shuffled(sigma, pis);
                          if (a == b) return true;
                          w.term("sigma", sigma.str());
                          for (std::size_t k = 0; k < pis.size(); ++k) w.term("pi" + std::to_string(k + 1), pis[k].str());
                          w.term("first", a.str());
                          w.term("second", b.str());
                          w.fail("the two expressions differ");
                          return false;
                        }));

  std::vector<std::pair<Perm, std::vector<std::size_t>>> subset_cases;
  for (std::size_t k = 0; k <= 4; ++k)
    for (const Perm& p : all_perms(k))
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> pos;
        for (std::size_t i = 1; i <= k; ++i)
          if (mask >> (i - 1) & 1U) pos.push_back(i);
        subset_cases.emplace_back(p, pos);
      }
  ctx.add("", run_cases("sorting-permutation-block-form", "sigma_hat(sigma, positions) = sigma_tilde(sigma(positions))",
                        subset_cases.size(), [&](std::size_t i, Witness& w) {
                          const auto& [sigma, pos] = subset_cases[i];
                          std::vector<Nat> values;
                          for (std::size_t p : pos) values.push_back(static_cast<Nat>(sigma(p)));
                          Perm a = sigma_hat(sigma, pos), b = sigma_tilde(values);
                          if (a == b) return true;
                          w.term("sigma", sigma.str());
                          w.term("sigma_hat", a.str());
                          w.term("sigma_tilde", b.str());
                          w.fail("sigma_hat differs from sigma_tilde");
                          return false;
                        }));

  std::vector<Perm> upto6;
  for (std::size_t n = 0; n <= 6; ++n)
    for (const Perm& p : all_perms(n)) upto6.push_back(p);
  ctx.add("", run_cases("adjacent-factorization-replays", "replaying the transposition word gives sigma back",
                        upto6.size(), [&](std::size_t i, Witness& w) {
                          const Perm& s = upto6[i];
                          if (replay_factorization(s.size(), adjacent_factorization(s)) == s) return true;
                          w.term("sigma", s.str());
                          w.fail("replay differs");
                          return false;
                        }));
  return ctx.finish();
}

// Reduced words for sigma by peeling off a random descent at each step.
std::vector<std::size_t> random_reduced_word(const Perm& sigma, Rng& rng) {
  std::vector<std::size_t> line = sigma.one_line(), word;
  for (;;) {
    std::vector<std::size_t> descents;
    for (std::size_t i = 1; i < line.size(); ++i)
      if (line[i - 1] > line[i]) descents.push_back(i);
    if (descents.empty()) break;
    std::size_t k = descents[static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(descents.size()) - 1))];
    std::swap(line[k - 1], line[k]);
    word.push_back(k);
  }
  // Peeling happened on the right; whichever reading order matches the
  // replay convention is the factorization.
  if (replay_factorization(sigma.size(), word) == sigma) return word;
  std::reverse(word.begin(), word.end());
  return word;
}

// Families of objects used for the exhaustive coherence check.
std::vector<std::vector<std::size_t>> count_families() {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t c = 0; c < 81; ++c) out.push_back({c % 3, c / 3 % 3, c / 9 % 3, c / 27 % 3});
  return out;
}

std::vector<std::vector<FreePerm::Object>> word_families() {
  std::vector<FreePerm::Object> words = {{}, {1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
  std::vector<std::vector<FreePerm::Object>> out;
  for (std::size_t c = 0; c < 7 * 7 * 7 * 7; ++c)
    out.push_back({words[c % 7], words[c / 7 % 7], words[c / 49 % 7], words[c / 343 % 7]});
  return out;
}

template <PermutativeCategory C>
PropertyResult factorization_independence(const C& c, const std::vector<std::vector<typename C::Object>>& families,
                                          Rng& rng) {
  auto perms = all_perms(4);
  return run_cases("factorization-independent",
                   "coherence_iso along any transposition word for sigma in S_4 is the same morphism",
                   perms.size() * families.size(), [&](std::size_t i, Witness& w) {
                     const Perm& sigma = perms[i % perms.size()];
                     const auto& xs = families[i / perms.size()];
                     auto base = adjacent_factorization(sigma);
                     auto reduced = random_reduced_word(sigma, rng);
                     // a non-reduced word: one transposition inserted twice
                     auto padded = base;
                     std::size_t at = static_cast<std::size_t>(uniform(rng, 0, static_cast<Nat>(padded.size())));
                     std::size_t t = static_cast<std::size_t>(uniform(rng, 1, 3));
                     padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(at), {t, t});
                     w.term("sigma", sigma.str());
                     std::string fam;
                     for (const auto& x : xs) fam += c.show(x) + " ";
                     w.term("family", fam);
                     for (const auto* word : {&reduced, &padded})
                       if (replay_factorization(4, *word) != sigma) {
                         w.fail("generated word does not factor sigma");
                         return false;
                       }
                     auto f0 = coherence_iso_along(c, base, xs);
                     auto f1 = coherence_iso_along(c, reduced, xs);
                     auto f2 = coherence_iso_along(c, padded, xs);
                     return detail::same(w, c, "along first word", f0, "along reduced word", f1) &&
                            detail::same(w, c, "along first word", f0, "along padded word", f2);
                   });
}

SuiteResult coherence_well_defined(const SuiteConfig& config) {
  Context ctx(config, "coherence-well-defined", "coherence isomorphisms do not depend on the factorization");
  if (ctx.wants("symcat")) ctx.add("SymCat", factorization_independence(SymCat{}, count_families(), ctx.rng()));
  if (ctx.wants("matcat")) ctx.add("MatCat", factorization_independence(MatCat<>{}, count_families(), ctx.rng()));
  if (ctx.wants("freeperm")) ctx.add("FreePerm", factorization_independence(FreePerm{}, word_families(), ctx.rng()));
  return ctx.finish();
}

SuiteResult shuffle_coherence(const SuiteConfig& config) {
  Context ctx(config, "shuffle-coherence", "coherence isomorphisms compose and ignore unit entries");
  for_each_base(ctx, [&](const std::string& name, const auto& c, const auto& s) {
    using C = std::decay_t<decltype(c)>;
    using Obj = typename C::Object;
    auto family = [&](Rng& r, std::size_t k) {
      std::vector<Obj> xs;
      for (std::size_t i = 0; i < k; ++i) xs.push_back(s.object(r));
      return xs;
    };
    ctx.add(name, run_property("coherence-functorial", "coh(sigma rho, X) = coh(sigma, rho X) o coh(rho, X)",
                               ctx.cases(), ctx.rng(), [&](Rng& r, Witness& w) {
                                 auto k = static_cast<std::size_t>(uniform(r, 0, 4));
                                 auto xs = family(r, k);
                                 Perm sigma = random_perm(r, k), rho = random_perm(r, k);
                                 w.term("sigma", sigma.str());
                                 w.term("rho", rho.str());
                                 std::vector<Obj> moved(k);
                                 for (std::size_t i = 1; i <= k; ++i) moved[rho(i) - 1] = xs[i - 1];
                                 auto lhs = coherence_iso(c, compose(sigma, rho), xs);
                                 auto rhs = c.compose(coherence_iso(c, sigma, moved), coherence_iso(c, rho, xs));
                                 return detail::same(w, c, "coh(sigma rho)", lhs, "coh(sigma) o coh(rho)", rhs);
                               }));
    ctx.add(name, run_property("unit-entries-drop-out",
                               "with units off the positions P, coh(sigma, X) = coh(sigma_tilde(sigma(P)), X|P)",
                               ctx.cases(), ctx.rng(), [&](Rng& r, Witness& w) {
                                 auto k = static_cast<std::size_t>(uniform(r, 0, 5));
                                 Perm sigma = random_perm(r, k);
                                 std::vector<Obj> xs, compressed;
                                 std::vector<Nat> values;
                                 for (std::size_t i = 1; i <= k; ++i) {
                                   if (coin(r)) {
                                     xs.push_back(s.object(r));
                                     compressed.push_back(xs.back());
                                     values.push_back(static_cast<Nat>(sigma(i)));
                                   } else {
                                     xs.push_back(c.unit());
                                   }
                                 }
                                 w.term("sigma", sigma.str());
                                 return detail::same(w, c, "coh(sigma, X)", coherence_iso(c, sigma, xs),
                                                     "coh(sigma_tilde, X|P)",
                                                     coherence_iso(c, sigma_tilde(values), compressed));
                               }));
  });
  if (ctx.wants("symcat")) {
    SymCat c;
    ctx.add("SymCat", run_cases("swap-is-block-shuffle", "coh((1 2), (m, n)) = block_shuffle((1 2), (m, n))", 16,
                                [&](std::size_t i, Witness& w) {
                                  std::size_t m = i % 4, n = i / 4;
                                  return detail::same(w, c, "coh", coherence_iso(c, Perm({2, 1}), {m, n}),
                                                      "block shuffle",
                                                      SymCat::Morphism{block_shuffle(Perm({2, 1}), {m, n})});
                                }));
  }
  return ctx.finish();
}

}  // namespace

void add_combinatorics_suites(std::vector<SuiteInfo>& out) {
  out.push_back({"inj-soundness", "injection algebra against pointwise brute force", inj_soundness});
  out.push_back({"barratt-eccles", "block shuffles and the operad structure maps, exhaustively", barratt_eccles});
  out.push_back({"coherence-well-defined", "coherence isomorphisms do not depend on the factorization",
                 coherence_well_defined});
  out.push_back({"shuffle-coherence", "coherence isomorphisms compose and ignore unit entries", shuffle_coherence});
}

}  // namespace parsum::suites
