#include <functional>
#include <sstream>
#include <utility>

#include "parsum/cylinder.hpp"
#include "parsum/fixed.hpp"
#include "parsum/instances.hpp"
#include "parsum/sigma.hpp"
#include "parsum/suites.hpp"

namespace parsum {

namespace {

std::string values(const ApRow& u, Nat upto) {
  std::string s;
  for (Nat j = 1; j <= upto; ++j) s += (j > 1 ? " " : "") + std::to_string(u(j));
  return s;
}

std::string braiding_demo() {
  std::ostringstream out;
  SymCat sym;
  out << "SymCat: tau_{2,1} = " << sym.show(sym.braiding(2, 1)) << "\n";
  Phi<SymCat> phi;
  Sigma<Phi<SymCat>> sigma(phi);
  Sigma<Phi<SymCat>>::Object x{phi.make({{1, 2}})}, y{phi.make({{1, 1}})};
  auto tau = sigma.braiding(x, y);
  out << "Sigma(Phi(SymCat)): X = " << sigma.show(x) << ", Y = " << sigma.show(y) << "\n";
  out << "  tau_{X,Y} = " << sigma.show(tau) << "\n";
  out << "  tau_{Y,X} o tau_{X,Y} is the identity: "
      << (sigma.compose(sigma.braiding(y, x), tau) == sigma.identity(sigma.tensor_obj(x, y)) ? "yes" : "no") << "\n";
  return out.str();
}

std::string coherence_demo() {
  std::ostringstream out;
  SymCat sym;
  Perm sigma({3, 1, 2});
  std::vector<std::size_t> family{1, 2, 1};
  auto word = adjacent_factorization(sigma);
  out << "sigma = " << sigma.str() << ", family (1, 2, 1)\n";
  out << "  transposition word:";
  for (auto k : word) out << " s" << k;
  out << "\n  coh along the word   = " << sym.show(coherence_iso_along(sym, word, family)) << "\n";
  std::vector<std::size_t> longer = word;
  longer.insert(longer.begin(), {2, 2});
  out << "  coh with s2 s2 added = " << sym.show(coherence_iso_along(sym, longer, family)) << "\n";
  out << "  block shuffle        = " << block_shuffle(sigma, family).str() << "\n";
  return out.str();
}

std::string interleave_demo() {
  std::ostringstream out;
  for (std::size_t m = 1; m <= 3; ++m) {
    ApInjection c = canonical_interleave(m);
    out << "m = " << m << ": " << c.str() << "\n";
    for (std::size_t a = 0; a < m; ++a) out << "  row " << a + 1 << ": " << values(c.rows()[a], 6) << " ...\n";
  }
  return out.str();
}

std::string monotone_demo() {
  std::ostringstream out;
  std::vector<FinSet> shape{{1, 4}, {2}, {3, 5}};
  ApInjection m = monotone_for(shape);
  out << "shape {1,4} {2} {3,5}\n  injection: " << m.str() << "\n";
  for (std::size_t a = 0; a < shape.size(); ++a) {
    out << "  row " << a + 1 << " on " << shape[a].str() << ":";
    for (Nat j : shape[a]) out << " " << m.rows()[a](j);
    out << "\n";
  }
  return out.str();
}

std::string zigzag_demo() {
  std::ostringstream out;
  Phi<SymCat> p;
  Theta<Phi<SymCat>> theta(p);
  SFunctor<Phi<SymCat>> S{theta};
  ThetaInclusion<Phi<SymCat>> incl{theta};
  auto x = theta.make_theta(FinSet{1, 3}, {p.make({{1, 2}}), p.make({{2, 1}})});
  out << "<A, X> = " << theta.show(x) << "\n";
  out << "  S<A, X> = " << p.show(S.obj(x)) << "\n";
  Phi<Sigma<Phi<SymCat>>>::Object z = theta.make({{2, {p.make({{1, 1}}), p.make({{1, 2}})}}});
  out << "Z = " << theta.show(z) << "\n";
  out << "  preimage in Theta = " << theta.show(incl.preimage(z)) << "\n";
  out << "  iso = " << theta.show(incl.iso(z, false)) << "\n";
  Cylinder<Theta<Phi<SymCat>>, Phi<SymCat>> cyl{theta, p, S.as_functor()};
  auto k = cyl.cyl();
  auto y = p.make({{1, 1}});
  out << "I1 <A, X> = " << k.show(cyl.i1().obj(x)) << "\n";
  out << "I2 Y = " << k.show(cyl.i2().obj(y)) << " for Y = " << p.show(y) << "\n";
  return out.str();
}

std::string cylinder_demo() {
  std::ostringstream out;
  Phi<SymCat> p;
  Theta<Phi<SymCat>> theta(p);
  SFunctor<Phi<SymCat>> S{theta};
  Cylinder<Theta<Phi<SymCat>>, Phi<SymCat>> cyl{theta, p, S.as_functor()};
  auto k = cyl.cyl();
  auto x = theta.make_theta(FinSet{1}, {p.make({{1, 1}, {2, 2}})});
  auto y = p.make({{1, 3}});
  out << "I1 X = " << k.show(cyl.i1().obj(x)) << "\n";
  out << "I2 Y = " << k.show(cyl.i2().obj(y)) << "\n";
  out << "S^_mu (X, Y) = " << p.show(cyl.f_mu().obj({x, y})) << "\n";
  return out.str();
}

std::string fixed_demo() {
  std::ostringstream out;
  CyclicEmbedding g(3);
  Phi<SymCat> p;
  out << "q = 3, block size " << g.block_size() << ", g = " << values(g.generator(), 8) << " ...\n";
  auto x = p.make({{1, 2}, {2, 2}, {3, 2}, {8, 1}});
  out << "X = " << p.show(x) << " fixed: " << (is_fixed_obj(p, g, x) ? "yes" : "no") << "\n";
  for (const auto& part : decompose(p, g, x)) out << "  Pi(" << part.object << ", " << part.orbit.str() << ")\n";
  auto broken = p.make({{1, 2}, {2, 1}, {3, 2}});
  out << "X' = " << p.show(broken) << " fixed: " << (is_fixed_obj(p, g, broken) ? "yes" : "no") << "\n";
  return out.str();
}

const std::vector<std::pair<std::string, std::function<std::string()>>>& demos() {
  static const std::vector<std::pair<std::string, std::function<std::string()>>> all = {
      {"braiding", braiding_demo}, {"coherence", coherence_demo}, {"zigzag", zigzag_demo},
      {"cylinder", cylinder_demo}, {"interleave", interleave_demo}, {"monotone", monotone_demo},
      {"fixed", fixed_demo}};
  return all;
}

}  // namespace

std::vector<std::string> demo_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : demos()) out.push_back(name);
  return out;
}

std::string run_demo(const std::string& name) {
  for (const auto& [n, f] : demos())
    if (n == name) return f();
  throw Error("unknown demo: " + name);
}

}  // namespace parsum
