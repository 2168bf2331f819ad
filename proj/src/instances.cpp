#include "parsum/instances.hpp"

#include <algorithm>

#include "parsum/fault.hpp"

namespace parsum {

SymCat::Morphism SymCat::compose(const Morphism& g, const Morphism& f) const {
  if (g.perm.size() != f.perm.size()) throw Error("SymCat: composing " + show(g) + " after " + show(f));
  return {parsum::compose(g.perm, f.perm)};
}

SymCat::Morphism SymCat::braiding(Object m, Object n) const {
  if (fault_active(Fault::symcat_braiding)) return identity(m + n);
  return {block_shuffle(Perm({2, 1}), {m, n})};
}

std::string FreePerm::name() const {
  std::string s = "FreePerm(";
  for (std::size_t i = 0; i < letters; ++i) s += static_cast<char>('a' + i);
  return s + ")";
}

FreePerm::Morphism FreePerm::make(Object src, Object dst, Perm map) const {
  if (src.size() != dst.size() || map.size() != src.size()) throw Error("FreePerm: length mismatch");
  for (std::size_t i = 1; i <= src.size(); ++i)
    if (dst[map(i) - 1] != src[i - 1]) throw Error("FreePerm: bijection does not preserve letters");
  return {std::move(src), std::move(dst), std::move(map)};
}

FreePerm::Morphism FreePerm::compose(const Morphism& g, const Morphism& f) const {
  if (f.dst != g.src) throw Error("FreePerm: composing " + show(g) + " after " + show(f));
  return {f.src, g.dst, parsum::compose(g.map, f.map)};
}

FreePerm::Object FreePerm::tensor_obj(const Object& a, const Object& b) const {
  Object out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

FreePerm::Morphism FreePerm::tensor_mor(const Morphism& f, const Morphism& g) const {
  return {tensor_obj(f.src, g.src), tensor_obj(f.dst, g.dst), block_sum_perm({f.map, g.map})};
}

FreePerm::Morphism FreePerm::braiding(const Object& v, const Object& w) const {
  return {tensor_obj(v, w), tensor_obj(w, v), block_shuffle(Perm({2, 1}), {v.size(), w.size()})};
}

bool FreePerm::hom_nonempty(const Object& a, const Object& b) const {
  Object x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::string FreePerm::show(const Object& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t c : w) s += static_cast<char>('a' + c);
  return s;
}

std::string FreePerm::show(const Morphism& f) const {
  return show(f.src) + "->" + show(f.dst) + f.map.str();
}

Functor<FreePerm, SymCat> forget_labels() {
  return {"forget-labels", [](const FreePerm::Object& w) { return w.size(); },
          [](const FreePerm::Morphism& f) { return SymCat::Morphism{f.map}; }};
}

Functor<SymCat, FreePerm> single_letter() {
  return {"single-letter", [](const SymCat::Object& n) { return FreePerm::Object(n, 0); },
          [](const SymCat::Morphism& f) {
            FreePerm::Object w(f.perm.size(), 0);
            return FreePerm::Morphism{w, w, f.perm};
          }};
}

Functor<FreePerm, FreePerm> delete_letter(std::size_t letter) {
  auto erase = [letter](const FreePerm::Object& w) {
    FreePerm::Object out;
    for (std::size_t c : w)
      if (c != letter) out.push_back(c);
    return out;
  };
  return {"delete-" + std::string(1, static_cast<char>('a' + letter)), erase,
          [letter, erase](const FreePerm::Morphism& f) {
            // Renumber surviving positions on both sides, then restrict the bijection.
            std::vector<std::size_t> src_new(f.src.size() + 1, 0), dst_new(f.dst.size() + 1, 0);
            std::size_t k = 0;
            for (std::size_t i = 1; i <= f.src.size(); ++i)
              if (f.src[i - 1] != letter) src_new[i] = ++k;
            k = 0;
            for (std::size_t i = 1; i <= f.dst.size(); ++i)
              if (f.dst[i - 1] != letter) dst_new[i] = ++k;
            std::vector<std::size_t> v(k);
            for (std::size_t i = 1; i <= f.src.size(); ++i)
              if (src_new[i]) v[src_new[i] - 1] = dst_new[f.map(i)];
            return FreePerm::Morphism{erase(f.src), erase(f.dst), Perm(std::move(v))};
          }};
}

}  // namespace parsum
