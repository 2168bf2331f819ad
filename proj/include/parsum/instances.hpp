#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parsum/category.hpp"
#include "parsum/perm.hpp"

namespace parsum {

// Objects are natural numbers; the only morphisms n -> n are permutations.
struct SymCat {
  using Object = std::size_t;
  struct Morphism {
    Perm perm;
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  std::string name() const { return "SymCat"; }
  Object dom(const Morphism& f) const { return f.perm.size(); }
  Object cod(const Morphism& f) const { return f.perm.size(); }
  Morphism identity(Object n) const { return {Perm::identity(n)}; }
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Object unit() const { return 0; }
  Object tensor_obj(Object a, Object b) const { return a + b; }
  Morphism tensor_mor(const Morphism& f, const Morphism& g) const { return {block_sum_perm({f.perm, g.perm})}; }
  Morphism braiding(Object m, Object n) const;
  bool hom_nonempty(Object a, Object b) const { return a == b; }
  std::string show(Object n) const { return std::to_string(n); }
  std::string show(const Morphism& f) const { return f.perm.str(); }
};

struct NatSemiring {
  using value_type = std::uint64_t;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(value_type a, value_type b) { return a + b; }
  static value_type mul(value_type a, value_type b) { return a * b; }
  static std::string name() { return "N"; }
};

struct BoolSemiring {
  using value_type = std::uint8_t;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(value_type a, value_type b) { return a | b; }
  static value_type mul(value_type a, value_type b) { return a & b; }
  static std::string name() { return "B"; }
};

// Objects are natural numbers; Hom(m, n) is the set of n x m matrices over S.
template <class S = NatSemiring>
struct MatCat {
  using Object = std::size_t;
  using Value = typename S::value_type;
  struct Morphism {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Value> data;  // row-major
    Value at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  std::string name() const { return "MatCat(" + S::name() + ")"; }
  Object dom(const Morphism& f) const { return f.cols; }
  Object cod(const Morphism& f) const { return f.rows; }

  static Morphism zeros(std::size_t rows, std::size_t cols) {
    return {rows, cols, std::vector<Value>(rows * cols, S::zero())};
  }

  static Morphism permutation_matrix(const Perm& p) {
    Morphism m = zeros(p.size(), p.size());
    for (std::size_t i = 1; i <= p.size(); ++i) m.data[(p(i) - 1) * p.size() + (i - 1)] = S::one();
    return m;
  }

  Morphism identity(Object n) const { return permutation_matrix(Perm::identity(n)); }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (g.cols != f.rows) throw Error("MatCat: composing " + show(g) + " after " + show(f));
    Morphism out = zeros(g.rows, f.cols);
    for (std::size_t i = 0; i < g.rows; ++i)
      for (std::size_t k = 0; k < g.cols; ++k) {
        Value a = g.at(i, k);
        if (a == S::zero()) continue;
        for (std::size_t j = 0; j < f.cols; ++j)
          out.data[i * f.cols + j] = S::add(out.data[i * f.cols + j], S::mul(a, f.at(k, j)));
      }
    return out;
  }

  Object unit() const { return 0; }
  Object tensor_obj(Object a, Object b) const { return a + b; }

  Morphism tensor_mor(const Morphism& f, const Morphism& g) const {
    Morphism out = zeros(f.rows + g.rows, f.cols + g.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
      for (std::size_t j = 0; j < f.cols; ++j) out.data[i * out.cols + j] = f.at(i, j);
    for (std::size_t i = 0; i < g.rows; ++i)
      for (std::size_t j = 0; j < g.cols; ++j) out.data[(f.rows + i) * out.cols + f.cols + j] = g.at(i, j);
    return out;
  }

  Morphism braiding(Object m, Object n) const {
    return permutation_matrix(block_shuffle(Perm({2, 1}), {m, n}));
  }

  bool hom_nonempty(Object, Object) const { return true; }
  std::string show(Object n) const { return std::to_string(n); }
  std::string show(const Morphism& f) const {
    std::string s = std::to_string(f.rows) + "x" + std::to_string(f.cols) + "[";
    for (std::size_t i = 0; i < f.rows; ++i) {
      if (i) s += ",";
      s += "[";
      for (std::size_t j = 0; j < f.cols; ++j) {
        if (j) s += ",";
        s += std::to_string(static_cast<std::uint64_t>(f.at(i, j)));
      }
      s += "]";
    }
    return s + "]";
  }
};

// Words over a finite alphabet; morphisms are letter-preserving bijections of positions.
struct FreePerm {
  std::size_t letters = 3;

  using Object = std::vector<std::size_t>;
  struct Morphism {
    Object src;
    Object dst;
    Perm map;  // position i of src goes to position map(i) of dst
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  std::string name() const;
  Object dom(const Morphism& f) const { return f.src; }
  Object cod(const Morphism& f) const { return f.dst; }
  Morphism make(Object src, Object dst, Perm map) const;
  Morphism identity(const Object& w) const { return {w, w, Perm::identity(w.size())}; }
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Object unit() const { return {}; }
  Object tensor_obj(const Object& a, const Object& b) const;
  Morphism tensor_mor(const Morphism& f, const Morphism& g) const;
  Morphism braiding(const Object& v, const Object& w) const;
  bool hom_nonempty(const Object& a, const Object& b) const;
  std::string show(const Object& w) const;
  std::string show(const Morphism& f) const;
};

// Sample strict symmetric monoidal functors.
template <class S = NatSemiring>
Functor<SymCat, MatCat<S>> permutation_matrices() {
  return {"permutation-matrices", [](const SymCat::Object& n) { return n; },
          [](const SymCat::Morphism& f) { return MatCat<S>::permutation_matrix(f.perm); }};
}

Functor<FreePerm, SymCat> forget_labels();
Functor<SymCat, FreePerm> single_letter();
// Erases one letter everywhere; words made of that letter go to the unit.
Functor<FreePerm, FreePerm> delete_letter(std::size_t letter);

}  // namespace parsum
