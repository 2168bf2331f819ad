#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parsum/core.hpp"
#include "parsum/finset.hpp"

namespace parsum {

// An injective map omega -> omega that is eventually affine on residue classes.
//
// Internally every row is held in a refined form: explicit values on 1..cutoff,
// and for each class r in [0, period) the progression
//   cutoff + 1 + r + period*k  |->  base[r] + step[r]*k.
// Construction normalizes to the smallest cutoff and a locally minimal period.
class ApRow {
 public:
  struct Segment {
    Nat start;   // domain start a
    Nat period;  // domain period p
    Nat image;   // image start c
    Nat step;    // image step e
    friend bool operator==(const Segment&, const Segment&) = default;
  };

  ApRow();  // identity

  static ApRow identity() { return ApRow(); }
  // j |-> scale*j + offset; requires scale >= 1 and scale + offset >= 1.
  static ApRow affine(Nat scale, Nat offset);
  // Exceptions plus segments must partition omega and give an injective map.
  static ApRow from_parts(const std::map<Nat, Nat>& exceptions, const std::vector<Segment>& segments);
  // Bijection of omega moving only the listed points; keys and values must be the same set.
  static ApRow finite_permutation(const std::map<Nat, Nat>& moves);
  // Samples f on 1..cutoff+2*period. The caller guarantees f is affine on
  // every residue class mod period beyond cutoff.
  static ApRow tabulate(Nat cutoff, Nat period, const std::function<Nat(Nat)>& f);

  Nat operator()(Nat j) const;
  std::optional<Nat> preimage(Nat n) const;

  Nat cutoff() const { return cutoff_; }
  Nat period() const { return period_; }
  std::map<Nat, Nat> exceptions() const;
  std::vector<Segment> segments() const;

  ApRow refined(Nat cutoff, Nat period) const;
  bool fixes(const FinSet& s) const;
  FinSet image(const FinSet& s) const;
  // Largest j with value <= bound (0 if none).
  Nat last_point_below(Nat bound) const;
  // Surjectivity decided from the refined form.
  bool is_bijective() const;

  std::string str() const;
  static ApRow parse(std::string_view text);

  friend bool operator==(const ApRow& a, const ApRow& b);

 private:
  void normalize();
  void validate() const;
  bool shrink_cutoff();
  bool shrink_period();
  void rebuild_inverse();

  Nat cutoff_ = 0;
  Nat period_ = 1;
  std::vector<Nat> head_;
  std::vector<Nat> base_;
  std::vector<Nat> step_;
  std::vector<std::pair<Nat, Nat>> head_inverse_;  // (value, j) sorted by value
};

bool equal(const ApRow& a, const ApRow& b);
// outer o inner
ApRow compose(const ApRow& outer, const ApRow& inner);
bool images_disjoint(const ApRow& a, const ApRow& b);
// Bijection w of omega with w(u(s)) = s for s in s_set: a left inverse of u on s_set.
ApRow left_inverse_on(const ApRow& u, const FinSet& s_set);

// Injective map A x omega -> omega for a finite ordered label list A.
class ApInjection {
 public:
  ApInjection() = default;
  ApInjection(std::vector<Nat> labels, std::vector<ApRow> rows);

  static ApInjection single(ApRow u) { return ApInjection({1}, {std::move(u)}); }

  const std::vector<Nat>& labels() const { return labels_; }
  const std::vector<ApRow>& rows() const { return rows_; }
  std::size_t size() const { return labels_.size(); }
  bool has_label(Nat a) const;
  std::size_t position(Nat a) const;
  const ApRow& row(Nat a) const { return rows_[position(a)]; }
  FinSet index() const { return FinSet(labels_); }

  Nat apply(Nat a, Nat j) const { return row(a)(j); }
  std::optional<std::pair<Nat, Nat>> preimage(Nat n) const;

  std::string str() const;
  static ApInjection parse(std::string_view text);

 private:
  std::vector<Nat> labels_;
  std::vector<ApRow> rows_;
};

bool equal(const ApInjection& a, const ApInjection& b);
bool operator==(const ApInjection& a, const ApInjection& b);

ApInjection compose_outer(const ApRow& u, const ApInjection& phi);
ApInjection precompose_inner(const ApInjection& phi, const ApRow& u);
// Rows of phi, then rows of theta; labels become 1..|A|+|B|.
ApInjection block_sum(const ApInjection& phi, const ApInjection& theta);
// Keeps the labels of sub.
ApInjection restrict(const ApInjection& phi, const FinSet& sub);
// Rows at positions [first, first+count), relabelled 1..count.
ApInjection slice(const ApInjection& phi, std::size_t first, std::size_t count);
// Relabel rows 1..n in their current order.
ApInjection relabel_consecutive(const ApInjection& phi);
// Result over the domain labels of sigma: row a' is row sigma(a') of phi.
ApInjection reindex(const ApInjection& phi, const std::vector<std::pair<Nat, Nat>>& sigma);
// Block rotation: row i becomes row i+m for i <= n, row i-n otherwise.
ApInjection bar(const ApInjection& phi, std::size_t m);

bool images_disjoint(const ApInjection& a, const ApInjection& b);
bool equal_on(const ApInjection& a, const ApInjection& b, const std::vector<std::pair<Nat, Nat>>& points);
FinSet image_restricted(const ApInjection& phi, const FinSet& sub, const FinSet& s);

ApInjection canonical_interleave(std::size_t m);
ApInjection monotone_for(const std::vector<FinSet>& shape);

}  // namespace parsum
