#include "parsum/inj.hpp"

#include "parsum/fault.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace parsum {

namespace {

std::vector<Nat> prime_factors(Nat n) {
  std::vector<Nat> out;
  for (Nat p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool progressions_meet(Nat c1, Nat e1, Nat c2, Nat e2) {
  // c1 + e1*k1 = c2 + e2*k2 has a solution with k1, k2 >= 0 iff gcd(e1,e2) | c2-c1:
  // the solution set is a two-sided progression, so it contains large nonnegative pairs.
  return (c2 - c1) % std::gcd(e1, e2) == 0;
}

bool progression_hits(Nat c, Nat e, Nat v) { return v >= c && (v - c) % e == 0; }

// Minimal recursive-descent cursor for the textual formats.
class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(std::string_view tok) {
    skip_ws();
    return s_.substr(i_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    i_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  Nat number() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    Nat v = 0;
    for (std::size_t k = start; k < i_; ++k) v = checked_add(checked_mul(v, 10), s_[k] - '0');
    return v;
  }
  bool at_end() {
    skip_ws();
    return i_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at offset " + std::to_string(i_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

ApRow parse_row_body(Cursor& c) {
  std::map<Nat, Nat> exceptions;
  std::vector<ApRow::Segment> segments;
  if (c.accept("except{")) {
    if (!c.accept("}")) {
      do {
        Nat j = c.number();
        c.expect("=");
        Nat v = c.number();
        if (!exceptions.emplace(j, v).second) c.fail("repeated exception key");
      } while (c.accept(","));
      c.expect("}");
    }
  }
  while (c.accept("seg{")) {
    ApRow::Segment s{};
    s.start = c.number();
    c.expect(",");
    s.period = c.number();
    c.expect(",");
    s.image = c.number();
    c.expect(",");
    s.step = c.number();
    c.expect("}");
    segments.push_back(s);
  }
  return ApRow::from_parts(exceptions, segments);
}

}  // namespace

ApRow::ApRow() : cutoff_(0), period_(1), base_{1}, step_{1} {}

ApRow ApRow::affine(Nat scale, Nat offset) {
  if (scale < 1 || scale + offset < 1) throw Error("affine row must be increasing with positive values");
  ApRow r;
  r.base_ = {scale + offset};
  r.step_ = {scale};
  return r;
}

ApRow ApRow::tabulate(Nat cutoff, Nat period, const std::function<Nat(Nat)>& f) {
  if (cutoff < 0 || period < 1) throw Error("bad tabulation parameters");
  ApRow r;
  r.cutoff_ = cutoff;
  r.period_ = period;
  r.head_.resize(static_cast<std::size_t>(cutoff));
  for (Nat j = 1; j <= cutoff; ++j) r.head_[static_cast<std::size_t>(j - 1)] = f(j);
  r.base_.resize(static_cast<std::size_t>(period));
  r.step_.resize(static_cast<std::size_t>(period));
  for (Nat k = 0; k < period; ++k) {
    Nat j = cutoff + 1 + k;
    Nat b = f(j);
    Nat e = f(checked_add(j, period)) - b;
    if (e < 1) throw Error("map is not injective on a residue class");
    r.base_[static_cast<std::size_t>(k)] = b;
    r.step_[static_cast<std::size_t>(k)] = e;
  }
  r.normalize();
  r.validate();
  r.rebuild_inverse();
  return r;
}

ApRow ApRow::from_parts(const std::map<Nat, Nat>& exceptions, const std::vector<Segment>& segments) {
  if (segments.empty()) throw Error("a row needs at least one segment to cover omega");
  Nat period = 1;
  Nat top = 0;
  for (const auto& [j, v] : exceptions) {
    if (j < 1 || v < 1) throw Error("exception entries must be positive");
    top = std::max(top, j);
  }
  for (const auto& s : segments) {
    if (s.start < 1 || s.period < 1 || s.image < 1 || s.step < 1)
      throw Error("segment parameters must be positive");
    period = checked_lcm(period, s.period);
    top = std::max(top, s.start);
  }
  auto lookup = [&](Nat j) -> std::optional<Nat> {
    std::optional<Nat> hit;
    int count = 0;
    if (auto it = exceptions.find(j); it != exceptions.end()) {
      hit = it->second;
      ++count;
    }
    for (const auto& s : segments) {
      if (j >= s.start && (j - s.start) % s.period == 0) {
        hit = checked_add(s.image, checked_mul(s.step, (j - s.start) / s.period));
        ++count;
      }
    }
    if (count != 1) return std::nullopt;
    return hit;
  };
  for (Nat j = 1; j <= top + period; ++j) {
    if (!lookup(j)) throw Error("segments and exceptions do not partition omega at " + std::to_string(j));
  }
  return tabulate(top, period, [&](Nat j) { return *lookup(j); });
}

ApRow ApRow::finite_permutation(const std::map<Nat, Nat>& moves) {
  std::set<Nat> keys, values;
  Nat top = 0;
  for (const auto& [k, v] : moves) {
    if (k < 1 || v < 1) throw Error("permutation entries must be positive");
    keys.insert(k);
    values.insert(v);
    top = std::max(top, k);
  }
  if (keys != values || values.size() != moves.size()) throw Error("moves do not form a permutation");
  return tabulate(top, 1, [&](Nat j) {
    auto it = moves.find(j);
    return it == moves.end() ? j : it->second;
  });
}

Nat ApRow::operator()(Nat j) const {
  if (j < 1) throw Error("injection evaluated at a non-positive point");
  if (j <= cutoff_) return head_[static_cast<std::size_t>(j - 1)];
  Nat d = j - cutoff_ - 1;
  auto r = static_cast<std::size_t>(d % period_);
  return checked_add(base_[r], checked_mul(step_[r], d / period_));
}

std::optional<Nat> ApRow::preimage(Nat n) const {
  auto it = std::lower_bound(head_inverse_.begin(), head_inverse_.end(), std::pair<Nat, Nat>{n, 0});
  if (it != head_inverse_.end() && it->first == n) return it->second;
  for (std::size_t r = 0; r < base_.size(); ++r) {
    if (progression_hits(base_[r], step_[r], n)) {
      Nat k = (n - base_[r]) / step_[r];
      return checked_add(cutoff_ + 1 + static_cast<Nat>(r), checked_mul(period_, k));
    }
  }
  return std::nullopt;
}

std::map<Nat, Nat> ApRow::exceptions() const {
  std::map<Nat, Nat> out;
  for (Nat j = 1; j <= cutoff_; ++j) out[j] = head_[static_cast<std::size_t>(j - 1)];
  return out;
}

std::vector<ApRow::Segment> ApRow::segments() const {
  std::vector<Segment> out;
  for (std::size_t r = 0; r < base_.size(); ++r)
    out.push_back({cutoff_ + 1 + static_cast<Nat>(r), period_, base_[r], step_[r]});
  return out;
}

ApRow ApRow::refined(Nat cutoff, Nat period) const {
  if (cutoff < cutoff_ || period % period_ != 0) throw Error("refinement must coarsen neither cutoff nor period");
  ApRow r;
  r.cutoff_ = cutoff;
  r.period_ = period;
  r.head_.resize(static_cast<std::size_t>(cutoff));
  for (Nat j = 1; j <= cutoff; ++j) r.head_[static_cast<std::size_t>(j - 1)] = (*this)(j);
  r.base_.resize(static_cast<std::size_t>(period));
  r.step_.resize(static_cast<std::size_t>(period));
  for (Nat k = 0; k < period; ++k) {
    Nat j = cutoff + 1 + k;
    r.base_[static_cast<std::size_t>(k)] = (*this)(j);
    r.step_[static_cast<std::size_t>(k)] = (*this)(j + period) - (*this)(j);
  }
  r.rebuild_inverse();
  return r;
}

bool ApRow::fixes(const FinSet& s) const {
  return std::all_of(s.begin(), s.end(), [&](Nat x) { return (*this)(x) == x; });
}

FinSet ApRow::image(const FinSet& s) const {
  std::vector<Nat> out;
  for (Nat x : s) out.push_back((*this)(x));
  return FinSet(std::move(out));
}

Nat ApRow::last_point_below(Nat bound) const {
  Nat last = 0;
  for (Nat n = 1; n <= bound; ++n)
    if (auto j = preimage(n)) last = std::max(last, *j);
  return last;
}

bool ApRow::is_bijective() const {
  Nat top = 0, modulus = 1;
  for (Nat v : head_) top = std::max(top, v);
  for (std::size_t r = 0; r < base_.size(); ++r) {
    top = std::max(top, base_[r]);
    modulus = checked_lcm(modulus, step_[r]);
  }
  for (Nat n = 1; n <= top + modulus; ++n)
    if (!preimage(n)) return false;
  return true;
}

bool ApRow::shrink_cutoff() {
  if (cutoff_ == 0) return false;
  auto last = static_cast<std::size_t>(period_ - 1);
  Nat v = head_.back();
  Nat e = step_[last];
  if (v + e != base_[last]) return false;
  base_.insert(base_.begin(), v);
  step_.insert(step_.begin(), e);
  base_.pop_back();
  step_.pop_back();
  head_.pop_back();
  --cutoff_;
  return true;
}

bool ApRow::shrink_period() {
  for (Nat q : prime_factors(period_)) {
    Nat p = period_ / q;
    std::vector<Nat> nb(static_cast<std::size_t>(p)), ns(static_cast<std::size_t>(p));
    bool ok = true;
    for (Nat r = 0; r < p && ok; ++r) {
      Nat b = base_[static_cast<std::size_t>(r)];
      Nat s = base_[static_cast<std::size_t>(r + p)] - b;
      if (s < 1) ok = false;
      for (Nat t = 0; t < q && ok; ++t) {
        auto idx = static_cast<std::size_t>(r + t * p);
        ok = base_[idx] == b + s * t && step_[idx] == s * q;
      }
      nb[static_cast<std::size_t>(r)] = b;
      ns[static_cast<std::size_t>(r)] = s;
    }
    if (ok) {
      period_ = p;
      base_ = std::move(nb);
      step_ = std::move(ns);
      return true;
    }
  }
  return false;
}

void ApRow::normalize() {
  bool changed = true;
  while (changed) {
    changed = false;
    while (shrink_cutoff()) changed = true;
    while (shrink_period()) changed = true;
  }
}

void ApRow::validate() const {
  std::set<Nat> seen;
  for (Nat v : head_) {
    if (v < 1) throw Error("injection values must be positive");
    if (!seen.insert(v).second) throw Error("injection repeats the value " + std::to_string(v));
  }
  for (std::size_t r = 0; r < base_.size(); ++r) {
    if (base_[r] < 1 || step_[r] < 1) throw Error("injection segment must be increasing and positive");
    for (Nat v : head_)
      if (progression_hits(base_[r], step_[r], v)) throw Error("injection repeats the value " + std::to_string(v));
    for (std::size_t s = r + 1; s < base_.size(); ++s)
      if (progressions_meet(base_[r], step_[r], base_[s], step_[s]))
        throw Error("injection segments overlap in their images");
  }
}

void ApRow::rebuild_inverse() {
  head_inverse_.clear();
  for (std::size_t j = 0; j < head_.size(); ++j) head_inverse_.emplace_back(head_[j], static_cast<Nat>(j + 1));
  std::sort(head_inverse_.begin(), head_inverse_.end());
}

std::string ApRow::str() const {
  std::string s;
  if (cutoff_ > 0) {
    s += "except{";
    for (Nat j = 1; j <= cutoff_; ++j) {
      if (j > 1) s += ",";
      s += std::to_string(j) + "=" + std::to_string(head_[static_cast<std::size_t>(j - 1)]);
    }
    s += "}";
  }
  for (const auto& g : segments()) {
    if (!s.empty()) s += " ";
    s += "seg{" + std::to_string(g.start) + "," + std::to_string(g.period) + "," + std::to_string(g.image) + "," +
         std::to_string(g.step) + "}";
  }
  return s;
}

ApRow ApRow::parse(std::string_view text) {
  Cursor c(text);
  ApRow r = parse_row_body(c);
  if (!c.at_end()) c.fail("trailing input");
  return r;
}

bool equal(const ApRow& a, const ApRow& b) {
  Nat cutoff = std::max(a.cutoff(), b.cutoff());
  Nat period = checked_lcm(a.period(), b.period());
  ApRow ra = a.refined(cutoff, period), rb = b.refined(cutoff, period);
  return ra.exceptions() == rb.exceptions() && ra.segments() == rb.segments();
}

bool operator==(const ApRow& a, const ApRow& b) { return equal(a, b); }

ApRow compose(const ApRow& outer, const ApRow& inner) {
  // Beyond this cutoff inner lands past outer's cutoff, and a shift of
  // inner.period*outer.period keeps inner's values in one class of outer.
  Nat cutoff = std::max(inner.cutoff(), inner.last_point_below(outer.cutoff()));
  Nat period = checked_mul(inner.period(), outer.period());
  if (fault_active(Fault::inj_compose)) period = inner.period();
  return ApRow::tabulate(cutoff, period, [&](Nat j) { return outer(inner(j)); });
}

bool images_disjoint(const ApRow& a, const ApRow& b) {
  for (const auto& [j, v] : a.exceptions())
    if (b.preimage(v)) return false;
  for (const auto& [j, v] : b.exceptions())
    if (a.preimage(v)) return false;
  for (const auto& s : a.segments())
    for (const auto& t : b.segments())
      if (progressions_meet(s.image, s.step, t.image, t.step)) return false;
  return true;
}

ApRow left_inverse_on(const ApRow& u, const FinSet& s_set) {
  std::map<Nat, Nat> moves;
  FinSet d = u.image(s_set);
  for (Nat s : s_set) moves[u(s)] = s;
  FinSet from = s_set.minus(d), to = d.minus(s_set);
  for (std::size_t i = 0; i < from.size(); ++i) moves[from[i]] = to[i];
  return ApRow::finite_permutation(moves);
}

ApInjection::ApInjection(std::vector<Nat> labels, std::vector<ApRow> rows)
    : labels_(std::move(labels)), rows_(std::move(rows)) {
  if (labels_.size() != rows_.size()) throw Error("label and row counts differ");
  std::set<Nat> seen;
  for (Nat a : labels_) {
    if (a < 1) throw Error("labels must be positive");
    if (!seen.insert(a).second) throw Error("repeated label " + std::to_string(a));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t k = i + 1; k < rows_.size(); ++k)
      if (!images_disjoint(rows_[i], rows_[k]))
        throw Error("rows " + std::to_string(labels_[i]) + " and " + std::to_string(labels_[k]) + " overlap");
}

bool ApInjection::has_label(Nat a) const { return std::find(labels_.begin(), labels_.end(), a) != labels_.end(); }

std::size_t ApInjection::position(Nat a) const {
  auto it = std::find(labels_.begin(), labels_.end(), a);
  if (it == labels_.end()) throw Error("unknown label " + std::to_string(a));
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::pair<Nat, Nat>> ApInjection::preimage(Nat n) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (auto j = rows_[i].preimage(n)) return std::pair{labels_[i], *j};
  return std::nullopt;
}

std::string ApInjection::str() const {
  std::string s = "inj{";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += "; ";
    s += std::to_string(labels_[i]) + ": " + rows_[i].str();
  }
  return s + "}";
}

ApInjection ApInjection::parse(std::string_view text) {
  Cursor c(text);
  c.expect("inj{");
  std::vector<Nat> labels;
  std::vector<ApRow> rows;
  if (!c.accept("}")) {
    do {
      labels.push_back(c.number());
      c.expect(":");
      rows.push_back(parse_row_body(c));
    } while (c.accept(";"));
    c.expect("}");
  }
  if (!c.at_end()) c.fail("trailing input");
  return ApInjection(std::move(labels), std::move(rows));
}

bool equal(const ApInjection& a, const ApInjection& b) {
  if (a.labels() != b.labels()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a.rows()[i], b.rows()[i])) return false;
  return true;
}

bool operator==(const ApInjection& a, const ApInjection& b) { return equal(a, b); }

ApInjection compose_outer(const ApRow& u, const ApInjection& phi) {
  std::vector<ApRow> rows;
  for (const auto& r : phi.rows()) rows.push_back(compose(u, r));
  return ApInjection(phi.labels(), std::move(rows));
}

ApInjection precompose_inner(const ApInjection& phi, const ApRow& u) {
  std::vector<ApRow> rows;
  for (const auto& r : phi.rows()) rows.push_back(compose(r, u));
  return ApInjection(phi.labels(), std::move(rows));
}

ApInjection block_sum(const ApInjection& phi, const ApInjection& theta) {
  if (!images_disjoint(phi, theta)) throw Error("block sum of injections with overlapping images");
  std::vector<Nat> labels;
  std::vector<ApRow> rows = phi.rows();
  rows.insert(rows.end(), theta.rows().begin(), theta.rows().end());
  for (std::size_t i = 0; i < rows.size(); ++i) labels.push_back(static_cast<Nat>(i + 1));
  return ApInjection(std::move(labels), std::move(rows));
}

ApInjection restrict(const ApInjection& phi, const FinSet& sub) {
  std::vector<Nat> labels;
  std::vector<ApRow> rows;
  for (Nat a : sub)
    if (!phi.has_label(a)) throw Error("restriction to a label outside the index");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (sub.contains(phi.labels()[i])) {
      labels.push_back(phi.labels()[i]);
      rows.push_back(phi.rows()[i]);
    }
  }
  return ApInjection(std::move(labels), std::move(rows));
}

ApInjection slice(const ApInjection& phi, std::size_t first, std::size_t count) {
  if (first + count > phi.size()) throw Error("slice out of range");
  std::vector<Nat> labels;
  std::vector<ApRow> rows;
  for (std::size_t i = 0; i < count; ++i) {
    labels.push_back(static_cast<Nat>(i + 1));
    rows.push_back(phi.rows()[first + i]);
  }
  return ApInjection(std::move(labels), std::move(rows));
}

ApInjection relabel_consecutive(const ApInjection& phi) { return slice(phi, 0, phi.size()); }

ApInjection reindex(const ApInjection& phi, const std::vector<std::pair<Nat, Nat>>& sigma) {
  std::set<Nat> targets;
  std::vector<Nat> labels;
  std::vector<ApRow> rows;
  for (const auto& [from, to] : sigma) {
    if (!targets.insert(to).second) throw Error("reindexing map is not injective");
    labels.push_back(from);
    rows.push_back(phi.row(to));
  }
  if (targets.size() != phi.size()) throw Error("reindexing map is not surjective");
  return ApInjection(std::move(labels), std::move(rows));
}

ApInjection bar(const ApInjection& phi, std::size_t m) {
  if (m > phi.size()) throw Error("bar: block size exceeds the index");
  std::size_t n = phi.size() - m;
  std::vector<ApRow> rows;
  for (std::size_t i = 0; i < phi.size(); ++i) rows.push_back(phi.rows()[i < n ? i + m : i - n]);
  return ApInjection(phi.labels(), std::move(rows));
}

bool images_disjoint(const ApInjection& a, const ApInjection& b) {
  for (const auto& r : a.rows())
    for (const auto& s : b.rows())
      if (!images_disjoint(r, s)) return false;
  return true;
}

bool equal_on(const ApInjection& a, const ApInjection& b, const std::vector<std::pair<Nat, Nat>>& points) {
  for (const auto& [label, j] : points) {
    if (!a.has_label(label) || !b.has_label(label)) return false;
    if (a.apply(label, j) != b.apply(label, j)) return false;
  }
  return true;
}

FinSet image_restricted(const ApInjection& phi, const FinSet& sub, const FinSet& s) {
  std::vector<Nat> out;
  for (Nat a : sub)
    for (Nat j : s) out.push_back(phi.apply(a, j));
  return FinSet(std::move(out));
}

ApInjection canonical_interleave(std::size_t m) {
  std::vector<Nat> labels;
  std::vector<ApRow> rows;
  auto mm = static_cast<Nat>(m);
  for (Nat i = 1; i <= mm; ++i) {
    labels.push_back(i);
    rows.push_back(ApRow::affine(mm, i - mm));
  }
  return ApInjection(std::move(labels), std::move(rows));
}

ApInjection monotone_for(const std::vector<FinSet>& shape) {
  auto m = static_cast<Nat>(shape.size());
  Nat total = 0;
  std::vector<Nat> offset;
  for (const auto& s : shape) {
    offset.push_back(total);
    total += static_cast<Nat>(s.size());
  }
  std::vector<Nat> labels;
  std::vector<ApRow> rows;
  for (Nat i = 1; i <= m; ++i) {
    const FinSet& s = shape[static_cast<std::size_t>(i - 1)];
    Nat before = offset[static_cast<std::size_t>(i - 1)];
    Nat top = s.empty() ? 0 : s.elements().back();
    labels.push_back(i);
    rows.push_back(ApRow::tabulate(top, 1, [&](Nat j) {
      auto below = static_cast<Nat>(std::lower_bound(s.begin(), s.end(), j) - s.begin());
      if (s.contains(j)) return before + below + 1;
      return total + i + m * ((j - 1) - below);
    }));
  }
  return ApInjection(std::move(labels), std::move(rows));
}

}  // namespace parsum
