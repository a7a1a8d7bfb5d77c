#include "welded/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace welded {

std::vector<ArcRelation> arc_relations(const GaussCode& g, const LongArcs& arcs) {
  std::vector<ArcRelation> rels;
  for (const auto& [id, info] : g.crossings()) {
    ArcRelation r;
    r.crossing = id;
    r.in = arcs.before(g, info.under);
    r.out = arcs.after[info.under.component][info.under.position];
    r.over = arcs.after[info.over.component][info.over.position];
    r.exponent = to_int(info.sign);
    rels.push_back(r);
  }
  return rels;
}

bool is_valid_coloring(const GaussCode& g, const FiniteQuandle& x, const Coloring& c) {
  auto arcs = long_arcs(g);
  if (c.size() != arcs.count) return false;
  for (int v : c)
    if (v < 0 || static_cast<std::size_t>(v) >= x.size()) return false;
  for (const auto& r : arc_relations(g, arcs))
    if (x.act(c[r.in], c[r.over], r.exponent) != c[r.out]) return false;
  return true;
}

bool is_trivial_coloring(const Coloring& c) {
  return std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
}

namespace {

bool test_bit(const std::uint64_t* w, int v) { return (w[v / 64] >> (v % 64)) & 1U; }
void set_bit(std::uint64_t* w, int v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }

}  // namespace

ColoringSearch::ColoringSearch(const GaussCode& g, const FiniteQuandle& x) : x_(x) {
  auto arcs = long_arcs(g);
  num_arcs_ = arcs.count;
  words_ = std::max<std::size_t>(1, (x.size() + 63) / 64);
  scratch_.assign(3 * words_, 0);
  relations_ = arc_relations(g, arcs);
  relations_of_arc_.resize(num_arcs_);
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& r = relations_[i];
    for (std::size_t a : {r.in, r.over, r.out}) {
      auto& list = relations_of_arc_[a];
      if (list.empty() || list.back() != i) list.push_back(i);
    }
  }
  domains_.assign(num_arcs_ * words_, 0);
  for (std::size_t a = 0; a < num_arcs_; ++a)
    for (int v = 0; v < static_cast<int>(x.size()); ++v) set_bit(&domains_[a * words_], v);
  first_color_.assign(num_arcs_, 0);
  if (x.size() == 0 && num_arcs_ > 0) consistent_ = false;
  if (consistent_) {
    std::vector<std::size_t> all(relations_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    consistent_ = propagate(domains_, std::move(all));
  }
}

std::size_t ColoringSearch::size_of(const Domains& d, std::size_t arc) const {
  std::size_t n = 0;
  for (std::size_t w = 0; w < words_; ++w) n += static_cast<std::size_t>(__builtin_popcountll(d[arc * words_ + w]));
  return n;
}

bool ColoringSearch::restrict_to(Domains& d, std::size_t arc, const std::uint64_t* allowed) const {
  bool changed = false;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t& cur = d[arc * words_ + w];
    std::uint64_t next = cur & allowed[w];
    changed |= next != cur;
    cur = next;
  }
  return changed;
}

// Keeps only values with a supporting triple (in, over, out).
bool ColoringSearch::revise(Domains& d, std::size_t relation, std::vector<std::size_t>& changed) const {
  const auto& r = relations_[relation];
  std::uint64_t* in_ok = scratch_.data();
  std::uint64_t* over_ok = in_ok + words_;
  std::uint64_t* out_ok = over_ok + words_;
  std::fill(scratch_.begin(), scratch_.end(), 0);
  const std::uint64_t* din = &d[r.in * words_];
  const std::uint64_t* dover = &d[r.over * words_];
  const std::uint64_t* dout = &d[r.out * words_];
  for (std::size_t wa = 0; wa < words_; ++wa)
    for (std::uint64_t ba = din[wa]; ba; ba &= ba - 1) {
      const int a = static_cast<int>(wa * 64) + __builtin_ctzll(ba);
      for (std::size_t wb = 0; wb < words_; ++wb)
        for (std::uint64_t bb = dover[wb]; bb; bb &= bb - 1) {
          const int b = static_cast<int>(wb * 64) + __builtin_ctzll(bb);
          if (r.in == r.over && a != b) continue;
          const int c = x_.act(a, b, r.exponent);
          if (!test_bit(dout, c) || (r.out == r.in && c != a) || (r.out == r.over && c != b)) continue;
          set_bit(in_ok, a);
          set_bit(over_ok, b);
          set_bit(out_ok, c);
        }
    }
  const std::pair<std::size_t, const std::uint64_t*> updates[] = {{r.in, in_ok}, {r.over, over_ok}, {r.out, out_ok}};
  for (const auto& [arc, ok] : updates) {
    if (restrict_to(d, arc, ok)) changed.push_back(arc);
    if (size_of(d, arc) == 0) return false;
  }
  return true;
}

bool ColoringSearch::propagate(Domains& d, std::vector<std::size_t> pending) const {
  std::vector<char> queued(relations_.size(), 0);
  for (std::size_t ri : pending) queued[ri] = 1;
  std::vector<std::size_t> changed;
  while (!pending.empty()) {
    std::size_t ri = pending.back();
    pending.pop_back();
    queued[ri] = 0;
    changed.clear();
    if (!revise(d, ri, changed)) return false;
    for (std::size_t arc : changed)
      for (std::size_t rj : relations_of_arc_[arc])
        if (!queued[rj]) {
          queued[rj] = 1;
          pending.push_back(rj);
        }
  }
  return true;
}

bool ColoringSearch::pin(std::size_t arc, int color) {
  if (!consistent_) return false;
  if (arc >= num_arcs_ || color < 0 || static_cast<std::size_t>(color) >= x_.size()) throw std::out_of_range("pin: arc or color out of range");
  std::vector<std::uint64_t> only(words_, 0);
  set_bit(only.data(), color);
  restrict_to(domains_, arc, only.data());
  consistent_ = size_of(domains_, arc) == 1 && propagate(domains_, relations_of_arc_[arc]);
  return consistent_;
}

void ColoringSearch::prefer(std::size_t arc, int first_color) {
  branch_order_.push_back(arc);
  first_color_[arc] = first_color;
}

// Preferred arcs first, then the smallest open domain; num_arcs_ when all are fixed.
std::size_t ColoringSearch::branch_arc(const Domains& d, std::size_t& open) const {
  open = 0;
  std::size_t next = num_arcs_;
  std::size_t best = SIZE_MAX;
  for (std::size_t a = 0; a < num_arcs_; ++a)
    if (std::size_t s = size_of(d, a); s > 1) {
      ++open;
      if (s < best) {
        best = s;
        next = a;
      }
    }
  for (std::size_t a : branch_order_)
    if (size_of(d, a) > 1) return a;
  return next;
}

bool ColoringSearch::search(Domains& d, const std::function<bool(const Coloring&)>& visit) {
  std::size_t open = 0;
  std::size_t next = branch_arc(d, open);
  if (next == num_arcs_) {
    Coloring c(num_arcs_);
    for (std::size_t a = 0; a < num_arcs_; ++a)
      for (int v = 0; v < static_cast<int>(x_.size()); ++v)
        if (test_bit(&d[a * words_], v)) c[a] = v;
    return visit(c);
  }
  const int n = static_cast<int>(x_.size());
  std::vector<std::uint64_t> only(words_, 0);
  for (int k = 0; k < n; ++k) {
    int color = (first_color_[next] + k) % n;
    if (!test_bit(&d[next * words_], color)) continue;
    Domains branch = d;
    std::fill(only.begin(), only.end(), 0);
    set_bit(only.data(), color);
    restrict_to(branch, next, only.data());
    if (propagate(branch, relations_of_arc_[next]) && !search(branch, visit)) return false;
  }
  return true;
}

// With one open arc left, arc consistency means every remaining value of it
// satisfies each relation, since all other arcs are fixed.
std::uint64_t ColoringSearch::count_from(const Domains& d) const {
  std::size_t open = 0;
  std::size_t next = branch_arc(d, open);
  if (open == 0) return 1;
  if (open == 1) return size_of(d, next);
  std::uint64_t total = 0;
  std::vector<std::uint64_t> only(words_, 0);
  for (int color = 0; color < static_cast<int>(x_.size()); ++color) {
    if (!test_bit(&d[next * words_], color)) continue;
    Domains branch = d;
    std::fill(only.begin(), only.end(), 0);
    set_bit(only.data(), color);
    restrict_to(branch, next, only.data());
    if (propagate(branch, relations_of_arc_[next]) && __builtin_add_overflow(total, count_from(branch), &total))
      throw std::overflow_error("coloring count overflow");
  }
  return total;
}

void ColoringSearch::run(const std::function<bool(const Coloring&)>& visit) {
  if (!consistent_) return;
  Domains d = domains_;
  search(d, visit);
}

std::uint64_t ColoringSearch::count() const { return consistent_ ? count_from(domains_) : 0; }

std::uint64_t count_colorings(const GaussCode& g, const FiniteQuandle& x) { return ColoringSearch(g, x).count(); }

std::vector<Coloring> enumerate_colorings(const GaussCode& g, const FiniteQuandle& x, std::size_t limit) {
  std::vector<Coloring> out;
  if (limit == 0) return out;
  ColoringSearch(g, x).run([&](const Coloring& c) {
    out.push_back(c);
    return out.size() < limit;
  });
  return out;
}

std::optional<Coloring> find_nontrivial_coloring(const GaussCode& g, const FiniteQuandle& x) {
  std::optional<Coloring> found;
  ColoringSearch(g, x).run([&](const Coloring& c) {
    if (is_trivial_coloring(c)) return true;
    found = c;
    return false;
  });
  return found;
}

namespace {

// Component c of d corresponds to components 2c (right copy) and 2c+1 (left
// copy) of the parallel diagram; right-copy arcs match d's arcs one to one.
void check_shape(const GaussCode& d, const GaussCode& p, const LongArcs& d_arcs, const LongArcs& p_arcs) {
  if (p.num_components() != 2 * d.num_components()) throw std::logic_error("parallel diagram has the wrong number of components");
  for (std::size_t c = 0; c < d.num_components(); ++c)
    if (p_arcs.per_component[2 * c] != d_arcs.per_component[c])
      throw std::logic_error("right copy arcs do not match the original arcs");
}

}  // namespace

Coloring extend_coloring(const GaussCode& d, const FiniteQuandle& x, const Coloring& c, Orientation o) {
  if (!is_valid_coloring(d, x, c)) throw std::invalid_argument("extend_coloring: input is not a coloring of the diagram");
  GaussCode p = parallel_gauss(d, o);
  auto d_arcs = long_arcs(d);
  auto p_arcs = long_arcs(p);
  check_shape(d, p, d_arcs, p_arcs);
  ColoringSearch search(p, x);
  for (std::size_t comp = 0; comp < d.num_components(); ++comp) {
    for (std::size_t k = 0; k < d_arcs.per_component[comp]; ++k)
      if (!search.pin(p_arcs.offset[2 * comp] + k, c[d_arcs.offset[comp] + k]))
        throw std::runtime_error("extend_coloring: right copy rejects the original coloring");
  }
  for (std::size_t comp = 0; comp < d.num_components(); ++comp)
    search.prefer(p_arcs.offset[2 * comp + 1], c[d_arcs.offset[comp]]);
  std::optional<Coloring> lifted;
  search.run([&](const Coloring& col) {
    lifted = col;
    return false;
  });
  if (!lifted) throw std::runtime_error("extend_coloring: no left-copy seed closes up");
  return *lifted;
}

Coloring restrict_to_main(const GaussCode& d, const Coloring& parallel_coloring, Orientation o) {
  GaussCode p = parallel_gauss(d, o);
  auto d_arcs = long_arcs(d);
  auto p_arcs = long_arcs(p);
  check_shape(d, p, d_arcs, p_arcs);
  Coloring out(d_arcs.count);
  for (std::size_t comp = 0; comp < d.num_components(); ++comp)
    for (std::size_t k = 0; k < d_arcs.per_component[comp]; ++k)
      out[d_arcs.offset[comp] + k] = parallel_coloring.at(p_arcs.offset[2 * comp] + k);
  return out;
}

}  // namespace welded
