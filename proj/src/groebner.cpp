#include "gbdecode/groebner.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <queue>
#include <sstream>

#include "gbdecode/error.hpp"

namespace gbdecode {

namespace {

using Exp = std::uint32_t;

// Packed monomial layout for one order: per block, a degree slot followed by
// the block's variables in priority order. Divisibility, products and
// quotients act slot-wise (degree slots included); only lcm recomputes the
// degree slots.
class Layout {
 public:
  explicit Layout(const MonomialOrder& order) : universe_(order.universe()) {
    slot_of_index_.assign(universe_->size(), 0);
    std::size_t slot = 0;
    for (std::size_t b = 0; b < order.blocks().size(); ++b) {
      Block block;
      block.degree_slot = slot++;
      block.begin = slot;
      block.grevlex = order.blocks()[b].scheme == BlockScheme::GRevLex;
      for (std::size_t index : order.block_indices()[b]) {
        slot_of_index_[index] = slot;
        index_of_slot_.resize(slot + 1, 0);
        index_of_slot_[slot] = index;
        ++slot;
      }
      block.end = slot;
      blocks_.push_back(block);
    }
    stride_ = slot;
    index_of_slot_.resize(stride_, 0);
  }

  std::size_t stride() const { return stride_; }

  int compare(const Exp* a, const Exp* b) const {
    for (const Block& block : blocks_) {
      if (block.grevlex) {
        if (a[block.degree_slot] != b[block.degree_slot]) return a[block.degree_slot] < b[block.degree_slot] ? -1 : 1;
        for (std::size_t s = block.end; s-- > block.begin;)
          if (a[s] != b[s]) return a[s] > b[s] ? -1 : 1;
      } else {
        for (std::size_t s = block.begin; s < block.end; ++s)
          if (a[s] != b[s]) return a[s] < b[s] ? -1 : 1;
      }
    }
    return 0;
  }

  bool divides(const Exp* a, const Exp* b) const {
    for (std::size_t s = 0; s < stride_; ++s)
      if (a[s] > b[s]) return false;
    return true;
  }

  bool coprime(const Exp* a, const Exp* b) const {
    for (const Block& block : blocks_)
      for (std::size_t s = block.begin; s < block.end; ++s)
        if (a[s] != 0 && b[s] != 0) return false;
    return true;
  }

  void multiply(const Exp* a, const Exp* b, Exp* out) const {
    for (std::size_t s = 0; s < stride_; ++s) out[s] = a[s] + b[s];
  }

  // out = b / a
  void quotient(const Exp* a, const Exp* b, Exp* out) const {
    for (std::size_t s = 0; s < stride_; ++s) out[s] = b[s] - a[s];
  }

  void lcm(const Exp* a, const Exp* b, Exp* out) const {
    for (const Block& block : blocks_) {
      Exp degree = 0;
      for (std::size_t s = block.begin; s < block.end; ++s) {
        out[s] = std::max(a[s], b[s]);
        degree += out[s];
      }
      out[block.degree_slot] = degree;
    }
  }

  std::uint64_t mask(const Exp* a) const {
    std::uint64_t m = 0;
    for (std::size_t s = 0; s < stride_; ++s)
      if (a[s] != 0) m |= std::uint64_t{1} << (s % 64);
    return m;
  }

  void encode(const Monomial& m, Exp* out) const {
    for (const Block& block : blocks_) {
      Exp degree = 0;
      for (std::size_t s = block.begin; s < block.end; ++s) {
        out[s] = m[index_of_slot_[s]];
        degree += out[s];
      }
      out[block.degree_slot] = degree;
    }
  }

  Monomial decode(const Exp* a) const {
    Monomial m(universe_->size());
    for (const Block& block : blocks_)
      for (std::size_t s = block.begin; s < block.end; ++s) m.set(index_of_slot_[s], a[s]);
    return m;
  }

  const UniversePtr& universe() const { return universe_; }

 private:
  struct Block {
    std::size_t degree_slot = 0;
    std::size_t begin = 0;
    std::size_t end = 0;
    bool grevlex = false;
  };

  UniversePtr universe_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> slot_of_index_;
  std::vector<std::size_t> index_of_slot_;
  std::size_t stride_ = 0;
};

// A polynomial as packed terms sorted by decreasing monomial.
struct Packed {
  std::vector<Exp> data;
  std::size_t terms(std::size_t stride) const { return data.size() / stride; }
  bool empty() const { return data.empty(); }
};

class Engine {
 public:
  explicit Engine(const MonomialOrder& order) : layout_(order), stride_(layout_.stride()) {}

  const Layout& layout() const { return layout_; }
  std::size_t stride() const { return stride_; }

  Packed pack(const Poly2& f) const {
    const std::size_t n = f.term_count();
    std::vector<Exp> raw(n * stride_);
    for (std::size_t k = 0; k < n; ++k) layout_.encode(f.monomials()[k], raw.data() + k * stride_);
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return layout_.compare(raw.data() + a * stride_, raw.data() + b * stride_) > 0;
    });
    Packed p;
    p.data.resize(raw.size());
    for (std::size_t k = 0; k < n; ++k)
      std::copy_n(raw.data() + perm[k] * stride_, stride_, p.data.data() + k * stride_);
    return p;
  }

  Poly2 unpack(const Packed& p) const {
    std::vector<Monomial> monomials;
    const std::size_t n = p.terms(stride_);
    monomials.reserve(n);
    for (std::size_t k = 0; k < n; ++k) monomials.push_back(layout_.decode(p.data.data() + k * stride_));
    return Poly2::from_monomials(layout_.universe(), std::move(monomials));
  }

  // out = a[a_begin..] + mono * b[b_begin..], merged and cancelled. `mono`
  // may be null for the identity.
  void merge(const Packed& a, std::size_t a_begin, const Exp* mono, const Packed& b, std::size_t b_begin,
             std::vector<Exp>& out) const {
    out.clear();
    const std::size_t na = a.terms(stride_);
    const std::size_t nb = b.terms(stride_);
    out.reserve((na - a_begin + nb - b_begin) * stride_);
    std::vector<Exp>& scratch = scratch_;
    scratch.resize(stride_);
    std::size_t i = a_begin, j = b_begin;
    auto load_b = [&](std::size_t k) {
      const Exp* t = b.data.data() + k * stride_;
      if (mono)
        layout_.multiply(mono, t, scratch.data());
      else
        std::copy_n(t, stride_, scratch.data());
    };
    if (j < nb) load_b(j);
    while (i < na && j < nb) {
      const Exp* ta = a.data.data() + i * stride_;
      int c = layout_.compare(ta, scratch.data());
      if (c > 0) {
        out.insert(out.end(), ta, ta + stride_);
        ++i;
      } else if (c < 0) {
        out.insert(out.end(), scratch.begin(), scratch.end());
        if (++j < nb) load_b(j);
      } else {
        ++i;
        if (++j < nb) load_b(j);
      }
    }
    if (i < na) out.insert(out.end(), a.data.begin() + i * stride_, a.data.end());
    while (j < nb) {
      out.insert(out.end(), scratch.begin(), scratch.end());
      if (++j < nb) load_b(j);
    }
  }

  // Reducer lookup over the basis entries flagged active.
  struct Reducers {
    const std::vector<Packed>* polys = nullptr;
    const std::vector<std::uint64_t>* masks = nullptr;
    const std::vector<char>* active = nullptr;
  };

  std::optional<std::size_t> find_reducer(const Exp* t, std::uint64_t t_mask, const Reducers& reducers,
                                          std::size_t skip = SIZE_MAX) const {
    const auto& polys = *reducers.polys;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (k == skip || !(*reducers.active)[k]) continue;
      if (((*reducers.masks)[k] & ~t_mask) != 0) continue;
      if (layout_.divides(polys[k].data.data(), t)) return k;
    }
    return std::nullopt;
  }

  // Full normal form of f. Counts top-reduction steps into *steps.
  Packed normal_form(Packed f, const Reducers& reducers, std::uint64_t* steps, std::size_t skip = SIZE_MAX) const {
    Packed remainder;
    Packed next;
    std::vector<Exp> q(stride_);
    std::size_t start = 0;
    while (start < f.terms(stride_)) {
      const Exp* t = f.data.data() + start * stride_;
      auto k = find_reducer(t, layout_.mask(t), reducers, skip);
      if (!k) {
        remainder.data.insert(remainder.data.end(), t, t + stride_);
        ++start;
        continue;
      }
      const Packed& g = (*reducers.polys)[*k];
      layout_.quotient(g.data.data(), t, q.data());
      merge(f, start + 1, q.data(), g, 1, next.data);
      std::swap(f.data, next.data);
      start = 0;
      if (steps) ++*steps;
    }
    return remainder;
  }

  Packed s_polynomial(const Packed& f, const Packed& g) const {
    std::vector<Exp> l(stride_), qf(stride_), qg(stride_);
    layout_.lcm(f.data.data(), g.data.data(), l.data());
    layout_.quotient(f.data.data(), l.data(), qf.data());
    layout_.quotient(g.data.data(), l.data(), qg.data());
    // Leading terms cancel: combine the tails only.
    Packed left;
    Packed empty;
    merge(empty, 0, qf.data(), f, 1, left.data);
    Packed out;
    merge(left, 0, qg.data(), g, 1, out.data);
    return out;
  }

 private:
  Layout layout_;
  std::size_t stride_;
  mutable std::vector<Exp> scratch_;
};

std::string monomial_text(const Engine& engine, const Exp* t, const MonomialOrder& order) {
  return to_string(engine.layout().decode(t), order);
}

struct Pair {
  std::vector<Exp> lcm;
  std::size_t i;
  std::size_t j;
};

}  // namespace

// ---------------------------------------------------------------------------

Poly2 normal_form(const Poly2& f, std::span<const Poly2> basis, const MonomialOrder& order) {
  Engine engine(order);
  std::vector<Packed> polys;
  std::vector<std::uint64_t> masks;
  std::vector<char> active;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    polys.push_back(engine.pack(g));
    masks.push_back(engine.layout().mask(polys.back().data.data()));
    active.push_back(1);
  }
  return engine.unpack(engine.normal_form(engine.pack(f), {&polys, &masks, &active}, nullptr));
}

Poly2 normal_form(const Poly2& f, const GroebnerBasis& basis) { return normal_form(f, basis.polys, basis.order); }

Poly2 s_polynomial(const Poly2& f, const Poly2& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("S-polynomial of the zero polynomial");
  Engine engine(order);
  return engine.unpack(engine.s_polynomial(engine.pack(f), engine.pack(g)));
}

namespace {

// Shared core: returns the (non-reduced) basis in packed form.
struct PackedBasis {
  std::vector<Packed> polys;
  GroebnerStats stats;
};

PackedBasis run_buchberger(const Engine& engine, std::span<const Poly2> generators, const MonomialOrder& order,
                           const GroebnerOptions& options) {
  const Layout& layout = engine.layout();
  const std::size_t stride = engine.stride();
  PackedBasis result;
  auto& basis = result.polys;
  auto& stats = result.stats;
  std::vector<std::uint64_t> masks;
  std::vector<char> reducer;  // LM not divisible by a later LM
  std::vector<std::vector<char>> done;  // done[j][i], i < j
  std::deque<std::string> recent;
  Engine::Reducers reducers{&basis, &masks, &reducer};

  auto pair_less = [&](const Pair& a, const Pair& b) {
    int c = layout.compare(a.lcm.data(), b.lcm.data());
    if (c != 0) return c > 0;  // priority_queue pops the largest; invert for smallest lcm
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(pair_less)> queue(pair_less);

  auto log_line = [&](const std::string& line) {
    if (options.trace) *options.trace << line << '\n';
    recent.push_back(line);
    if (recent.size() > 20) recent.pop_front();
  };

  bool unit_found = false;
  auto add = [&](Packed h) {
    const std::size_t index = basis.size();
    const Exp* lm = h.data.data();
    for (std::size_t k = 0; k < index; ++k)
      if (reducer[k] && layout.divides(lm, basis[k].data.data())) reducer[k] = 0;
    masks.push_back(layout.mask(lm));
    reducer.push_back(1);
    done.emplace_back(index, 0);
    bool unit = std::all_of(lm, lm + stride, [](Exp e) { return e == 0; });
    basis.push_back(std::move(h));
    for (std::size_t k = 0; k < index; ++k) {
      Pair p{std::vector<Exp>(stride), k, index};
      layout.lcm(basis[k].data.data(), basis[index].data.data(), p.lcm.data());
      queue.push(std::move(p));
      ++stats.pairs_created;
    }
    stats.peak_basis_size = std::max(stats.peak_basis_size, basis.size());
    std::ostringstream line;
    line << "gb add index=" << index << " pairs=" << stats.pairs_processed << " queue=" << queue.size()
         << " terms=" << basis[index].terms(stride) << " lm=" << monomial_text(engine, basis[index].data.data(), order);
    log_line(line.str());
    if (unit) unit_found = true;
  };

  // Smallest leading monomial first, so each generator is reduced by the
  // simpler ones before it enters; this also makes the run independent of
  // the order the generators were given in.
  std::vector<Packed> inputs;
  for (const auto& g : generators)
    if (!g.is_zero()) inputs.push_back(engine.pack(g));
  std::sort(inputs.begin(), inputs.end(), [&](const Packed& a, const Packed& b) {
    const std::size_t common = std::min(a.terms(stride), b.terms(stride));
    for (std::size_t t = 0; t < common; ++t)
      if (int c = layout.compare(a.data.data() + t * stride, b.data.data() + t * stride); c != 0) return c < 0;
    return a.terms(stride) < b.terms(stride);
  });
  inputs.erase(std::unique(inputs.begin(), inputs.end(), [](const Packed& a, const Packed& b) { return a.data == b.data; }),
               inputs.end());
  for (auto& g : inputs) {
    Packed h = engine.normal_form(std::move(g), reducers, &stats.reduction_steps);
    if (!h.empty()) add(std::move(h));
    if (unit_found) break;
  }

  auto is_done = [&](std::size_t a, std::size_t b) { return a < b ? done[b][a] != 0 : done[a][b] != 0; };

  while (!queue.empty() && !unit_found) {
    if (stats.pairs_processed >= options.max_pairs) {
      std::ostringstream summary;
      summary << "gb budget exhausted pairs=" << stats.pairs_processed << " basis=" << basis.size()
              << " queue=" << queue.size() << '\n';
      for (const auto& line : recent) summary << line << '\n';
      throw BudgetExhausted("Groebner basis budget of " + std::to_string(options.max_pairs) + " pairs exhausted",
                            summary.str());
    }
    Pair p = queue.top();
    queue.pop();
    ++stats.pairs_processed;
    done[p.j][p.i] = 1;
    const Exp* lm_i = basis[p.i].data.data();
    const Exp* lm_j = basis[p.j].data.data();
    if (layout.coprime(lm_i, lm_j)) {
      ++stats.coprime_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!layout.divides(basis[k].data.data(), p.lcm.data())) continue;
      if (is_done(p.i, k) && is_done(p.j, k)) chain = true;
    }
    if (chain) {
      ++stats.chain_skips;
      continue;
    }
    Packed h = engine.normal_form(engine.s_polynomial(basis[p.i], basis[p.j]), reducers, &stats.reduction_steps);
    if (h.empty()) {
      ++stats.zero_reductions;
      continue;
    }
    add(std::move(h));
  }

  if (unit_found) {
    // The ideal is the whole ring; its Gröbner basis is {1}.
    Packed one;
    one.data.assign(stride, 0);
    basis.assign(1, std::move(one));
  }
  stats.final_basis_size = basis.size();
  if (options.trace) {
    *options.trace << "gb done pairs=" << stats.pairs_processed << " created=" << stats.pairs_created
                   << " coprime=" << stats.coprime_skips << " chain=" << stats.chain_skips
                   << " zero=" << stats.zero_reductions << " steps=" << stats.reduction_steps
                   << " basis=" << basis.size() << '\n';
  }
  return result;
}

// Minimalizes and inter-reduces, then sorts by increasing leading monomial.
std::vector<Packed> reduce_packed(const Engine& engine, std::vector<Packed> polys, std::uint64_t* steps) {
  const Layout& layout = engine.layout();
  const std::size_t n = polys.size();
  std::vector<char> keep(n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (polys[k].empty()) {
      keep[k] = 0;
      continue;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!keep[k]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || !keep[j]) continue;
      const Exp* a = polys[j].data.data();
      const Exp* b = polys[k].data.data();
      if (layout.divides(a, b) && (layout.compare(a, b) != 0 || j < k)) {
        keep[k] = 0;
        break;
      }
    }
  }
  std::vector<std::uint64_t> masks(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    if (keep[k]) masks[k] = layout.mask(polys[k].data.data());
  Engine::Reducers reducers{&polys, &masks, &keep};
  for (std::size_t k = 0; k < n; ++k) {
    if (!keep[k]) continue;
    // LM(k) is irreducible by the others, so reducing the whole polynomial
    // only rewrites its tail.
    polys[k] = engine.normal_form(std::move(polys[k]), reducers, steps, k);
  }
  std::vector<Packed> out;
  for (std::size_t k = 0; k < n; ++k)
    if (keep[k]) out.push_back(std::move(polys[k]));
  std::sort(out.begin(), out.end(),
            [&](const Packed& a, const Packed& b) { return layout.compare(a.data.data(), b.data.data()) < 0; });
  return out;
}

GroebnerBasis to_basis(const Engine& engine, const std::vector<Packed>& polys, const MonomialOrder& order, bool reduced,
                       const GroebnerStats& stats) {
  GroebnerBasis out{{}, order, reduced, stats};
  out.polys.reserve(polys.size());
  for (const auto& p : polys) out.polys.push_back(engine.unpack(p));
  out.stats.final_basis_size = out.polys.size();
  return out;
}

void check_generators(std::span<const Poly2> generators, const MonomialOrder& order) {
  for (const auto& g : generators) {
    if (g.universe() != order.universe() && !(*g.universe() == *order.universe()))
      throw InvalidArgument("generator and monomial order use different universes");
  }
}

}  // namespace

GroebnerBasis buchberger(std::span<const Poly2> generators, const MonomialOrder& order, const GroebnerOptions& options) {
  check_generators(generators, order);
  Engine engine(order);
  auto packed = run_buchberger(engine, generators, order, options);
  return to_basis(engine, packed.polys, order, false, packed.stats);
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  Engine engine(basis.order);
  std::vector<Packed> polys;
  for (const auto& p : basis.polys) polys.push_back(engine.pack(p));
  GroebnerStats stats = basis.stats;
  auto reduced = reduce_packed(engine, std::move(polys), &stats.reduction_steps);
  return to_basis(engine, reduced, basis.order, true, stats);
}

GroebnerBasis reduced_groebner_basis(std::span<const Poly2> generators, const MonomialOrder& order,
                                     const GroebnerOptions& options) {
  check_generators(generators, order);
  Engine engine(order);
  auto packed = run_buchberger(engine, generators, order, options);
  auto reduced = reduce_packed(engine, std::move(packed.polys), &packed.stats.reduction_steps);
  return to_basis(engine, reduced, order, true, packed.stats);
}

std::vector<Poly2> eliminate(const GroebnerBasis& basis, const std::function<bool(const Variable&)>& keep) {
  if (!basis.order.eliminates(keep))
    throw InvalidArgument("monomial order " + basis.order.describe() +
                          " does not rank the eliminated variables above the kept ones");
  std::vector<Poly2> out;
  for (const auto& p : basis.polys)
    if (p.uses_only(keep)) out.push_back(p);
  return out;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis,
                                    std::optional<std::pair<std::size_t, std::size_t>>* failing_pair) {
  Engine engine(basis.order);
  std::vector<Packed> polys;
  std::vector<std::uint64_t> masks;
  std::vector<char> active;
  for (const auto& p : basis.polys) {
    if (p.is_zero()) continue;
    polys.push_back(engine.pack(p));
    masks.push_back(engine.layout().mask(polys.back().data.data()));
    active.push_back(1);
  }
  Engine::Reducers reducers{&polys, &masks, &active};
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!engine.normal_form(engine.s_polynomial(polys[i], polys[j]), reducers, nullptr).empty()) {
        if (failing_pair) *failing_pair = std::make_pair(i, j);
        return false;
      }
    }
  }
  return true;
}

bool is_reduced(std::span<const Poly2> basis, const MonomialOrder& order) {
  std::vector<Monomial> leads;
  for (const auto& p : basis) {
    if (p.is_zero()) return false;
    leads.push_back(leading_monomial(p, order));
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j == k) continue;
      if (leads[j].divides(leads[k])) return false;
      for (const auto& m : basis[k].monomials())
        if (leads[j].divides(m)) return false;
    }
  }
  return true;
}

}  // namespace gbdecode
