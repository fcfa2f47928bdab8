#include "gbdecode/formulas.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace gbdecode {

std::string to_string(Variant v) { return v == Variant::Saturated ? "saturated" : "fieldeq"; }

Variant parse_variant(std::string_view text) {
  if (text == "saturated") return Variant::Saturated;
  if (text == "fieldeq") return Variant::FieldEq;
  throw InvalidArgument("unknown variant '" + std::string(text) + "' (expected saturated or fieldeq)");
}

MonomialOrder FormulaSet::print_order() const { return MonomialOrder::decoding(universe(), defining_set); }

namespace {

std::function<bool(const Variable&)> in_q(std::span<const unsigned> defining_set) {
  std::set<unsigned> q(defining_set.begin(), defining_set.end());
  return [q](const Variable& v) { return v.kind == VarKind::S && q.count(v.index) > 0; };
}

void require_reduced(const GroebnerBasis& basis) {
  if (!basis.reduced) throw InvalidArgument("formula extraction needs a reduced Groebner basis");
}

Monomial sigma_monomial(const UniversePtr& u, unsigned i) {
  Monomial m(u->size());
  m.set(u->index_of(Variable::sigma(i)), 1);
  return m;
}

}  // namespace

std::vector<Poly2> weight_criteria(std::span<const Poly2> basis, std::span<const unsigned> defining_set) {
  std::vector<Poly2> out;
  if (basis.empty()) return out;
  const unsigned n = [&] {
    unsigned count = 0;
    for (const auto& v : basis.front().universe()->variables())
      if (v.kind == VarKind::S) ++count;
    return count;
  }();
  const auto target = Universe::syndromes(n);
  const auto keep = in_q(defining_set);
  for (const auto& f : basis)
    if (f.uses_only(keep)) out.push_back(f.rebase(target));
  return out;
}

std::vector<Poly2> zero_weight_criteria(unsigned n, std::span<const unsigned> defining_set) {
  const auto u = Universe::syndromes(n);
  std::vector<Poly2> out;
  for (unsigned i : defining_set) out.push_back(Poly2::variable(u, Variable::syndrome(i)));
  return out;
}

std::vector<Poly2> sigma_formulas(const GroebnerBasis& basis, std::span<const unsigned> defining_set, unsigned w) {
  require_reduced(basis);
  const auto& u = basis.order.universe();
  const auto keep = in_q(defining_set);
  unsigned n = 0;
  for (const auto& v : u->variables())
    if (v.kind == VarKind::S) ++n;
  const auto target = Universe::syndromes(n);

  std::vector<Poly2> out;
  for (unsigned i = 1; i <= w; ++i) {
    const Monomial lead = sigma_monomial(u, i);
    const Poly2* found = nullptr;
    for (const auto& f : basis.polys) {
      if (leading_monomial(f, basis.order) != lead) continue;
      if (found) throw ConsistencyError("two basis elements lead with " + Variable::sigma(i).name());
      found = &f;
    }
    if (!found)
      throw FormulaMissing("formula missing: no basis element has leading monomial " + Variable::sigma(i).name() +
                           " at w = " + std::to_string(w));
    Poly2 tail = *found + Poly2::monomial(u, lead);
    if (!tail.uses_only(keep))
      throw ConsistencyError("tail of the " + Variable::sigma(i).name() + " formula leaves F2[S_Q]: " +
                             to_string(tail, basis.order));
    out.push_back(tail.rebase(target));
  }
  return out;
}

std::vector<std::vector<Relation>> sigma_relations_general(const GroebnerBasis& basis,
                                                           std::span<const unsigned> defining_set, unsigned w) {
  require_reduced(basis);
  const auto& u = basis.order.universe();
  const auto keep = in_q(defining_set);
  unsigned n = 0;
  for (const auto& v : u->variables())
    if (v.kind == VarKind::S) ++n;
  const auto target = Universe::syndromes(n);

  std::vector<std::vector<Relation>> out(w);
  for (const auto& f : basis.polys) {
    std::optional<unsigned> which;
    bool shape = true;
    for (const auto& v : f.variables()) {
      if (v.kind == VarKind::Sigma) {
        if (which) shape = false;
        which = v.index;
      } else if (!keep(v)) {
        shape = false;
      }
    }
    if (!shape || !which || *which > w || f.degree_in(Variable::sigma(*which)) != 1) continue;
    const std::size_t slot = u->index_of(Variable::sigma(*which));
    std::vector<Monomial> with, without;
    for (const auto& m : f.monomials()) {
      if (m[slot] == 1) {
        Monomial reduced = m;
        reduced.set(slot, 0);
        with.push_back(std::move(reduced));
      } else {
        without.push_back(m);
      }
    }
    out[*which - 1].push_back({Poly2::from_monomials(u, std::move(with)).rebase(target),
                               Poly2::from_monomials(u, std::move(without)).rebase(target)});
  }
  for (unsigned i = 1; i <= w; ++i) {
    auto& group = out[i - 1];
    if (group.empty())
      throw FormulaMissing("no relation p*" + Variable::sigma(i).name() + " + q with p, q in F2[S_Q] at w = " +
                           std::to_string(w));
    std::stable_sort(group.begin(), group.end(),
                     [](const Relation& a, const Relation& b) { return a.p.term_count() < b.p.term_count(); });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string join_indices(std::span<const unsigned> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

bool has_space(std::string_view s) { return s.find_first_of(" \t\r\n") != std::string_view::npos; }

const std::vector<std::pair<const char*, std::uint64_t GroebnerStats::*>>& stat_fields() {
  static const std::vector<std::pair<const char*, std::uint64_t GroebnerStats::*>> fields = {
      {"created", &GroebnerStats::pairs_created},   {"processed", &GroebnerStats::pairs_processed},
      {"coprime", &GroebnerStats::coprime_skips},   {"chain", &GroebnerStats::chain_skips},
      {"zero", &GroebnerStats::zero_reductions},    {"steps", &GroebnerStats::reduction_steps},
  };
  return fields;
}

}  // namespace

std::string serialize(const FormulaSet& fs) {
  if (has_space(fs.code_hash) || has_space(fs.order) || has_space(fs.stamp))
    throw InvalidArgument("formula metadata must not contain whitespace");
  const MonomialOrder order = fs.print_order();
  auto poly = [&](const Poly2& f) { return to_string(f, order); };

  std::ostringstream out;
  out << "[meta] version=" << FormulaSet::kFormatVersion << " code=" << fs.code_hash << " variant=" << to_string(fs.variant)
      << " n=" << fs.n << " Q=" << join_indices(fs.defining_set) << " w_max=" << fs.w_max() << " order=" << fs.order;
  if (!fs.stamp.empty()) out << " stamp=" << fs.stamp;
  out << "\n";
  for (const auto& wf : fs.weights) {
    if (!wf.stats) continue;
    out << "[stats w=" << wf.w << "]";
    for (const auto& [name, field] : stat_fields()) out << " " << name << "=" << (*wf.stats).*field;
    out << " peak=" << wf.stats->peak_basis_size << " final=" << wf.stats->final_basis_size << "\n";
  }
  for (const auto& wf : fs.weights) {
    out << "[w=" << wf.w << "]\nT:";
    for (std::size_t k = 0; k < wf.criteria.size(); ++k) out << (k ? " ; " : " ") << poly(wf.criteria[k]);
    out << "\n";
    if (wf.w == 0) continue;
    if (fs.variant == Variant::Saturated) {
      out << "Q:";
      for (std::size_t i = 0; i < wf.sigma.size(); ++i)
        out << (i ? " | " : " ") << "i=" << i + 1 << ": " << poly(wf.sigma[i]);
    } else {
      out << "R:";
      for (std::size_t i = 0; i < wf.relations.size(); ++i) {
        out << (i ? " | " : " ") << "i=" << i + 1 << ":";
        for (std::size_t k = 0; k < wf.relations[i].size(); ++k)
          out << (k ? " ; " : " ") << poly(wf.relations[i][k].p) << " , " << poly(wf.relations[i][k].q);
      }
    }
    out << "\n";
  }
  return out.str();
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  FormulaSet run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      std::string_view line = text_.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      line_ = line;
      handle_line();
      if (end == text_.size()) break;
      pos = end + 1;
    }
    finish();
    return std::move(fs_);
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t column) const {
    throw ParseError(what, line_no_, column + 1);
  }

  static std::size_t skip_space(std::string_view s, std::size_t i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return i;
  }

  unsigned parse_unsigned(std::string_view s, std::size_t column) const {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      fail("expected a non-negative integer, got '" + std::string(s) + "'", column);
    return value;
  }

  // key=value tokens separated by blanks, starting at column `from`.
  std::vector<std::tuple<std::string_view, std::string_view, std::size_t>> tokens(std::size_t from) const {
    std::vector<std::tuple<std::string_view, std::string_view, std::size_t>> out;
    std::size_t i = skip_space(line_, from);
    while (i < line_.size()) {
      std::size_t j = i;
      while (j < line_.size() && line_[j] != ' ' && line_[j] != '\t') ++j;
      std::string_view tok = line_.substr(i, j - i);
      auto eq = tok.find('=');
      if (eq == std::string_view::npos) fail("expected key=value, got '" + std::string(tok) + "'", i);
      out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1), i);
      i = skip_space(line_, j);
    }
    return out;
  }

  void handle_line() {
    const std::size_t first = skip_space(line_, 0);
    if (first == line_.size() || line_[first] == '#') return;
    std::string_view rest = line_.substr(first);
    if (rest.starts_with("[meta]")) return meta(first + 6);
    if (!have_meta_) fail("expected [meta] header first", first);
    if (rest.starts_with("[stats")) return stats(first);
    if (rest.starts_with("[w=")) return weight(first);
    if (rest.starts_with("T:")) return criteria(first + 2);
    if (rest.starts_with("Q:")) return sigma(first + 2);
    if (rest.starts_with("R:")) return relations(first + 2);
    fail("unexpected line", first);
  }

  void meta(std::size_t from) {
    if (have_meta_) fail("duplicate [meta] header", 0);
    have_meta_ = true;
    std::map<std::string_view, std::pair<std::string_view, std::size_t>> seen;
    for (auto [key, value, col] : tokens(from)) {
      if (!seen.emplace(key, std::make_pair(value, col)).second) fail("duplicate key '" + std::string(key) + "'", col);
    }
    auto get = [&](std::string_view key) -> std::pair<std::string_view, std::size_t> {
      auto it = seen.find(key);
      if (it == seen.end()) fail("missing key '" + std::string(key) + "' in [meta]", from);
      return it->second;
    };
    for (const auto& [key, vc] : seen) {
      static const std::set<std::string_view> known = {"version", "code", "variant", "n", "Q", "w_max", "order", "stamp"};
      if (!known.count(key)) fail("unknown key '" + std::string(key) + "'", vc.second);
    }
    auto [version, vcol] = get("version");
    if (parse_unsigned(version, vcol + 8) != FormulaSet::kFormatVersion)
      fail("unsupported format version " + std::string(version), vcol);
    fs_.code_hash = std::string(get("code").first);
    auto [variant, varcol] = get("variant");
    try {
      fs_.variant = parse_variant(variant);
    } catch (const InvalidArgument& e) {
      fail(e.what(), varcol);
    }
    auto [n, ncol] = get("n");
    fs_.n = parse_unsigned(n, ncol + 2);
    if (fs_.n < 3 || fs_.n % 2 == 0) fail("n must be odd and at least 3", ncol);
    auto [q, qcol] = get("Q");
    std::size_t start = 0;
    while (start <= q.size()) {
      std::size_t comma = q.find(',', start);
      if (comma == std::string_view::npos) comma = q.size();
      unsigned i = parse_unsigned(q.substr(start, comma - start), qcol + 2 + start);
      if (i >= fs_.n) fail("defining set element " + std::to_string(i) + " is not below n", qcol + 2 + start);
      fs_.defining_set.push_back(i);
      start = comma + 1;
    }
    auto [wmax, wcol] = get("w_max");
    declared_w_max_ = parse_unsigned(wmax, wcol + 6);
    fs_.order = std::string(get("order").first);
    if (seen.count("stamp")) fs_.stamp = std::string(seen["stamp"].first);
    universe_ = fs_.universe();
    keep_ = in_q(fs_.defining_set);
  }

  void stats(std::size_t from) {
    const std::size_t close = line_.find(']', from);
    if (close == std::string_view::npos) fail("unterminated [stats", from);
    std::string_view wtext = line_.substr(from + 6, close - from - 6);
    wtext = wtext.substr(skip_space(wtext, 0));
    if (!wtext.starts_with("w=")) fail("expected w= in [stats]", from);
    const unsigned w = parse_unsigned(wtext.substr(2), from + 8);
    GroebnerStats st;
    for (auto [key, value, col] : tokens(close + 1)) {
      bool matched = false;
      for (const auto& [name, field] : stat_fields())
        if (key == name) {
          st.*field = parse_u64(value, col);
          matched = true;
        }
      if (key == "peak") st.peak_basis_size = parse_u64(value, col), matched = true;
      if (key == "final") st.final_basis_size = parse_u64(value, col), matched = true;
      if (!matched) fail("unknown statistic '" + std::string(key) + "'", col);
    }
    pending_stats_[w] = st;
  }

  std::uint64_t parse_u64(std::string_view s, std::size_t column) const {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      fail("expected a non-negative integer, got '" + std::string(s) + "'", column);
    return value;
  }

  void weight(std::size_t from) {
    const std::size_t close = line_.find(']', from);
    if (close == std::string_view::npos) fail("unterminated [w=", from);
    const unsigned w = parse_unsigned(line_.substr(from + 3, close - from - 3), from + 3);
    if (w != fs_.weights.size())
      fail("expected [w=" + std::to_string(fs_.weights.size()) + "], weights must be consecutive from 0", from);
    if (skip_space(line_, close + 1) != line_.size()) fail("trailing text after weight header", close + 1);
    check_complete();
    fs_.weights.push_back({});
    fs_.weights.back().w = w;
    seen_t_ = seen_body_ = false;
  }

  WeightFormulas& current(std::size_t column) {
    if (fs_.weights.empty()) fail("section outside a [w=..] block", column);
    return fs_.weights.back();
  }

  Poly2 poly(std::size_t begin, std::size_t end) const {
    std::string_view piece = line_.substr(begin, end - begin);
    const std::size_t lead = skip_space(piece, 0);
    std::size_t trail = piece.size();
    while (trail > lead && (piece[trail - 1] == ' ' || piece[trail - 1] == '\t')) --trail;
    piece = piece.substr(lead, trail - lead);
    if (piece.empty()) fail("missing polynomial", begin);
    Poly2 f(universe_);
    try {
      f = parse_poly(piece, universe_);
    } catch (const ParseError& e) {
      std::string what = e.what();
      const auto colon = what.find(": ");
      throw ParseError(colon == std::string::npos ? what : what.substr(colon + 2), line_no_,
                       begin + lead + e.column());
    }
    for (const auto& v : f.variables())
      if (!keep_(v)) fail(v.name() + " is not a syndrome with index in Q", begin + lead);
    return f;
  }

  // Splits [begin, end) at every occurrence of `sep`.
  std::vector<std::pair<std::size_t, std::size_t>> split(std::size_t begin, std::size_t end, char sep) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t start = begin;
    for (std::size_t i = begin; i <= end; ++i)
      if (i == end || line_[i] == sep) {
        out.emplace_back(start, i);
        start = i + 1;
      }
    return out;
  }

  void criteria(std::size_t from) {
    auto& wf = current(from);
    if (seen_t_) fail("duplicate T: line", from);
    seen_t_ = true;
    if (skip_space(line_, from) == line_.size()) return;
    for (auto [b, e] : split(from, line_.size(), ';')) wf.criteria.push_back(poly(b, e));
  }

  // "i=<k>:" prefix of a Q:/R: entry; returns the column after the colon.
  std::size_t entry_index(std::size_t begin, std::size_t end, unsigned expected) const {
    const std::size_t i = skip_space(line_, begin);
    std::string_view s = line_.substr(i, end - i);
    const auto colon = s.find(':');
    if (!s.starts_with("i=") || colon == std::string_view::npos) fail("expected i=<index>:", i);
    if (parse_unsigned(s.substr(2, colon - 2), i + 2) != expected)
      fail("expected i=" + std::to_string(expected), i);
    return i + colon + 1;
  }

  void sigma(std::size_t from) {
    auto& wf = current(from);
    if (fs_.variant != Variant::Saturated) fail("Q: line in a fieldeq formula file", from);
    if (seen_body_) fail("duplicate Q: line", from);
    seen_body_ = true;
    unsigned i = 0;
    for (auto [b, e] : split(from, line_.size(), '|')) wf.sigma.push_back(poly(entry_index(b, e, ++i), e));
  }

  void relations(std::size_t from) {
    auto& wf = current(from);
    if (fs_.variant != Variant::FieldEq) fail("R: line in a saturated formula file", from);
    if (seen_body_) fail("duplicate R: line", from);
    seen_body_ = true;
    unsigned i = 0;
    for (auto [b, e] : split(from, line_.size(), '|')) {
      const std::size_t body = entry_index(b, e, ++i);
      auto& group = wf.relations.emplace_back();
      for (auto [rb, re] : split(body, e, ';')) {
        auto parts = split(rb, re, ',');
        if (parts.size() != 2) fail("expected 'p , q'", rb);
        group.push_back({poly(parts[0].first, parts[0].second), poly(parts[1].first, parts[1].second)});
      }
    }
  }

  void check_complete() {
    if (fs_.weights.empty()) return;
    const auto& wf = fs_.weights.back();
    if (!seen_t_) fail("[w=" + std::to_string(wf.w) + "] has no T: line", 0);
    if (wf.w == 0) {
      if (seen_body_) fail("[w=0] takes no formulas", 0);
      return;
    }
    if (!seen_body_) fail("[w=" + std::to_string(wf.w) + "] has no formula line", 0);
    const std::size_t count = fs_.variant == Variant::Saturated ? wf.sigma.size() : wf.relations.size();
    if (count != wf.w)
      fail("[w=" + std::to_string(wf.w) + "] has " + std::to_string(count) + " formula entries", 0);
  }

  void finish() {
    if (!have_meta_) fail("missing [meta] header", 0);
    check_complete();
    if (fs_.weights.empty()) fail("no weight sections", 0);
    if (fs_.w_max() != declared_w_max_)
      fail("w_max=" + std::to_string(declared_w_max_) + " but the file has weights 0.." + std::to_string(fs_.w_max()), 0);
    for (auto& [w, st] : pending_stats_) {
      if (w >= fs_.weights.size()) fail("[stats w=" + std::to_string(w) + "] for a missing weight", 0);
      fs_.weights[w].stats = st;
    }
  }

  std::string_view text_;
  std::string_view line_;
  std::size_t line_no_ = 0;
  bool have_meta_ = false;
  bool seen_t_ = false;
  bool seen_body_ = false;
  unsigned declared_w_max_ = 0;
  std::map<unsigned, GroebnerStats> pending_stats_;
  UniversePtr universe_;
  std::function<bool(const Variable&)> keep_;
  FormulaSet fs_;
};

}  // namespace

FormulaSet deserialize(std::string_view text) { return Reader(text).run(); }

}  // namespace gbdecode
