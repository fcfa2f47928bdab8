#include "gbdecode/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "gbdecode/error.hpp"

namespace gbdecode {

// ---------------------------------------------------------------------------
// Variable

std::string Variable::name() const {
  switch (kind) {
    case VarKind::Sigma:
      return "s" + std::to_string(index);
    case VarKind::S:
      return "S" + std::to_string(index);
    case VarKind::Z:
      return "Z" + std::to_string(index);
    case VarKind::Aux:
      return "r";
  }
  return "?";
}

std::optional<Variable> parse_variable(std::string_view token) {
  if (token == "r") return Variable::aux();
  if (token.size() < 2) return std::nullopt;
  VarKind kind;
  switch (token[0]) {
    case 's':
      kind = VarKind::Sigma;
      break;
    case 'S':
      kind = VarKind::S;
      break;
    case 'Z':
      kind = VarKind::Z;
      break;
    default:
      return std::nullopt;
  }
  unsigned index = 0;
  auto digits = token.substr(1);
  if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return Variable{kind, index};
}

// ---------------------------------------------------------------------------
// Universe

Universe::Universe(std::vector<Variable> variables) : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!index_.emplace(variables_[i], i).second)
      throw InvalidArgument("duplicate variable " + variables_[i].name() + " in universe");
  }
}

std::shared_ptr<const Universe> Universe::create(std::vector<Variable> variables) {
  return std::shared_ptr<const Universe>(new Universe(std::move(variables)));
}

std::shared_ptr<const Universe> Universe::decoding(unsigned n, unsigned w) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Universe>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, w}];
  if (!slot) {
    std::vector<Variable> vars;
    for (unsigned i = 1; i <= w; ++i) vars.push_back(Variable::sigma(i));
    for (unsigned i = 0; i < n; ++i) vars.push_back(Variable::syndrome(i));
    for (unsigned i = 1; i <= w; ++i) vars.push_back(Variable::locator(i));
    if (w > 0) vars.push_back(Variable::aux());
    slot = create(std::move(vars));
  }
  return slot;
}

std::shared_ptr<const Universe> Universe::syndromes(unsigned n) { return decoding(n, 0); }

std::optional<std::size_t> Universe::find(Variable v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(Variable v) const {
  auto found = find(v);
  if (!found) throw InvalidArgument("variable " + v.name() + " is not in the universe");
  return *found;
}

// ---------------------------------------------------------------------------
// Monomial

std::uint64_t Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] + other.exps_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) throw InvalidArgument("monomial does not divide");
    out.exps_[i] = other.exps_[i] - exps_[i];
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// MonomialOrder

MonomialOrder::MonomialOrder(UniversePtr universe, std::vector<OrderBlock> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  std::vector<bool> seen(universe_->size(), false);
  for (const auto& block : blocks_) {
    if (block.variables.empty()) throw InvalidArgument("monomial order has an empty block");
    std::vector<std::size_t> indices;
    for (const auto& v : block.variables) {
      std::size_t i = universe_->index_of(v);
      if (seen[i]) throw InvalidArgument("variable " + v.name() + " appears twice in the monomial order");
      seen[i] = true;
      indices.push_back(i);
    }
    block_indices_.push_back(std::move(indices));
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InvalidArgument("monomial order does not rank variable " + (*universe_)[i].name());
}

MonomialOrder MonomialOrder::lex(UniversePtr universe, std::vector<Variable> priority) {
  return MonomialOrder(std::move(universe), {OrderBlock{std::move(priority), BlockScheme::Lex}});
}

MonomialOrder MonomialOrder::block(UniversePtr universe, std::vector<OrderBlock> blocks) {
  return MonomialOrder(std::move(universe), std::move(blocks));
}

namespace {

// Groups of the decoding order: {r, Z}, S_N, sigma, S_Q, each by descending index.
std::vector<std::vector<Variable>> decoding_groups(const Universe& universe, std::span<const unsigned> defining_set) {
  std::set<unsigned> q(defining_set.begin(), defining_set.end());
  std::vector<std::vector<Variable>> groups(4);
  auto by_index_desc = [](const Variable& a, const Variable& b) { return a.index > b.index; };
  std::vector<Variable> zs;
  bool has_aux = false;
  for (const auto& v : universe.variables()) {
    switch (v.kind) {
      case VarKind::Aux:
        has_aux = true;
        break;
      case VarKind::Z:
        zs.push_back(v);
        break;
      case VarKind::S:
        groups[q.count(v.index) ? 3 : 1].push_back(v);
        break;
      case VarKind::Sigma:
        groups[2].push_back(v);
        break;
    }
  }
  if (has_aux) groups[0].push_back(Variable::aux());
  std::sort(zs.begin(), zs.end(), by_index_desc);
  groups[0].insert(groups[0].end(), zs.begin(), zs.end());
  for (std::size_t g = 1; g < 4; ++g) std::sort(groups[g].begin(), groups[g].end(), by_index_desc);
  return groups;
}

}  // namespace

MonomialOrder MonomialOrder::decoding(UniversePtr universe, std::span<const unsigned> defining_set) {
  std::vector<Variable> priority;
  for (auto& group : decoding_groups(*universe, defining_set)) priority.insert(priority.end(), group.begin(), group.end());
  return lex(std::move(universe), std::move(priority));
}

MonomialOrder MonomialOrder::decoding_blocks(UniversePtr universe, std::span<const unsigned> defining_set) {
  std::vector<OrderBlock> blocks;
  for (auto& group : decoding_groups(*universe, defining_set))
    if (!group.empty()) blocks.push_back(OrderBlock{std::move(group), BlockScheme::GRevLex});
  return block(std::move(universe), std::move(blocks));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const auto& idx = block_indices_[bi];
    if (blocks_[bi].scheme == BlockScheme::Lex) {
      for (std::size_t k : idx)
        if (a[k] != b[k]) return a[k] <=> b[k];
    } else {
      std::uint64_t da = 0, db = 0;
      for (std::size_t k : idx) {
        da += a[k];
        db += b[k];
      }
      if (da != db) return da <=> db;
      for (auto it = idx.rbegin(); it != idx.rend(); ++it)
        if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
  }
  return std::strong_ordering::equal;
}

bool MonomialOrder::eliminates(const std::function<bool(const Variable&)>& keep) const {
  // Each lex variable and each grevlex block is a group; groups must read
  // eliminated* kept*.
  bool in_kept = false;
  for (const auto& block : blocks_) {
    if (block.scheme == BlockScheme::Lex) {
      for (const auto& v : block.variables) {
        if (keep(v))
          in_kept = true;
        else if (in_kept)
          return false;
      }
    } else {
      std::size_t kept = std::count_if(block.variables.begin(), block.variables.end(), keep);
      if (kept != 0 && kept != block.variables.size()) return false;
      if (kept != 0)
        in_kept = true;
      else if (in_kept)
        return false;
    }
  }
  return true;
}

std::string MonomialOrder::describe() const {
  std::ostringstream out;
  if (is_pure_lex()) {
    out << "lex:";
    for (std::size_t k = 0; k < blocks_[0].variables.size(); ++k) out << (k ? ">" : "") << blocks_[0].variables[k].name();
    return out.str();
  }
  out << "block:";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    out << (b ? ";" : "") << (blocks_[b].scheme == BlockScheme::Lex ? "lex(" : "grevlex(");
    for (std::size_t k = 0; k < blocks_[b].variables.size(); ++k) out << (k ? "," : "") << blocks_[b].variables[k].name();
    out << ")";
  }
  return out.str();
}

MonomialOrder MonomialOrder::parse(std::string_view text, UniversePtr universe, std::span<const unsigned> defining_set) {
  if (text == "lex") return decoding(std::move(universe), defining_set);
  if (text == "block") return decoding_blocks(std::move(universe), defining_set);
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
      auto pos = s.find(sep, start);
      parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return parts;
  };
  auto variables = [&](std::string_view list, char sep) {
    std::vector<Variable> out;
    for (auto token : split(list, sep)) {
      auto v = parse_variable(token);
      if (!v) throw InvalidArgument("bad variable '" + std::string(token) + "' in monomial order");
      out.push_back(*v);
    }
    return out;
  };
  if (text.starts_with("lex:")) return lex(std::move(universe), variables(text.substr(4), '>'));
  if (text.starts_with("block:")) {
    std::vector<OrderBlock> blocks;
    for (auto part : split(text.substr(6), ';')) {
      BlockScheme scheme;
      std::string_view rest;
      if (part.starts_with("lex(")) {
        scheme = BlockScheme::Lex;
        rest = part.substr(4);
      } else if (part.starts_with("grevlex(")) {
        scheme = BlockScheme::GRevLex;
        rest = part.substr(8);
      } else {
        throw InvalidArgument("bad block '" + std::string(part) + "' in monomial order");
      }
      if (!rest.ends_with(')')) throw InvalidArgument("unterminated block in monomial order");
      blocks.push_back(OrderBlock{variables(rest.substr(0, rest.size() - 1), ','), scheme});
    }
    return block(std::move(universe), std::move(blocks));
  }
  throw InvalidArgument("unknown monomial order '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Poly2

namespace {

// Sorts and cancels duplicate monomials in pairs.
std::vector<Monomial> canonicalize(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end());
  std::vector<Monomial> out;
  out.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(monomials[i]));
    i = j;
  }
  return out;
}

}  // namespace

Poly2 Poly2::one(UniversePtr universe) {
  Monomial m(universe->size());
  return monomial(std::move(universe), std::move(m));
}

Poly2 Poly2::variable(UniversePtr universe, Variable v, std::uint32_t exponent) {
  Monomial m(universe->size());
  m.set(universe->index_of(v), exponent);
  return monomial(std::move(universe), std::move(m));
}

Poly2 Poly2::monomial(UniversePtr universe, Monomial m) {
  if (m.size() != universe->size()) throw InvalidArgument("monomial size does not match the universe");
  Poly2 p(std::move(universe));
  p.monomials_.push_back(std::move(m));
  return p;
}

Poly2 Poly2::from_monomials(UniversePtr universe, std::vector<Monomial> monomials) {
  for (const auto& m : monomials)
    if (m.size() != universe->size()) throw InvalidArgument("monomial size does not match the universe");
  Poly2 p(std::move(universe));
  p.monomials_ = canonicalize(std::move(monomials));
  return p;
}

bool Poly2::contains(const Monomial& m) const { return std::binary_search(monomials_.begin(), monomials_.end(), m); }

std::vector<Variable> Poly2::variables() const {
  std::vector<Variable> out;
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    for (const auto& m : monomials_) {
      if (m[i] != 0) {
        out.push_back((*universe_)[i]);
        break;
      }
    }
  }
  return out;
}

bool Poly2::uses_only(const std::function<bool(const Variable&)>& allowed) const {
  for (const auto& v : variables())
    if (!allowed(v)) return false;
  return true;
}

std::uint32_t Poly2::degree_in(Variable v) const {
  auto i = universe_->find(v);
  if (!i) return 0;
  std::uint32_t best = 0;
  for (const auto& m : monomials_) best = std::max(best, m[*i]);
  return best;
}

void Poly2::check_universe(const Poly2& rhs) const {
  if (universe_ != rhs.universe_ && !(*universe_ == *rhs.universe_))
    throw InvalidArgument("polynomials live over different variable universes");
}

Poly2 Poly2::operator+(const Poly2& rhs) const {
  check_universe(rhs);
  Poly2 out(universe_);
  out.monomials_.reserve(monomials_.size() + rhs.monomials_.size());
  std::set_symmetric_difference(monomials_.begin(), monomials_.end(), rhs.monomials_.begin(), rhs.monomials_.end(),
                                std::back_inserter(out.monomials_));
  return out;
}

Poly2 Poly2::operator*(const Poly2& rhs) const {
  check_universe(rhs);
  std::vector<Monomial> products;
  products.reserve(monomials_.size() * rhs.monomials_.size());
  for (const auto& a : monomials_)
    for (const auto& b : rhs.monomials_) products.push_back(a * b);
  Poly2 out(universe_);
  out.monomials_ = canonicalize(std::move(products));
  return out;
}

Poly2 Poly2::operator*(const Monomial& rhs) const {
  Poly2 out(universe_);
  out.monomials_.reserve(monomials_.size());
  for (const auto& a : monomials_) out.monomials_.push_back(a * rhs);
  // Multiplication by a monomial preserves the canonical (lex) order.
  return out;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 result = one(universe_);
  Poly2 base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e == 0) break;
    // Squaring in characteristic 2 squares each monomial.
    Poly2 squared(universe_);
    for (const auto& m : base.monomials_) squared.monomials_.push_back(m * m);
    base = std::move(squared);
  }
  return result;
}

Poly2 Poly2::rebase(UniversePtr target) const {
  std::vector<std::size_t> map(universe_->size());
  std::vector<Variable> used = variables();
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    auto found = target->find((*universe_)[i]);
    if (found)
      map[i] = *found;
    else if (std::find(used.begin(), used.end(), (*universe_)[i]) != used.end())
      throw InvalidArgument("variable " + (*universe_)[i].name() + " is not in the target universe");
    else
      map[i] = std::numeric_limits<std::size_t>::max();
  }
  std::vector<Monomial> out;
  out.reserve(monomials_.size());
  for (const auto& m : monomials_) {
    Monomial r(target->size());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) r.set(map[i], m[i]);
    out.push_back(std::move(r));
  }
  return from_monomials(std::move(target), std::move(out));
}

bool operator==(const Poly2& a, const Poly2& b) {
  if (a.universe_ != b.universe_ && !(*a.universe_ == *b.universe_)) return false;
  return a.monomials_ == b.monomials_;
}

Monomial leading_monomial(const Poly2& f, const MonomialOrder& order) {
  if (f.is_zero()) throw InvalidArgument("the zero polynomial has no leading monomial");
  const Monomial* best = &f.monomials().front();
  for (const auto& m : f.monomials())
    if (order.greater(m, *best)) best = &m;
  return *best;
}

// ---------------------------------------------------------------------------
// Evaluation

FieldElement evaluate(const Poly2& f, std::span<const std::optional<FieldElement>> values, const Field& field) {
  const Universe& universe = *f.universe();
  if (values.size() != universe.size()) throw InvalidArgument("assignment table does not match the universe");
  std::uint32_t acc = 0;
  for (const auto& m : f.monomials()) {
    std::uint32_t term = 1;
    for (std::size_t i = 0; i < m.size() && term != 0; ++i) {
      if (m[i] == 0) continue;
      if (!values[i]) throw InvalidArgument("no value assigned to variable " + universe[i].name());
      term = field.mul(term, field.pow(values[i]->bits(), m[i]));
    }
    acc ^= term;
  }
  return FieldElement(field, acc);
}

FieldElement evaluate(const Poly2& f, const Assignment& assignment, const Field& field) {
  const Universe& universe = *f.universe();
  std::vector<std::optional<FieldElement>> values(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    auto it = assignment.find(universe[i]);
    if (it != assignment.end()) {
      if (&it->second.field() != &field) throw InvalidArgument("assigned value belongs to another field");
      values[i] = it->second;
    }
  }
  // Report a missing variable even when another factor of its monomial is zero.
  for (const auto& v : f.variables())
    if (!assignment.count(v)) throw InvalidArgument("no value assigned to variable " + v.name());
  return evaluate(f, values, field);
}

// ---------------------------------------------------------------------------
// Text

namespace {

std::vector<std::size_t> flat_priority(const MonomialOrder& order) {
  std::vector<std::size_t> out;
  for (const auto& idx : order.block_indices()) out.insert(out.end(), idx.begin(), idx.end());
  return out;
}

void write_monomial(std::ostream& out, const Monomial& m, const Universe& universe,
                    const std::vector<std::size_t>& priority) {
  bool first = true;
  for (std::size_t i : priority) {
    if (m[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << universe[i].name();
    if (m[i] != 1) out << "^" << m[i];
  }
  if (first) out << "1";
}

}  // namespace

std::string to_string(const Monomial& m, const MonomialOrder& order) {
  std::ostringstream out;
  write_monomial(out, m, *order.universe(), flat_priority(order));
  return out.str();
}

std::string to_string(const Poly2& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<const Monomial*> sorted;
  for (const auto& m : f.monomials()) sorted.push_back(&m);
  std::sort(sorted.begin(), sorted.end(), [&](const Monomial* a, const Monomial* b) { return order.greater(*a, *b); });
  const auto priority = flat_priority(order);
  std::ostringstream out;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k) out << " + ";
    write_monomial(out, *sorted[k], *f.universe(), priority);
  }
  return out.str();
}

std::string to_string(const Poly2& f) {
  return to_string(f, MonomialOrder::lex(f.universe(), f.universe()->variables()));
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, UniversePtr universe) : text_(text), universe_(std::move(universe)) {}

  Poly2 parse() {
    std::vector<Monomial> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    while (true) {
      auto term = parse_term();
      if (term) terms.push_back(std::move(*term));
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != '+') fail(std::string("expected '+' but found '") + text_[pos_] + "'");
      ++pos_;
      skip_space();
    }
    return Poly2::from_monomials(universe_, std::move(terms));
  }

 private:
  // nullopt for a term containing the factor 0.
  std::optional<Monomial> parse_term() {
    Monomial m(universe_->size());
    bool zero = false;
    while (true) {
      skip_space();
      if (at_end()) fail("expected a variable or constant");
      char c = text_[pos_];
      if (c == '0' || c == '1') {
        ++pos_;
        if (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) fail("malformed constant");
        if (c == '0') zero = true;
      } else {
        const std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        auto token = text_.substr(start, pos_ - start);
        if (token.empty()) fail(std::string("unexpected character '") + c + "'");
        auto v = parse_variable(token);
        if (!v) fail("unknown variable '" + std::string(token) + "'", start);
        auto index = universe_->find(*v);
        if (!index) fail("variable '" + std::string(token) + "' is outside the universe", start);
        std::uint64_t e = 1;
        skip_space();
        if (!at_end() && text_[pos_] == '^') {
          ++pos_;
          skip_space();
          const std::size_t digits = pos_;
          while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
          if (digits == pos_) fail("expected an exponent");
          auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, e);
          if (ec != std::errc()) fail("exponent out of range", digits);
        }
        const std::uint64_t total = e + m[*index];
        if (total > std::numeric_limits<std::uint32_t>::max()) fail("exponent out of range", start);
        m.set(*index, static_cast<std::uint32_t>(total));
      }
      skip_space();
      if (at_end() || text_[pos_] != '*') break;
      ++pos_;
    }
    if (zero) return std::nullopt;
    return m;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, 1, at + 1); }

  std::string_view text_;
  UniversePtr universe_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_poly(std::string_view text, UniversePtr universe) { return PolyParser(text, std::move(universe)).parse(); }

}  // namespace gbdecode
