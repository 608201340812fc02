#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "carrier_util.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/hyperfield.hpp"

namespace hyperpoly {
namespace {

// Finite carrier over indices 0..n-1. Subclasses supply the index-level
// operations; everything set-valued is done here by enumeration.
class FiniteHyperfield : public Hyperfield {
 public:
  CarrierKind carrier() const override { return CarrierKind::Finite; }

  virtual int size() const = 0;
  virtual int zero_index() const = 0;
  virtual int one_index() const = 0;
  virtual int mul_i(int i, int j) const = 0;
  virtual std::vector<int> add_i(int i, int j) const = 0;
  virtual int neg_i(int i) const = 0;
  virtual int inv_i(int i) const = 0;
  virtual std::string symbol(int i) const = 0;
  virtual std::optional<int> parse_index(std::string_view text) const = 0;

  Element zero() const override { return Element::symbol(zero_index()); }
  Element one() const override { return Element::symbol(one_index()); }

  Element mul(const Element& x, const Element& y) const override {
    return Element::symbol(mul_i(index(x), index(y)));
  }
  Element neg(const Element& x) const override { return Element::symbol(neg_i(index(x))); }
  Element inv(const Element& x) const override {
    const int i = index(x);
    if (i == zero_index()) throw DomainError("inverse of zero");
    return Element::symbol(inv_i(i));
  }
  ElementSet hyperadd(const Element& x, const Element& y) const override {
    return make(add_i(index(x), index(y)));
  }

  ElementSet set_hyperadd(const ElementSet& a, const ElementSet& b) const override {
    const auto& xs = items(a);
    const auto& ys = items(b);
    if (xs.empty() || ys.empty()) throw DomainError("hypersum of an empty set");
    std::vector<int> out;
    for (int i : xs) {
      for (int j : ys) {
        const auto s = add_i(i, j);
        out.insert(out.end(), s.begin(), s.end());
      }
    }
    return make(std::move(out));
  }

  ElementSet set_mul(const ElementSet& a, const ElementSet& b) const override {
    std::vector<int> out;
    for (int i : items(a)) {
      for (int j : items(b)) out.push_back(mul_i(i, j));
    }
    return make(std::move(out));
  }

  ElementSet scale(const Element& a, const ElementSet& s) const override {
    const int k = index(a);
    std::vector<int> out;
    for (int i : items(s)) out.push_back(mul_i(k, i));
    return make(std::move(out));
  }

  ElementSet negate(const ElementSet& s) const override {
    std::vector<int> out;
    for (int i : items(s)) out.push_back(neg_i(i));
    return make(std::move(out));
  }

  void validate(const Element& x) const override { (void)index(x); }
  void validate(const ElementSet& s) const override { (void)items(s); }

  std::vector<Element> elements() const override {
    std::vector<Element> out;
    for (int i = 0; i < size(); ++i) out.push_back(Element::symbol(i));
    return out;
  }

  Element parse_element(std::string_view text) const override {
    const std::string_view t = detail::strip_parens(text);
    if (auto i = parse_index(t)) return Element::symbol(*i);
    throw ParseError("'" + std::string(t) + "' is not an element of " + name());
  }

  std::string format_element(const Element& x) const override { return symbol(index(x)); }

  std::string format_set(const ElementSet& s) const override {
    std::string out = "{";
    bool first = true;
    for (int i : items(s)) {
      if (!first) out += ",";
      out += symbol(i);
      first = false;
    }
    return out + "}";
  }

  Element representative(const ElementSet& s) const override {
    const auto& xs = items(s);
    if (xs.empty()) throw DomainError("representative of an empty set");
    return Element::symbol(xs.back());
  }

  std::vector<Element> samples(const ElementSet& s, std::size_t) const override {
    std::vector<Element> out;
    const auto& xs = items(s);
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) out.push_back(Element::symbol(*it));
    return out;
  }

  std::vector<Element> default_probe() const override { return elements(); }

 protected:
  int index(const Element& x) const {
    const int i = x.as_symbol().index;
    if (i < 0 || i >= size()) {
      throw CarrierMismatch("symbol index " + std::to_string(i) + " outside " + name());
    }
    return i;
  }

  const std::vector<int>& items(const ElementSet& s) const {
    const auto* f = std::get_if<FiniteSet>(&s.value());
    if (f == nullptr) throw CarrierMismatch("expected a subset of " + name());
    for (int i : f->items) {
      if (i < 0 || i >= size()) throw CarrierMismatch("set member outside " + name());
    }
    return f->items;
  }

  static ElementSet make(std::vector<int> xs) { return ElementSet(FiniteSet{std::move(xs)}); }
};

class TableHyperfield final : public FiniteHyperfield {
 public:
  explicit TableHyperfield(FiniteTables t) : t_(std::move(t)) {}

  std::string name() const override { return t_.label; }
  int size() const override { return static_cast<int>(t_.names.size()); }
  int zero_index() const override { return t_.zero; }
  int one_index() const override { return t_.one; }
  int mul_i(int i, int j) const override { return t_.mul[i][j]; }
  std::vector<int> add_i(int i, int j) const override { return t_.add[i][j]; }
  int neg_i(int i) const override { return t_.neg[i]; }
  int inv_i(int i) const override { return t_.inv[i]; }
  std::string symbol(int i) const override { return t_.names[i]; }

  std::optional<int> parse_index(std::string_view text) const override {
    std::string_view t = text;
    if (t.size() > 1 && t.front() == '+') t.remove_prefix(1);
    for (int i = 0; i < size(); ++i) {
      if (t_.names[i] == t) return i;
    }
    return std::nullopt;
  }

 private:
  FiniteTables t_;
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

class PrimeField final : public FiniteHyperfield {
 public:
  explicit PrimeField(int p) : p_(p) {}

  std::string name() const override { return "GF(" + std::to_string(p_) + ")"; }
  int size() const override { return p_; }
  int zero_index() const override { return 0; }
  int one_index() const override { return 1; }
  int mul_i(int i, int j) const override {
    return static_cast<int>((static_cast<long long>(i) * j) % p_);
  }
  std::vector<int> add_i(int i, int j) const override { return {(i + j) % p_}; }
  int neg_i(int i) const override { return (p_ - i) % p_; }
  int inv_i(int i) const override {
    // Fermat: i^(p-2).
    long long result = 1, base = i;
    for (int e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
    }
    return static_cast<int>(result);
  }
  std::string symbol(int i) const override { return std::to_string(i); }

  std::optional<int> parse_index(std::string_view text) const override {
    Rational r;
    try {
      r = Rational::parse(text);
    } catch (const ParseError&) {
      return std::nullopt;
    }
    const mpz_class p(p_);
    mpz_class num = r.raw().get_num() % p;
    mpz_class den = r.raw().get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw DomainError("denominator divisible by " + std::to_string(p_));
    const int n = static_cast<int>(num.get_si());
    const int d = static_cast<int>(den.get_si());
    return mul_i(n, inv_i(d));
  }

 private:
  int p_;
};

FiniteTables sign_tables(bool weak) {
  // Index order -1, 0, 1: index i stands for the sign i-1.
  FiniteTables t;
  t.label = weak ? "W" : "S";
  t.names = {"-1", "0", "1"};
  t.zero = 1;
  t.one = 2;
  t.mul.assign(3, std::vector<int>(3));
  t.add.assign(3, std::vector<std::vector<int>>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t.mul[i][j] = (i - 1) * (j - 1) + 1;
      if (i == 1) {
        t.add[i][j] = {j};
      } else if (j == 1) {
        t.add[i][j] = {i};
      } else if (i == j) {
        t.add[i][j] = weak ? std::vector<int>{0, 2} : std::vector<int>{i};
      } else {
        t.add[i][j] = {0, 1, 2};
      }
    }
  }
  t.neg = {2, 1, 0};
  t.inv = {0, 1, 2};
  return t;
}

FiniteTables krasner_tables() {
  FiniteTables t;
  t.label = "K";
  t.names = {"0", "1"};
  t.zero = 0;
  t.one = 1;
  t.mul = {{0, 0}, {0, 1}};
  t.add = {{{0}, {1}}, {{1}, {0, 1}}};
  t.neg = {0, 1};
  t.inv = {0, 1};
  return t;
}

bool valid_symbol(const std::string& s) {
  if (s.empty() || s == "0" || s.find('T') != std::string::npos) return false;
  return s.find_first_of("+-*/^(){},") == std::string::npos;
}

}  // namespace

HyperfieldPtr krasner() {
  static const HyperfieldPtr hf = std::make_shared<TableHyperfield>(krasner_tables());
  return hf;
}

HyperfieldPtr signs() {
  static const HyperfieldPtr hf = std::make_shared<TableHyperfield>(sign_tables(false));
  return hf;
}

HyperfieldPtr weak_signs() {
  static const HyperfieldPtr hf = std::make_shared<TableHyperfield>(sign_tables(true));
  return hf;
}

HyperfieldPtr prime_field(int p) {
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
  if (p > 46337) throw LimitExceeded("prime fields are limited to p <= 46337");
  return std::make_shared<PrimeField>(p);
}

HyperfieldPtr table_hyperfield(FiniteTables t) {
  const std::size_t n = t.names.size();
  const auto in_range = [n](int i) { return i >= 0 && static_cast<std::size_t>(i) < n; };
  if (n < 2 || !in_range(t.zero) || !in_range(t.one) || t.zero == t.one) {
    throw DomainError("table hyperfield needs distinct zero and one");
  }
  if (t.mul.size() != n || t.add.size() != n || t.neg.size() != n || t.inv.size() != n) {
    throw DomainError("table hyperfield: table sizes disagree with the symbol count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.mul[i].size() != n || t.add[i].size() != n) {
      throw DomainError("table hyperfield: tables must be square");
    }
    if (!in_range(t.neg[i]) || (static_cast<int>(i) != t.zero && !in_range(t.inv[i]))) {
      throw DomainError("table hyperfield: negation or inverse out of range");
    }
    for (std::size_t j = 0; j < n; ++j) {
      auto& s = t.add[i][j];
      if (!in_range(t.mul[i][j]) || s.empty() || !std::all_of(s.begin(), s.end(), in_range)) {
        throw DomainError("table hyperfield: entry out of range or empty sum");
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
  }
  return std::make_shared<TableHyperfield>(std::move(t));
}

FiniteTables tables_of(const Hyperfield& hf) {
  const auto* f = dynamic_cast<const FiniteHyperfield*>(&hf);
  if (f == nullptr) throw DomainError(hf.name() + " has no finite tables");
  FiniteTables t;
  const int n = f->size();
  t.label = f->name();
  t.zero = f->zero_index();
  t.one = f->one_index();
  t.mul.assign(n, std::vector<int>(n));
  t.add.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i) {
    t.names.push_back(f->symbol(i));
    t.neg.push_back(f->neg_i(i));
    t.inv.push_back(i == t.zero ? t.zero : f->inv_i(i));
    for (int j = 0; j < n; ++j) {
      t.mul[i][j] = f->mul_i(i, j);
      t.add[i][j] = f->add_i(i, j);
    }
  }
  return t;
}

CayleyTable parse_cayley_table(std::string_view text, std::string* e_symbol) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw ParseError("empty Cayley table");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(tokens[0], &used);
    if (used != tokens[0].size()) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("Cayley table must start with the group order");
  }
  if (n < 1) throw ParseError("group order must be positive");
  const std::size_t un = static_cast<std::size_t>(n);
  if (tokens.size() != 1 + un * un + 1) {
    throw ParseError("Cayley table: expected " + std::to_string(n * n) +
                     " grid symbols followed by e");
  }

  CayleyTable table;
  table.names.assign(tokens.begin() + 1, tokens.begin() + 1 + n);
  if (std::set<std::string>(table.names.begin(), table.names.end()).size() != un) {
    throw ParseError("Cayley table: the identity row repeats a symbol");
  }
  for (const auto& s : table.names) {
    if (!valid_symbol(s)) throw ParseError("Cayley table: symbol '" + s + "' is reserved");
  }
  const auto lookup = [&](const std::string& s) {
    const auto it = std::find(table.names.begin(), table.names.end(), s);
    if (it == table.names.end()) throw ParseError("Cayley table: unknown symbol '" + s + "'");
    return static_cast<int>(it - table.names.begin());
  };
  table.product.assign(un, std::vector<int>(un));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) table.product[i][j] = lookup(tokens[1 + i * un + j]);
  }
  table.identity = 0;

  const auto& m = table.product;
  for (std::size_t i = 0; i < un; ++i) {
    if (m[i][0] != static_cast<int>(i)) {
      throw DomainError("Cayley table: first symbol is not a two-sided identity");
    }
    std::vector<bool> seen(un, false);
    for (std::size_t j = 0; j < un; ++j) {
      if (m[i][j] != m[j][i]) throw DomainError("Cayley table: group is not abelian");
      if (seen[m[i][j]]) throw DomainError("Cayley table: row " + table.names[i] + " repeats");
      seen[m[i][j]] = true;
    }
  }
  for (std::size_t a = 0; a < un; ++a) {
    for (std::size_t b = 0; b < un; ++b) {
      for (std::size_t c = 0; c < un; ++c) {
        if (m[m[a][b]][c] != m[a][m[b][c]]) {
          throw DomainError("Cayley table: product is not associative");
        }
      }
    }
  }
  const std::string e = tokens.back();
  (void)lookup(e);
  if (e_symbol != nullptr) *e_symbol = e;
  return table;
}

CayleyTable load_cayley_table(const std::string& path, std::string* e_symbol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open Cayley table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cayley_table(buf.str(), e_symbol);
}

HyperfieldPtr weak_hyperfield(const CayleyTable& group, const std::string& e_symbol,
                              std::string label) {
  const int g = static_cast<int>(group.names.size());
  const auto it = std::find(group.names.begin(), group.names.end(), e_symbol);
  if (it == group.names.end()) throw DomainError("e='" + e_symbol + "' is not in the group");
  const int e = static_cast<int>(it - group.names.begin());
  if (group.product[e][e] != group.identity) {
    throw DomainError("e='" + e_symbol + "' is not self-inverse");
  }

  // Index 0 is the zero symbol; index i+1 is group element i.
  FiniteTables t;
  t.label = label == "W(G,e)" ? "W(G,e)[" + std::to_string(g) + "," + e_symbol + "]"
                              : std::move(label);
  t.names.push_back("0");
  for (const auto& s : group.names) t.names.push_back(s);
  t.zero = 0;
  t.one = group.identity + 1;
  const int n = g + 1;
  t.mul.assign(n, std::vector<int>(n, 0));
  t.add.assign(n, std::vector<std::vector<int>>(n));
  std::vector<int> all(n), units(g);
  std::iota(all.begin(), all.end(), 0);
  std::iota(units.begin(), units.end(), 1);
  t.neg.assign(n, 0);
  t.inv.assign(n, 0);
  for (int i = 1; i < n; ++i) {
    t.neg[i] = group.product[e][i - 1] + 1;
    for (int j = 1; j < n; ++j) {
      t.mul[i][j] = group.product[i - 1][j - 1] + 1;
      if (t.mul[i][j] == t.one) t.inv[i] = j;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == 0) {
        t.add[i][j] = {j};
      } else if (j == 0) {
        t.add[i][j] = {i};
      } else if (j == t.neg[i]) {
        t.add[i][j] = all;
      } else {
        t.add[i][j] = units;
      }
    }
  }
  return std::make_shared<TableHyperfield>(std::move(t));
}

}  // namespace hyperpoly
