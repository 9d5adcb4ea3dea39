#include "sieve/maps.hpp"

#include "sieve/combinatorics.hpp"
#include "sieve/overloaded.hpp"
#include "sieve/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sieve {

namespace {

struct LetterClass {
  char open, close;
};

constexpr LetterClass kTree{'(', ')'};
constexpr LetterClass kEW{'E', 'W'};
constexpr LetterClass kNS{'N', 'S'};

std::vector<int> class_partners(const std::string& w, LetterClass c) {
  std::vector<int> partner(w.size(), -1);
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (w[i] == c.open) {
      stack.push_back(i);
    } else if (w[i] == c.close) {
      partner[i] = stack.back();
      partner[stack.back()] = i;
      stack.pop_back();
    }
  }
  return partner;
}

// Cyclic shift by s, then each letter class is re-read so that the first
// visit of every pair is the opening letter. Other letters move unchanged.
std::string shift_word(const std::string& w, long s, std::initializer_list<LetterClass> classes) {
  const long len = static_cast<long>(w.size());
  if (len == 0) return w;
  s = ((s % len) + len) % len;
  if (s == 0) return w;
  std::string out(len, ' ');
  std::vector<std::pair<LetterClass, std::vector<int>>> parts;
  for (auto c : classes) parts.emplace_back(c, class_partners(w, c));
  for (long i = 0; i < len; ++i) {
    const long j = (i + s) % len;
    out[i] = w[j];
    for (const auto& [c, partner] : parts) {
      if (w[j] != c.open && w[j] != c.close) continue;
      const long pn = ((partner[j] - s) % len + len) % len;
      out[i] = pn > i ? c.open : c.close;
    }
  }
  return out;
}

long reduce_exponent(long e, long order) {
  if (order == 0) return 0;
  return std::gcd(((e % order) + order) % order, order);
}

bool btree_params_ok(int b, const DegreeDistribution& d) {
  const long nodes = d.nodes();
  return b >= 0 && nodes >= 1 && d.satisfies_tree_condition(b) && (nodes - 1) + b >= 1 &&
         std::all_of(d.counts().begin(), d.counts().end(), [](long c) { return c >= 0; });
}

int tmd_tree_edges(const mapfam::TMd& x) { return static_cast<int>(x.degrees.nodes()) - 1; }

BigInt ncm_fix(int j, long d) {
  if (d == 1) return catalan(j);
  if (d == 2 && j % 2 == 1) return binomial(j, (j + 1) / 2);
  if (j % d == 0) return binomial(2 * j / d, j / d);
  return 0;
}

BigInt bt_count(int b, int n) {
  return exact_integer(Rational(multinomial(2 * n + b, {b, n, n}), n + 1), "b-tree count");
}

BigInt btd_count(int b, const DegreeDistribution& dd) {
  const long n = dd.nodes() - 1;
  std::vector<long> parts{b};
  parts.insert(parts.end(), dd.counts().begin(), dd.counts().end());
  return exact_integer(Rational(BigInt(2 * n + b) * multinomial(n + b + 1, parts), BigInt(n + b) * (n + b + 1)),
                       "b-tree degree count");
}

BigInt bt_fix(int b, int n, long d) {
  const long order = 2L * n + b;
  if (d == 1) return bt_count(b, n);
  if (d == 2 && (n + 1) % 2 == 0 && b % 2 == 0) return multinomial(n + b / 2, {b / 2, (n - 1) / 2, (n + 1) / 2});
  if (n % d == 0 && b % d == 0) return multinomial(order / d, {b / d, n / d, n / d});
  return 0;
}

BigInt btd_fix(int b, const DegreeDistribution& dd, long d) {
  const long n = dd.nodes() - 1;
  if (d == 1) return btd_count(b, dd);
  if (d == 2 && b % 2 == 0 &&
      std::all_of(dd.counts().begin(), dd.counts().end(), [](long c) { return c % 2 == 0; })) {
    std::vector<long> parts{b / 2};
    for (long c : dd.counts()) parts.push_back(c / 2);
    return exact_integer(Rational(BigInt(2 * n + b) * multinomial((b + n + 1) / 2, parts), n + b + 1),
                         "b-tree degree fix d=2");
  }
  if (b % d != 0) return 0;
  for (int ell = 1; ell <= dd.max_degree(); ++ell) {
    if (dd.count(ell) == 0) continue;
    std::vector<long> parts{b / d};
    bool ok = true;
    for (int i = 1; i <= dd.max_degree() && ok; ++i) {
      const long c = dd.count(i) - (i == ell ? 1 : 0);
      ok = c % d == 0;
      parts.push_back(c / d);
    }
    if (ok) {
      return exact_integer(Rational(BigInt(2 * n + b) * multinomial((n + b) / d, parts), n + b),
                           "b-tree degree fix");
    }
  }
  return 0;
}

}  // namespace

BTreeWord::BTreeWord(std::string word) : word_(std::move(word)) {
  if (!is_valid_word(word_)) throw std::invalid_argument("not a b-tree word: " + word_);
}

bool BTreeWord::is_valid_word(const std::string& word) {
  long depth = 0;
  for (char c : word) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth < 0) return false;
    } else if (c != '*') {
      return false;
    }
  }
  return depth == 0;
}

int BTreeWord::tree_edges() const { return static_cast<int>(std::count(word_.begin(), word_.end(), '(')); }
int BTreeWord::buds() const { return static_cast<int>(std::count(word_.begin(), word_.end(), '*')); }

DegreeDistribution btree_degrees(const BTreeWord& t) {
  std::vector<long> deg{0};
  std::vector<int> stack{0};
  for (char c : t.word()) {
    if (c == '(') {
      ++deg[stack.back()];
      deg.push_back(1);
      stack.push_back(static_cast<int>(deg.size()) - 1);
    } else if (c == ')') {
      stack.pop_back();
    } else {
      ++deg[stack.back()];
    }
  }
  std::vector<long> counts;
  for (long d : deg) {
    if (d == 0) continue;
    if (static_cast<long>(counts.size()) < d) counts.resize(d, 0);
    ++counts[d - 1];
  }
  return DegreeDistribution(std::move(counts));
}

NonCrossingMatching::NonCrossingMatching(std::vector<int> partner) : partner_(std::move(partner)) {
  const int len = static_cast<int>(partner_.size());
  std::string w(len, '(');
  for (int i = 0; i < len; ++i) {
    const int p = partner_[i];
    if (p < 0 || p >= len || p == i || partner_[p] != i) throw std::invalid_argument("not a perfect matching");
    w[i] = p > i ? '(' : ')';
  }
  if (class_partners(w, kTree) != partner_) throw std::invalid_argument("matching has crossing pairs");
}

NonCrossingMatching NonCrossingMatching::from_pairs(int points, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> partner(points, -1);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= points || b >= points || partner[a] != -1 || partner[b] != -1) {
      throw std::invalid_argument("bad matching pair");
    }
    partner[a] = b;
    partner[b] = a;
  }
  return NonCrossingMatching(std::move(partner));
}

NonCrossingMatching NonCrossingMatching::from_word(const std::string& dyck) {
  if (!PlaneTree::is_valid_word(dyck)) throw std::invalid_argument("not a balanced word: " + dyck);
  return NonCrossingMatching(class_partners(dyck, kTree));
}

std::vector<std::pair<int, int>> NonCrossingMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < points(); ++i) {
    if (partner_[i] > i) out.emplace_back(i, partner_[i]);
  }
  return out;
}

std::string NonCrossingMatching::word() const {
  std::string w(partner_.size(), '(');
  for (int i = 0; i < points(); ++i) w[i] = partner_[i] > i ? '(' : ')';
  return w;
}

TreeRootedMap::TreeRootedMap(std::string word) : word_(std::move(word)) {
  if (!is_excursion(word_)) throw std::invalid_argument("not a quadrant excursion: " + word_);
}

bool TreeRootedMap::is_quadrant_prefix(const std::string& word) {
  long x = 0, y = 0;
  for (char c : word) {
    switch (c) {
      case 'E': ++x; break;
      case 'W': --x; break;
      case 'N': ++y; break;
      case 'S': --y; break;
      default: return false;
    }
    if (x < 0 || y < 0) return false;
  }
  return true;
}

bool TreeRootedMap::is_excursion(const std::string& word) {
  return is_quadrant_prefix(word) && std::count(word.begin(), word.end(), 'E') == std::count(word.begin(), word.end(), 'W') &&
         std::count(word.begin(), word.end(), 'N') == std::count(word.begin(), word.end(), 'S');
}

int TreeRootedMap::tree_edges() const { return static_cast<int>(std::count(word_.begin(), word_.end(), 'E')); }
int TreeRootedMap::extra_edges() const { return static_cast<int>(std::count(word_.begin(), word_.end(), 'N')); }

std::string map_family_name(const MapFamily& f) {
  return std::visit(overloaded{
                        [](const mapfam::TMij&) { return std::string("tm_ij"); },
                        [](const mapfam::TMn&) { return std::string("tm_n"); },
                        [](const mapfam::TMd&) { return std::string("tm_deg"); },
                        [](const mapfam::BT&) { return std::string("bt"); },
                        [](const mapfam::BTd&) { return std::string("bt_deg"); },
                        [](const mapfam::NCM&) { return std::string("ncm"); },
                    },
                    f);
}

std::string map_family_label(const MapFamily& f) {
  std::ostringstream os;
  os << map_family_name(f) << "(";
  std::visit(overloaded{
                 [&](const mapfam::TMij& x) { os << "i=" << x.i << ",j=" << x.j; },
                 [&](const mapfam::TMn& x) { os << "n=" << x.n; },
                 [&](const mapfam::TMd& x) { os << "j=" << x.j << ",degrees=" << x.degrees.to_string(); },
                 [&](const mapfam::BT& x) { os << "b=" << x.b << ",n=" << x.n; },
                 [&](const mapfam::BTd& x) { os << "b=" << x.b << ",degrees=" << x.degrees.to_string(); },
                 [&](const mapfam::NCM& x) { os << "j=" << x.j; },
             },
             f);
  os << ")";
  return os.str();
}

bool map_family_feasible(const MapFamily& f) {
  return std::visit(overloaded{
                        [](const mapfam::TMij& x) { return x.i >= 0 && x.j >= 0; },
                        [](const mapfam::TMn& x) { return x.n >= 0; },
                        [](const mapfam::TMd& x) { return x.j >= 0 && btree_params_ok(2 * x.j, x.degrees); },
                        [](const mapfam::BT& x) { return x.b >= 0 && x.n >= 0; },
                        [](const mapfam::BTd& x) { return btree_params_ok(x.b, x.degrees); },
                        [](const mapfam::NCM& x) { return x.j >= 0; },
                    },
                    f);
}

long map_group_order(const MapFamily& f) {
  return std::visit(overloaded{
                        [](const mapfam::TMij& x) { return 2L * (x.i + x.j); },
                        [](const mapfam::TMn& x) { return 2L * x.n; },
                        [](const mapfam::TMd& x) { return 2L * (tmd_tree_edges(x) + x.j); },
                        [](const mapfam::BT& x) { return 2L * x.n + x.b; },
                        [](const mapfam::BTd& x) { return 2L * (x.degrees.nodes() - 1) + x.b; },
                        [](const mapfam::NCM& x) { return 2L * x.j; },
                    },
                    f);
}

int map_family_size(const MapFamily& f) {
  return std::visit(overloaded{
                        [](const mapfam::TMij& x) { return x.i + x.j; },
                        [](const mapfam::TMn& x) { return x.n; },
                        [](const mapfam::TMd& x) { return tmd_tree_edges(x) + x.j; },
                        [](const mapfam::BT& x) { return x.n + (x.b + 1) / 2; },
                        [](const mapfam::BTd& x) { return static_cast<int>(x.degrees.nodes()) - 1 + (x.b + 1) / 2; },
                        [](const mapfam::NCM& x) { return x.j; },
                    },
                    f);
}

std::vector<NonCrossingMatching> enumerate_ncm(int j) {
  std::vector<NonCrossingMatching> out;
  if (j < 0) return out;
  for_each_tree(family::AllTrees{j}, [&](const PlaneTree& t) { out.push_back(NonCrossingMatching::from_word(t.word())); });
  return out;
}

std::vector<BTreeWord> enumerate_btrees(int b, int n) {
  std::vector<BTreeWord> out;
  if (b < 0 || n < 0) return out;
  std::string w(2 * n + b, '(');
  auto rec = [&](auto&& self, int pos, int opened, int depth, int buds) -> void {
    if (pos == static_cast<int>(w.size())) {
      out.emplace_back(w);
      return;
    }
    if (opened < n) {
      w[pos] = '(';
      self(self, pos + 1, opened + 1, depth + 1, buds);
    }
    if (depth > 0) {
      w[pos] = ')';
      self(self, pos + 1, opened, depth - 1, buds);
    }
    if (buds < b) {
      w[pos] = '*';
      self(self, pos + 1, opened, depth, buds + 1);
    }
  };
  rec(rec, 0, 0, 0, 0);
  return out;
}

std::vector<BTreeWord> enumerate_btrees(int b, const DegreeDistribution& degrees) {
  std::vector<BTreeWord> out;
  if (!btree_params_ok(b, degrees)) return out;
  for (auto& t : enumerate_btrees(b, static_cast<int>(degrees.nodes()) - 1)) {
    if (btree_degrees(t) == degrees) out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> enumerate_map_words(const MapFamily& f) {
  std::vector<std::string> out;
  if (!map_family_feasible(f)) return out;
  auto product = [&](const std::vector<BTreeWord>& trees, int j) {
    const auto ms = enumerate_ncm(j);
    for (const auto& t : trees) {
      for (const auto& m : ms) out.push_back(compose(t, m).word());
    }
  };
  std::visit(overloaded{
                 [&](const mapfam::TMij& x) { product(enumerate_btrees(2 * x.j, x.i), x.j); },
                 [&](const mapfam::TMn& x) {
                   for (int i = 0; i <= x.n; ++i) product(enumerate_btrees(2 * (x.n - i), i), x.n - i);
                 },
                 [&](const mapfam::TMd& x) { product(enumerate_btrees(2 * x.j, x.degrees), x.j); },
                 [&](const mapfam::BT& x) {
                   for (auto& t : enumerate_btrees(x.b, x.n)) out.push_back(t.word());
                 },
                 [&](const mapfam::BTd& x) {
                   for (auto& t : enumerate_btrees(x.b, x.degrees)) out.push_back(t.word());
                 },
                 [&](const mapfam::NCM& x) {
                   for (auto& m : enumerate_ncm(x.j)) out.push_back(m.word());
                 },
             },
             f);
  return out;
}

BigInt closed_count_maps(const MapFamily& f) {
  if (!map_family_feasible(f)) return 0;
  return std::visit(overloaded{
                        [](const mapfam::TMij& x) -> BigInt { return bt_count(2 * x.j, x.i) * catalan(x.j); },
                        [](const mapfam::TMn& x) -> BigInt {
                          return exact_integer(
                              Rational(binomial(2 * x.n, x.n) * binomial(2 * x.n + 2, x.n + 1), (x.n + 1) * (x.n + 2)),
                              "tree-rooted map count");
                        },
                        [](const mapfam::TMd& x) -> BigInt { return btd_count(2 * x.j, x.degrees) * catalan(x.j); },
                        [](const mapfam::BT& x) -> BigInt { return bt_count(x.b, x.n); },
                        [](const mapfam::BTd& x) -> BigInt { return btd_count(x.b, x.degrees); },
                        [](const mapfam::NCM& x) -> BigInt { return catalan(x.j); },
                    },
                    f);
}

TreeRootedMap compose(const BTreeWord& t, const NonCrossingMatching& m) {
  if (t.buds() != m.points()) throw SizeMismatch("matching size differs from bud count");
  std::string w = t.word();
  int bud = 0;
  for (char& c : w) {
    if (c == '(') {
      c = 'E';
    } else if (c == ')') {
      c = 'W';
    } else {
      c = m.partner()[bud] > bud ? 'N' : 'S';
      ++bud;
    }
  }
  return TreeRootedMap(std::move(w));
}

std::pair<BTreeWord, NonCrossingMatching> decompose(const TreeRootedMap& w) {
  std::string tree, buds;
  for (char c : w.word()) {
    switch (c) {
      case 'E': tree += '('; break;
      case 'W': tree += ')'; break;
      case 'N': tree += '*'; buds += '('; break;
      default: tree += '*'; buds += ')'; break;
    }
  }
  return {BTreeWord(std::move(tree)), NonCrossingMatching::from_word(buds)};
}

TreeRootedMap rotate_map(const TreeRootedMap& w, long steps) {
  return TreeRootedMap(shift_word(w.word(), steps, {kEW, kNS}));
}

BTreeWord rotate_btree(const BTreeWord& t, long steps) { return BTreeWord(shift_word(t.word(), steps, {kTree})); }

NonCrossingMatching rotate_ncm(const NonCrossingMatching& m, long steps) {
  const long len = m.points();
  if (len == 0) return m;
  const long s = ((steps % len) + len) % len;
  std::vector<int> partner(len);
  for (long i = 0; i < len; ++i) partner[(i + s) % len] = static_cast<int>((m.partner()[i] + s) % len);
  return NonCrossingMatching(std::move(partner));
}

std::string rotate_map_word(const MapFamily& f, const std::string& word, long steps) {
  if (std::holds_alternative<mapfam::NCM>(f)) {
    return rotate_ncm(NonCrossingMatching::from_word(word), steps).word();
  }
  if (std::holds_alternative<mapfam::BT>(f) || std::holds_alternative<mapfam::BTd>(f)) {
    return shift_word(word, steps, {kTree});
  }
  return shift_word(word, steps, {kEW, kNS});
}

BigInt fix_count_maps(const MapFamily& f, long e, int jobs) {
  return parallel_count(enumerate_map_words(f), jobs,
                        [&](const std::string& w) { return rotate_map_word(f, w, e) == w; });
}

BigInt fix_count_maps_closed(const MapFamily& f, long e) {
  if (!map_family_feasible(f)) return 0;
  const long order = map_group_order(f);
  if (order == 0) return closed_count_maps(f);
  const long d = order / reduce_exponent(e, order);
  return std::visit(overloaded{
                        [&](const mapfam::TMij& x) -> BigInt { return bt_fix(2 * x.j, x.i, d) * ncm_fix(x.j, d); },
                        [&](const mapfam::TMn& x) -> BigInt {
                          BigInt s = 0;
                          for (int i = 0; i <= x.n; ++i) s += bt_fix(2 * (x.n - i), i, d) * ncm_fix(x.n - i, d);
                          return s;
                        },
                        [&](const mapfam::TMd& x) -> BigInt { return btd_fix(2 * x.j, x.degrees, d) * ncm_fix(x.j, d); },
                        [&](const mapfam::BT& x) -> BigInt { return bt_fix(x.b, x.n, d); },
                        [&](const mapfam::BTd& x) -> BigInt { return btd_fix(x.b, x.degrees, d); },
                        [&](const mapfam::NCM& x) -> BigInt { return ncm_fix(x.j, d); },
                    },
                    f);
}

CubicHamiltonianMap to_cubic(const TreeRootedMap& w) {
  CubicHamiltonianMap c;
  c.n = w.edges();
  const auto ew = class_partners(w.word(), kEW);
  const auto ns = class_partners(w.word(), kNS);
  for (int p = 0; p < static_cast<int>(w.word().size()); ++p) {
    if (ew[p] > p) c.inner.emplace_back(p, ew[p]);
    if (ns[p] > p) c.outer.emplace_back(p, ns[p]);
  }
  return c;
}

TreeRootedMap from_cubic(const CubicHamiltonianMap& c) {
  const int len = 2 * c.n;
  if (c.n < 0 || (len > 0 && (c.root < 0 || c.root >= len))) throw std::invalid_argument("bad cycle length or root");
  if (static_cast<int>(c.inner.size() + c.outer.size()) != c.n) throw std::invalid_argument("chord count is not n");
  std::vector<int> partner(len, -1);
  std::vector<char> inner(len, 0);
  auto place = [&](const std::vector<std::pair<int, int>>& chords, bool is_inner) {
    for (auto [a, b] : chords) {
      if (a < 0 || b < 0 || a >= len || b >= len || a == b || partner[a] != -1 || partner[b] != -1) {
        throw std::invalid_argument("every cycle vertex needs exactly one chord");
      }
      partner[a] = b;
      partner[b] = a;
      inner[a] = inner[b] = is_inner;
    }
  };
  place(c.inner, true);
  place(c.outer, false);
  std::string w(len, ' ');
  for (int p = 0; p < len; ++p) {
    const int v = (c.root + p) % len;
    const int q = ((partner[v] - c.root) % len + len) % len;
    w[p] = inner[v] ? (q > p ? 'E' : 'W') : (q > p ? 'N' : 'S');
  }
  if (!TreeRootedMap::is_excursion(w)) throw std::invalid_argument("chords do not form a cubic planar map");
  // Reject crossing chords on either side.
  const auto ew = class_partners(w, kEW);
  const auto ns = class_partners(w, kNS);
  for (int p = 0; p < len; ++p) {
    const int v = (c.root + p) % len;
    const int q = ((partner[v] - c.root) % len + len) % len;
    if ((inner[v] ? ew[p] : ns[p]) != q) throw std::invalid_argument("chords on one side cross");
  }
  return TreeRootedMap(std::move(w));
}

CubicHamiltonianMap advance_root(const CubicHamiltonianMap& c, long steps) {
  CubicHamiltonianMap out = c;
  const long len = 2L * c.n;
  if (len > 0) out.root = static_cast<int>((((c.root + steps) % len) + len) % len);
  return out;
}

}  // namespace sieve
