#include "sieve/serialize.hpp"

#include "sieve/overloaded.hpp"

#include <sstream>

namespace sieve {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw SchemaError(std::string("bad field '") + key + "'");
  }
}

template <class T>
T field_or(const Json& j, const char* key, T fallback) {
  return j.is_object() && j.contains(key) ? field<T>(j, key) : fallback;
}

BigInt big_from(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (!j.is_string()) throw SchemaError("expected a decimal string");
  BigInt v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw SchemaError("bad integer '" + j.get<std::string>() + "'");
  return v;
}

Json pair_list(const std::vector<std::pair<int, int>>& pairs) {
  Json out = Json::array();
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

std::vector<std::pair<int, int>> pairs_from(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected a list of pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw SchemaError("expected a pair of integers");
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

DegreeDistribution degrees_from(const Json& j) { return DegreeDistribution(field<std::vector<long>>(j, "degrees")); }

}  // namespace

Json to_json(const QPolynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  return {{"coeffs", c}};
}

QPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) throw SchemaError("missing field 'coeffs'");
  std::vector<BigInt> c;
  for (const auto& x : j["coeffs"]) c.push_back(big_from(x));
  return QPolynomial(c);
}

Json to_json(const QProductExpr& e) {
  Rational s = e.scalar;
  s.canonicalize();
  return {{"shift", e.shift}, {"num", e.num}, {"den", e.den}, {"scalar", s.get_str()}};
}

QProductExpr expr_from_json(const Json& j) {
  QProductExpr e;
  e.shift = field<unsigned>(j, "shift");
  e.num = field<std::vector<unsigned>>(j, "num");
  e.den = field<std::vector<unsigned>>(j, "den");
  const auto s = field<std::string>(j, "scalar");
  if (e.scalar.set_str(s, 10) != 0 || e.scalar.get_den() == 0) throw SchemaError("bad scalar '" + s + "'");
  e.scalar.canonicalize();
  return e;
}

Json to_json(const CspFamily& f) {
  Json j;
  j["family"] = csp_family_name(f);
  auto tree = overloaded{
      [&](const family::AllTrees& x) { j["n"] = x.n; },
      [&](const family::ByLeaves& x) { j["n"] = x.n, j["k"] = x.k; },
      [&](const family::LeafRooted& x) { j["n"] = x.n, j["k"] = x.k; },
      [&](const family::InternalRooted& x) { j["n"] = x.n, j["k"] = x.k; },
      [&](const family::RootDegree& x) { j["degrees"] = x.degrees.counts(), j["delta"] = x.delta; },
      [&](const auto& x) { j["degrees"] = x.degrees.counts(); },
  };
  auto map = overloaded{
      [&](const mapfam::TMij& x) { j["i"] = x.i, j["j"] = x.j; },
      [&](const mapfam::TMn& x) { j["n"] = x.n; },
      [&](const mapfam::TMd& x) { j["j"] = x.j, j["degrees"] = x.degrees.counts(); },
      [&](const mapfam::BT& x) { j["b"] = x.b, j["n"] = x.n; },
      [&](const mapfam::BTd& x) { j["b"] = x.b, j["degrees"] = x.degrees.counts(); },
      [&](const mapfam::NCM& x) { j["j"] = x.j; },
  };
  std::visit(overloaded{[&](const TreeFamily& t) { std::visit(tree, t); },
                        [&](const MapFamily& m) { std::visit(map, m); }},
             f);
  return j;
}

CspFamily family_from_json(const Json& j) {
  const auto name = field<std::string>(j, "family");
  auto n = [&] { return field<int>(j, "n"); };
  auto k = [&] { return field<int>(j, "k"); };
  if (name == "all_trees") return TreeFamily{family::AllTrees{n()}};
  if (name == "by_leaves") return TreeFamily{family::ByLeaves{n(), k()}};
  if (name == "leaf_rooted") return TreeFamily{family::LeafRooted{n(), k()}};
  if (name == "internal_rooted") return TreeFamily{family::InternalRooted{n(), k()}};
  if (name == "by_degrees") return TreeFamily{family::ByDegrees{degrees_from(j)}};
  if (name == "leaf_rooted_deg") return TreeFamily{family::LeafRootedDeg{degrees_from(j)}};
  if (name == "internal_rooted_deg") return TreeFamily{family::InternalRootedDeg{degrees_from(j)}};
  if (name == "root_degree") return TreeFamily{family::RootDegree{degrees_from(j), field<int>(j, "delta")}};
  if (name == "tm_ij") return MapFamily{mapfam::TMij{field<int>(j, "i"), field<int>(j, "j")}};
  if (name == "tm_n") return MapFamily{mapfam::TMn{n()}};
  if (name == "tm_deg") return MapFamily{mapfam::TMd{field<int>(j, "j"), degrees_from(j)}};
  if (name == "bt") return MapFamily{mapfam::BT{field<int>(j, "b"), n()}};
  if (name == "bt_deg") return MapFamily{mapfam::BTd{field<int>(j, "b"), degrees_from(j)}};
  if (name == "ncm") return MapFamily{mapfam::NCM{field<int>(j, "j")}};
  throw SchemaError("unknown family '" + name + "'");
}

Json params_to_json(TheoremId id, const TheoremParams& p) {
  Json j = Json::object();
  switch (id) {
    case TheoremId::Ord:
    case TheoremId::TMn:
      j["n"] = p.n;
      break;
    case TheoremId::OrdLeaves:
    case TheoremId::Ext:
    case TheoremId::Int:
      j["n"] = p.n, j["k"] = p.k;
      break;
    case TheoremId::OrdDeg:
    case TheoremId::IntDeg:
      j["degrees"] = p.degrees.counts();
      break;
    case TheoremId::Delta:
      j["degrees"] = p.degrees.counts(), j["delta"] = p.delta;
      break;
    case TheoremId::TMij:
      j["i"] = p.i, j["j"] = p.j;
      break;
    case TheoremId::TMd:
      j["j"] = p.j, j["degrees"] = p.degrees.counts();
      break;
    case TheoremId::BTij:
      j["b"] = p.b, j["n"] = p.n;
      break;
    case TheoremId::BTd:
      j["b"] = p.b, j["degrees"] = p.degrees.counts();
      break;
    case TheoremId::NcmRotation:
      j["j"] = p.j;
      break;
  }
  return j;
}

TheoremParams params_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("params must be an object");
  TheoremParams p;
  p.n = field_or(j, "n", 0);
  p.k = field_or(j, "k", 0);
  p.i = field_or(j, "i", 0);
  p.j = field_or(j, "j", 0);
  p.b = field_or(j, "b", 0);
  p.delta = field_or(j, "delta", 0);
  p.degrees = DegreeDistribution(field_or(j, "degrees", std::vector<long>{}));
  return p;
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"e", row.e},
                    {"d", row.d},
                    {"brute", row.brute.get_str()},
                    {"closed", row.closed.get_str()},
                    {"poly", row.poly.get_str()},
                    {"agree", row.agree}});
  }
  Json j{{"theorem", theorem_name(r.theorem)},
         {"params", params_to_json(r.theorem, r.params)},
         {"family", r.family},
         {"kind", r.kind},
         {"order", r.order},
         {"rows", rows},
         {"overall", r.overall},
         {"fallback", r.fallback}};
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  const auto name = field<std::string>(j, "theorem");
  const auto id = parse_theorem(name);
  if (!id) throw SchemaError("unknown theorem '" + name + "'");
  r.theorem = *id;
  r.params = params_from_json(field<Json>(j, "params"));
  r.family = field<std::string>(j, "family");
  r.kind = field<std::string>(j, "kind");
  r.order = field<long>(j, "order");
  for (const auto& x : field<Json>(j, "rows")) {
    VerificationRow row;
    row.e = field<long>(x, "e");
    row.d = field<long>(x, "d");
    row.brute = big_from(field<Json>(x, "brute"));
    row.closed = big_from(field<Json>(x, "closed"));
    row.poly = big_from(field<Json>(x, "poly"));
    row.agree = field<bool>(x, "agree");
    r.rows.push_back(std::move(row));
  }
  r.overall = field<bool>(j, "overall");
  r.fallback = field_or(j, "fallback", false);
  r.seconds = field_or(j, "seconds", 0.0);
  return r;
}

std::string csv_header() { return "family,kind,e,d,brute,closed,poly,agree\n"; }

std::string to_csv_rows(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& row : r.rows) {
    os << '"' << r.family << "\"," << r.kind << ',' << row.e << ',' << row.d << ',' << row.brute << ','
       << row.closed << ',' << row.poly << ',' << (row.agree ? "true" : "false") << '\n';
  }
  return os.str();
}

Json to_json(const NonCrossingMatching& m) { return pair_list(m.pairs()); }

NonCrossingMatching matching_from_json(const Json& j) {
  const auto pairs = pairs_from(j);
  return NonCrossingMatching::from_pairs(static_cast<int>(2 * pairs.size()), pairs);
}

Json to_json(const NonCrossingPartition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks()) {
    Json block = Json::array();
    for (int x : b) block.push_back(x + 1);
    out.push_back(block);
  }
  return out;
}

NonCrossingPartition partition_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected a list of blocks");
  std::vector<std::vector<int>> blocks;
  int n = 0;
  for (const auto& b : j) {
    if (!b.is_array() || b.empty()) throw SchemaError("blocks must be non-empty lists");
    std::vector<int> block;
    for (const auto& x : b) {
      if (!x.is_number_integer()) throw SchemaError("block entries must be integers");
      block.push_back(x.get<int>() - 1);
      ++n;
    }
    blocks.push_back(std::move(block));
  }
  return NonCrossingPartition::from_blocks(n, blocks);
}

Json to_json(const Dissection& d) { return {{"k", d.sides()}, {"diagonals", pair_list(d.diagonals())}}; }

Dissection dissection_from_json(const Json& j) {
  return Dissection(field<int>(j, "k"), pairs_from(field<Json>(j, "diagonals")));
}

Json to_json(const CubicHamiltonianMap& c) {
  return {{"n", c.n}, {"inner", pair_list(c.inner)}, {"outer", pair_list(c.outer)}, {"root", c.root}};
}

CubicHamiltonianMap cubic_from_json(const Json& j) {
  CubicHamiltonianMap c;
  c.n = field<int>(j, "n");
  c.inner = pairs_from(field<Json>(j, "inner"));
  c.outer = pairs_from(field<Json>(j, "outer"));
  c.root = field<int>(j, "root");
  return c;
}

}  // namespace sieve
