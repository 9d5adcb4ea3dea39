#include "sieve/cli.hpp"

#include "sieve/overloaded.hpp"
#include "sieve/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace sieve {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string theorem, family, mode, format = "text", kind = "ordinary";
  std::string tree, word, to, from, input, identity, manifest;
  int n = 0, k = 0, i = 0, j = 0, b = 0, delta = 0, jobs = 1, size_guard = 0;
  long e = 0;
  std::vector<long> degrees;
  bool sweep = false, timing = false;
};

struct Command {
  CLI::App* app;
  Options opt;
  bool given(const std::string& flag) const { return app->count(flag) > 0; }
};

void add_common(Command& c) {
  auto& o = c.opt;
  c.app->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  c.app->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  c.app->add_option("--size-guard", o.size_guard, "largest edge count to enumerate")->check(CLI::PositiveNumber);
}

void add_params(Command& c) {
  auto& o = c.opt;
  c.app->add_option("--n", o.n, "edges");
  c.app->add_option("--k", o.k, "leaves");
  c.app->add_option("--i", o.i, "tree edges of a tree-rooted map");
  c.app->add_option("--j", o.j, "extra edges / matching size");
  c.app->add_option("--b", o.b, "buds");
  c.app->add_option("--delta", o.delta, "root degree class");
  c.app->add_option("--degrees", o.degrees, "n1,n2,... node counts by degree")->delimiter(',');
}

TheoremParams params_of(const Options& o) {
  return {o.n, o.k, o.i, o.j, o.b, o.delta, DegreeDistribution(o.degrees)};
}

TheoremId theorem_of(const Command& c) {
  if (!c.given("--theorem")) throw UsageError("--theorem is required");
  const auto id = parse_theorem(c.opt.theorem);
  if (!id) throw UsageError("--theorem: unknown theorem '" + c.opt.theorem + "'");
  return *id;
}

CspFamily family_of(const Command& c) {
  if (!c.given("--family")) throw UsageError("--family is required");
  Json j{{"family", c.opt.family}};
  const auto& o = c.opt;
  for (auto [flag, value] : {std::pair{"n", o.n}, {"k", o.k}, {"i", o.i}, {"j", o.j}, {"b", o.b}, {"delta", o.delta}}) {
    if (c.given(std::string("--") + flag)) j[flag] = value;
  }
  if (c.given("--degrees")) j["degrees"] = o.degrees;
  try {
    return family_from_json(j);
  } catch (const SchemaError& ex) {
    std::string msg = ex.what();
    const auto q = msg.find("missing field '");
    if (q != std::string::npos) msg = "missing flag --" + msg.substr(q + 15, msg.size() - q - 16);
    throw UsageError("--family " + o.family + ": " + msg);
  }
}

RotationKind kind_of(const Command& c) {
  const auto& k = c.opt.kind;
  if (k == "ordinary") return kind::Ordinary{};
  if (k == "leaf") return kind::Leaf{};
  if (k == "internal") return kind::Internal{};
  if (k == "degree") {
    if (!c.given("--delta")) throw UsageError("--kind degree needs --delta");
    return kind::Degree{c.opt.delta};
  }
  throw UsageError("--kind: unknown kind '" + k + "'");
}

int guard_of(const Options& o, const CspFamily& f) { return o.size_guard > 0 ? o.size_guard : default_size_guard(f); }

void print_table(std::ostream& out, const VerificationReport& r) {
  out << theorem_name(r.theorem) << ' ' << r.family << ' ' << r.kind << " order " << r.order
      << (r.fallback ? " (enumeration fallback)" : "") << '\n';
  out << std::setw(4) << "e" << std::setw(5) << "d" << std::setw(12) << "brute" << std::setw(12) << "closed"
      << std::setw(12) << "poly" << "  agree\n";
  for (const auto& row : r.rows) {
    out << std::setw(4) << row.e << std::setw(5) << row.d << std::setw(12) << row.brute << std::setw(12) << row.closed
        << std::setw(12) << row.poly << "  " << (row.agree ? "yes" : "NO") << '\n';
  }
  out << "overall: " << (r.overall ? "PASS" : "FAIL") << '\n';
}

void print_reports(std::ostream& out, const Options& o, const std::vector<VerificationReport>& reps, bool single) {
  if (o.format == "json") {
    if (single) {
      out << to_json(reps.front(), o.timing).dump(2) << '\n';
    } else {
      Json all = Json::array();
      for (const auto& r : reps) all.push_back(to_json(r, o.timing));
      out << all.dump(2) << '\n';
    }
  } else if (o.format == "csv") {
    out << csv_header();
    for (const auto& r : reps) out << to_csv_rows(r);
  } else if (single) {
    print_table(out, reps.front());
  } else {
    for (const auto& r : reps) {
      out << (r.overall ? "PASS " : "FAIL ") << theorem_name(r.theorem) << ' ' << r.family << " order " << r.order
          << '\n';
    }
  }
}

int cmd_enumerate(const Command& c, std::ostream& out) {
  const auto f = family_of(c);
  const int guard = guard_of(c.opt, f);
  if (family_size(f) > guard) {
    throw SizeGuardExceeded(csp_family_label(f) + " exceeds the size guard " + std::to_string(guard));
  }
  std::vector<std::string> words;
  std::visit(overloaded{[&](const TreeFamily& t) {
                          for (const auto& x : enumerate(t)) words.push_back(x.word());
                        },
                        [&](const MapFamily& m) { words = enumerate_map_words(m); }},
             f);
  if (c.opt.format == "json") {
    out << Json{{"family", to_json(f)}, {"count", words.size()}, {"members", words}}.dump(2) << '\n';
  } else {
    if (c.opt.format == "csv") out << "word\n";
    for (const auto& w : words) out << w << '\n';
  }
  return 0;
}

int cmd_count(const Command& c, std::ostream& out) {
  const auto f = family_of(c);
  const BigInt n = std::visit(overloaded{[](const TreeFamily& t) -> BigInt { return closed_count(t); },
                                         [](const MapFamily& m) -> BigInt { return closed_count_maps(m); }},
                              f);
  if (c.opt.format == "json") {
    out << Json{{"family", to_json(f)}, {"count", n.get_str()}}.dump(2) << '\n';
  } else if (c.opt.format == "csv") {
    out << "family,count\n\"" << csp_family_label(f) << "\"," << n << '\n';
  } else {
    out << n << '\n';
  }
  return 0;
}

int cmd_poly(const Command& c, std::ostream& out) {
  const TheoremId id = theorem_of(c);
  const auto inst = build_instance(id, params_of(c.opt));
  const PolyCheck chk = check_poly_nonneg(inst);
  if (!chk.polynomial) {
    out << "not a polynomial\n";
    return 1;
  }
  const QPolynomial p = to_polynomial(inst.polynomial);
  if (c.opt.format == "json") {
    out << Json{{"theorem", theorem_name(id)},
                {"params", params_to_json(id, inst.params)},
                {"family", to_json(inst.family)},
                {"order", inst.order},
                {"expr", to_json(inst.polynomial)},
                {"polynomial", to_json(p)},
                {"degenerate", inst.degenerate},
                {"checks",
                 {{"polynomial", chk.polynomial},
                  {"nonneg", chk.nonneg},
                  {"reciprocal", chk.reciprocal},
                  {"unimodal", chk.unimodal}}}}
               .dump(2)
        << '\n';
  } else if (c.opt.format == "csv") {
    out << "power,coefficient\n";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out << k << ',' << p.coeffs()[k] << '\n';
  } else {
    out << p.to_string() << '\n';
  }
  return chk.nonneg ? 0 : 1;
}

VerifyMode mode_of(const Command& c, VerifyMode fallback) {
  if (!c.given("--mode")) return fallback;
  return c.opt.mode == "all" ? VerifyMode::AllExponents : VerifyMode::Divisors;
}

int cmd_fixtable(const Command& c, std::ostream& out) {
  const TheoremId id = theorem_of(c);
  const auto inst = build_instance(id, params_of(c.opt));
  auto rep = verify(inst, mode_of(c, VerifyMode::AllExponents), c.opt.jobs, c.opt.size_guard);
  if (c.given("--e")) {
    const long e = ((c.opt.e % rep.order) + rep.order) % rep.order;
    if (rep.rows.size() != static_cast<std::size_t>(rep.order)) {
      rep = verify(inst, VerifyMode::AllExponents, c.opt.jobs, c.opt.size_guard);
    }
    const VerificationRow row = rep.rows[e];
    rep.rows = {row};
    rep.rows.front().e = c.opt.e;
    rep.overall = row.agree;
  }
  print_reports(out, c.opt, {rep}, true);
  return 0;
}

int cmd_verify(const Command& c, std::ostream& out) {
  const VerifyMode mode = mode_of(c, VerifyMode::Divisors);
  std::vector<VerificationReport> reps;
  if (c.opt.sweep) {
    std::vector<TheoremId> ids;
    if (c.given("--theorem") && c.opt.theorem == "all") {
      ids = all_theorems();
    } else {
      ids = {theorem_of(c)};
    }
    for (TheoremId id : ids) {
      for (const auto& p : sweep_params(id)) {
        const auto inst = build_instance(id, p);
        reps.push_back(verify(inst, mode, c.opt.jobs, std::max(c.opt.size_guard, instance_size(inst))));
      }
    }
  } else {
    reps.push_back(verify(build_instance(theorem_of(c), params_of(c.opt)), mode, c.opt.jobs, c.opt.size_guard));
  }
  print_reports(out, c.opt, reps, !c.opt.sweep);
  bool ok = true;
  for (const auto& r : reps) ok = ok && r.overall;
  return ok ? 0 : 1;
}

int cmd_orbit(const Command& c, std::ostream& out) {
  std::vector<std::string> orbit_words;
  std::string kind_label;
  if (c.given("--tree")) {
    const PlaneTree t(c.opt.tree);
    const RotationKind k = kind_of(c);
    kind_label = kind_name(k);
    for (const auto& x : orbit(t, k)) orbit_words.push_back(x.word());
  } else if (c.given("--word")) {
    const std::string& w = c.opt.word;
    std::function<std::string(const std::string&)> step;
    if (w.find('*') != std::string::npos || BTreeWord::is_valid_word(w)) {
      kind_label = "btree";
      step = [](const std::string& x) { return rotate_btree(BTreeWord(x)).word(); };
      BTreeWord check(w);
    } else {
      kind_label = "map";
      step = [](const std::string& x) { return rotate_map(TreeRootedMap(x)).word(); };
      TreeRootedMap check(w);
    }
    std::string x = w;
    do {
      orbit_words.push_back(x);
      x = step(x);
    } while (x != w);
  } else {
    throw UsageError("orbit needs --tree or --word");
  }
  const std::string start = orbit_words.front();
  if (c.opt.format == "json") {
    out << Json{{"start", start}, {"kind", kind_label}, {"length", orbit_words.size()}, {"orbit", orbit_words}}.dump(2)
        << '\n';
  } else {
    if (c.opt.format == "csv") out << "step,word\n";
    for (std::size_t s = 0; s < orbit_words.size(); ++s) {
      if (c.opt.format == "csv") out << s << ',';
      out << orbit_words[s] << '\n';
    }
  }
  return 0;
}

int cmd_biject(const Command& c, std::ostream& out) {
  Json result;
  const auto& o = c.opt;
  if (c.given("--to")) {
    if (o.to == "ncm" || o.to == "ncp" || o.to == "kreweras" || o.to == "dissection") {
      if (!c.given("--tree")) throw UsageError("--to " + o.to + " needs --tree");
      const PlaneTree t(o.tree);
      if (o.to == "ncm") result = to_json(tree_to_ncm(t));
      if (o.to == "ncp") result = to_json(tree_to_ncp(t));
      if (o.to == "kreweras") result = to_json(kreweras(tree_to_ncp(t)));
      if (o.to == "dissection") result = to_json(tree_to_dissection(t));
    } else if (o.to == "cubic" || o.to == "split") {
      if (!c.given("--word")) throw UsageError("--to " + o.to + " needs --word");
      const TreeRootedMap m(o.word);
      if (o.to == "cubic") {
        result = to_json(to_cubic(m));
      } else {
        const auto [t, ncm] = decompose(m);
        result = {{"btree", t.word()}, {"matching", to_json(ncm)}};
      }
    } else {
      throw UsageError("--to: unknown target '" + o.to + "'");
    }
  } else if (c.given("--from")) {
    if (!c.given("--input")) throw UsageError("--from needs --input");
    Json in;
    try {
      in = Json::parse(o.input);
    } catch (const Json::parse_error&) {
      throw UsageError("--input is not valid JSON");
    }
    if (o.from == "ncm") result = ncm_to_tree(matching_from_json(in)).word();
    else if (o.from == "ncp") result = ncp_to_tree(partition_from_json(in)).word();
    else if (o.from == "dissection") result = dissection_to_tree(dissection_from_json(in)).word();
    else if (o.from == "cubic") result = from_cubic(cubic_from_json(in)).word();
    else if (o.from == "split") {
      if (!in.is_object() || !in.contains("btree") || !in.contains("matching")) {
        throw SchemaError("split input needs 'btree' and 'matching'");
      }
      result = compose(BTreeWord(in["btree"].get<std::string>()), matching_from_json(in["matching"])).word();
    } else {
      throw UsageError("--from: unknown source '" + o.from + "'");
    }
  } else {
    throw UsageError("biject needs --to or --from");
  }
  if (o.format == "json") {
    out << result.dump(2) << '\n';
  } else {
    out << (result.is_string() ? result.get<std::string>() : result.dump()) << '\n';
  }
  return 0;
}

int cmd_sumcheck(const Command& c, std::ostream& out) {
  SumIdentity which;
  if (c.opt.identity == "refined_leaves") which = SumIdentity::RefinedLeaves;
  else if (c.opt.identity == "chu_vandermonde") which = SumIdentity::ChuVandermondeTM;
  else throw UsageError("--identity must be refined_leaves or chu_vandermonde");
  if (!c.given("--n")) throw UsageError("--n is required");
  const auto s = sum_identity_sides(which, c.opt.n);
  const bool holds = s.lhs == s.rhs;
  if (c.opt.format == "json") {
    out << Json{{"identity", c.opt.identity}, {"n", c.opt.n}, {"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)},
                {"holds", holds}}
               .dump(2)
        << '\n';
  } else if (c.opt.format == "csv") {
    out << "identity,n,holds\n" << c.opt.identity << ',' << c.opt.n << ',' << (holds ? "true" : "false") << '\n';
  } else {
    out << "lhs: " << s.lhs.to_string() << "\nrhs: " << s.rhs.to_string() << "\nholds: " << (holds ? "yes" : "no")
        << '\n';
  }
  return holds ? 0 : 1;
}

std::vector<std::string> manifest_entry(const Json& entry) {
  std::vector<std::string> args;
  if (entry.is_array()) {
    for (const auto& a : entry) {
      if (!a.is_string()) throw SchemaError("argument lists must hold strings");
      args.push_back(a.get<std::string>());
    }
  } else if (entry.is_object()) {
    if (!entry.contains("command") || !entry["command"].is_string()) throw SchemaError("entry needs a 'command'");
    args.push_back(entry["command"].get<std::string>());
    for (const auto& [key, value] : entry.items()) {
      if (key == "command") continue;
      if (value.is_boolean()) {
        if (value.get<bool>()) args.push_back("--" + key);
        continue;
      }
      args.push_back("--" + key);
      if (value.is_string()) {
        args.push_back(value.get<std::string>());
      } else if (value.is_number_integer()) {
        args.push_back(std::to_string(value.get<long>()));
      } else if (value.is_array()) {
        std::string joined;
        for (const auto& x : value) {
          if (!x.is_number_integer()) throw SchemaError("list values must be integers");
          joined += (joined.empty() ? "" : ",") + std::to_string(x.get<long>());
        }
        args.push_back(joined);
      } else {
        throw SchemaError("unsupported value for '" + key + "'");
      }
    }
  } else {
    throw SchemaError("manifest entries are argument lists or objects");
  }
  if (args.empty()) throw SchemaError("empty manifest entry");
  return args;
}

int cmd_batch(const Command& c, std::ostream& out) {
  if (!c.given("--manifest")) throw UsageError("--manifest is required");
  std::ifstream in(c.opt.manifest);
  if (!in) throw UsageError("--manifest: cannot read '" + c.opt.manifest + "'");
  Json manifest;
  std::vector<std::vector<std::string>> commands;
  try {
    manifest = Json::parse(in);
    if (!manifest.is_array()) throw SchemaError("the manifest must be a JSON list");
    for (const auto& entry : manifest) commands.push_back(manifest_entry(entry));
  } catch (const Json::parse_error& ex) {
    throw UsageError(std::string("--manifest: ") + ex.what());
  } catch (const SchemaError& ex) {
    throw UsageError(std::string("--manifest: ") + ex.what());
  }
  Json results = Json::array();
  int failed = 0;
  for (const auto& args : commands) {
    std::ostringstream sub_out, sub_err;
    const int code = run(args, sub_out, sub_err);
    failed += code != 0;
    std::string line;
    for (const auto& a : args) line += (line.empty() ? "" : " ") + a;
    if (c.opt.format == "json") {
      results.push_back({{"args", args}, {"exit", code}, {"output", sub_out.str()}, {"error", sub_err.str()}});
    } else if (c.opt.format == "csv") {
      out << (results.empty() && &args == &commands.front() ? "command,exit\n" : "") << '"' << line << "\"," << code
          << '\n';
    } else {
      out << (code == 0 ? "[ok]   " : "[fail] ") << line;
      if (code != 0) {
        std::string why = sub_err.str();
        if (!why.empty() && why.back() == '\n') why.pop_back();
        out << " (exit " << code << (why.empty() ? "" : ": " + why) << ')';
      }
      out << '\n';
    }
  }
  if (c.opt.format == "json") {
    out << Json{{"commands", results}, {"total", commands.size()}, {"failed", failed}}.dump(2) << '\n';
  } else if (c.opt.format == "text") {
    out << commands.size() << " commands, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic sieving on plane trees and tree-rooted maps", "sieve"};
  app.require_subcommand(1);
  std::vector<std::unique_ptr<Command>> cmds;
  auto sub = [&](const char* name, const char* help) -> Command& {
    cmds.push_back(std::make_unique<Command>(Command{app.add_subcommand(name, help), {}}));
    add_common(*cmds.back());
    return *cmds.back();
  };

  Command& en = sub("enumerate", "list every member of a family");
  en.app->add_option("--family", en.opt.family, "family name");
  add_params(en);
  Command& co = sub("count", "closed-form size of a family");
  co.app->add_option("--family", co.opt.family, "family name");
  add_params(co);
  Command& po = sub("poly", "the sieving polynomial of a theorem instance");
  po.app->add_option("--theorem", po.opt.theorem, "theorem name");
  add_params(po);
  Command& fx = sub("fixtable", "fixed-point counts for every exponent");
  fx.app->add_option("--theorem", fx.opt.theorem, "theorem name");
  fx.app->add_option("--e", fx.opt.e, "a single exponent");
  fx.app->add_option("--mode", fx.opt.mode, "divisors or all")->check(CLI::IsMember({"divisors", "all"}));
  fx.app->add_flag("--timing", fx.opt.timing, "include timing in json");
  add_params(fx);
  Command& ve = sub("verify", "compare brute force, closed forms and the polynomial");
  ve.app->add_option("--theorem", ve.opt.theorem, "theorem name, or all with --sweep");
  ve.app->add_option("--mode", ve.opt.mode, "divisors or all")->check(CLI::IsMember({"divisors", "all"}));
  ve.app->add_flag("--sweep", ve.opt.sweep, "run the full parameter sweep");
  ve.app->add_flag("--timing", ve.opt.timing, "include timing in json");
  add_params(ve);
  Command& ob = sub("orbit", "the rotation orbit of a tree or a word");
  ob.app->add_option("--tree", ob.opt.tree, "parenthesis word");
  ob.app->add_option("--word", ob.opt.word, "walk word over ENWS or b-tree word");
  ob.app->add_option("--kind", ob.opt.kind, "ordinary, leaf, internal or degree");
  add_params(ob);
  Command& bi = sub("biject", "convert between encodings");
  bi.app->add_option("--tree", bi.opt.tree, "parenthesis word");
  bi.app->add_option("--word", bi.opt.word, "walk word over ENWS");
  bi.app->add_option("--to", bi.opt.to, "ncm, ncp, kreweras, dissection, cubic or split");
  bi.app->add_option("--from", bi.opt.from, "ncm, ncp, dissection, cubic or split");
  bi.app->add_option("--input", bi.opt.input, "JSON input for --from");
  Command& su = sub("sumcheck", "check a summation identity");
  su.app->add_option("--identity", su.opt.identity, "refined_leaves or chu_vandermonde");
  add_params(su);
  Command& ba = sub("batch", "run a JSON manifest of commands");
  ba.app->add_option("--manifest", ba.opt.manifest, "manifest file");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' && !app.get_subcommand_no_throw(args.front())) {
    err << "unknown command '" << args.front() << "'\nRun with --help for more information.\n";
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (en.app->parsed()) return cmd_enumerate(en, out);
    if (co.app->parsed()) return cmd_count(co, out);
    if (po.app->parsed()) return cmd_poly(po, out);
    if (fx.app->parsed()) return cmd_fixtable(fx, out);
    if (ve.app->parsed()) return cmd_verify(ve, out);
    if (ob.app->parsed()) return cmd_orbit(ob, out);
    if (bi.app->parsed()) return cmd_biject(bi, out);
    if (su.app->parsed()) return cmd_sumcheck(su, out);
    if (ba.app->parsed()) return cmd_batch(ba, out);
  } catch (const SizeGuardExceeded& ex) {
    err << "error: " << ex.what() << " (raise it with --size-guard)\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace sieve
