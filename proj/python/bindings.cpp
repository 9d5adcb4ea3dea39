#include "sieve/cli.hpp"
#include "sieve/overloaded.hpp"
#include "sieve/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace sieve;

namespace {

RotationKind parse_kind(const std::string& name, int delta) {
  if (name == "ordinary") return kind::Ordinary{};
  if (name == "leaf") return kind::Leaf{};
  if (name == "internal") return kind::Internal{};
  if (name == "degree") return kind::Degree{delta};
  throw std::invalid_argument("unknown rotation kind '" + name + "'");
}

TheoremId parse_id(const std::string& name) {
  const auto id = parse_theorem(name);
  if (!id) throw std::invalid_argument("unknown theorem '" + name + "'");
  return *id;
}

CspInstance instance(const std::string& theorem, const std::string& params) {
  return build_instance(parse_id(theorem), params_from_json(Json::parse(params)));
}

}  // namespace

PYBIND11_MODULE(_sieve_forest, m) {
  m.doc() = "Cyclic sieving on plane trees and tree-rooted maps";

  py::register_exception<InfeasibleParams>(m, "InfeasibleParams", PyExc_ValueError);
  py::register_exception<SizeGuardExceeded>(m, "SizeGuardExceeded", PyExc_RuntimeError);

  m.def("theorems", [] {
    std::vector<std::string> out;
    for (TheoremId id : all_theorems()) out.push_back(theorem_name(id));
    return out;
  });

  m.def(
      "enumerate",
      [](const std::string& family) {
        const CspFamily f = family_from_json(Json::parse(family));
        return std::visit(overloaded{[](const TreeFamily& t) {
                                       std::vector<std::string> out;
                                       for (const auto& x : sieve::enumerate(t)) out.push_back(x.word());
                                       return out;
                                     },
                                     [](const MapFamily& mf) { return enumerate_map_words(mf); }},
                          f);
      },
      py::arg("family"));

  m.def(
      "count",
      [](const std::string& family) {
        const CspFamily f = family_from_json(Json::parse(family));
        return std::visit(overloaded{[](const TreeFamily& t) { return closed_count(t).get_str(); },
                                     [](const MapFamily& mf) { return closed_count_maps(mf).get_str(); }},
                          f);
      },
      py::arg("family"));

  m.def(
      "rotate",
      [](const std::string& word, const std::string& kind, long steps, int delta) {
        return sieve::rotate(PlaneTree(word), parse_kind(kind, delta), steps).word();
      },
      py::arg("word"), py::arg("kind") = "ordinary", py::arg("steps") = 1, py::arg("delta") = 0);

  m.def(
      "orbit",
      [](const std::string& word, const std::string& kind, int delta) {
        std::vector<std::string> out;
        for (const auto& t : sieve::orbit(PlaneTree(word), parse_kind(kind, delta))) out.push_back(t.word());
        return out;
      },
      py::arg("word"), py::arg("kind") = "ordinary", py::arg("delta") = 0);

  m.def("rotate_map", [](const std::string& word, long steps) { return rotate_map(TreeRootedMap(word), steps).word(); },
        py::arg("word"), py::arg("steps") = 1);

  m.def(
      "polynomial",
      [](const std::string& theorem, const std::string& params) {
        const auto inst = instance(theorem, params);
        const PolyCheck chk = check_poly_nonneg(inst);
        Json out{{"expr", to_json(inst.polynomial)},
                 {"order", inst.order},
                 {"degenerate", inst.degenerate},
                 {"nonneg", chk.nonneg},
                 {"reciprocal", chk.reciprocal}};
        if (chk.polynomial) out["polynomial"] = to_json(to_polynomial(inst.polynomial));
        return out.dump();
      },
      py::arg("theorem"), py::arg("params"));

  m.def(
      "verify",
      [](const std::string& theorem, const std::string& params, bool all_exponents, int jobs, int guard) {
        const auto inst = instance(theorem, params);
        VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = sieve::verify(inst, all_exponents ? VerifyMode::AllExponents : VerifyMode::Divisors, jobs, guard);
        }
        return to_json(rep, true).dump();
      },
      py::arg("theorem"), py::arg("params"), py::arg("all_exponents") = false, py::arg("jobs") = 1,
      py::arg("guard") = 0);

  m.def(
      "sum_identity",
      [](const std::string& which, int n) {
        if (which == "refined_leaves") return check_sum_identity(SumIdentity::RefinedLeaves, n);
        if (which == "chu_vandermonde") return check_sum_identity(SumIdentity::ChuVandermondeTM, n);
        throw std::invalid_argument("unknown identity '" + which + "'");
      },
      py::arg("which"), py::arg("n"));

  m.def("tree_to_ncm", [](const std::string& w) { return to_json(tree_to_ncm(PlaneTree(w))).dump(); });
  m.def("ncm_to_tree", [](const std::string& j) { return ncm_to_tree(matching_from_json(Json::parse(j))).word(); });
  m.def("tree_to_ncp", [](const std::string& w) { return to_json(tree_to_ncp(PlaneTree(w))).dump(); });
  m.def("ncp_to_tree", [](const std::string& j) { return ncp_to_tree(partition_from_json(Json::parse(j))).word(); });
  m.def("kreweras", [](const std::string& j) { return to_json(kreweras(partition_from_json(Json::parse(j)))).dump(); });
  m.def("tree_to_dissection", [](const std::string& w) { return to_json(tree_to_dissection(PlaneTree(w))).dump(); });
  m.def("dissection_to_tree",
        [](const std::string& j) { return dissection_to_tree(dissection_from_json(Json::parse(j))).word(); });
  m.def("map_to_cubic", [](const std::string& w) { return to_json(to_cubic(TreeRootedMap(w))).dump(); });
  m.def("cubic_to_map", [](const std::string& j) { return from_cubic(cubic_from_json(Json::parse(j))).word(); });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = sieve::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
