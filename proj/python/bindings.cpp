#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagschur/errors.hpp"
#include "flagschur/flag_oracle.hpp"
#include "flagschur/json_io.hpp"
#include "flagschur/schur.hpp"
#include "flagschur/stabilization.hpp"
#include "flagschur/sweeps.hpp"

namespace py = pybind11;
using namespace flagschur;
using json_io::Json;

namespace {

// Values cross the boundary as JSON text in the CLI formats; the Python
// package decodes them.

Matrix to_matrix(const std::vector<std::vector<int>>& rows) { return Matrix::from_rows(rows); }

std::string theta(int n, int d) {
  Json j = Json::array();
  for (const auto& m : enumerate_theta(n, d)) j.push_back(json_io::to_json(m));
  return j.dump();
}

std::string multiply(const std::string& left, const std::string& right) {
  const auto x = json_io::schur_from_json(json_io::parse(left));
  const auto y = json_io::schur_from_json(json_io::parse(right));
  return json_io::to_json(product(x, y)).dump();
}

std::string generator(int i, int j, int n, int d) { return json_io::to_json(generator_tbar(i, j, n, d)).dump(); }

std::string convert(const std::string& element, const std::string& basis) {
  const auto x = json_io::schur_from_json(json_io::parse(element));
  if (basis == "e") return json_io::to_json(to_e(x)).dump();
  if (basis == "bracket") return json_io::to_json(to_bracket(x)).dump();
  throw ParseError("basis must be \"e\" or \"bracket\"");
}

bool schur_rtt_ok(int n, int d) { return verify_rtt_schur(n, d).ok(); }

std::string stabilize_factors(const std::vector<std::vector<std::vector<int>>>& factors) {
  StableQuery q;
  for (const auto& f : factors) q.factors.push_back(to_matrix(f));
  const auto sp = stabilize(q);
  const auto spec = specialize(sp);
  Json j;
  j["product"] = json_io::to_json(sp);
  j["specialized"] = json_io::specialized_to_json(spec);
  j["integral"] = specialized_integral(spec);
  j["fit_p"] = sp.fit_ps;
  j["held_out_p"] = sp.held_out_ps;
  return j.dump();
}

std::string limit_gen(int i, int j, int n) {
  Json out;
  out["n"] = n;
  out["symbols"] = json_io::to_json(limit_generator(i, j, n));
  return out.dump();
}

std::string limit_multiply(const std::string& left, const std::string& right) {
  const auto x = json_io::uelement_from_json(json_io::parse(left));
  const auto y = json_io::uelement_from_json(json_io::parse(right));
  Json out;
  out["n"] = x.n();
  out["symbols"] = json_io::to_json(formal_product(x, y));
  return out.dump();
}

bool limit_rtt_ok(int n) { return verify_limit_rtt(n).ok(); }

std::string triangular(const std::vector<std::vector<int>>& rows) {
  const Matrix a = to_matrix(rows);
  const auto res = triangular_product(a);
  Json j;
  Json fs = Json::array();
  for (const auto& f : triangular_factors(a)) fs.push_back(json_io::to_json(f.m));
  j["factors"] = std::move(fs);
  j["chi"] = json_io::to_json(res.chi);
  j["leading_ok"] = res.leading_ok;
  j["product"] = json_io::to_json(res.result);
  return j.dump();
}

long oracle(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
            const std::vector<std::vector<int>>& c, int q) {
  return convolve_oracle(to_matrix(a), to_matrix(b), to_matrix(c), q);
}

std::pair<long, long> oracle_sweep(int n, int d, int q) {
  const auto rep = verify_formulas_against_oracle(n, d, q);
  return {rep.checked, static_cast<long>(rep.mismatches.size())};
}

py::dict counting_lemmas(int q, int m, int n) {
  const auto rep = verify_counting_lemmas(q, m, n);
  py::dict out;
  out["first_count"] = rep.first_count;
  out["first_expected"] = rep.first_expected;
  out["second_applicable"] = rep.second_applicable;
  out["second_count"] = rep.second_count;
  out["second_expected"] = rep.second_expected;
  out["ok"] = rep.ok();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-Schur algebra computations";

  auto& base = py::register_exception<Error>(m, "FlagSchurError", PyExc_RuntimeError);
  py::register_exception<UnsupportedShape>(m, "UnsupportedShape", base.ptr());
  py::register_exception<NoStabilization>(m, "NoStabilization", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<Incompatible>(m, "Incompatible", base.ptr());
  py::register_exception<AnsatzFailure>(m, "AnsatzFailure", base.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  m.def("theta", &theta, py::arg("n"), py::arg("d"));
  m.def("multiply", &multiply, py::arg("left"), py::arg("right"));
  m.def("generator", &generator, py::arg("i"), py::arg("j"), py::arg("n"), py::arg("d"));
  m.def("convert", &convert, py::arg("element"), py::arg("basis"));
  m.def("schur_rtt_ok", &schur_rtt_ok, py::arg("n"), py::arg("d"));
  m.def("stabilize", &stabilize_factors, py::arg("factors"));
  m.def("limit_generator", &limit_gen, py::arg("i"), py::arg("j"), py::arg("n"));
  m.def("limit_multiply", &limit_multiply, py::arg("left"), py::arg("right"));
  m.def("limit_rtt_ok", &limit_rtt_ok, py::arg("n"));
  m.def("triangular", &triangular, py::arg("rows"));
  m.def("convolve_oracle", &oracle, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("q"));
  m.def("oracle_sweep", &oracle_sweep, py::arg("n"), py::arg("d"), py::arg("q"));
  m.def("counting_lemmas", &counting_lemmas, py::arg("q"), py::arg("m"), py::arg("n"));
}
