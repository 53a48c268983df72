#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypergw/error.hpp"
#include "hypergw/gw_invariants.hpp"
#include "hypergw/suites.hpp"

namespace py = pybind11;
using namespace hypergw;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

py::list fractions(const QSeries& s) {
  py::list out;
  for (int d = 0; d <= s.order(); ++d) out.append(fraction(s[d]));
  return out;
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const Rational& r : v) out.append(fraction(r));
  return out;
}

py::list poly_coeffs(const Poly& p) {
  py::list out;
  for (const Rational& c : p.coefficients()) out.append(fraction(c));
  return out;
}

Rational to_rational(py::handle obj) { return parse_rational(py::str(obj).cast<std::string>()); }

py::dict report_dict(const IdentityReport& r) {
  py::dict d;
  d["identity"] = r.identity;
  py::dict params;
  for (const auto& [k, v] : r.parameters) params[py::str(k)] = v;
  d["parameters"] = params;
  d["max_order_checked"] = r.max_order_checked;
  d["pass"] = r.pass;
  d["first_failure"] = r.first_failure ? py::cast(*r.first_failure) : py::none();
  return d;
}

py::dict table_dict(const GWTable& t) {
  py::list rows;
  for (const GWRow& r : t.rows) {
    py::dict row;
    row["d"] = r.d;
    if (r.N0) row["N0"] = fraction(*r.N0);
    if (r.GW1_reduced) row["GW1_reduced"] = fraction(*r.GW1_reduced);
    if (r.N1) row["N1"] = fraction(*r.N1);
    if (r.n0) row["n0"] = fraction(*r.n0);
    if (r.n1) row["n1"] = fraction(*r.n1);
    rows.append(row);
  }
  py::dict out;
  out["n"] = t.n;
  out["truncation"] = t.truncation;
  out["rows"] = rows;
  return out;
}

HyperSpec spec_of(int n, int order) { return HyperSpec::make(n, order); }

}  // namespace

PYBIND11_MODULE(_hypergw, m) {
  m.doc() = "Exact hypergeometric series and genus-0/genus-1 invariants of Calabi-Yau hypersurfaces";

  // message starts with the error kind, e.g. "NotTFree: ..."
  py::register_exception<Error>(m, "HypergwError", PyExc_ValueError);

  m.def("kernel_F", [](int n, int order, int w_order) {
    const WSeries F = build_F(HyperSpec::make(n, order, w_order));
    py::list rows;
    for (int k = 0; k <= F.w_order(); ++k) rows.append(fractions(F[k]));
    return rows;
  }, py::arg("n"), py::arg("order"), py::arg("w_order") = -1, "[w^k q^d] of the kernel F as rows indexed by k");

  m.def("i_diagonal", [](int n, int p, int order) { return fractions(ITable(spec_of(n, order), p).diagonal(p)); },
        py::arg("n"), py::arg("p"), py::arg("order"), "I_{p,p} as a list of q-coefficients");

  m.def("i_series", [](int n, int p, int k, int order) {
    py::list out;
    for (const QSeries& c : I_series(spec_of(n, order), p, k).coefficients()) out.append(fractions(c));
    return out;
  }, py::arg("n"), py::arg("p"), py::arg("k"), py::arg("order"), "I_{p,k} as t-coefficients of q-series");

  m.def("mirror_map", [](int n, int order) { return fractions(mirror_map(spec_of(n, order))); }, py::arg("n"),
        py::arg("order"), "T - t");

  m.def("mu", [](int n, int order, const std::string& method) {
    if (method != "closed_form" && method != "residue")
      throw Error(ErrorKind::InvalidArgument, "method must be closed_form or residue");
    return fractions(mu(spec_of(n, order), method == "residue" ? MuMethod::Residue : MuMethod::ClosedForm));
  }, py::arg("n"), py::arg("order"), py::arg("method") = "closed_form");

  m.def("q_hbar", [](int n, int d) {
    const RatFunc f = q_hbar(spec_of(n, std::max(d, 1)), d);
    return py::make_tuple(poly_coeffs(f.num()), poly_coeffs(f.den()));
  }, py::arg("n"), py::arg("d"), "(numerator, denominator) coefficients in h, low degree first");

  m.def("theorem2_series", [](int n, int order) { return fractions(theorem2_series(spec_of(n, order))); },
        py::arg("n"), py::arg("order"), "reduced genus-1 right-hand side as a q-series");

  m.def("extract_invariants", [](const std::vector<py::object>& G, int n) {
    QSeries s(static_cast<int>(G.size()) - 1);
    for (std::size_t d = 0; d < G.size(); ++d) s[static_cast<int>(d)] = to_rational(G[d]);
    return fractions(extract_invariants(s, spec_of(n, s.order())));
  }, py::arg("G"), py::arg("n"), "coefficients d >= 1 after the change of variable to e^T");

  m.def("invariants", [](int n, int order) { return table_dict(compute_table(spec_of(n, order))); }, py::arg("n"),
        py::arg("order"), "invariant table as a dict with Fraction entries");

  m.def("invariants_json", [](int n, int order) { return to_json(compute_table(spec_of(n, order))); },
        py::arg("n"), py::arg("order"));

  m.def("table_round_trip", [](const std::string& text) { return to_json(table_from_json(text)); },
        py::arg("json_text"), "parse a table and serialize it again");

  m.def("instanton_numbers", [](const std::vector<py::object>& N0, py::object N1) {
    GWTable t = GWTable::empty(5, static_cast<int>(N0.size()));
    for (std::size_t i = 0; i < N0.size(); ++i) t.rows[i].N0 = to_rational(N0[i]);
    t = instanton_inversion(t, 0);
    py::dict out;
    py::list n0;
    for (const GWRow& r : t.rows) n0.append(fraction(*r.n0));
    out["n0"] = n0;
    if (!N1.is_none()) {
      const auto v = N1.cast<std::vector<py::object>>();
      if (v.size() != N0.size()) throw Error(ErrorKind::InvalidArgument, "N0 and N1 lengths differ");
      for (std::size_t i = 0; i < v.size(); ++i) t.rows[i].N1 = to_rational(v[i]);
      t = instanton_inversion(t, 1);
      py::list n1;
      for (const GWRow& r : t.rows) n1.append(fraction(*r.n1));
      out["n1"] = n1;
    }
    return out;
  }, py::arg("N0"), py::arg("N1") = py::none(), "instanton numbers from GW invariants, degrees 1..len");

  m.def("suite_names", &suite_names);
  m.def("verify", [](const std::string& suite, int n, int order) {
    py::list out;
    for (const IdentityReport& r : run_suite(suite, spec_of(n, order))) out.append(report_dict(r));
    return out;
  }, py::arg("suite"), py::arg("n") = 5, py::arg("order") = 8, "run one suite; one dict per identity");
}
