#include "invtensor/io.hpp"

#include <fstream>

namespace invtensor {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

Json complex_value(cplx x) { return Json::array({x.real(), x.imag()}); }

cplx complex_from(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw InvalidInput("complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_list(const cplx* x, std::size_t n) {
  Json out = Json::array();
  for (std::size_t k = 0; k < n; ++k) out.push_back(complex_value(x[k]));
  return out;
}

std::vector<cplx> complex_list_from(const Json& j) {
  std::vector<cplx> out;
  for (const auto& x : j) out.push_back(complex_from(x));
  return out;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index p = 0; p < m.rows(); ++p) {
    Json row = Json::array();
    for (Eigen::Index q = 0; q < m.cols(); ++q) row.push_back(complex_value(m(p, q)));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index p = 0; p < rows; ++p) {
    if (static_cast<Eigen::Index>(j[p].size()) != cols) throw InvalidInput("matrix rows have different lengths");
    for (Eigen::Index q = 0; q < cols; ++q) m(p, q) = complex_from(j[p][q]);
  }
  return m;
}

const char* algebra_name(SiteAlgebra a) {
  switch (a) {
    case SiteAlgebra::entrywise:
      return "entrywise";
    case SiteAlgebra::matrix:
      return "matrix";
    default:
      return "none";
  }
}

SiteAlgebra algebra_from(const std::string& s) {
  if (s == "none") return SiteAlgebra::none;
  if (s == "entrywise") return SiteAlgebra::entrywise;
  if (s == "matrix") return SiteAlgebra::matrix;
  throw InvalidInput("unknown algebra '" + s + "'");
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(1) << '\n';
}

Json wsc_to_json(const Wsc& w) {
  Json weights = Json::array();
  for (const auto& [s, x] : w.stored())
    if (x != 0) weights.push_back({{"set", s}, {"w", x}});
  return {{"n", w.n()}, {"weights", weights}};
}

Wsc wsc_from_json(const Json& j) {
  return guarded("complex", [&] {
    std::map<Simplex, std::uint64_t> weights;
    for (const auto& e : j.at("weights")) {
      const auto w = e.at("w").get<std::int64_t>();
      if (w < 0) throw InvalidInput("weights must be nonnegative");
      if (w == 0) continue;
      weights[e.at("set").get<Simplex>()] = static_cast<std::uint64_t>(w);
    }
    return Wsc(j.at("n").get<int>(), std::move(weights));
  });
}

Json group_to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"mul", g.table()}}; }

FiniteGroup group_from_json(const Json& j) {
  return guarded("group", [&] {
    auto table = j.at("mul").get<GroupTable>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
      throw InvalidInput("group order does not match the table");
    return FiniteGroup::from_table(std::move(table));
  });
}

Json action_to_json(const WscAction& a) {
  return {{"group", group_to_json(a.group)},
          {"complex", wsc_to_json(a.complex)},
          {"vertex_act", a.vertex_act},
          {"copy_act", a.copy_act}};
}

WscAction action_from_json(const Json& j) {
  return guarded("action", [&] {
    return WscAction(group_from_json(j.at("group")), wsc_from_json(j.at("complex")),
                     j.at("vertex_act").get<std::vector<Perm>>(), j.at("copy_act").get<std::vector<Perm>>());
  });
}

Json tensor_to_json(const GlobalTensor& t) {
  return {{"dims", t.dims}, {"entries", complex_list(t.entries.data(), t.size())}};
}

GlobalTensor tensor_from_json(const Json& j) {
  return guarded("tensor", [&] {
    return GlobalTensor(j.at("dims").get<std::vector<int>>(), complex_list_from(j.at("entries")));
  });
}

Json decomposition_to_json(const Decomposition& d) {
  Json locals = Json::array();
  for (const auto& l : d.locals) locals.push_back(complex_list(l.data(), l.size()));
  Json shapes = Json::array();
  for (const auto& s : d.shapes) shapes.push_back({s.rows, s.cols});
  return {{"action", action_to_json(d.action)},
          {"r", d.r},
          {"dims", d.dims},
          {"locals", locals},
          {"algebra", algebra_name(d.algebra)},
          {"shapes", shapes},
          {"separable", d.separable},
          {"purification", d.purification}};
}

Decomposition decomposition_from_json(const Json& j) {
  return guarded("decomposition", [&] {
    Decomposition d;
    d.action = action_from_json(j.at("action"));
    d.r = j.at("r").get<int>();
    d.dims = j.at("dims").get<std::vector<int>>();
    for (const auto& l : j.at("locals")) d.locals.push_back(complex_list_from(l));
    d.algebra = algebra_from(j.value("algebra", std::string("none")));
    if (j.contains("shapes"))
      for (const auto& s : j.at("shapes")) d.shapes.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
    d.separable = j.value("separable", false);
    d.purification = j.value("purification", false);
    check_shape(d);
    return d;
  });
}

Json psd_family_to_json(const PsdFamily& f) {
  Json sites = Json::array();
  for (const auto& site : f.e) {
    Json list = Json::array();
    for (const auto& m : site) list.push_back(matrix_to_json(m));
    sites.push_back(list);
  }
  return {{"action", action_to_json(f.action)}, {"r", f.r}, {"dims", f.dims}, {"matrices", sites}};
}

PsdFamily psd_family_from_json(const Json& j) {
  return guarded("psd family", [&] {
    PsdFamily f;
    f.action = action_from_json(j.at("action"));
    f.r = j.at("r").get<int>();
    f.dims = j.at("dims").get<std::vector<int>>();
    for (const auto& site : j.at("matrices")) {
      f.e.emplace_back();
      for (const auto& m : site) f.e.back().push_back(matrix_from_json(m));
    }
    return f;
  });
}

Json coefficients_to_json(const IndicatorCoefficients& c) {
  Json d = Json::array();
  for (const auto& row : c.d) d.push_back(complex_list(row.data(), row.size()));
  return {{"n", c.n}, {"r", c.r}, {"d", d}};
}

IndicatorCoefficients coefficients_from_json(const Json& j) {
  return guarded("coefficients", [&] {
    IndicatorCoefficients c;
    c.n = j.at("n").get<int>();
    c.r = j.at("r").get<int>();
    for (const auto& row : j.at("d")) c.d.push_back(complex_list_from(row));
    if (static_cast<int>(c.d.size()) != c.n + 1) throw InvalidInput("one coefficient row per site required");
    for (const auto& row : c.d)
      if (static_cast<int>(row.size()) != c.r) throw InvalidInput("coefficient row has the wrong length");
    return c;
  });
}

Json report_to_json(const ValidationReport& rep) {
  Json v = Json::array();
  for (const auto& x : rep.violations) v.push_back({{"kind", x.kind}, {"detail", x.detail}, {"deviation", x.deviation}});
  return {{"ok", rep.ok()}, {"violations", v}};
}

}  // namespace invtensor
