#include "okubo/json_io.hpp"

namespace okubo {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorCode::BadInput, "complex values serialize as [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix cmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::BadInput, "matrix json must be a nested array");
  CMatrix m(j.size(), j[0].size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != j[0].size())
      throw Error(ErrorCode::BadInput, "ragged matrix json");
    for (size_t k = 0; k < j[i].size(); ++k)
      m(static_cast<int>(i), static_cast<int>(k)) =
          complex_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const OkuboSystem& system) {
  Json points = Json::array();
  for (Complex p : system.points) points.push_back(to_json(p));
  return Json{{"partition", system.partition},
              {"points", points},
              {"A", to_json(system.A)}};
}

OkuboSystem system_from_json(const Json& j) {
  OkuboSystem sys;
  sys.partition = j.at("partition").get<std::vector<int>>();
  for (const auto& p : j.at("points")) sys.points.push_back(complex_from_json(p));
  sys.A = cmatrix_from_json(j.at("A"));
  sys.check_shape();
  return sys;
}

namespace {

Json complex_list(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (Complex z : v) out.push_back(to_json(z));
  return out;
}

std::vector<Complex> complex_list_from(const Json& j) {
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

}  // namespace

Json to_json(const ExponentChart& chart) {
  Json out{{"type", to_string(chart.type)},
           {"alpha", complex_list(chart.alpha)},
           {"beta", complex_list(chart.beta)},
           {"gamma", complex_list(chart.gamma)},
           {"rho", complex_list(chart.rho)}};
  if (chart.type == ChartType::II_star || chart.type == ChartType::III_star)
    out["n"] = chart.family_n();
  return out;
}

ExponentChart chart_from_json(const Json& j) {
  ExponentChart ch;
  ch.type = chart_type_from_string(j.at("type").get<std::string>());
  ch.alpha = complex_list_from(j.at("alpha"));
  if (j.contains("beta")) ch.beta = complex_list_from(j.at("beta"));
  if (j.contains("gamma")) ch.gamma = complex_list_from(j.at("gamma"));
  ch.rho = complex_list_from(j.at("rho"));
  ch.check_shape();
  return ch;
}

Json to_json(const ConnectionTable& table) {
  Json blocks = Json::object();
  for (const auto& [key, blk] : table.blocks) {
    std::string name = "C" + std::to_string(key.first + 1) +
                       std::to_string(key.second + 1);
    blocks[name] = to_json(blk);
  }
  return Json{{"partition", table.partition}, {"blocks", blocks}};
}

Json to_json(const MonodromyTuple& tuple) {
  Json ms = Json::array();
  for (const auto& M : tuple.M) ms.push_back(to_json(M));
  return Json{{"partition", tuple.partition}, {"M", ms}};
}

Json to_json(const KatzStep& step) {
  return Json{{"k", step.k + 1}, {"c", to_json(step.c)},
              {"rho", to_json(step.rho)}};
}

KatzStep katz_step_from_json(const Json& j) {
  KatzStep s;
  s.k = j.at("k").get<int>() - 1;  // 1-based in files
  s.c = complex_from_json(j.at("c"));
  s.rho = complex_from_json(j.at("rho"));
  return s;
}

}  // namespace okubo
