#include "dcboost/trace_io.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace dcboost {

namespace {

using nlohmann::json;

json to_json(const Point& p) {
  json a = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(p(i));
  return a;
}

Point point_from_json(const json& a) {
  Point p(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) p(static_cast<Eigen::Index>(i)) = a[i].get<double>();
  return p;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

void write_trace_csv(std::ostream& out, const Trace& trace, std::optional<double> phi_star) {
  const auto old_precision = out.precision(17);
  out << kTraceCsvHeader << '\n';
  for (const auto& r : trace.records) {
    out << r.k << ',' << r.phi_x << ',';
    if (phi_star) out << std::abs(r.phi_x - *phi_star);
    out << ',' << (r.x_next - r.x).norm() << ',' << r.d.norm() << ',' << r.lambda << ',' << r.j << ',' << r.nu
        << ',' << (r.evals.phi_evals + r.evals.inner_solver_evals) << ',' << r.wall_time << '\n';
  }
  out.precision(old_precision);
}

void write_trace_json(std::ostream& out, const Trace& trace) {
  json j;
  j["solver"] = trace.solver;
  j["problem"] = trace.problem;
  j["termination"] = std::string(to_string(trace.termination));
  j["iterations"] = trace.iterations();
  j["final_x"] = to_json(trace.final_x);
  j["final_phi"] = trace.final_phi;
  json recs = json::array();
  for (const auto& r : trace.records) {
    recs.push_back({{"k", r.k},
                    {"x", to_json(r.x)},
                    {"y", to_json(r.y)},
                    {"d", to_json(r.d)},
                    {"w", to_json(r.w)},
                    {"x_next", to_json(r.x_next)},
                    {"phi_x", r.phi_x},
                    {"phi_y", r.phi_y},
                    {"phi_next", r.phi_next},
                    {"lambda_prev", r.lambda_prev},
                    {"lambda", r.lambda},
                    {"j", r.j},
                    {"nu", r.nu},
                    {"line_search_fallback", r.line_search_fallback},
                    {"inner_converged", r.inner_converged}});
  }
  j["records"] = std::move(recs);
  // nlohmann serializes doubles with round-trip precision.
  out << j.dump(1) << '\n';
}

std::vector<TraceCsvRow> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceCsvHeader) throw std::runtime_error("trace csv: unexpected header");
  std::vector<TraceCsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c = split(line);
    if (c.size() != 10) throw std::runtime_error("trace csv: expected 10 cells in '" + line + "'");
    TraceCsvRow r;
    r.k = std::stoi(c[0]);
    r.phi = std::stod(c[1]);
    if (!c[2].empty()) r.phi_gap = std::stod(c[2]);
    r.step_norm = std::stod(c[3]);
    r.d_norm = std::stod(c[4]);
    r.lambda = std::stod(c[5]);
    r.j = std::stoi(c[6]);
    r.nu = std::stod(c[7]);
    r.evals = std::stoll(c[8]);
    r.time_s = std::stod(c[9]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<Point> read_trace_json_iterates(std::istream& in) {
  const json j = json::parse(in);
  std::vector<Point> xs;
  for (const auto& r : j.at("records")) xs.push_back(point_from_json(r.at("x")));
  return xs;
}

}  // namespace dcboost
