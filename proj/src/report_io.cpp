#include "fcg/report_io.hpp"

#include <cstdio>

#include <json.hpp>

#include "fcg/system_io.hpp"

namespace fcg {

using nlohmann::json;

std::string report_to_json(const SolveReport& rep) {
  json sol = json::array();
  for (std::size_t i = 0; i < rep.solution.size(); ++i) sol.push_back(rep.solution[i]);
  json trace = json::array();
  for (const IterationRecord& r : rep.trace)
    trace.push_back({{"k", r.k},
                     {"E", r.E},
                     {"d_norm", r.d_norm},
                     {"alpha", r.alpha},
                     {"beta", r.beta},
                     {"v", r.v}});
  json j{{"solution", sol},
         {"iterations", rep.iterations},
         {"restarts", rep.restarts},
         {"residual_norm", rep.residual_norm},
         {"flops", {{"add", rep.flops.adds}, {"mul", rep.flops.muls}}},
         {"converged", rep.converged},
         {"trace", trace}};
  return j.dump(2);
}

SolveReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  SolveReport rep;
  std::vector<double> sol;
  for (const auto& v : j.at("solution")) sol.push_back(v.get<double>());
  rep.solution = Vector(std::move(sol));
  rep.iterations = j.at("iterations").get<std::size_t>();
  rep.restarts = j.at("restarts").get<std::size_t>();
  rep.residual_norm = j.at("residual_norm").get<double>();
  rep.flops.adds = j.at("flops").at("add").get<std::uint64_t>();
  rep.flops.muls = j.at("flops").at("mul").get<std::uint64_t>();
  rep.converged = j.at("converged").get<bool>();
  for (const auto& t : j.at("trace"))
    rep.trace.push_back({t.at("k").get<std::size_t>(), t.at("E").get<double>(),
                         t.at("d_norm").get<double>(), t.at("alpha").get<double>(),
                         t.at("beta").get<double>(), t.at("v").get<double>()});
  return rep;
}

std::string report_to_text(const SolveReport& rep) {
  std::string out;
  char buf[160];
  if (!rep.trace.empty()) {
    out += "   k              E          ||d||          alpha           beta         v\n";
    for (const IterationRecord& r : rep.trace) {
      std::snprintf(buf, sizeof buf, "%4zu  %13.6e  %13.6e  %13.6e  %13.6e  %8.6f\n", r.k, r.E,
                    r.d_norm, r.alpha, r.beta, r.v);
      out += buf;
    }
  }
  std::snprintf(buf, sizeof buf, "converged: %s\niterations: %zu\nrestarts: %zu\n",
                rep.converged ? "yes" : "no", rep.iterations, rep.restarts);
  out += buf;
  std::snprintf(buf, sizeof buf, "residual_norm: %.6e\nflops: add=%llu mul=%llu\n",
                rep.residual_norm, static_cast<unsigned long long>(rep.flops.adds),
                static_cast<unsigned long long>(rep.flops.muls));
  out += buf;
  out += "solution:";
  for (std::size_t i = 0; i < rep.solution.size(); ++i)
    out += " " + format_double(rep.solution[i]);
  out += "\n";
  return out;
}

}  // namespace fcg
