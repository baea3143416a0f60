#include "fcg/tsk_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fcg {

using nlohmann::json;

std::string tsk_to_json(const TSKModel& model) {
  const std::size_t S = model.input_count(), M = model.rule_count();
  json centers = json::array(), widths = json::array();
  for (std::size_t i = 0; i < M; ++i) {
    json crow = json::array(), wrow = json::array();
    for (std::size_t j = 0; j < S; ++j) {
      crow.push_back(model.mf(i, j).center);
      wrow.push_back(model.mf(i, j).width);
    }
    centers.push_back(std::move(crow));
    widths.push_back(std::move(wrow));
  }
  json cons = json::array();
  for (std::size_t i = 0; i < M; ++i) cons.push_back(model.consequent(i));
  json j{{"S", S}, {"M", M}, {"centers", centers}, {"widths", widths}, {"consequents", cons}};
  return j.dump(2);
}

TSKModel tsk_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidValueError(std::string("fuzzy model JSON: ") + e.what());
  }
  try {
    const auto S = j.at("S").get<std::size_t>();
    const auto M = j.at("M").get<std::size_t>();
    const auto& centers = j.at("centers");
    const auto& widths = j.at("widths");
    const auto& cons_j = j.at("consequents");
    if (centers.size() != M || widths.size() != M || cons_j.size() != M)
      throw InvalidValueError("fuzzy model JSON: need M rows of centers/widths and M consequents");
    std::vector<GaussianMF> ante;
    ante.reserve(M * S);
    for (std::size_t i = 0; i < M; ++i) {
      if (centers[i].size() != S || widths[i].size() != S)
        throw InvalidValueError("fuzzy model JSON: each row needs S entries");
      for (std::size_t k = 0; k < S; ++k)
        ante.emplace_back(centers[i][k].get<double>(), widths[i][k].get<double>());
    }
    std::vector<double> cons;
    cons.reserve(M);
    for (std::size_t i = 0; i < M; ++i) cons.push_back(cons_j[i].get<double>());
    return TSKModel(S, M, std::move(ante), std::move(cons));
  } catch (const json::exception& e) {
    throw InvalidValueError(std::string("fuzzy model JSON: ") + e.what());
  }
}

TSKModel load_tsk_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidValueError("cannot open fuzzy model file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return tsk_from_json(ss.str());
}

}  // namespace fcg
