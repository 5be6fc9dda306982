// Copyright 2026 The swgmm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swgmm/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "swgmm/errors.hpp"

namespace swgmm {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string model_to_json(const GmmModel& model, int indent) {
  json j;
  j["dim"] = model.dim();
  j["k"] = model.k();
  j["weights"] = std::vector<double>(model.weights().begin(), model.weights().end());
  json means = json::array();
  for (const auto& mu : model.means()) means.push_back(std::vector<double>(mu.begin(), mu.end()));
  j["means"] = std::move(means);
  json covs = json::array();
  for (const auto& sigma : model.covariances()) {
    json rows = json::array();
    for (int r = 0; r < sigma.rows(); ++r) {
      std::vector<double> row(sigma.cols());
      for (int c = 0; c < sigma.cols(); ++c) row[c] = sigma(r, c);
      rows.push_back(std::move(row));
    }
    covs.push_back(std::move(rows));
  }
  j["covariances"] = std::move(covs);
  return j.dump(indent);
}

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("model JSON is missing key \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<double> as_vector(const json& j, std::size_t expected, const std::string& what) {
  if (!j.is_array() || j.size() != expected) {
    throw ParseError(what + " must be an array of length " + std::to_string(expected));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(what + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

GmmModel model_from_json(const std::string& text, double eps_var) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid model JSON: ") + e.what());
  }
  const json& jd = require(j, "dim");
  const json& jk = require(j, "k");
  if (!jd.is_number_integer() || !jk.is_number_integer() || jd.get<long>() < 1 ||
      jk.get<long>() < 1) {
    throw ParseError("\"dim\" and \"k\" must be positive integers");
  }
  const auto d = static_cast<std::size_t>(jd.get<long>());
  const auto k = static_cast<std::size_t>(jk.get<long>());

  GmmParams p;
  const auto w = as_vector(require(j, "weights"), k, "\"weights\"");
  p.weights = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(k));

  const json& jm = require(j, "means");
  if (!jm.is_array() || jm.size() != k) throw ParseError("\"means\" must hold k vectors");
  for (std::size_t c = 0; c < k; ++c) {
    const auto mu = as_vector(jm[c], d, "\"means\"[" + std::to_string(c) + "]");
    p.means.emplace_back(Eigen::Map<const Eigen::VectorXd>(mu.data(), static_cast<Eigen::Index>(d)));
  }

  const json& jc = require(j, "covariances");
  if (!jc.is_array() || jc.size() != k) throw ParseError("\"covariances\" must hold k matrices");
  for (std::size_t c = 0; c < k; ++c) {
    if (!jc[c].is_array() || jc[c].size() != d) {
      throw ParseError("\"covariances\"[" + std::to_string(c) + "] must have dim rows");
    }
    Eigen::MatrixXd sigma(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      const auto row = as_vector(jc[c][r], d,
                                 "\"covariances\"[" + std::to_string(c) + "][" + std::to_string(r) + "]");
      for (std::size_t col = 0; col < d; ++col) sigma(r, col) = row[col];
    }
    p.covariances.push_back(std::move(sigma));
  }
  return GmmModel(std::move(p), eps_var);
}

void save_model(const GmmModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open " + path.string() + " for writing");
  out << model_to_json(model) << '\n';
  if (!out) throw ArgumentError("failed writing " + path.string());
}

GmmModel load_model(const std::filesystem::path& path, double eps_var) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str(), eps_var);
}

void write_csv(const Dataset& data, std::ostream& out) {
  const auto& s = data.samples();
  for (int n = 0; n < data.size(); ++n) {
    for (int j = 0; j < data.dim(); ++j) {
      if (j) out << ',';
      out << format_double(s(n, j));
    }
    out << '\n';
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

Dataset read_csv(std::istream& in, std::string label) {
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::size_t fields = 0;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view cell = trim(rest.substr(0, comma));
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw ParseError("line " + std::to_string(lineno) + ": non-numeric cell \"" +
                             std::string(cell) + "\"",
                         lineno);
      }
      if (!std::isfinite(v)) {
        throw ParseError("line " + std::to_string(lineno) + ": non-finite value", lineno);
      }
      values.push_back(v);
      ++fields;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (rows == 0) {
      cols = fields;
    } else if (fields != cols) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(cols) +
                           " fields, found " + std::to_string(fields),
                       lineno);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("CSV input contains no samples");
  SampleMatrix m = Eigen::Map<const SampleMatrix>(values.data(), static_cast<Eigen::Index>(rows),
                                                  static_cast<Eigen::Index>(cols));
  return Dataset(std::move(m), label.empty() ? std::nullopt : std::optional<std::string>(label));
}

void save_csv(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open " + path.string() + " for writing");
  write_csv(data, out);
  if (!out) throw ArgumentError("failed writing " + path.string());
}

Dataset load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path.string());
  return read_csv(in, path.filename().string());
}

}  // namespace swgmm
