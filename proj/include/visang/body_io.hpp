#pragma once

// Body specification I/O: the JSON file format
//   {"a0": <real>, "coeffs": [[a1,b1],[a2,b2],...]}
// and the preset mini-grammar used by the CLI:
//   circle:r | ellipse:a,b[,K] | cw3:a0,a3 | random:seed,K,decay

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "visang/convex_body.hpp"

namespace visang::io {

inline ConvexBody body_from_json(const nlohmann::json& j) {
  if (!j.contains("a0"))
    throw std::invalid_argument("body json: missing field \"a0\"");
  const double a0 = j.at("a0").get<double>();
  std::vector<std::array<double, 2>> coeffs;
  if (j.contains("coeffs")) {
    for (const auto& pair : j.at("coeffs")) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument(
            "body json: \"coeffs\" entries must be [a_k, b_k] pairs");
      coeffs.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
  }
  return ConvexBody::from_fourier(a0, std::move(coeffs));
}

inline nlohmann::json body_to_json(const ConvexBody& body) {
  nlohmann::json j;
  j["a0"] = body.a0();
  auto coeffs = nlohmann::json::array();
  for (int k = 1; k <= body.truncation(); ++k)
    coeffs.push_back({body.coeff_a(k), body.coeff_b(k)});
  j["coeffs"] = coeffs;
  return j;
}

namespace detail {
inline std::vector<double> parse_args(const std::string& s,
                                      const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("preset " + what + ": bad argument '" + tok +
                                  "'");
    }
  }
  return out;
}
}  // namespace detail

/// Load a body from a preset string or a JSON file path.
inline ConvexBody load_body(const std::string& source) {
  const auto colon = source.find(':');
  if (colon != std::string::npos) {
    const std::string name = source.substr(0, colon);
    const std::string rest = source.substr(colon + 1);
    if (name == "circle") {
      const auto a = detail::parse_args(rest, name);
      if (a.size() != 1) throw std::invalid_argument("circle: expects circle:r");
      return presets::circle(a[0]);
    }
    if (name == "ellipse") {
      const auto a = detail::parse_args(rest, name);
      if (a.size() != 2 && a.size() != 3)
        throw std::invalid_argument("ellipse: expects ellipse:a,b[,K]");
      return presets::ellipse(a[0], a[1], a.size() == 3 ? int(a[2]) : 32);
    }
    if (name == "cw3") {
      const auto a = detail::parse_args(rest, name);
      if (a.size() != 2) throw std::invalid_argument("cw3: expects cw3:a0,a3");
      return presets::cw3(a[0], a[1]);
    }
    if (name == "random") {
      const auto a = detail::parse_args(rest, name);
      if (a.size() != 3)
        throw std::invalid_argument("random: expects random:seed,K,decay");
      return presets::random_body(std::uint64_t(a[0]), int(a[1]), a[2]);
    }
  }
  std::ifstream in(source);
  if (!in)
    throw std::invalid_argument("body source '" + source +
                                "' is neither a known preset nor a readable "
                                "file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("body file '" + source + "': " + e.what());
  }
  return body_from_json(j);
}

}  // namespace visang::io
