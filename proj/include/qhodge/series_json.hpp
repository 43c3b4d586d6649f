#pragma once

#include "qhodge/qseries.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qhodge {

using ordered_json = nlohmann::ordered_json;

/// [{"x":..,"y":..,"c":"<decimal>"}...] sorted by (x, y).
inline ordered_json to_json(const HodgePoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json mono;
    mono["x"] = m.ex;
    mono["y"] = m.ey;
    mono["c"] = c.str();
    arr.push_back(std::move(mono));
  }
  return arr;
}

/// {"den":24,"cap":N,"terms":[{"q":n,"coeff":[...]}]} with terms sorted by q.
/// Field order is fixed, so the dump is byte-stable.
inline ordered_json to_json(const QSeries& s) {
  ordered_json j;
  j["den"] = QExp::den;
  j["cap"] = s.cap().num;
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : s.terms()) {
    ordered_json t;
    t["q"] = e.num;
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline HodgePoly hodge_poly_from_json(const ordered_json& arr) {
  HodgePoly p;
  for (const auto& mono : arr)
    p.add_term({mono.at("x").get<int>(), mono.at("y").get<int>()},
               BigInt(mono.at("c").get<std::string>()));
  return p;
}

inline QSeries series_from_json(const ordered_json& j) {
  if (j.at("den").get<std::int64_t>() != QExp::den)
    throw std::invalid_argument("series_from_json: den must be 24");
  QSeries s(QExp(j.at("cap").get<std::int64_t>()));
  for (const auto& t : j.at("terms")) {
    const QExp e(t.at("q").get<std::int64_t>());
    if (e > s.cap()) throw std::invalid_argument("series_from_json: term above cap");
    s.add_term(e, hodge_poly_from_json(t.at("coeff")));
  }
  return s;
}

}  // namespace qhodge
