#pragma once

// JSON forms of the library's value types, used by the CLI and round-trip
// tested against the documented schema.

#include <string>

#include "json.hpp"

#include "gdbw/automaton.hpp"
#include "gdbw/enumerate.hpp"
#include "gdbw/word.hpp"

namespace gdbw {

using json = nlohmann::json;

inline json word_to_json(const CircularWord& w) {
  return json{{"word", to_string(w)}, {"n", w.size()}, {"k", w.alphabet_size()}};
}

inline CircularWord word_from_json(const json& j) {
  CircularWord w = parse_word(j.at("word").get<std::string>(), j.at("k").get<i64>());
  if (w.size() != j.at("n").get<i64>())
    throw std::invalid_argument("word_from_json: length mismatch");
  return w;
}

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::complete: return "complete";
    case SearchStatus::node_limit_reached: return "node-limit";
    case SearchStatus::time_limit_reached: return "time-limit";
  }
  return "unknown";
}

inline SearchStatus search_status_from_string(const std::string& s) {
  if (s == "complete") return SearchStatus::complete;
  if (s == "node-limit") return SearchStatus::node_limit_reached;
  if (s == "time-limit") return SearchStatus::time_limit_reached;
  throw std::invalid_argument("search_status_from_string: " + s);
}

inline json bound_report_to_json(const BoundReport& r) {
  json j{{"m", r.m},
         {"N", r.n},
         {"k", r.k},
         {"r", r.r},
         {"v", r.v},
         {"bound", r.bound},
         {"sc", r.sc},
         {"bound_applicable", r.bound_applicable},
         {"equality", r.equality}};
  j["d"] = r.d ? json(*r.d) : json(nullptr);
  j["refined_bound"] = r.refined_bound ? json(*r.refined_bound) : json(nullptr);
  if (r.conditions)
    j["conditions"] = json{{"a", r.conditions->a}, {"b", r.conditions->b}};
  else
    j["conditions"] = nullptr;
  return j;
}

inline BoundReport bound_report_from_json(const json& j) {
  BoundReport r;
  r.m = j.at("m").get<i64>();
  r.n = j.at("N").get<i64>();
  r.k = j.at("k").get<i64>();
  r.r = j.at("r").get<i64>();
  r.v = j.at("v").get<i64>();
  r.bound = j.at("bound").get<i64>();
  r.sc = j.at("sc").get<i64>();
  r.bound_applicable = j.at("bound_applicable").get<bool>();
  r.equality = j.at("equality").get<bool>();
  if (!j.at("d").is_null()) r.d = j.at("d").get<i64>();
  if (!j.at("refined_bound").is_null())
    r.refined_bound = j.at("refined_bound").get<i64>();
  if (!j.at("conditions").is_null())
    r.conditions = MaxConditions{j.at("conditions").at("a").get<bool>(),
                                 j.at("conditions").at("b").get<bool>()};
  return r;
}

inline json gamma_profile_to_json(const GammaProfile& p) {
  return json(p.values);
}

inline json count_result_to_json(const CountResult& r) {
  json j{{"N", r.n},
         {"k", r.k},
         {"count", r.count},
         {"nodes", r.nodes},
         {"seconds", r.seconds},
         {"status", to_string(r.status)}};
  j["least"] = r.least ? json(gdbw::to_string(*r.least)) : json(nullptr);
  return j;
}

inline CountResult count_result_from_json(const json& j) {
  CountResult r;
  r.n = j.at("N").get<i64>();
  r.k = j.at("k").get<i64>();
  r.count = j.at("count").get<std::uint64_t>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.seconds = j.at("seconds").get<double>();
  r.status = search_status_from_string(j.at("status").get<std::string>());
  if (!j.at("least").is_null())
    r.least = parse_word(j.at("least").get<std::string>(), r.k);
  return r;
}

inline json max_sc_result_to_json(const MaxScResult& r) {
  json words = json::array();
  for (const CircularWord& w : r.words) words.push_back(gdbw::to_string(w));
  return json{{"N", r.n},
              {"k", r.k},
              {"max_sc", r.max_sc},
              {"words", words},
              {"nodes", r.nodes},
              {"seconds", r.seconds},
              {"status", to_string(r.status)}};
}

}  // namespace gdbw
