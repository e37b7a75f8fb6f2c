/*
 * Copyright 2026 The cubhom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "error.hpp"
#include "petri.hpp"
#include "state_space.hpp"
#include "trace.hpp"
#include "trace_language.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cubhom::io {

using json = nlohmann::json;

namespace detail {

inline const json &field(const json &obj, const char *key) {
  if (!obj.is_object())
    throw InputError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::vector<std::string> strings(const json &arr, const char *what) {
  if (!arr.is_array())
    throw InputError(std::string("'") + what + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto &v : arr) {
    if (!v.is_string())
      throw InputError(std::string("'") + what + "' must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> name_pairs(const json &arr,
                                                                   const char *what) {
  if (!arr.is_array())
    throw InputError(std::string("'") + what + "' must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto &p : arr) {
    auto names = strings(p, what);
    if (names.size() != 2)
      throw InputError(std::string("'") + what + "' entries must have two names");
    out.emplace_back(names[0], names[1]);
  }
  return out;
}

inline TraceMonoid monoid(const json &doc, const char *gens, const char *pairs) {
  Alphabet E(strings(field(doc, gens), gens));
  std::vector<std::pair<std::string, std::string>> raw;
  if (doc.contains(pairs))
    raw = name_pairs(doc.at(pairs), pairs);
  Independence I = validate_independence(E, raw);
  return TraceMonoid(std::move(E), std::move(I));
}

} // namespace detail

inline json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

inline json read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

/// {"generators":[…], "independence":[[a,b],…], "states":[…],
///  "transitions":[{"from":s,"on":a,"to":t},…], "initial":s?}
inline StateSpace load_state_space(const json &doc) {
  TraceMonoid M = detail::monoid(doc, "generators", "independence");
  auto names = detail::strings(detail::field(doc, "states"), "states");
  std::unordered_map<std::string, StateId> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    index.emplace(names[i], static_cast<StateId>(i));
  auto state = [&](const json &v) {
    if (!v.is_string())
      throw InputError("state references must be strings");
    auto it = index.find(v.get<std::string>());
    if (it == index.end())
      throw UnknownState(v.get<std::string>());
    return it->second;
  };
  std::vector<Transition> transitions;
  const json &ts = doc.contains("transitions") ? doc.at("transitions") : json::array();
  if (!ts.is_array())
    throw InputError("'transitions' must be an array");
  for (const auto &t : ts) {
    const json &on = detail::field(t, "on");
    if (!on.is_string())
      throw InputError("transition label must be a string");
    transitions.push_back({state(detail::field(t, "from")),
                           M.alphabet().at(on.get<std::string>()),
                           state(detail::field(t, "to"))});
  }
  std::optional<StateId> initial;
  if (doc.contains("initial") && !doc.at("initial").is_null())
    initial = state(doc.at("initial"));
  return StateSpace(std::move(M), std::move(names), transitions, initial);
}

/// {"conditions":[…], "events":[{"name":e,"pre":[…],"post":[…]},…],
///  "initial":[…]}
inline CENet load_net(const json &doc) {
  auto conditions = detail::strings(detail::field(doc, "conditions"), "conditions");
  const json &evs = detail::field(doc, "events");
  if (!evs.is_array())
    throw InputError("'events' must be an array");
  std::vector<EventSpec> events;
  for (const auto &e : evs) {
    const json &name = detail::field(e, "name");
    if (!name.is_string())
      throw InputError("event name must be a string");
    EventSpec spec{name.get<std::string>(), {}, {}};
    if (e.contains("pre"))
      spec.pre = detail::strings(e.at("pre"), "pre");
    if (e.contains("post"))
      spec.post = detail::strings(e.at("post"), "post");
    events.push_back(std::move(spec));
  }
  std::vector<std::string> initial;
  if (doc.contains("initial"))
    initial = detail::strings(doc.at("initial"), "initial");
  return CENet(std::move(conditions), events, initial);
}

/// {"generators":[…], "independence":[…], "traces":["ab", …]}. A trace is a
/// word string (see TraceMonoid::parse) or an array of generator names.
inline TraceLanguage load_language(const json &doc) {
  TraceMonoid M = detail::monoid(doc, "generators", "independence");
  const json &ts = detail::field(doc, "traces");
  if (!ts.is_array())
    throw InputError("'traces' must be an array");
  std::set<Trace> members;
  for (const auto &t : ts) {
    if (t.is_string()) {
      members.insert(M.parse(t.get<std::string>()));
    } else {
      std::vector<Symbol> word;
      for (const auto &name : detail::strings(t, "traces"))
        word.push_back(M.alphabet().at(name));
      members.insert(M.normal_form(word));
    }
  }
  return TraceLanguage(std::move(M), std::move(members));
}

/// {"vertices":[…], "edges":[[a,b],…]}
inline TraceMonoid load_graph(const json &doc) {
  return detail::monoid(doc, "vertices", "edges");
}

} // namespace cubhom::io
