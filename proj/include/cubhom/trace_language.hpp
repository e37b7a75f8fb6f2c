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
#include "state_space.hpp"
#include "trace.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cubhom {

/// Finite set of traces over a fixed trace monoid, held in shortlex order.
class TraceLanguage {
public:
  TraceLanguage() = default;
  TraceLanguage(TraceMonoid monoid, std::set<Trace> members)
      : monoid_(std::move(monoid)), members_(std::move(members)) {}

  /// Normalizes and deduplicates the given words.
  static TraceLanguage from_words(TraceMonoid monoid,
                                  std::span<const std::string> words) {
    std::set<Trace> members;
    for (const auto &w : words)
      members.insert(monoid.parse(w));
    return TraceLanguage(std::move(monoid), std::move(members));
  }

  const TraceMonoid &monoid() const noexcept { return monoid_; }
  const std::set<Trace> &members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const Trace &t) const { return members_.count(t) != 0; }

  friend bool operator==(const TraceLanguage &, const TraceLanguage &) = default;

private:
  TraceMonoid monoid_;
  std::set<Trace> members_;
};

inline TraceLanguage prefix_closure(const TraceLanguage &lang) {
  std::set<Trace> out;
  for (const Trace &w : lang.members())
    if (!out.count(w))
      out.merge(lang.monoid().prefixes(w));
  return TraceLanguage(lang.monoid(), std::move(out));
}

struct ClosureCheck {
  bool closed = true;
  std::optional<Trace> witness; // a missing prefix when !closed
};

/// The witness is the longest missing prefix of the shortlex-least member
/// that has one.
inline ClosureCheck is_prefix_closed(const TraceLanguage &lang) {
  for (const Trace &w : lang.members()) {
    const std::set<Trace> pre = lang.monoid().prefixes(w);
    for (auto it = pre.rbegin(); it != pre.rend(); ++it)
      if (!lang.contains(*it))
        return {false, *it};
  }
  return {};
}

class NotPrefixClosed : public ValidationError {
public:
  NotPrefixClosed(Trace witness, const std::string &shown)
      : ValidationError("language is not prefix closed; missing prefix '" +
                        shown + "'"),
        witness_(std::move(witness)) {}
  const Trace &witness() const noexcept { return witness_; }

private:
  Trace witness_;
};

/// States are the members (shortlex order); v·a = va when va ∈ L. The unit,
/// when present, is the initial state.
inline StateSpace to_state_space(const TraceLanguage &lang) {
  if (auto check = is_prefix_closed(lang); !check.closed)
    throw NotPrefixClosed(*check.witness, lang.monoid().format(*check.witness));
  const TraceMonoid &M = lang.monoid();
  std::vector<Trace> order(lang.members().begin(), lang.members().end());
  std::map<Trace, StateId> id;
  std::vector<std::string> names;
  for (const Trace &t : order) {
    id.emplace(t, static_cast<StateId>(names.size()));
    names.push_back(M.format(t));
  }
  std::vector<Transition> transitions;
  for (StateId s = 0; s < order.size(); ++s)
    for (Symbol a : M.alphabet().symbols())
      if (auto it = id.find(M.concat(order[s], M.generator(a))); it != id.end())
        transitions.push_back({s, a, it->second});
  std::optional<StateId> initial;
  if (auto it = id.find(M.one()); it != id.end())
    initial = it->second;
  return StateSpace(M, std::move(names), transitions, initial);
}

} // namespace cubhom
