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
#include "trace.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cubhom {

using StateId = std::uint32_t;

/// Name of the augmentation sink.
inline constexpr std::string_view kStarState = "*";

struct Transition {
  StateId from;
  Symbol on;
  StateId to;

  friend bool operator==(const Transition &, const Transition &) = default;
};

/// Finite set with a deterministic partial action of each generator,
/// optionally with an initial state. States are ordered by declaration.
class StateSpace {
public:
  StateSpace() = default;

  StateSpace(TraceMonoid monoid, std::vector<std::string> states,
             std::span<const Transition> transitions,
             std::optional<StateId> initial = std::nullopt)
      : monoid_(std::move(monoid)), names_(std::move(states)),
        table_(names_.size() * monoid_.alphabet().size()), initial_(initial) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (!index_.emplace(names_[i], static_cast<StateId>(i)).second)
        throw InputError("duplicate state '" + names_[i] + "'");
    for (const Transition &t : transitions) {
      if (t.from >= names_.size() || t.to >= names_.size())
        throw InputError("transition endpoint out of range");
      if (t.on.index >= monoid_.alphabet().size())
        throw UnknownSymbol("#" + std::to_string(t.on.index));
      auto &slot = table_[cell(t.from, t.on)];
      if (slot && *slot != t.to)
        throw InputError("state '" + names_[t.from] + "' has two targets on '" +
                         monoid_.alphabet().name(t.on) + "'");
      slot = t.to;
    }
    if (initial_ && *initial_ >= names_.size())
      throw InputError("initial state out of range");
  }

  const TraceMonoid &monoid() const noexcept { return monoid_; }
  const Alphabet &alphabet() const noexcept { return monoid_.alphabet(); }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string> &state_names() const noexcept { return names_; }
  const std::string &name(StateId s) const { return names_.at(s); }
  std::optional<StateId> initial() const noexcept { return initial_; }

  std::optional<StateId> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }
  StateId at(std::string_view name) const {
    if (auto s = find(name))
      return *s;
    throw UnknownState(std::string(name));
  }

  /// s·a, or nullopt when undefined.
  std::optional<StateId> step(StateId s, Symbol a) const {
    return table_.at(cell(s, a));
  }

  /// s·t applied letter by letter along the stored word.
  std::optional<StateId> act(StateId s, const Trace &t) const {
    std::optional<StateId> cur = s;
    for (Symbol a : t.word()) {
      cur = step(*cur, a);
      if (!cur)
        break;
    }
    return cur;
  }

  /// Transitions in (source, generator) order.
  std::vector<Transition> transitions() const {
    std::vector<Transition> out;
    for (StateId s = 0; s < names_.size(); ++s)
      for (Symbol a : alphabet().symbols())
        if (auto t = step(s, a))
          out.push_back({s, a, *t});
    return out;
  }

  bool is_total() const {
    for (const auto &slot : table_)
      if (!slot)
        return false;
    return true;
  }

private:
  std::size_t cell(StateId s, Symbol a) const {
    return static_cast<std::size_t>(s) * alphabet().size() + a.index;
  }

  TraceMonoid monoid_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> index_;
  std::vector<std::optional<StateId>> table_;
  std::optional<StateId> initial_;
};

/// Result of checking that independent generators commute on every state.
struct ActionReport {
  struct Violation {
    StateId state;
    Symbol a;
    Symbol b;
    std::optional<StateId> ab; // s·a·b
    std::optional<StateId> ba; // s·b·a
  };

  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

inline std::string describe(const StateSpace &space,
                            const ActionReport::Violation &v) {
  auto show = [&](std::optional<StateId> s) {
    return s ? space.name(*s) : std::string("undefined");
  };
  const auto &E = space.alphabet();
  return "commutation violated at state '" + space.name(v.state) + "' for (" +
         E.name(v.a) + "," + E.name(v.b) + "): " + E.name(v.a) + E.name(v.b) +
         " -> " + show(v.ab) + ", " + E.name(v.b) + E.name(v.a) + " -> " +
         show(v.ba);
}

class CommutationViolation : public ValidationError {
public:
  CommutationViolation(ActionReport report, std::vector<std::string> details)
      : ValidationError("partial action does not respect independence (" +
                        std::to_string(report.violations.size()) +
                        " violation(s))"),
        report_(std::move(report)), details_(std::move(details)) {}
  const ActionReport &report() const noexcept { return report_; }
  /// One human-readable line per violation.
  const std::vector<std::string> &details() const noexcept { return details_; }

private:
  ActionReport report_;
  std::vector<std::string> details_;
};

/// Checks s·a·b and s·b·a are Kleene-equal for every state and independent
/// pair {a,b}.
inline ActionReport validate_action(const StateSpace &space) {
  ActionReport report;
  auto then = [&](std::optional<StateId> s, Symbol a) -> std::optional<StateId> {
    return s ? space.step(*s, a) : std::nullopt;
  };
  const auto pairs = space.monoid().independence().pairs();
  for (StateId s = 0; s < space.size(); ++s)
    for (const auto &[a, b] : pairs) {
      auto ab = then(space.step(s, a), b);
      auto ba = then(space.step(s, b), a);
      if (ab != ba)
        report.violations.push_back({s, a, b, ab, ba});
    }
  return report;
}

inline void require_valid_action(const StateSpace &space) {
  ActionReport r = validate_action(space);
  if (r.ok())
    return;
  std::vector<std::string> details;
  for (const auto &v : r.violations)
    details.push_back(describe(space, v));
  throw CommutationViolation(std::move(r), std::move(details));
}

/// Restriction to {s0·μ}. Surviving states keep their relative order.
inline StateSpace reachable(const StateSpace &space, StateId s0) {
  if (s0 >= space.size())
    throw UnknownState("#" + std::to_string(s0));
  std::vector<bool> seen(space.size(), false);
  std::deque<StateId> queue{s0};
  seen[s0] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (Symbol a : space.alphabet().symbols())
      if (auto t = space.step(s, a); t && !seen[*t]) {
        seen[*t] = true;
        queue.push_back(*t);
      }
  }
  std::vector<StateId> renumber(space.size(), 0);
  std::vector<std::string> names;
  for (StateId s = 0; s < space.size(); ++s)
    if (seen[s]) {
      renumber[s] = static_cast<StateId>(names.size());
      names.push_back(space.name(s));
    }
  std::vector<Transition> kept;
  for (const Transition &t : space.transitions())
    if (seen[t.from])
      kept.push_back({renumber[t.from], t.on, renumber[t.to]});
  return StateSpace(space.monoid(), std::move(names), kept, renumber[s0]);
}

inline StateSpace reachable(const StateSpace &space, std::string_view s0) {
  return reachable(space, space.at(s0));
}

/// S ∪ {*} with total action; * is the last state and absorbs everything.
class AugmentedStateSpace {
public:
  const StateSpace &space() const noexcept { return space_; }
  StateId star() const noexcept { return static_cast<StateId>(space_.size() - 1); }
  std::size_t base_size() const noexcept { return space_.size() - 1; }

private:
  friend AugmentedStateSpace augment(const StateSpace &);
  explicit AugmentedStateSpace(StateSpace s) : space_(std::move(s)) {}

  StateSpace space_;
};

inline AugmentedStateSpace augment(const StateSpace &space) {
  if (space.find(kStarState))
    throw ReservedStateName();
  std::vector<std::string> names = space.state_names();
  names.emplace_back(kStarState);
  const auto star = static_cast<StateId>(space.size());
  std::vector<Transition> total;
  for (StateId s = 0; s <= star; ++s)
    for (Symbol a : space.alphabet().symbols()) {
      std::optional<StateId> t = s < star ? space.step(s, a) : std::nullopt;
      total.push_back({s, a, t.value_or(star)});
    }
  return AugmentedStateSpace(
      StateSpace(space.monoid(), std::move(names), total, space.initial()));
}

} // namespace cubhom
