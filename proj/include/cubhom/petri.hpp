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

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cubhom {

/// Set of marked conditions; bit i is the i-th declared condition.
using Marking = boost::dynamic_bitset<>;

struct EventSpec {
  std::string name;
  std::vector<std::string> pre;
  std::vector<std::string> post;
};

/// Elementary (condition/event) Petri net.
class CENet {
public:
  struct Event {
    std::string name;
    Marking pre;
    Marking post;
  };

  CENet(std::vector<std::string> conditions, const std::vector<EventSpec> &events,
        const std::vector<std::string> &initial)
      : conditions_(std::move(conditions)) {
    for (std::size_t i = 0; i < conditions_.size(); ++i) {
      if (conditions_[i].empty())
        throw InputError("condition names must be nonempty");
      if (!index_.emplace(conditions_[i], i).second)
        throw InputError("duplicate condition '" + conditions_[i] + "'");
    }
    std::vector<std::string> names;
    for (const EventSpec &e : events) {
      names.push_back(e.name);
      events_.push_back({e.name, to_marking(e.pre), to_marking(e.post)});
    }
    alphabet_ = Alphabet(std::move(names));
    initial_ = to_marking(initial);
  }

  const std::vector<std::string> &conditions() const noexcept { return conditions_; }
  const std::vector<Event> &events() const noexcept { return events_; }
  const Alphabet &alphabet() const noexcept { return alphabet_; }
  const Marking &initial() const noexcept { return initial_; }
  const Event &event(Symbol e) const { return events_.at(e.index); }

  Marking to_marking(const std::vector<std::string> &names) const {
    Marking m(conditions_.size());
    for (const auto &n : names) {
      auto it = index_.find(n);
      if (it == index_.end())
        throw InputError("unknown condition '" + n + "'");
      m.set(it->second);
    }
    return m;
  }

  /// Events whose pre- and postsets overlap can never fire.
  std::vector<std::string> warnings() const {
    std::vector<std::string> out;
    for (const Event &e : events_)
      if (e.pre.intersects(e.post))
        out.push_back("event '" + e.name +
                      "' shares a condition between pre and post; it is never "
                      "enabled");
    return out;
  }

  /// "{p,q}" with condition names sorted; the empty marking is "{}".
  std::string marking_name(const Marking &m) const {
    std::vector<std::string> names;
    for (auto i = m.find_first(); i != Marking::npos; i = m.find_next(i))
      names.push_back(conditions_[i]);
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i)
      out += (i ? "," : "") + names[i];
    return out + "}";
  }

private:
  std::vector<std::string> conditions_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Event> events_;
  Alphabet alphabet_;
  Marking initial_;
};

/// a I b iff the neighbourhoods pre∪post of a and b are disjoint.
inline Independence derive_independence(const CENet &net) {
  Independence rel(net.events().size());
  const auto &ev = net.events();
  for (std::uint32_t i = 0; i < ev.size(); ++i)
    for (std::uint32_t j = i + 1; j < ev.size(); ++j)
      if (!(ev[i].pre | ev[i].post).intersects(ev[j].pre | ev[j].post))
        rel.add(Symbol{i}, Symbol{j});
  return rel;
}

inline TraceMonoid net_monoid(const CENet &net) {
  return TraceMonoid(net.alphabet(), derive_independence(net));
}

/// s·e = (s∖pre) ∪ post when pre ⊆ s and post ∩ s = ∅; undefined otherwise.
inline std::optional<Marking> fire(const CENet &net, const Marking &s, Symbol e) {
  const auto &ev = net.event(e);
  if (!ev.pre.is_subset_of(s) || ev.post.intersects(s))
    return std::nullopt;
  return (s - ev.pre) | ev.post;
}

/// Largest condition count accepted when enumerating every marking.
inline constexpr std::size_t kMaxFullMarkingConditions = 20;

/// Markings with the firing rule as partial action. With reachable_only the
/// states are the markings reachable from the initial one in breadth-first
/// discovery order; otherwise all 2^|B| markings in binary-counter order
/// over the name-sorted conditions (first name = lowest bit).
inline StateSpace to_state_space(const CENet &net, bool reachable_only = true) {
  TraceMonoid monoid = net_monoid(net);
  std::vector<Marking> markings;
  std::map<Marking, StateId> id;
  auto intern = [&](const Marking &m) {
    auto [it, fresh] = id.emplace(m, static_cast<StateId>(markings.size()));
    if (fresh)
      markings.push_back(m);
    return std::pair{it->second, fresh};
  };

  if (reachable_only) {
    std::deque<Marking> queue{net.initial()};
    intern(net.initial());
    while (!queue.empty()) {
      Marking m = queue.front();
      queue.pop_front();
      for (Symbol e : monoid.alphabet().symbols())
        if (auto next = fire(net, m, e); next && intern(*next).second)
          queue.push_back(*next);
    }
  } else {
    const std::size_t nb = net.conditions().size();
    if (nb > kMaxFullMarkingConditions)
      throw InputError("too many conditions to enumerate all markings");
    std::vector<std::size_t> sorted(nb);
    for (std::size_t i = 0; i < nb; ++i)
      sorted[i] = i;
    std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
      return net.conditions()[a] < net.conditions()[b];
    });
    for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << nb); ++counter) {
      Marking m(nb);
      for (std::size_t k = 0; k < nb; ++k)
        if (counter >> k & 1u)
          m.set(sorted[k]);
      intern(m);
    }
  }

  std::vector<Transition> transitions;
  for (StateId s = 0; s < markings.size(); ++s)
    for (Symbol e : monoid.alphabet().symbols())
      if (auto next = fire(net, markings[s], e))
        transitions.push_back({s, e, id.at(*next)});
  std::vector<std::string> names;
  for (const Marking &m : markings)
    names.push_back(net.marking_name(m));
  StateId initial = id.at(net.initial());
  return StateSpace(std::move(monoid), std::move(names), transitions, initial);
}

} // namespace cubhom
