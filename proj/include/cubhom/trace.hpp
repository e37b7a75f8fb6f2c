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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cubhom {

/// A generator of the trace monoid, identified by its declaration index.
/// Symbol order is declaration order.
struct Symbol {
  std::uint32_t index = 0;

  friend auto operator<=>(Symbol, Symbol) = default;
};

/// Finite ordered set of named generators.
class Alphabet {
public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty())
        throw InputError("generator names must be nonempty");
      if (!index_.emplace(names_[i], static_cast<std::uint32_t>(i)).second)
        throw InputError("duplicate generator '" + names_[i] + "'");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string> &names() const noexcept { return names_; }
  const std::string &name(Symbol s) const { return names_.at(s.index); }

  std::optional<Symbol> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      return std::nullopt;
    return Symbol{it->second};
  }

  Symbol at(std::string_view name) const {
    if (auto s = find(name))
      return *s;
    throw UnknownSymbol(std::string(name));
  }

  /// True when every generator name is a single character, so words can be
  /// written without separators.
  bool single_char() const noexcept {
    return std::all_of(names_.begin(), names_.end(),
                       [](const std::string &n) { return n.size() == 1; });
  }

  std::vector<Symbol> symbols() const {
    std::vector<Symbol> out(names_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = Symbol{static_cast<std::uint32_t>(i)};
    return out;
  }

  friend bool operator==(const Alphabet &a, const Alphabet &b) {
    return a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Symmetric irreflexive relation on an alphabet, stored as an adjacency
/// matrix.
class Independence {
public:
  Independence() = default;
  explicit Independence(std::size_t alphabet_size)
      : n_(alphabet_size), adj_(alphabet_size * alphabet_size, false) {}

  std::size_t alphabet_size() const noexcept { return n_; }

  bool operator()(Symbol a, Symbol b) const {
    return a.index < n_ && b.index < n_ && adj_[a.index * n_ + b.index];
  }

  void add(Symbol a, Symbol b) {
    if (a == b)
      throw InputError("reflexive independence pair");
    adj_[a.index * n_ + b.index] = true;
    adj_[b.index * n_ + a.index] = true;
  }

  /// Unordered pairs as (smaller, larger), in lexicographic order.
  std::vector<std::pair<Symbol, Symbol>> pairs() const {
    std::vector<std::pair<Symbol, Symbol>> out;
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = i + 1; j < n_; ++j)
        if (adj_[i * n_ + j])
          out.emplace_back(Symbol{i}, Symbol{j});
    return out;
  }

  std::size_t pair_count() const { return pairs().size(); }

  friend bool operator==(const Independence &, const Independence &) = default;

private:
  std::size_t n_ = 0;
  std::vector<bool> adj_;
};

/// Builds an independence relation from raw name pairs. Pairs are
/// symmetrized and deduplicated.
inline Independence
validate_independence(const Alphabet &alphabet,
                      std::span<const std::pair<std::string, std::string>> raw) {
  Independence rel(alphabet.size());
  for (const auto &[a, b] : raw) {
    Symbol sa = alphabet.at(a);
    Symbol sb = alphabet.at(b);
    if (sa == sb)
      throw ReflexivePair(a);
    rel.add(sa, sb);
  }
  return rel;
}

class TraceMonoid;

/// Element of a trace monoid, held as the lexicographically least word of
/// its equivalence class. Ordered shortlex (length first), so the empty
/// trace sorts first.
class Trace {
public:
  Trace() = default;

  const std::vector<Symbol> &word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }

  friend bool operator==(const Trace &, const Trace &) = default;
  friend std::strong_ordering operator<=>(const Trace &a, const Trace &b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0)
      return c;
    return a.word_ <=> b.word_;
  }

private:
  friend class TraceMonoid;
  explicit Trace(std::vector<Symbol> w) : word_(std::move(w)) {}

  std::vector<Symbol> word_;
};

/// Cells of the generalized torus: per degree n, the strictly increasing
/// pairwise independent n-tuples in lexicographic order.
class CliqueTable {
public:
  using Tuple = std::vector<Symbol>;

  std::size_t degrees() const noexcept { return by_degree_.size(); }
  /// Largest n with p_n > 0.
  std::size_t top_degree() const noexcept {
    return by_degree_.empty() ? 0 : by_degree_.size() - 1;
  }
  std::size_t count(std::size_t n) const {
    return n < by_degree_.size() ? by_degree_[n].size() : 0;
  }
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (const auto &d : by_degree_)
      out.push_back(d.size());
    return out;
  }
  const std::vector<Tuple> &tuples(std::size_t n) const {
    static const std::vector<Tuple> none;
    return n < by_degree_.size() ? by_degree_[n] : none;
  }
  const Tuple &tuple(std::size_t n, std::size_t i) const {
    return by_degree_.at(n).at(i);
  }
  std::optional<std::size_t> index_of(const Tuple &t) const {
    auto it = index_.find(t);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

private:
  friend CliqueTable cliques(const Alphabet &, const Independence &);

  std::vector<std::vector<Tuple>> by_degree_;
  std::map<Tuple, std::size_t> index_;
};

inline CliqueTable cliques(const Alphabet &alphabet,
                           const Independence &independence) {
  CliqueTable table;
  const auto n = static_cast<std::uint32_t>(alphabet.size());
  std::vector<Symbol> current;
  auto record = [&](const std::vector<Symbol> &t) {
    if (table.by_degree_.size() <= t.size())
      table.by_degree_.resize(t.size() + 1);
    auto &level = table.by_degree_[t.size()];
    table.index_.emplace(t, level.size());
    level.push_back(t);
  };
  // Depth-first extension in increasing symbol order visits each degree's
  // tuples in lexicographic order.
  auto extend = [&](auto &&self, std::uint32_t from) -> void {
    record(current);
    for (std::uint32_t c = from; c < n; ++c) {
      Symbol s{c};
      bool ok = std::all_of(current.begin(), current.end(),
                            [&](Symbol x) { return independence(x, s); });
      if (!ok)
        continue;
      current.push_back(s);
      self(self, c + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return table;
}

/// M(E,I): alphabet plus independence, with canonical-form arithmetic.
class TraceMonoid {
public:
  TraceMonoid() = default;
  TraceMonoid(Alphabet alphabet, Independence independence)
      : alphabet_(std::move(alphabet)), independence_(std::move(independence)) {
    if (independence_.alphabet_size() != alphabet_.size())
      throw InputError("independence relation does not match alphabet");
  }

  const Alphabet &alphabet() const noexcept { return alphabet_; }
  const Independence &independence() const noexcept { return independence_; }
  bool independent(Symbol a, Symbol b) const { return independence_(a, b); }

  Trace one() const { return Trace{}; }

  Trace generator(Symbol s) const {
    check(s);
    return Trace({s});
  }

  /// Lexicographically least equivalent word: repeatedly move the smallest
  /// symbol that commutes with everything before its first occurrence to
  /// the front.
  Trace normal_form(std::span<const Symbol> word) const {
    for (Symbol s : word)
      check(s);
    std::vector<Symbol> rest(word.begin(), word.end());
    std::vector<Symbol> out;
    out.reserve(rest.size());
    while (!rest.empty()) {
      std::size_t best = front_candidates(rest).front();
      for (std::size_t k : front_candidates(rest))
        if (rest[k] < rest[best])
          best = k;
      out.push_back(rest[best]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return Trace(std::move(out));
  }

  Trace concat(const Trace &t, const Trace &u) const {
    std::vector<Symbol> w = t.word();
    w.insert(w.end(), u.word().begin(), u.word().end());
    return normal_form(w);
  }

  /// Generators x with t = x·t'.
  std::set<Symbol> first_letters(const Trace &t) const {
    std::set<Symbol> out;
    for (std::size_t k : front_candidates(t.word()))
      out.insert(t.word()[k]);
    return out;
  }

  /// The trace t' with t = x·t'; nullopt when x is not a first letter.
  std::optional<Trace> strip_first(const Trace &t, Symbol x) const {
    const auto &w = t.word();
    for (std::size_t k : front_candidates(w)) {
      if (w[k] != x)
        continue;
      std::vector<Symbol> rest = w;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      return normal_form(rest);
    }
    return std::nullopt;
  }

  /// All left divisors of t, including 1 and t itself.
  std::set<Trace> prefixes(const Trace &t) const {
    std::map<Trace, std::set<Trace>> memo;
    return prefixes_memo(t, memo);
  }

  /// Parses a word. Whitespace-separated tokens are generator names; a
  /// string without whitespace over a single-character alphabet is read
  /// character by character; otherwise the whole string names one
  /// generator. The empty string (or "1" when no generator has that name)
  /// denotes the unit.
  Trace parse(std::string_view text) const {
    std::vector<Symbol> word;
    bool has_space = text.find_first_of(" \t\n") != std::string_view::npos;
    if (has_space) {
      std::size_t pos = 0;
      while (pos < text.size()) {
        auto start = text.find_first_not_of(" \t\n", pos);
        if (start == std::string_view::npos)
          break;
        auto end = text.find_first_of(" \t\n", start);
        if (end == std::string_view::npos)
          end = text.size();
        word.push_back(alphabet_.at(text.substr(start, end - start)));
        pos = end;
      }
    } else if (text.empty() || (text == "1" && !alphabet_.find("1"))) {
      // unit
    } else if (alphabet_.single_char()) {
      for (char c : text)
        word.push_back(alphabet_.at(std::string_view(&c, 1)));
    } else {
      word.push_back(alphabet_.at(text));
    }
    return normal_form(word);
  }

  /// Inverse of parse; the unit prints as "1".
  std::string format(const Trace &t) const {
    if (t.empty())
      return "1";
    std::string out;
    bool compact = alphabet_.single_char();
    for (Symbol s : t.word()) {
      if (!compact && !out.empty())
        out += ' ';
      out += alphabet_.name(s);
    }
    return out;
  }

  friend bool operator==(const TraceMonoid &, const TraceMonoid &) = default;

private:
  void check(Symbol s) const {
    if (s.index >= alphabet_.size())
      throw UnknownSymbol("#" + std::to_string(s.index));
  }

  // Positions k such that w[k] commutes with every symbol before it. Since
  // independence is irreflexive, each such position is a first occurrence.
  std::vector<std::size_t> front_candidates(std::span<const Symbol> w) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = independence_(w[j], w[k]);
      if (ok)
        out.push_back(k);
    }
    return out;
  }

  std::set<Trace> prefixes_memo(const Trace &t,
                                std::map<Trace, std::set<Trace>> &memo) const {
    if (auto it = memo.find(t); it != memo.end())
      return it->second;
    std::set<Trace> out{one()};
    for (Symbol x : first_letters(t)) {
      Trace head = generator(x);
      for (const Trace &p : prefixes_memo(*strip_first(t, x), memo))
        out.insert(concat(head, p));
    }
    memo.emplace(t, out);
    return out;
  }

  Alphabet alphabet_;
  Independence independence_;
};

} // namespace cubhom
