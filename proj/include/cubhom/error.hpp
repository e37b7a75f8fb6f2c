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

#include <stdexcept>
#include <string>

namespace cubhom {

/// Malformed input: unknown names, reflexive pairs, duplicate declarations.
/// The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnknownSymbol : public InputError {
public:
  explicit UnknownSymbol(const std::string &name)
      : InputError("unknown symbol '" + name + "'"), name_(name) {}
  const std::string &name() const noexcept { return name_; }

private:
  std::string name_;
};

class ReflexivePair : public InputError {
public:
  explicit ReflexivePair(const std::string &name)
      : InputError("independence pair (" + name + "," + name +
                   ") is reflexive"),
        name_(name) {}
  const std::string &name() const noexcept { return name_; }

private:
  std::string name_;
};

class UnknownState : public InputError {
public:
  explicit UnknownState(const std::string &name)
      : InputError("unknown state '" + name + "'") {}
};

class ReservedStateName : public InputError {
public:
  ReservedStateName()
      : InputError("state name '*' is reserved for the augmentation sink") {}
};

/// Input that is well formed but violates a semantic law (commutation,
/// prefix closure). The CLI maps these to exit code 3.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace cubhom
