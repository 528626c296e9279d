// Copyright 2026 The certilab Authors
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

#ifndef CERTILAB_ERROR_HPP_
#define CERTILAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace certilab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. an unreachable pair).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The input graph has the wrong shape (a cycle, not a tree, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Invalid generator or algorithm parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A shortcut edge lies outside the transitive closure, or a hopset weight
/// does not match the graph distance.
class InvalidShortcutError : public Error {
 public:
  using Error::Error;
};

/// Some shortcut edges have no certifying midpoint.
class CertificationError : public Error {
 public:
  CertificationError(std::string what,
                     std::vector<std::pair<std::size_t, std::size_t>> edges)
      : Error(std::move(what)), uncertified_(std::move(edges)) {}

  /// The (u, v) pairs that could not be certified.
  const std::vector<std::pair<std::size_t, std::size_t>>& uncertified() const {
    return uncertified_;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> uncertified_;
};

/// A shortcutting procedure step referenced an edge that was not present.
class ReplayError : public Error {
 public:
  ReplayError(std::string what, std::size_t step)
      : Error(std::move(what)), step_(step) {}

  /// One-based index of the failing step.
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// A flow value cannot be routed.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency violation: broken flow conservation, inconsistent
/// event logs, or a gadget that violates its own structural guarantees.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// File could not be read, parsed, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace certilab

#endif  // CERTILAB_ERROR_HPP_
