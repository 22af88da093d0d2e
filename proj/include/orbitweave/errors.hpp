// Copyright 2026 The OrbitWeave Authors
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

#ifndef ORBITWEAVE_ERRORS_HPP_
#define ORBITWEAVE_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitweave {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad Cartan data: malformed type strings, non-finite types, order cap.
class CartanError : public Error {
 public:
  using Error::Error;
};

// Structural problems that prevent a graph from being built at all
// (duplicate ids, dangling endpoints, repeated (src, dst, label) triples).
class GraphError : public Error {
 public:
  using Error::Error;
};

// Input that does not match the JSON graph schema. `pointer` is the JSON
// pointer of the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

// A certification failure detected while computing something that needs a
// certified input (inconsistent ranks, degree clash between paths, ...).
class CertificationError : public Error {
 public:
  CertificationError(const std::string& what, std::vector<std::string> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::string> witness_;
};

}  // namespace orbitweave

#endif  // ORBITWEAVE_ERRORS_HPP_
