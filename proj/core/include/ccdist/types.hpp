/*
 * Copyright 2026 The ccdist Authors
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

#ifndef CCDIST_TYPES_HPP
#define CCDIST_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccdist {

using VertexId = std::uint64_t;
/// Value stored in a parent slot: the image of a vertex under a root function.
using RootValue = std::uint64_t;
using Rank = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Precondition on a parameter violated (k = 0, empty graph, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Wire frame or binary file could not be encoded or decoded.
class CodecError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

/// A peer sent a value that cannot occur under the agreed root function.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// Failure inside a distributed run, attributed to the machine that raised it.
class RunError : public Error {
 public:
  RunError(Rank rank, const std::string& what)
      : Error("rank " + std::to_string(rank) + ": " + what), rank_(rank) {}
  Rank rank() const noexcept { return rank_; }

 private:
  Rank rank_;
};

}  // namespace ccdist

#endif  // CCDIST_TYPES_HPP
