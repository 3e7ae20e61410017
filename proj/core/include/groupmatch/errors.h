// Copyright 2026 The groupmatch Authors
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

#ifndef GROUPMATCH_ERRORS_H_
#define GROUPMATCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace groupmatch {

// Base class for failures caused by the data being processed (as opposed to
// bad configuration, which is reported as std::invalid_argument).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ground-truth groups overlap.
class PartitionError : public DataError {
 public:
  PartitionError(const std::string& record_id, const std::string& message)
      : DataError(message), record_id_(record_id) {}

  const std::string& record_id() const { return record_id_; }

 private:
  std::string record_id_;
};

// A record id that is not known to the table, graph or truth being queried.
class LookupError : public DataError {
 public:
  LookupError(const std::string& record_id, const std::string& message)
      : DataError(message), record_id_(record_id) {}

  const std::string& record_id() const { return record_id_; }

 private:
  std::string record_id_;
};

// A reference between tables does not resolve (e.g. dangling issuer_id).
class ReferentialIntegrityError : public DataError {
 public:
  using DataError::DataError;
};

// Operation applied to records of different kinds (company vs security).
class RecordKindError : public DataError {
 public:
  using DataError::DataError;
};

// Malformed input file. The message carries "<path>:<line>: ..." context.
class ParseError : public DataError {
 public:
  ParseError(const std::string& path, std::size_t line,
             const std::string& message)
      : DataError(path + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A DataError raised inside a pipeline stage, prefixed with the stage name.
// The original exception stays reachable through std::rethrow_if_nested.
class StageError : public DataError {
 public:
  StageError(const std::string& stage, const std::string& message)
      : DataError(stage + ": " + message), stage_(stage) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace groupmatch

#endif  // GROUPMATCH_ERRORS_H_
