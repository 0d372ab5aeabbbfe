/*
 * Copyright 2026 The saves-bench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SAVES_ERROR_HPP_
#define SAVES_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace saves {

// Coarse failure categories. They map 1:1 onto the C API status codes and
// drive the CLI exit-code contract (usage/config vs. data errors).
enum class ErrorKind {
  kInvalidArgument,  // bad configuration or parameters
  kIo,               // filesystem failures
  kParse,            // malformed input content
  kData,             // structurally valid input that cannot be evaluated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void ThrowInvalidArgument(const std::string& message) {
  throw Error(ErrorKind::kInvalidArgument, message);
}
[[noreturn]] inline void ThrowIo(const std::string& message) {
  throw Error(ErrorKind::kIo, message);
}
[[noreturn]] inline void ThrowParse(const std::string& message) {
  throw Error(ErrorKind::kParse, message);
}
[[noreturn]] inline void ThrowData(const std::string& message) {
  throw Error(ErrorKind::kData, message);
}

}  // namespace saves

#endif  // SAVES_ERROR_HPP_
