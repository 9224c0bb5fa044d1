/*
 * Copyright 2026 The xasp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
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

namespace xasp {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed program text (native or aspif). Carries a 1-based source position
// when one is known; line == 0 means "no position" (e.g. aspif stream-level errors).
class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& message)
        : Error(format(line, col, message)), line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    static std::string format(int line, int col, const std::string& message) {
        if (line <= 0) return message;
        return std::to_string(line) + ":" + std::to_string(col) + ": " + message;
    }

    int line_;
    int col_;
};

// Semantically invalid request: unknown atom, interpretation that is not an
// answer set, mismatched arguments. Maps to CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// A configured resource cap was exceeded. Maps to CLI exit code 3.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Internal invariant violation; indicates a bug, not bad input. Maps to CLI
// exit code 4.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace xasp
