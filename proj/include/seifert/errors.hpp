/*
   Copyright 2026 The seifert-forms Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace seifert {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// precondition on the arguments does not hold (non-symmetric input and the like)
class ContractError : public Error {
public:
    using Error::Error;
};

enum class ValidationKind { NotSquare, Components, Parity, RadicalRank, NotUnimodular };

const char* to_string(ValidationKind kind);

class ValidationError : public Error {
public:
    ValidationError(ValidationKind kind, const std::string& what) : Error(what), kind_(kind) {}
    ValidationKind kind() const noexcept { return kind_; }

private:
    ValidationKind kind_;
};

class SingularAtOmega : public Error {
public:
    SingularAtOmega() : Error("singular-at-omega") {}
};

class NotUnimodular : public Error {
public:
    NotUnimodular() : Error("not-unimodular") {}
};

class KnotsOnlyError : public Error {
public:
    KnotsOnlyError() : Error("knots-only") {}
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class BudgetExhausted : public Error {
public:
    BudgetExhausted() : Error("budget-exhausted") {}
};

// a computed object failed a check that must hold by construction
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace seifert
