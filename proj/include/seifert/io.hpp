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

#include <seifert/matrix.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace seifert {

struct ExternalValue {
    long value = 0;
    std::string source;
};

struct InputDocument {
    std::string name;
    std::size_t components = 1;
    IntMatrix matrix;
    std::optional<ExternalValue> ualg;
    std::optional<ExternalValue> smooth_genus;
};

/*
 * Two formats:
 *   {"name": ..., "components": r, "matrix": [[..], ..],
 *    "external": {"u_alg": {"value": n, "source": "..."}, "smooth_genus": {...}}}
 * or a bare matrix literal "[[a,b],[c,d]]", which takes `components` from the
 * argument. Entries may be written as integers of any size or as decimal
 * strings. Errors are ParseError with 1-based line and column.
 */
InputDocument parse_input(std::string_view text, std::size_t components = 1);

std::string read_text(const std::string& path);  // "-" reads stdin

} // namespace seifert
