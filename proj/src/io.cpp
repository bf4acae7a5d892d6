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

#include <seifert/errors.hpp>
#include <seifert/io.hpp>

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

namespace seifert {

namespace {

using json = nlohmann::json;

struct Token {
    std::size_t line, column;
    std::string text;
};

// every token that produces a SAX event, i.e. all except ',' and ':'
std::vector<Token> event_tokens(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < s.size(); ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',' || c == ':') {
            advance(1);
            continue;
        }
        Token t{line, col, {}};
        std::size_t j = i + 1;
        if (c == '"') {
            while (j < s.size() && s[j] != '"') j += s[j] == '\\' ? 2 : 1;
            ++j;
        } else if (c != '[' && c != ']' && c != '{' && c != '}') {
            while (j < s.size() && std::string_view(" \t\r\n,:]}").find(s[j]) == std::string_view::npos) ++j;
        }
        j = std::min(j, s.size());
        t.text = std::string(s.substr(i, j - i));
        out.push_back(std::move(t));
        advance(j - i);
    }
    return out;
}

// records the source token of every value by JSON pointer
class Locator : public nlohmann::json_sax<json> {
public:
    explicit Locator(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::map<std::string, Token> where;

    bool null() override { return scalar(); }
    bool boolean(bool) override { return scalar(); }
    bool number_integer(number_integer_t) override { return scalar(); }
    bool number_unsigned(number_unsigned_t) override { return scalar(); }
    bool number_float(number_float_t, const string_t&) override { return scalar(); }
    bool string(string_t&) override { return scalar(); }
    bool binary(binary_t&) override { return scalar(); }
    bool start_object(std::size_t) override { return open(false); }
    bool start_array(std::size_t) override { return open(true); }
    bool key(string_t& k) override {
        frames_.back().key = k;
        ++next_;
        return true;
    }
    bool end_object() override { return close(); }
    bool end_array() override { return close(); }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

private:
    struct Frame {
        bool array;
        std::size_t index = 0;
        std::string key;
    };

    std::string pointer() const {
        std::string p;
        for (const auto& f : frames_) p += "/" + (f.array ? std::to_string(f.index) : f.key);
        return p;
    }
    void record() {
        if (next_ < tokens_.size()) where.emplace(pointer(), tokens_[next_]);
        ++next_;
    }
    void step() {
        if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
    }
    bool scalar() {
        record();
        step();
        return true;
    }
    bool open(bool array) {
        record();
        frames_.push_back({array, 0, {}});
        return true;
    }
    bool close() {
        ++next_;
        frames_.pop_back();
        step();
        return true;
    }

    std::vector<Token> tokens_;
    std::vector<Frame> frames_;
    std::size_t next_ = 0;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view s, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < s.size(); ++i) {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

class Reader {
public:
    explicit Reader(std::map<std::string, Token> where) : where_(std::move(where)) {}

    [[noreturn]] void fail(const std::string& what, const std::string& ptr) const {
        // fall back to the closest enclosing value that has a position
        std::string p = ptr;
        while (true) {
            const auto it = where_.find(p);
            if (it != where_.end()) throw ParseError(what, it->second.line, it->second.column);
            if (p.empty()) throw ParseError(what, 1, 1);
            p.erase(p.rfind('/'));
        }
    }

    Integer integer(const json& v, const std::string& ptr) const {
        static const std::regex digits("-?[0-9]+");
        std::string raw;
        if (v.is_string()) {
            raw = v.get<std::string>();
        } else if (v.is_number()) {
            const auto it = where_.find(ptr);
            if (it != where_.end()) raw = it->second.text;
        } else {
            fail("expected an integer", ptr);
        }
        if (!std::regex_match(raw, digits)) fail("non-integer entry '" + raw + "'", ptr);
        return Integer(raw);
    }

    IntMatrix matrix(const json& v, const std::string& ptr) const {
        if (!v.is_array()) fail("matrix must be an array of integer arrays", ptr);
        const std::size_t n = v.size();
        IntMatrix M(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string rp = ptr + "/" + std::to_string(i);
            if (!v[i].is_array()) fail("matrix row must be an array", rp);
            if (v[i].size() != n)
                fail("row " + std::to_string(i + 1) + " has " + std::to_string(v[i].size()) + " entries, expected " +
                         std::to_string(n) + " (matrix must be square)",
                     rp);
            for (std::size_t j = 0; j < n; ++j) M(i, j) = integer(v[i][j], rp + "/" + std::to_string(j));
        }
        return M;
    }

    std::size_t count(const json& v, const std::string& ptr) const {
        const Integer x = integer(v, ptr);
        if (x < 1 || !x.fits_slong_p()) fail("components must be a positive integer", ptr);
        return x.get_ui();
    }

    ExternalValue external(const json& v, const std::string& ptr) const {
        ExternalValue e;
        if (v.is_object()) {
            if (!v.contains("value")) fail("missing field 'value'", ptr);
            const Integer x = integer(v["value"], ptr + "/value");
            if (x < 0 || !x.fits_slong_p()) fail("external value must be a nonnegative integer", ptr + "/value");
            e.value = x.get_si();
            if (v.contains("source")) {
                if (!v["source"].is_string()) fail("source must be a string", ptr + "/source");
                e.source = v["source"].get<std::string>();
            }
        } else {
            const Integer x = integer(v, ptr);
            if (x < 0 || !x.fits_slong_p()) fail("external value must be a nonnegative integer", ptr);
            e.value = x.get_si();
        }
        return e;
    }

private:
    std::map<std::string, Token> where_;
};

} // namespace

InputDocument parse_input(std::string_view text, std::size_t components) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string msg = e.what();
        const auto cut = msg.find("syntax error");
        throw ParseError(cut == std::string::npos ? msg : msg.substr(cut), line, col);
    }
    Locator loc(event_tokens(text));
    json::sax_parse(text.begin(), text.end(), &loc);
    const Reader rd(std::move(loc.where));

    InputDocument out;
    if (doc.is_array()) {
        if (components < 1) throw ParseError("components must be a positive integer", 1, 1);
        out.components = components;
        out.matrix = rd.matrix(doc, "");
        return out;
    }
    if (!doc.is_object()) rd.fail("expected an object or a matrix literal", "");
    for (const char* field : {"name", "components", "matrix"})
        if (!doc.contains(field)) rd.fail(std::string("missing field '") + field + "'", "");
    if (!doc["name"].is_string()) rd.fail("name must be a string", "/name");
    out.name = doc["name"].get<std::string>();
    out.components = rd.count(doc["components"], "/components");
    out.matrix = rd.matrix(doc["matrix"], "/matrix");
    if (doc.contains("external")) {
        const json& ext = doc["external"];
        if (!ext.is_object()) rd.fail("external must be an object", "/external");
        if (ext.contains("u_alg")) out.ualg = rd.external(ext["u_alg"], "/external/u_alg");
        if (ext.contains("smooth_genus")) out.smooth_genus = rd.external(ext["smooth_genus"], "/external/smooth_genus");
    }
    return out;
}

std::string read_text(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

} // namespace seifert
