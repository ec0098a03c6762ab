#include "toml_lite.hpp"

#include "error.hpp"

namespace cochain {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    TomlValue parse_document() {
        TomlValue root;
        root.kind = TomlValue::Kind::Table;
        TomlValue* current = &root;
        while (true) {
            skip_whitespace_and_comments(true);
            if (eof()) break;
            if (peek() == '[') {
                expect('[');
                std::string name = parse_key();
                skip_inline_space();
                expect(']');
                end_of_line();
                auto [it, fresh] = root.table.emplace(name, TomlValue{});
                require(fresh, "parse_error", where() + ": duplicate table [" + name + "]");
                it->second.kind = TomlValue::Kind::Table;
                it->second.line = line_;
                current = &it->second;
            } else {
                auto [key, value] = parse_key_value();
                require(current->table.emplace(key, std::move(value)).second, "parse_error",
                        where() + ": duplicate key " + key);
                end_of_line();
            }
        }
        return root;
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    std::string where() const {
        return "line " + std::to_string(line_) + ", column " + std::to_string(col_);
    }

    void expect(char c) {
        require(!eof() && peek() == c, "parse_error",
                where() + ": expected '" + std::string(1, c) + "'");
        advance();
    }

    void skip_inline_space() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
    }

    void skip_whitespace_and_comments(bool include_newlines) {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (include_newlines && c == '\n') {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void end_of_line() {
        skip_inline_space();
        if (!eof() && peek() == '#')
            while (!eof() && peek() != '\n') advance();
        if (eof()) return;
        require(peek() == '\n' || peek() == '\r', "parse_error",
                where() + ": expected end of line");
        while (!eof() && (peek() == '\n' || peek() == '\r')) advance();
    }

    std::string parse_key() {
        skip_inline_space();
        require(!eof(), "parse_error", where() + ": expected a key");
        if (peek() == '"') return parse_basic_string();
        std::string out;
        while (!eof()) {
            char c = peek();
            if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '_' || c == '-') {
                out.push_back(advance());
            } else {
                break;
            }
        }
        require(!out.empty(), "parse_error", where() + ": expected a key");
        return out;
    }

    std::pair<std::string, TomlValue> parse_key_value() {
        std::string key = parse_key();
        skip_inline_space();
        expect('=');
        skip_inline_space();
        return {key, parse_value()};
    }

    std::string parse_basic_string() {
        expect('"');
        std::string out;
        while (true) {
            require(!eof(), "parse_error", where() + ": unterminated string");
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                require(!eof(), "parse_error", where() + ": unterminated escape");
                char e = advance();
                switch (e) {
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    case '"': out.push_back('"'); break;
                    case '\\': out.push_back('\\'); break;
                    default:
                        fail("parse_error", where() + ": unsupported escape \\" +
                                                std::string(1, e));
                }
            } else {
                require(c != '\n', "parse_error", where() + ": newline in string");
                out.push_back(c);
            }
        }
        return out;
    }

    TomlValue parse_value() {
        TomlValue v;
        v.line = line_;
        v.column = col_;
        require(!eof(), "parse_error", where() + ": expected a value");
        char c = peek();
        if (c == '"') {
            v.kind = TomlValue::Kind::String;
            v.str = parse_basic_string();
            return v;
        }
        if (c == '[') {
            v.kind = TomlValue::Kind::Array;
            advance();
            skip_whitespace_and_comments(true);
            while (!eof() && peek() != ']') {
                v.array.push_back(parse_value());
                skip_whitespace_and_comments(true);
                if (!eof() && peek() == ',') {
                    advance();
                    skip_whitespace_and_comments(true);
                }
            }
            expect(']');
            return v;
        }
        if (c == '{') {
            v.kind = TomlValue::Kind::Table;
            advance();
            skip_inline_space();
            while (!eof() && peek() != '}') {
                auto [key, value] = parse_key_value();
                require(v.table.emplace(key, std::move(value)).second, "parse_error",
                        where() + ": duplicate key " + key);
                skip_inline_space();
                if (!eof() && peek() == ',') {
                    advance();
                    skip_inline_space();
                }
            }
            expect('}');
            return v;
        }
        if (c == 't' || c == 'f') {
            std::string word;
            while (!eof() && peek() >= 'a' && peek() <= 'z') word.push_back(advance());
            if (word == "true") {
                v.kind = TomlValue::Kind::Boolean;
                v.boolean = true;
                return v;
            }
            if (word == "false") {
                v.kind = TomlValue::Kind::Boolean;
                v.boolean = false;
                return v;
            }
            fail("parse_error", where() + ": unknown literal '" + word + "'");
        }
        if (c == '+' || c == '-' || (c >= '0' && c <= '9')) {
            v.kind = TomlValue::Kind::Integer;
            bool negative = false;
            if (c == '+' || c == '-') {
                negative = c == '-';
                advance();
            }
            require(!eof() && peek() >= '0' && peek() <= '9', "parse_error",
                    where() + ": expected digits");
            std::uint64_t magnitude = 0;
            if (peek() == '0' && pos_ + 1 < text_.size() &&
                (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'X')) {
                advance();
                advance();
                bool any = false;
                while (!eof()) {
                    char h = peek();
                    int digit;
                    if (h >= '0' && h <= '9') digit = h - '0';
                    else if (h >= 'a' && h <= 'f') digit = h - 'a' + 10;
                    else if (h >= 'A' && h <= 'F') digit = h - 'A' + 10;
                    else break;
                    magnitude = magnitude * 16 + static_cast<std::uint64_t>(digit);
                    any = true;
                    advance();
                }
                require(any, "parse_error", where() + ": expected hex digits");
            } else {
                while (!eof() && peek() >= '0' && peek() <= '9')
                    magnitude = magnitude * 10 + static_cast<std::uint64_t>(advance() - '0');
            }
            v.integer = negative ? -static_cast<std::int64_t>(magnitude)
                                 : static_cast<std::int64_t>(magnitude);
            return v;
        }
        fail("parse_error", where() + ": unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

std::string kind_name(TomlValue::Kind k) {
    switch (k) {
        case TomlValue::Kind::String: return "string";
        case TomlValue::Kind::Integer: return "integer";
        case TomlValue::Kind::Boolean: return "boolean";
        case TomlValue::Kind::Array: return "array";
        case TomlValue::Kind::Table: return "table";
    }
    return "value";
}

void check_kind(const TomlValue& v, TomlValue::Kind want) {
    require(v.kind == want, "parse_error",
            "line " + std::to_string(v.line) + ": expected a " + kind_name(want) +
                ", found a " + kind_name(v.kind));
}

} // namespace

const TomlValue& TomlValue::at(const std::string& key) const {
    auto it = table.find(key);
    require(it != table.end(), "parse_error",
            "missing required key '" + key + "'" +
                (line > 0 ? " (table at line " + std::to_string(line) + ")" : ""));
    return it->second;
}

const std::string& TomlValue::as_string() const {
    check_kind(*this, Kind::String);
    return str;
}

std::int64_t TomlValue::as_integer() const {
    check_kind(*this, Kind::Integer);
    return integer;
}

bool TomlValue::as_boolean() const {
    check_kind(*this, Kind::Boolean);
    return boolean;
}

const std::vector<TomlValue>& TomlValue::as_array() const {
    check_kind(*this, Kind::Array);
    return array;
}

std::vector<std::string> TomlValue::string_array() const {
    check_kind(*this, Kind::Array);
    std::vector<std::string> out;
    for (const auto& v : array) out.push_back(v.as_string());
    return out;
}

TomlValue parse_toml(const std::string& text) { return Parser(text).parse_document(); }

} // namespace cochain
