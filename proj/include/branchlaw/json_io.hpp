#pragma once

// Minimal JSON support for the reporting and CLI layers: a value type, a
// strict parser, a deterministic writer (object keys sorted), and a
// validator for the schema subset the shipped schema file uses.

#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace branchlaw::jsonio {

class Json;
using JsonArray = std::vector<Json>;
using JsonObject = std::map<std::string, Json>;

class Json {
public:
    Json() : v_(nullptr) {}
    Json(std::nullptr_t) : v_(nullptr) {}
    Json(bool b) : v_(b) {}
    Json(int n) : v_(static_cast<std::int64_t>(n)) {}
    Json(std::int64_t n) : v_(n) {}
    Json(double x) : v_(x) {}
    Json(const char* s) : v_(std::string(s)) {}
    Json(std::string s) : v_(std::move(s)) {}
    Json(JsonArray a) : v_(std::move(a)) {}
    Json(JsonObject o) : v_(std::move(o)) {}

    bool is_null() const { return std::holds_alternative<std::nullptr_t>(v_); }
    bool is_bool() const { return std::holds_alternative<bool>(v_); }
    bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
    bool is_double() const { return std::holds_alternative<double>(v_); }
    bool is_number() const { return is_int() || is_double(); }
    bool is_string() const { return std::holds_alternative<std::string>(v_); }
    bool is_array() const { return std::holds_alternative<JsonArray>(v_); }
    bool is_object() const { return std::holds_alternative<JsonObject>(v_); }

    bool as_bool() const { return get<bool>("boolean"); }
    std::int64_t as_int() const { return get<std::int64_t>("integer"); }
    double as_number() const {
        if (is_int()) return static_cast<double>(std::get<std::int64_t>(v_));
        return get<double>("number");
    }
    const std::string& as_string() const { return get<std::string>("string"); }
    const JsonArray& as_array() const { return get<JsonArray>("array"); }
    JsonArray& as_array() { return std::get<JsonArray>(v_); }
    const JsonObject& as_object() const { return get<JsonObject>("object"); }
    JsonObject& as_object() { return std::get<JsonObject>(v_); }

    bool contains(const std::string& key) const {
        return is_object() && as_object().count(key) > 0;
    }
    const Json& at(const std::string& key) const {
        const auto& o = as_object();
        auto it = o.find(key);
        if (it == o.end()) throw std::runtime_error("missing json key: " + key);
        return it->second;
    }

    friend bool operator==(const Json& x, const Json& y) {
        if (x.is_number() && y.is_number() && !(x.is_int() && y.is_int()))
            return x.as_number() == y.as_number();
        return x.v_ == y.v_;
    }
    friend bool operator!=(const Json& x, const Json& y) { return !(x == y); }

    std::string dump(bool pretty = false) const {
        std::ostringstream out;
        write(out, pretty, 0);
        return out.str();
    }

private:
    template <typename T>
    const T& get(const char* what) const {
        if (!std::holds_alternative<T>(v_))
            throw std::runtime_error(std::string("json value is not a ") + what);
        return std::get<T>(v_);
    }

    static void write_string(std::ostream& out, const std::string& s) {
        out << '"';
        for (const char c : s) {
            switch (c) {
                case '"': out << "\\\""; break;
                case '\\': out << "\\\\"; break;
                case '\n': out << "\\n"; break;
                case '\r': out << "\\r"; break;
                case '\t': out << "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out << buf;
                    } else {
                        out << c;
                    }
            }
        }
        out << '"';
    }

    void write(std::ostream& out, bool pretty, int depth) const {
        const std::string pad = pretty ? std::string(2 * (depth + 1), ' ') : "";
        const std::string close_pad = pretty ? std::string(2 * depth, ' ') : "";
        const char* nl = pretty ? "\n" : "";
        if (is_null()) {
            out << "null";
        } else if (is_bool()) {
            out << (std::get<bool>(v_) ? "true" : "false");
        } else if (is_int()) {
            out << std::get<std::int64_t>(v_);
        } else if (is_double()) {
            std::ostringstream num;
            num.precision(17);
            num << std::get<double>(v_);
            std::string t = num.str();
            if (t.find_first_of(".eE") == std::string::npos) t += ".0";
            out << t;
        } else if (is_string()) {
            write_string(out, std::get<std::string>(v_));
        } else if (is_array()) {
            const JsonArray& a = std::get<JsonArray>(v_);
            if (a.empty()) {
                out << "[]";
                return;
            }
            out << '[' << nl;
            for (std::size_t i = 0; i < a.size(); ++i) {
                out << pad;
                a[i].write(out, pretty, depth + 1);
                if (i + 1 < a.size()) out << ',';
                out << nl;
            }
            out << close_pad << ']';
        } else {
            const JsonObject& o = std::get<JsonObject>(v_);
            if (o.empty()) {
                out << "{}";
                return;
            }
            out << '{' << nl;
            std::size_t i = 0;
            for (const auto& [k, v] : o) {
                out << pad;
                write_string(out, k);
                out << (pretty ? ": " : ":");
                v.write(out, pretty, depth + 1);
                if (++i < o.size()) out << ',';
                out << nl;
            }
            out << close_pad << '}';
        }
    }

    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, JsonArray,
                 JsonObject>
        v_;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Json parse() {
        Json v = value();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return v;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::runtime_error("json parse error at offset " +
                                 std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool consume_word(std::string_view w) {
        if (text_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }

    Json value() {
        skip_ws();
        const char c = peek();
        if (c == '{') return object();
        if (c == '[') return array();
        if (c == '"') return Json(string());
        if (consume_word("null")) return Json(nullptr);
        if (consume_word("true")) return Json(true);
        if (consume_word("false")) return Json(false);
        return number();
    }

    Json object() {
        expect('{');
        JsonObject o;
        skip_ws();
        if (peek() == '}') {
            ++pos_;
            return Json(std::move(o));
        }
        for (;;) {
            skip_ws();
            std::string key = string();
            skip_ws();
            expect(':');
            o[std::move(key)] = value();
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect('}');
            return Json(std::move(o));
        }
    }

    Json array() {
        expect('[');
        JsonArray a;
        skip_ws();
        if (peek() == ']') {
            ++pos_;
            return Json(std::move(a));
        }
        for (;;) {
            a.push_back(value());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            return Json(std::move(a));
        }
    }

    std::string string() {
        expect('"');
        std::string out;
        for (;;) {
            if (pos_ >= text_.size()) fail("unterminated string");
            char c = text_[pos_++];
            if (c == '"') return out;
            if (c != '\\') {
                out += c;
                continue;
            }
            if (pos_ >= text_.size()) fail("bad escape");
            const char e = text_[pos_++];
            switch (e) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case '/': out += '/'; break;
                case 'b': out += '\b'; break;
                case 'f': out += '\f'; break;
                case 'n': out += '\n'; break;
                case 'r': out += '\r'; break;
                case 't': out += '\t'; break;
                case 'u': {
                    if (pos_ + 4 > text_.size()) fail("bad unicode escape");
                    unsigned cp = 0;
                    for (int i = 0; i < 4; ++i) {
                        const char h = text_[pos_++];
                        cp <<= 4;
                        if (h >= '0' && h <= '9') cp |= static_cast<unsigned>(h - '0');
                        else if (h >= 'a' && h <= 'f') cp |= static_cast<unsigned>(h - 'a' + 10);
                        else if (h >= 'A' && h <= 'F') cp |= static_cast<unsigned>(h - 'A' + 10);
                        else fail("bad unicode escape");
                    }
                    // encode as UTF-8; surrogate pairs are not needed here
                    if (cp < 0x80) {
                        out += static_cast<char>(cp);
                    } else if (cp < 0x800) {
                        out += static_cast<char>(0xC0 | (cp >> 6));
                        out += static_cast<char>(0x80 | (cp & 0x3F));
                    } else {
                        out += static_cast<char>(0xE0 | (cp >> 12));
                        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
                        out += static_cast<char>(0x80 | (cp & 0x3F));
                    }
                    break;
                }
                default: fail("bad escape");
            }
        }
    }

    Json number() {
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        bool integral = true;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            integral = false;
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            integral = false;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        }
        const std::string token(text_.substr(start, pos_ - start));
        if (token.empty() || token == "-") fail("bad number");
        try {
            if (integral) return Json(static_cast<std::int64_t>(std::stoll(token)));
            return Json(std::stod(token));
        } catch (const std::exception&) {
            fail("bad number");
        }
    }
};

}  // namespace detail

inline Json parse(std::string_view text) { return detail::Parser(text).parse(); }

// ----- schema validation ---------------------------------------------------

namespace detail {

inline bool type_matches(const Json& v, const std::string& t) {
    if (t == "null") return v.is_null();
    if (t == "boolean") return v.is_bool();
    if (t == "integer") return v.is_int();
    if (t == "number") return v.is_number();
    if (t == "string") return v.is_string();
    if (t == "array") return v.is_array();
    if (t == "object") return v.is_object();
    return false;
}

inline const Json& resolve_ref(const std::string& ref, const Json& root) {
    if (ref == "#") return root;
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0)
        throw std::runtime_error("unsupported $ref: " + ref);
    return root.at("$defs").at(ref.substr(prefix.size()));
}

inline void validate_at(const Json& v, const Json& schema, const Json& root,
                        const std::string& path, std::vector<std::string>& errors);

inline bool valid_against(const Json& v, const Json& schema, const Json& root) {
    std::vector<std::string> errs;
    validate_at(v, schema, root, "", errs);
    return errs.empty();
}

inline void validate_at(const Json& v, const Json& schema, const Json& root,
                        const std::string& path, std::vector<std::string>& errors) {
    const std::string where = path.empty() ? "$" : path;
    if (schema.is_bool()) {
        if (!schema.as_bool()) errors.push_back(where + ": schema forbids any value");
        return;
    }
    if (schema.contains("$ref")) {
        validate_at(v, resolve_ref(schema.at("$ref").as_string(), root), root, path,
                    errors);
        return;
    }
    if (schema.contains("type")) {
        const Json& t = schema.at("type");
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(v, t.as_string());
        } else {
            for (const Json& opt : t.as_array())
                if (type_matches(v, opt.as_string())) ok = true;
        }
        if (!ok) {
            errors.push_back(where + ": type mismatch (want " + t.dump() + ")");
            return;
        }
    }
    if (schema.contains("const") && v != schema.at("const"))
        errors.push_back(where + ": const mismatch");
    if (schema.contains("enum")) {
        bool ok = false;
        for (const Json& opt : schema.at("enum").as_array())
            if (v == opt) ok = true;
        if (!ok) errors.push_back(where + ": not among enum values");
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const Json& sub : schema.at("oneOf").as_array())
            if (valid_against(v, sub, root)) ++hits;
        if (hits != 1)
            errors.push_back(where + ": oneOf matched " + std::to_string(hits) +
                             " branches");
    }
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const Json& name : schema.at("required").as_array())
                if (!v.contains(name.as_string()))
                    errors.push_back(where + ": missing required member '" +
                                     name.as_string() + "'");
        const Json* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
        for (const auto& [key, member] : v.as_object()) {
            if (props && props->contains(key)) {
                validate_at(member, props->at(key), root, where + "." + key, errors);
            } else if (schema.contains("additionalProperties")) {
                const Json& ap = schema.at("additionalProperties");
                if (ap.is_bool() && !ap.as_bool())
                    errors.push_back(where + ": unexpected member '" + key + "'");
                else if (!ap.is_bool())
                    validate_at(member, ap, root, where + "." + key, errors);
            }
        }
    }
    if (v.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const Json& item : v.as_array())
            validate_at(item, schema.at("items"), root, where + "[" + std::to_string(i++) + "]",
                        errors);
    }
}

}  // namespace detail

// All violations of the schema by the value; empty means valid. Supports the
// keyword subset used by the shipped schema: type, properties, required,
// items, enum, const, additionalProperties, oneOf, and local $defs/$ref.
inline std::vector<std::string> validate(const Json& value, const Json& schema) {
    std::vector<std::string> errors;
    detail::validate_at(value, schema, schema, "", errors);
    return errors;
}

}  // namespace branchlaw::jsonio
