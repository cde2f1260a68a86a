#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace dwp {

// Minimal ordered JSON value for the report documents. Emission is
// hand-rolled so output bytes are fully pinned: fixed key order, %.17g
// floats, '\n' line endings. nlohmann/json is used for *parsing* scenario
// files; reports go through this writer so the serialization contract stays
// under the engine's control.
class JsonValue {
public:
    using Object = std::vector<std::pair<std::string, JsonValue>>;
    using Array = std::vector<JsonValue>;

    JsonValue() : value_(nullptr) {}
    JsonValue(std::nullptr_t) : value_(nullptr) {}
    JsonValue(bool b) : value_(b) {}
    JsonValue(double d) : value_(d) {}
    JsonValue(int i) : value_(static_cast<std::int64_t>(i)) {}
    JsonValue(std::int64_t i) : value_(i) {}
    JsonValue(std::uint64_t u) : value_(static_cast<std::int64_t>(u)) {}
    JsonValue(const char* s) : value_(std::string(s)) {}
    JsonValue(std::string s) : value_(std::move(s)) {}
    JsonValue(Object o) : value_(std::move(o)) {}
    JsonValue(Array a) : value_(std::move(a)) {}

    static JsonValue object() { return JsonValue(Object{}); }
    static JsonValue array() { return JsonValue(Array{}); }

    JsonValue& set(const std::string& key, JsonValue v);
    JsonValue& push(JsonValue v);

    const JsonValue* find(const std::string& key) const;

    bool is_object() const { return std::holds_alternative<Object>(value_); }
    bool is_array() const { return std::holds_alternative<Array>(value_); }

    const Object* as_object() const { return std::get_if<Object>(&value_); }
    const Array* as_array() const { return std::get_if<Array>(&value_); }
    const double* as_double() const { return std::get_if<double>(&value_); }
    const std::int64_t* as_int() const { return std::get_if<std::int64_t>(&value_); }
    const bool* as_bool() const { return std::get_if<bool>(&value_); }
    const std::string* as_string() const { return std::get_if<std::string>(&value_); }

    // Serialize with 2-space indentation and a trailing newline at top level.
    std::string dump() const;

private:
    void write(std::string& out, int indent) const;
    std::variant<std::nullptr_t, bool, double, std::int64_t, std::string, Object, Array> value_;
};

std::string format_double(double v); // %.17g

// Top-level report document. `records` and `summary` shape depends on the
// scenario kind; the metadata block (conventions, tolerances, seed) is always
// present and pinned by golden tests.
struct ReportDocument {
    std::string kind;
    JsonValue metadata = JsonValue::object();
    JsonValue records = JsonValue::array();
    JsonValue summary = JsonValue::object();

    JsonValue to_json() const;
    std::string to_json_text() const;
    // Per-record CSV with a fixed header; values taken from record keys in
    // header order, blank when absent.
    std::string to_csv_text() const;
};

// The engine's fixed convention block.
JsonValue convention_metadata();

} // namespace dwp
