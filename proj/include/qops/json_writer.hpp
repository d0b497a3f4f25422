// json_writer.hpp
// Minimal ordered JSON document builder with deterministic output: object
// keys keep insertion order and doubles print with 17 significant digits,
// so identical runs produce byte-identical reports.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qops/complex_matrix.hpp"

namespace qops {

// Shortest-round-trip would also work; a fixed 17 digits keeps the format
// independent of the writing code path.
inline std::string json_number(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

class JsonValue {
public:
    enum class Kind { null, boolean, integer, uinteger, number, string, array, object };

    JsonValue() : kind_(Kind::null) {}

    static JsonValue boolean(bool b) {
        JsonValue v;
        v.kind_ = Kind::boolean;
        v.bool_ = b;
        return v;
    }
    static JsonValue integer(long long i) {
        JsonValue v;
        v.kind_ = Kind::integer;
        v.int_ = i;
        return v;
    }
    static JsonValue uinteger(unsigned long long u) {
        JsonValue v;
        v.kind_ = Kind::uinteger;
        v.uint_ = u;
        return v;
    }
    static JsonValue number(double d) {
        JsonValue v;
        v.kind_ = Kind::number;
        v.num_ = d;
        return v;
    }
    static JsonValue string(std::string s) {
        JsonValue v;
        v.kind_ = Kind::string;
        v.str_ = std::move(s);
        return v;
    }
    static JsonValue array() {
        JsonValue v;
        v.kind_ = Kind::array;
        return v;
    }
    static JsonValue object() {
        JsonValue v;
        v.kind_ = Kind::object;
        return v;
    }

    static JsonValue complex(const cplx& z) {
        JsonValue v = object();
        v.add("re", number(z.real()));
        v.add("im", number(z.imag()));
        return v;
    }

    static JsonValue matrix(const ComplexMatrix& m) {
        JsonValue rows = array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            JsonValue row = array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push(complex(m(r, c)));
            rows.push(std::move(row));
        }
        return rows;
    }

    static JsonValue real_list(const std::vector<double>& xs) {
        JsonValue arr = array();
        for (double x : xs) arr.push(number(x));
        return arr;
    }

    Kind kind() const { return kind_; }

    JsonValue& add(std::string key, JsonValue v) {
        members_.emplace_back(std::move(key), std::move(v));
        return *this;
    }

    JsonValue& push(JsonValue v) {
        items_.push_back(std::move(v));
        return *this;
    }

    const std::vector<std::pair<std::string, JsonValue>>& members() const { return members_; }
    const std::vector<JsonValue>& items() const { return items_; }

    void write(std::ostream& os, int indent = 0) const {
        const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
        const std::string pad1(static_cast<std::size_t>(indent + 1) * 2, ' ');
        switch (kind_) {
            case Kind::null:
                os << "null";
                break;
            case Kind::boolean:
                os << (bool_ ? "true" : "false");
                break;
            case Kind::integer:
                os << int_;
                break;
            case Kind::uinteger:
                os << uint_;
                break;
            case Kind::number:
                os << json_number(num_);
                break;
            case Kind::string:
                write_escaped(os, str_);
                break;
            case Kind::array:
                if (items_.empty()) {
                    os << "[]";
                    break;
                }
                os << "[\n";
                for (std::size_t i = 0; i < items_.size(); ++i) {
                    os << pad1;
                    items_[i].write(os, indent + 1);
                    os << (i + 1 < items_.size() ? ",\n" : "\n");
                }
                os << pad << "]";
                break;
            case Kind::object:
                if (members_.empty()) {
                    os << "{}";
                    break;
                }
                os << "{\n";
                for (std::size_t i = 0; i < members_.size(); ++i) {
                    os << pad1;
                    write_escaped(os, members_[i].first);
                    os << ": ";
                    members_[i].second.write(os, indent + 1);
                    os << (i + 1 < members_.size() ? ",\n" : "\n");
                }
                os << pad << "}";
                break;
        }
    }

    std::string to_string() const {
        std::ostringstream os;
        write(os);
        os << "\n";
        return os.str();
    }

private:
    static void write_escaped(std::ostream& os, const std::string& s) {
        os << '"';
        for (unsigned char c : s) {
            switch (c) {
                case '"': os << "\\\""; break;
                case '\\': os << "\\\\"; break;
                case '\n': os << "\\n"; break;
                case '\t': os << "\\t"; break;
                case '\r': os << "\\r"; break;
                default:
                    if (c < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        os << buf;
                    } else {
                        os << c;
                    }
            }
        }
        os << '"';
    }

    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    unsigned long long uint_ = 0;
    double num_ = 0.0;
    std::string str_;
    std::vector<std::pair<std::string, JsonValue>> members_;
    std::vector<JsonValue> items_;
};

}  // namespace qops
