// json_writer.hpp — streaming JSON emitter with deterministic output: keys
// appear in insertion order and doubles are printed with 17 significant
// digits, so identical inputs yield byte-identical reports.
#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kf/errors.hpp"
#include "kf/matrix_market.hpp"

namespace kf {

class JsonWriter {
public:
    JsonWriter() { stack_.push_back(Frame::root); }

    std::string str() const { return out_.str(); }

    JsonWriter& begin_object() {
        prefix();
        out_ << "{";
        stack_.push_back(Frame::object_first);
        return *this;
    }
    JsonWriter& end_object() {
        pop(Frame::object_first, Frame::object);
        out_ << "}";
        return *this;
    }
    JsonWriter& begin_array() {
        prefix();
        out_ << "[";
        stack_.push_back(Frame::array_first);
        return *this;
    }
    JsonWriter& end_array() {
        pop(Frame::array_first, Frame::array);
        out_ << "]";
        return *this;
    }

    JsonWriter& key(const std::string& k) {
        if (top() == Frame::object) out_ << ",";
        if (top() == Frame::object_first) top() = Frame::object;
        out_ << quoted(k) << ":";
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(double x) {
        if (!std::isfinite(x)) throw Error("json writer: refusing to serialize non-finite number");
        prefix();
        out_ << format_double(x);
        return *this;
    }
    JsonWriter& value(long long x) {
        prefix();
        out_ << x;
        return *this;
    }
    JsonWriter& value(std::size_t x) { return value(static_cast<long long>(x)); }
    JsonWriter& value(int x) { return value(static_cast<long long>(x)); }
    JsonWriter& value(bool b) {
        prefix();
        out_ << (b ? "true" : "false");
        return *this;
    }
    JsonWriter& value(const std::string& s) {
        prefix();
        out_ << quoted(s);
        return *this;
    }
    JsonWriter& value(const char* s) { return value(std::string(s)); }
    JsonWriter& null() {
        prefix();
        out_ << "null";
        return *this;
    }
    // optional double: null when absent
    JsonWriter& value_or_null(const std::optional<double>& x) {
        return x ? value(*x) : null();
    }

private:
    enum class Frame { root, object_first, object, array_first, array };

    Frame& top() { return stack_.back(); }

    void prefix() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (top() == Frame::array) out_ << ",";
        if (top() == Frame::array_first) top() = Frame::array;
    }

    void pop(Frame first, Frame rest) {
        if (top() != first && top() != rest) throw Error("json writer: mismatched end");
        stack_.pop_back();
    }

    static std::string quoted(const std::string& s) {
        std::string r = "\"";
        for (char c : s) {
            switch (c) {
                case '"': r += "\\\""; break;
                case '\\': r += "\\\\"; break;
                case '\n': r += "\\n"; break;
                case '\t': r += "\\t"; break;
                case '\r': r += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        r += buf;
                    } else {
                        r += c;
                    }
            }
        }
        return r + "\"";
    }

    std::ostringstream out_;
    std::vector<Frame> stack_;
    bool pending_value_ = false;
};

}  // namespace kf
