#include "gaussmap/jsonwr.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gaussmap {

void JsonWriter::newline_indent() {
    os_ << "\n";
    for (size_t i = 0; i < stack_.size(); ++i) os_ << "  ";
}

void JsonWriter::prepare_value() {
    if (key_pending_) {
        key_pending_ = false;
        return;
    }
    if (stack_.empty()) return;
    Level& top = stack_.back();
    if (!top.is_array)
        throw std::logic_error("json: value inside object requires a key");
    if (top.any) os_ << ",";
    top.any = true;
    newline_indent();
}

void JsonWriter::begin_object() {
    prepare_value();
    os_ << "{";
    stack_.push_back({false, false});
}

void JsonWriter::end_object() {
    const bool any = stack_.back().any;
    stack_.pop_back();
    if (any) newline_indent();
    os_ << "}";
    if (stack_.empty()) os_ << "\n";
}

void JsonWriter::begin_array() {
    prepare_value();
    os_ << "[";
    stack_.push_back({true, false});
}

void JsonWriter::end_array() {
    const bool any = stack_.back().any;
    stack_.pop_back();
    if (any) newline_indent();
    os_ << "]";
}

void JsonWriter::key(std::string_view name) {
    Level& top = stack_.back();
    if (top.is_array) throw std::logic_error("json: key inside array");
    if (top.any) os_ << ",";
    top.any = true;
    newline_indent();
    os_ << "\"" << escape(name) << "\": ";
    key_pending_ = true;
}

void JsonWriter::value(std::string_view text) {
    prepare_value();
    os_ << "\"" << escape(text) << "\"";
}

void JsonWriter::value(double number) {
    prepare_value();
    if (!std::isfinite(number)) {
        os_ << "null";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", number);
    os_ << buf;
}

void JsonWriter::value(int number) {
    prepare_value();
    os_ << number;
}

void JsonWriter::value(long number) {
    prepare_value();
    os_ << number;
}

void JsonWriter::value(unsigned long number) {
    prepare_value();
    os_ << number;
}

void JsonWriter::value(bool flag) {
    prepare_value();
    os_ << (flag ? "true" : "false");
}

void JsonWriter::null() {
    prepare_value();
    os_ << "null";
}

std::string JsonWriter::escape(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char ch : raw) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

}  // namespace gaussmap
