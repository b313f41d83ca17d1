#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gaussmap {

/// Streaming JSON writer with fully pinned formatting: insertion-ordered
/// keys, two-space indentation, doubles printed with 17 significant
/// digits. Identical inputs produce byte-identical documents, which the
/// report invariants rely on.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& os) : os_(os) {}

    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(std::string_view name);

    void value(std::string_view text);
    void value(const char* text) { value(std::string_view(text)); }
    void value(double number);
    void value(int number);
    void value(long number);
    void value(unsigned long number);
    void value(bool flag);
    void null();

    template <typename T>
    void kv(std::string_view name, const T& v) {
        key(name);
        value(v);
    }

private:
    void prepare_value();
    void newline_indent();
    static std::string escape(std::string_view raw);

    std::ostream& os_;
    struct Level {
        bool is_array = false;
        bool any = false;
    };
    std::vector<Level> stack_;
    bool key_pending_ = false;
};

}  // namespace gaussmap
