#include "u3/json.hpp"

#include <cstdio>

namespace u3 {

Json Json::number(std::int64_t v) {
    Json j;
    j.kind_ = Kind::Int;
    j.int_ = v;
    return j;
}

Json Json::number(double v) {
    Json j;
    j.kind_ = Kind::Real;
    j.real_ = v;
    return j;
}

Json Json::string(std::string v) {
    Json j;
    j.kind_ = Kind::Str;
    j.str_ = std::move(v);
    return j;
}

Json Json::array() {
    Json j;
    j.kind_ = Kind::Arr;
    return j;
}

Json Json::object() {
    Json j;
    j.kind_ = Kind::Obj;
    return j;
}

void Json::push(Json v) { arr_.push_back(std::move(v)); }

void Json::set(const std::string& k, Json v) { obj_.insert_or_assign(k, std::move(v)); }

std::string Json::dump() const {
    std::string out;
    write(out);
    out.push_back('\n');
    return out;
}

void Json::write(std::string& out) const {
    switch (kind_) {
    case Kind::Null:
        out += "null";
        break;
    case Kind::Int:
        out += std::to_string(int_);
        break;
    case Kind::Real: {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", real_);
        out += buf;
        break;
    }
    case Kind::Str:
        out.push_back('"');
        for (char c : str_) {
            // Labels only ever hold digits, commas, semicolons and ASCII
            // words, but escape defensively anyway.
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
        }
        out.push_back('"');
        break;
    case Kind::Arr: {
        out.push_back('[');
        bool first = true;
        for (const Json& v : arr_) {
            if (!first) out.push_back(',');
            first = false;
            v.write(out);
        }
        out.push_back(']');
        break;
    }
    case Kind::Obj: {
        out.push_back('{');
        bool first = true;
        for (const auto& [k, v] : obj_) {
            if (!first) out.push_back(',');
            first = false;
            out.push_back('"');
            out += k;
            out += "\":";
            v.write(out);
        }
        out.push_back('}');
        break;
    }
    }
}

} // namespace u3
