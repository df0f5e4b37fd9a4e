#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace u3 {

// Minimal JSON document model for deterministic output: object keys are
// kept sorted (std::map) and numbers are printed with a fixed format
// (%.17g for doubles, exact for integers), so the same document always
// serializes to the same bytes.
class Json {
  public:
    Json() : kind_(Kind::Null) {}
    static Json number(std::int64_t v);
    static Json number(double v);
    static Json string(std::string v);
    static Json array();
    static Json object();

    void push(Json v);                       // array append
    void set(const std::string& k, Json v);  // object insert

    std::string dump() const; // compact, no whitespace

  private:
    enum class Kind { Null, Int, Real, Str, Arr, Obj };
    Kind kind_;
    std::int64_t int_ = 0;
    double real_ = 0.0;
    std::string str_;
    std::vector<Json> arr_;
    std::map<std::string, Json> obj_;

    void write(std::string& out) const;
};

} // namespace u3
