#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "warpiso/errors.hpp"

namespace warpiso {

// Deterministic JSON emitter: object keys are sorted, numbers are printed
// with %.15g, and the same value always serializes to the same bytes.
class CanonicalJson {
 public:
  CanonicalJson() = default;

  CanonicalJson(const CanonicalJson& other) { *this = other; }
  CanonicalJson& operator=(const CanonicalJson& other) {
    if (this == &other) return *this;
    kind_ = other.kind_;
    bool_ = other.bool_;
    int_ = other.int_;
    double_ = other.double_;
    string_ = other.string_;
    array_ = other.array_ ? std::make_unique<Array>(*other.array_) : nullptr;
    object_ = other.object_ ? std::make_unique<Object>(*other.object_) : nullptr;
    return *this;
  }
  CanonicalJson(CanonicalJson&&) = default;
  CanonicalJson& operator=(CanonicalJson&&) = default;

  static CanonicalJson object() {
    CanonicalJson v;
    v.kind_ = Kind::Object;
    v.object_ = std::make_unique<Object>();
    return v;
  }
  static CanonicalJson array() {
    CanonicalJson v;
    v.kind_ = Kind::Array;
    v.array_ = std::make_unique<Array>();
    return v;
  }
  static CanonicalJson number(double x) {
    if (!std::isfinite(x)) throw numeric_error("refusing to serialize a non-finite number");
    CanonicalJson v;
    v.kind_ = Kind::Double;
    v.double_ = x;
    return v;
  }
  static CanonicalJson integer(long long x) {
    CanonicalJson v;
    v.kind_ = Kind::Int;
    v.int_ = x;
    return v;
  }
  static CanonicalJson boolean(bool b) {
    CanonicalJson v;
    v.kind_ = Kind::Bool;
    v.bool_ = b;
    return v;
  }
  static CanonicalJson string(std::string s) {
    CanonicalJson v;
    v.kind_ = Kind::String;
    v.string_ = std::move(s);
    return v;
  }

  CanonicalJson& set(const std::string& key, CanonicalJson v) {
    if (kind_ != Kind::Object) throw domain_error("set() requires a JSON object");
    (*object_)[key] = std::move(v);
    return *this;
  }

  CanonicalJson& push(CanonicalJson v) {
    if (kind_ != Kind::Array) throw domain_error("push() requires a JSON array");
    array_->push_back(std::move(v));
    return *this;
  }

  std::string dump() const {
    std::string out;
    write(out);
    return out;
  }

 private:
  enum class Kind { Null, Bool, Int, Double, String, Array, Object };
  using Array = std::vector<CanonicalJson>;
  using Object = std::map<std::string, CanonicalJson>;

  static void write_escaped(const std::string& s, std::string& out) {
    out += '"';
    for (char ch : s) {
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
    out += '"';
  }

  void write(std::string& out) const {
    switch (kind_) {
      case Kind::Null:
        out += "null";
        break;
      case Kind::Bool:
        out += bool_ ? "true" : "false";
        break;
      case Kind::Int:
        out += std::to_string(int_);
        break;
      case Kind::Double: {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.15g", double_);
        out += buf;
        break;
      }
      case Kind::String:
        write_escaped(string_, out);
        break;
      case Kind::Array: {
        out += '[';
        bool first = true;
        for (const auto& v : *array_) {
          if (!first) out += ',';
          first = false;
          v.write(out);
        }
        out += ']';
        break;
      }
      case Kind::Object: {
        out += '{';
        bool first = true;
        for (const auto& [k, v] : *object_) {
          if (!first) out += ',';
          first = false;
          write_escaped(k, out);
          out += ':';
          v.write(out);
        }
        out += '}';
        break;
      }
    }
  }

  Kind kind_ = Kind::Null;
  bool bool_ = false;
  long long int_ = 0;
  double double_ = 0.0;
  std::string string_;
  std::unique_ptr<Array> array_;
  std::unique_ptr<Object> object_;
};

}  // namespace warpiso
