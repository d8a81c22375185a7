#ifndef BIANCHI4D_JSON_WRITER_HPP
#define BIANCHI4D_JSON_WRITER_HPP

#include <cstdio>
#include <string>
#include <vector>

namespace bianchi4d {

/// Minimal JSON emitter with a byte-stable output contract: fields appear in
/// insertion order and every float is printed with 17 significant digits.
/// Reports produced from identical inputs compare equal as strings.
class JsonWriter {
 public:
  JsonWriter& begin_object() {
    separator();
    out_ += '{';
    stack_.push_back(true);
    return *this;
  }
  JsonWriter& end_object() {
    out_ += '}';
    stack_.pop_back();
    return *this;
  }
  JsonWriter& begin_array() {
    separator();
    out_ += '[';
    stack_.push_back(true);
    return *this;
  }
  JsonWriter& end_array() {
    out_ += ']';
    stack_.pop_back();
    return *this;
  }
  JsonWriter& key(const std::string& k) {
    separator();
    quote(k);
    out_ += ':';
    pending_value_ = true;
    return *this;
  }
  JsonWriter& value(double v) {
    separator();
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out_ += buf;
    return *this;
  }
  JsonWriter& value(int v) {
    separator();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    return *this;
  }
  JsonWriter& value(const std::string& v) {
    separator();
    quote(v);
    return *this;
  }
  JsonWriter& value(const char* v) { return value(std::string(v)); }

  const std::string& str() const { return out_; }

 private:
  void separator() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!stack_.empty() && !out_.empty()) {
      const char last = out_.back();
      if (last != '{' && last != '[') out_ += ',';
    }
  }
  void quote(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      if (c == '"' || c == '\\') out_ += '\\';
      out_ += c;
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> stack_;
  bool pending_value_{false};
};

}  // namespace bianchi4d

#endif
