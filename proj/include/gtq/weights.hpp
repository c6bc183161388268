#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gtq {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);
// Compare via the numerator: mixing rational and int in == recurses under C++20 rewritten operators.
inline bool is_zero(const Rational& r) { return r.numerator() == 0; }
std::optional<Rational> parse_rational(std::string_view text);

// m-value of an orbit: a positive integer, or a symbol with an integer lower bound.
struct WeightValue {
  std::optional<long long> value;
  std::string symbol;
  long long lower_bound = 1;

  bool concrete() const { return value.has_value(); }
  long long least() const { return value ? *value : lower_bound; }
  std::string str() const;
  bool operator==(const WeightValue&) const = default;
};

// c- or b-value: a rational or a symbol.
struct ParamValue {
  std::optional<Rational> value;
  std::string symbol;

  bool concrete() const { return value.has_value(); }
  std::string str() const;
  bool operator==(const ParamValue&) const = default;
};

struct WeightData {
  std::map<std::string, WeightValue> m;  // keyed by orbit representative (least arrow id)
  std::map<std::string, ParamValue> c;
  std::map<std::string, ParamValue> b;   // keyed by border vertex id

  // Replace every occurrence of a symbol by a value; m-values must stay integral and respect bounds.
  void bind(const std::string& symbol, const Rational& value);
};

struct WeightEntry {
  char kind = 'm';  // 'm', 'c' or 'b'
  std::string key;
  std::string value;
  int line = 0;
};

std::vector<WeightEntry> parse_weights(std::string_view text);
WeightValue parse_weight_value(const std::string& text);  // throws WeightError
ParamValue parse_param_value(const std::string& text);     // throws WeightError

}  // namespace gtq
