#include "gtq/weights.hpp"

#include "gtq/errors.hpp"
#include "text.hpp"

namespace gtq {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

std::string WeightValue::str() const {
  if (value) return std::to_string(*value);
  return lower_bound > 1 ? symbol + ">=" + std::to_string(lower_bound) : symbol;
}

std::string ParamValue::str() const { return value ? to_string(*value) : symbol; }

void WeightData::bind(const std::string& symbol, const Rational& value) {
  for (auto& [rep, w] : m) {
    if (w.concrete() || w.symbol != symbol) continue;
    if (value.denominator() != 1 || value.numerator() < w.lower_bound)
      throw WeightError("value " + to_string(value) + " for " + symbol + " violates its declared bound >= " +
                        std::to_string(w.lower_bound));
    w.value = value.numerator();
  }
  auto bind_params = [&](std::map<std::string, ParamValue>& table, bool nonzero) {
    for (auto& [key, p] : table) {
      if (p.concrete() || p.symbol != symbol) continue;
      if (nonzero && is_zero(value)) throw WeightError("parameter " + symbol + " must be nonzero");
      p.value = value;
    }
  };
  bind_params(c, true);
  bind_params(b, false);
}

WeightValue parse_weight_value(const std::string& text) {
  WeightValue w;
  if (auto n = parse_int(text)) {
    if (*n < 1) throw WeightError("weight must be a positive integer, got " + text);
    w.value = *n;
    return w;
  }
  auto ge = text.find(">=");
  w.symbol = text.substr(0, ge);
  if (!valid_symbol(w.symbol)) throw WeightError("invalid weight '" + text + "'");
  if (ge != std::string::npos) {
    auto lb = parse_int(text.substr(ge + 2));
    if (!lb || *lb < 1) throw WeightError("invalid lower bound in '" + text + "'");
    w.lower_bound = *lb;
  }
  return w;
}

ParamValue parse_param_value(const std::string& text) {
  ParamValue p;
  if (auto r = parse_rational(text)) {
    p.value = *r;
    return p;
  }
  if (!valid_symbol(text)) throw WeightError("invalid parameter '" + text + "'");
  p.symbol = text;
  return p;
}

std::vector<WeightEntry> parse_weights(std::string_view text) {
  std::vector<WeightEntry> out;
  int lineno = 0;
  for (const auto& raw : split_lines(text)) {
    ++lineno;
    auto tok = tokens(strip_comment(raw));
    if (tok.empty()) continue;
    if (tok.size() != 3 || tok[0].size() != 1 || std::string("mcb").find(tok[0][0]) == std::string::npos)
      throw ParseError(lineno, "expected: m|c|b <key> <value>");
    WeightEntry e{tok[0][0], tok[1], tok[2], lineno};
    try {
      if (e.kind == 'm') {
        parse_weight_value(e.value);
      } else {
        auto p = parse_param_value(e.value);
        if (e.kind == 'c' && p.concrete() && is_zero(*p.value)) throw WeightError("parameter c must be nonzero");
      }
    } catch (const WeightError& err) {
      throw ParseError(lineno, err.what());
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace gtq
