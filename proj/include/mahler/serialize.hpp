#pragma once

// Text and JSON forms of exact values.
//   Rational   "p/q" (or "p" when q = 1)
//   PiScaled   "p/q * pi^k"
//   RatFunPi   {"pi_power": k, "num": [...], "den": [...]}, ascending coefficient strings
//   LaurentPi  {"pi_power": k, "terms": [{"exponent": e, "coeff": "p/q * pi^k"}, ...]}
//   CoeffVec   [[re, im], ...]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mahler/error.hpp"
#include "mahler/laurent.hpp"
#include "mahler/poly.hpp"
#include "mahler/ratfun.hpp"
#include "mahler/rational.hpp"

namespace mahler {

using json = nlohmann::json;

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator_of(q);
  if (denominator_of(q) != 1) os << '/' << denominator_of(q);
  return os.str();
}

inline std::string to_string(const PiScaled& x) {
  return to_string(x.coeff()) + " * pi^" + std::to_string(x.pi_power());
}

inline Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw error(errc::parse_error, "not a rational: '" + text + "'");
  const BigInt num(m[1].str());
  const BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
  if (den == 0) throw error(errc::parse_error, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

/// Accepts "p/q * pi^k", "p * pi^k", "p/q" and "p".
inline PiScaled parse_pi_scaled(const std::string& text) {
  static const std::regex pattern(R"(\s*([^*]+?)\s*(?:\*\s*pi\s*\^\s*([+-]?\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw error(errc::parse_error, "not a pi-scaled value: '" + text + "'");
  const int power = m[2].matched ? std::stoi(m[2].str()) : 0;
  return {parse_rational(m[1].str()), power};
}

/// Nearest double to the 15-significant-digit rendering of x.
inline double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

inline std::string format15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

namespace detail {

inline void dump15_into(const json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format15(x) : "null";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        dump15_into(j[i], indent, depth + 1, out);
        if (i + 1 < j.size()) out += ",";
        out += nl;
      }
      out += close_pad + "]";
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad + json(it.key()).dump() + (indent > 0 ? ": " : ":");
        dump15_into(it.value(), indent, depth + 1, out);
        if (i + 1 < j.size()) out += ",";
        out += nl;
      }
      out += close_pad + "}";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Like json::dump, but every float is written with exactly %.15g.
inline std::string dump15(const json& j, int indent = -1) {
  std::string out;
  detail::dump15_into(j, std::max(indent, 0), 0, out);
  return out;
}

inline json to_json(const PolyQ& p) {
  json out = json::array();
  for (const Rational& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

inline PolyQ poly_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& item : j) c.push_back(parse_rational(item.get<std::string>()));
  return PolyQ{std::move(c)};
}

inline json to_json(const RatFunPi& f) {
  return json{{"pi_power", f.pi_power()}, {"num", to_json(f.fun().num())}, {"den", to_json(f.fun().den())}};
}

inline RatFunPi ratfun_from_json(const json& j) {
  try {
    return {j.at("pi_power").get<int>(), poly_from_json(j.at("num")), poly_from_json(j.at("den"))};
  } catch (const json::exception& e) {
    throw error(errc::parse_error, e.what());
  }
}

inline json to_json(const LaurentPi& g) {
  json terms = json::array();
  for (const auto& [e, c] : g.terms()) {
    terms.push_back(json{{"exponent", e}, {"coeff", to_string(PiScaled(c, g.pi_power()))}});
  }
  return json{{"pi_power", g.pi_power()}, {"terms", terms}};
}

inline LaurentPi laurent_from_json(const json& j) {
  try {
    LaurentPi g;
    for (const auto& t : j.at("terms")) g.add_term(t.at("exponent").get<int>(), parse_pi_scaled(t.at("coeff").get<std::string>()));
    return g;
  } catch (const json::exception& e) {
    throw error(errc::parse_error, e.what());
  }
}

inline std::string poly_display(const PolyQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "s";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

/// Human-readable form, e.g. "pi^2 * (4*s^2) / (s^4 - 5*s^2 + 4)".
inline std::string display(const RatFunPi& f) {
  if (f.is_zero()) return "0";
  return "pi^" + std::to_string(f.pi_power()) + " * (" + poly_display(f.fun().num()) + ") / (" +
         poly_display(f.fun().den()) + ")";
}

inline json to_json(const CoeffVec& f) {
  json out = json::array();
  for (const cplx& z : f.entries) out.push_back(json::array({round15(z.real()), round15(z.imag())}));
  return out;
}

/// [[re, im], ...]; a bare number is read as a real entry.
inline CoeffVec coeff_vec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw error(errc::parse_error, "coefficient vector must be a non-empty array");
  std::vector<cplx> out;
  for (const auto& item : j) {
    if (item.is_number()) {
      out.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2 && item[0].is_number() && item[1].is_number()) {
      out.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      throw error(errc::parse_error, "entries must be [re, im] pairs");
    }
  }
  return CoeffVec{std::move(out)};
}

}  // namespace mahler
