#pragma once

// Text forms of polynomials: the comma list "4,4,0,1" (lowest degree
// first) and sparse expressions such as "z^3 + 4z + 4".

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "irreducia/error.hpp"
#include "irreducia/oracle.hpp"
#include "irreducia/polynomial.hpp"

namespace irreducia {

class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

inline bool is_variable(char ch) { return ch == 'z' || ch == 'x'; }

inline Integer parse_integer(std::string_view digits, std::string_view context) {
  if (digits.empty()) throw ParseError("expected an integer in '" + std::string(context) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("malformed integer '" + std::string(digits) + "'");
    }
  }
  return Integer(std::string(digits));
}

inline Polynomial parse_list(const std::string& s) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    std::string_view tok(s.data() + start, (comma == std::string::npos ? s.size() : comma) - start);
    bool neg = false;
    if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) {
      neg = tok.front() == '-';
      tok.remove_prefix(1);
    }
    Integer v = parse_integer(tok, s);
    coeffs.push_back(neg ? Integer(-v) : v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

inline Polynomial parse_expression(const std::string& s) {
  std::map<unsigned long, Integer> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;

    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    const bool has_coeff = j > i;
    Integer coeff = has_coeff ? Integer(s.substr(i, j - i)) : Integer(1);
    i = j;
    if (has_coeff && i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || !is_variable(s[i])) throw ParseError("expected variable after '*'");
    }
    unsigned long power = 0;
    if (i < s.size() && is_variable(s[i])) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw ParseError("expected exponent after '^'");
        power = std::stoul(s.substr(i, j - i));
        i = j;
      }
    } else if (!has_coeff) {
      throw ParseError("empty term at position " + std::to_string(i));
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      throw ParseError(std::string("unexpected character '") + s[i] + "'");
    }
    terms[power] += neg ? Integer(-coeff) : coeff;
  }
  if (terms.empty()) throw ParseError("empty polynomial");
  std::vector<Integer> coeffs(terms.rbegin()->first + 1);
  for (auto& [pw, c] : terms) coeffs[pw] = c;
  return Polynomial(std::move(coeffs));
}

}  // namespace detail

/// Accepts "4,4,0,1" or "z^3 + 4z + 4" (also 4*z, x as the variable).
/// Duplicate powers are summed.
inline Polynomial parse_poly(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw ParseError("empty input");
  const bool expression =
      s.find_first_of("zx^*") != std::string::npos || s.find_first_of("+-", 1) != std::string::npos;
  if (s.find(',') != std::string::npos) {
    if (s.find_first_of("zx^*") != std::string::npos) throw ParseError("mixed list and expression syntax");
    return detail::parse_list(s);
  }
  return expression ? detail::parse_expression(s) : detail::parse_list(s);
}

/// Canonical sparse form, highest power first: "6z^2 + 5z + 1". With
/// compact set the separators lose their spaces: "6z^2+5z+1".
inline std::string render(const Polynomial& f, bool compact = false) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Integer& c = f[i];
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += compact ? (neg ? "-" : "+") : (neg ? " - " : " + ");
    }
    const Integer a = abs(c);
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) out += "z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

/// Comma list, lowest degree first.
inline std::string render_list(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ",";
    out += f[i].get_str();
  }
  return out;
}

/// "(2z+1)(3z+1)", content first when it is not 1, multiplicities as ^k.
inline std::string render_factorization(const FactorizationResult& r) {
  std::string out;
  if (r.factors.empty()) return r.content.get_str();
  if (r.content == -1) {
    out = "-";
  } else if (r.content != 1) {
    out = r.content.get_str();
  }
  for (const auto& [g, mult] : r.factors) {
    out += "(" + render(g, true) + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

}  // namespace irreducia
