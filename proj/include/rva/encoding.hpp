#pragma once

/**
 * @file encoding.hpp
 * @brief Exact values of base-b encodings and word-level transformations.
 *
 * A PairWord keeps the digit symbols (an eventually periodic sequence) apart
 * from the set of positions, in the combined word, that hold the separator.
 * A finite word is a PairWord with an empty period.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rva/alphabet.hpp"

namespace rva {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

/// One digit symbol: a d-vector (parallel) or a single digit (sequential).
using Symbol = std::vector<int>;

struct PairWord {
  std::vector<Symbol> prefix;
  std::vector<Symbol> period;
  std::vector<std::size_t> stars;

  bool finite() const { return period.empty(); }
  bool operator==(const PairWord&) const = default;
  auto operator<=>(const PairWord&) const = default;
};

/// Eventually periodic word over letters; an empty period denotes a finite word.
struct LassoWord {
  std::vector<Letter> prefix;
  std::vector<Letter> period;

  bool operator==(const LassoWord&) const = default;
};

inline Rational power(int base, std::size_t exponent) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return Rational(out);
}

inline Rational value_natural(const std::vector<int>& digits, int base) {
  BigInt out = 0;
  for (int d : digits) {
    if (d < 0 || d >= base) throw std::invalid_argument("value_natural: digit out of range");
    out = out * base + d;
  }
  return Rational(out);
}

/// Exact value of 0.prefix(period)^omega in base b.
inline Rational value_fractional(const std::vector<int>& prefix, const std::vector<int>& period, int base) {
  if (period.empty()) throw std::invalid_argument("value_fractional: period must be non-empty");
  const Rational periodic = value_natural(period, base) / (power(base, period.size()) - 1);
  return (value_natural(prefix, base) + periodic) / power(base, prefix.size());
}

/// i-th digit symbol of the pair-word's digit sequence.
inline const Symbol& digit_at(const PairWord& w, std::size_t i) {
  if (i < w.prefix.size()) return w.prefix[i];
  if (w.period.empty()) throw std::out_of_range("digit_at: past the end of a finite word");
  return w.period[(i - w.prefix.size()) % w.period.size()];
}

/// Canonical form: primitive period, shortest prefix.
inline PairWord normalize(PairWord w) {
  if (w.period.empty()) return w;
  const std::size_t n = w.period.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w.period[i] == w.period[i - p];
    if (ok) {
      w.period.resize(p);
      break;
    }
  }
  while (!w.prefix.empty() && w.prefix.back() == w.period.back()) {
    std::rotate(w.period.rbegin(), w.period.rbegin() + 1, w.period.rend());
    w.prefix.pop_back();
  }
  return w;
}

/// Unrolls so that the prefix holds at least `min_prefix` digits and both
/// lengths are multiples of `d`.
inline PairWord align(const PairWord& w, std::size_t d, std::size_t min_prefix = 0) {
  PairWord out;
  out.stars = w.stars;
  std::size_t p = std::max(w.prefix.size(), min_prefix);
  if (w.period.empty()) {
    if (w.prefix.size() % d) throw std::invalid_argument("align: finite word length not a multiple of d");
    out.prefix = w.prefix;
    return out;
  }
  p = (p + d - 1) / d * d;
  for (std::size_t i = 0; i < p; ++i) out.prefix.push_back(digit_at(w, i));
  const std::size_t len = std::lcm(w.period.size(), d);
  for (std::size_t i = 0; i < len; ++i) out.period.push_back(digit_at(w, p + i));
  return out;
}

inline std::size_t digits_before_last_star(const PairWord& w) {
  if (w.stars.empty()) return 0;
  return w.stars.back() - (w.stars.size() - 1);
}

/// Sequential word -> parallel word over d-vectors.
inline PairWord parallelize(const PairWord& w, int d) {
  if (d < 1) throw std::invalid_argument("parallelize: d must be >= 1");
  const std::size_t ud = static_cast<std::size_t>(d);
  for (std::size_t k = 0; k < w.stars.size(); ++k) {
    if (k && w.stars[k] <= w.stars[k - 1]) throw std::invalid_argument("parallelize: stars not increasing");
    if ((w.stars[k] - k) % ud) throw std::invalid_argument("parallelize: separator not at a multiple of d");
  }
  for (const auto& s : w.prefix) {
    if (s.size() != 1) throw std::invalid_argument("parallelize: expected sequential symbols");
  }
  const PairWord a = align(w, ud, digits_before_last_star(w));
  PairWord out;
  auto group = [&](const std::vector<Symbol>& src, std::vector<Symbol>& dst) {
    for (std::size_t i = 0; i < src.size(); i += ud) {
      Symbol s;
      for (std::size_t j = 0; j < ud; ++j) s.push_back(src[i + j].front());
      dst.push_back(std::move(s));
    }
  };
  group(a.prefix, out.prefix);
  group(a.period, out.period);
  for (std::size_t k = 0; k < w.stars.size(); ++k) out.stars.push_back((w.stars[k] - k) / ud + k);
  return out;
}

/// Parallel word -> sequential word.
inline PairWord sequentialize(const PairWord& w) {
  PairWord out;
  std::size_t d = 0;
  auto split = [&](const std::vector<Symbol>& src, std::vector<Symbol>& dst) {
    for (const auto& s : src) {
      if (d == 0) d = s.size();
      if (s.size() != d || d == 0) throw std::invalid_argument("sequentialize: inconsistent symbol width");
      for (int c : s) dst.push_back({c});
    }
  };
  split(w.prefix, out.prefix);
  split(w.period, out.period);
  if (d == 0) d = 1;
  for (std::size_t k = 0; k < w.stars.size(); ++k) out.stars.push_back((w.stars[k] - k) * d + k);
  return out;
}

/// Replaces component f of every digit symbol by z (a digit or kBox).
/// Sequential words have component f at the digit positions congruent to f mod d.
inline PairWord fix_component_word(const PairWord& w, int f, int z, EncodingKind kind, int d) {
  if (f < 0 || f >= d) throw std::invalid_argument("fix_component_word: component out of range");
  if (kind == EncodingKind::parallel) {
    PairWord out = w;
    for (auto* part : {&out.prefix, &out.period}) {
      for (auto& s : *part) {
        if (static_cast<int>(s.size()) != d) throw std::invalid_argument("fix_component_word: width mismatch");
        s[static_cast<std::size_t>(f)] = z;
      }
    }
    return out;
  }
  const std::size_t ud = static_cast<std::size_t>(d);
  PairWord out = w.period.empty() ? w : align(w, ud);
  std::size_t i = 0;
  for (auto* part : {&out.prefix, &out.period}) {
    for (auto& s : *part) {
      if (i % ud == static_cast<std::size_t>(f)) s.front() = z;
      ++i;
    }
  }
  return out;
}

/// Combined word with the separator letters placed.
inline LassoWord to_lasso(const PairWord& w) {
  LassoWord out;
  const std::size_t last = w.stars.empty() ? 0 : w.stars.back() + 1;
  std::size_t digit = 0;
  std::size_t star = 0;
  for (std::size_t pos = 0; pos < last || digit < w.prefix.size(); ++pos) {
    if (star < w.stars.size() && w.stars[star] == pos) {
      out.prefix.push_back(Letter::separator());
      ++star;
    } else {
      if (w.period.empty() && digit >= w.prefix.size()) {
        throw std::invalid_argument("to_lasso: separator position past the end of a finite word");
      }
      out.prefix.push_back(Letter::digits(digit_at(w, digit++)));
    }
  }
  if (!w.period.empty()) {
    for (std::size_t i = 0; i < w.period.size(); ++i) out.period.push_back(Letter::digits(digit_at(w, digit + i)));
  }
  return out;
}

inline PairWord from_lasso(const LassoWord& w) {
  PairWord out;
  for (std::size_t i = 0; i < w.prefix.size(); ++i) {
    if (w.prefix[i].star) {
      out.stars.push_back(i);
    } else {
      out.prefix.push_back(w.prefix[i].symbols);
    }
  }
  for (const auto& a : w.period) {
    if (a.star) throw std::invalid_argument("from_lasso: separator inside the period");
    out.period.push_back(a.symbols);
  }
  return out;
}

/// Natural digits, fractional prefix and fractional period of one component.
struct ComponentEncoding {
  std::vector<int> natural;
  std::vector<int> fraction_prefix;
  std::vector<int> fraction_period;

  bool operator==(const ComponentEncoding&) const = default;
  auto operator<=>(const ComponentEncoding&) const = default;
};

/// Splits a single-separator pair-word into per-component encodings.
inline std::vector<ComponentEncoding> components(const PairWord& w, int width) {
  if (w.stars.size() != 1) {
    throw std::invalid_argument("value: expected exactly one separator, got " + std::to_string(w.stars.size()));
  }
  if (w.period.empty()) throw std::invalid_argument("value: word must be infinite");
  const std::size_t s = w.stars.front();
  std::vector<ComponentEncoding> out(static_cast<std::size_t>(width));
  const std::size_t frac_prefix = w.prefix.size() > s ? w.prefix.size() - s : 0;
  for (std::size_t i = 0; i < s + frac_prefix + w.period.size(); ++i) {
    const Symbol& sym = digit_at(w, i);
    if (static_cast<int>(sym.size()) != width) throw std::invalid_argument("value: symbol width mismatch");
    for (std::size_t c = 0; c < sym.size(); ++c) {
      auto& comp = out[c];
      if (i < s) {
        comp.natural.push_back(sym[c]);
      } else if (i < s + frac_prefix) {
        comp.fraction_prefix.push_back(sym[c]);
      } else {
        comp.fraction_period.push_back(sym[c]);
      }
    }
  }
  return out;
}

inline Rational value_of(const ComponentEncoding& c, int base) {
  return value_natural(c.natural, base) + value_fractional(c.fraction_prefix, c.fraction_period, base);
}

/// Value vector of a single-separator word (sequential words are parallelized first).
inline RationalVector value_real(const PairWord& w, const AlphabetSpec& alphabet) {
  const PairWord par = alphabet.kind() == EncodingKind::sequential ? parallelize(w, alphabet.dim()) : w;
  RationalVector out;
  for (const auto& c : components(par, alphabet.dim())) out.push_back(value_of(c, alphabet.base()));
  return out;
}

/// Value vector in b-complement: the first natural digit of each component is a sign digit.
inline RationalVector value_real_complement(const PairWord& w, const AlphabetSpec& alphabet) {
  if (alphabet.kind() != EncodingKind::parallel) throw std::invalid_argument("complement values are parallel only");
  const int b = alphabet.base();
  RationalVector out;
  for (auto c : components(w, alphabet.dim())) {
    if (c.natural.empty()) throw std::invalid_argument("complement value: empty natural part");
    const int sign = c.natural.front();
    if (sign != 0 && sign != b - 1) throw std::invalid_argument("complement value: invalid sign digit");
    c.natural.erase(c.natural.begin());
    Rational v = value_of(c, b);
    if (sign == b - 1) v -= power(b, c.natural.size());
    out.push_back(v);
  }
  return out;
}

/// Greedy expansion of a fraction in [0,1): never ends in (b-1)^omega.
inline ComponentEncoding fraction_expansion(const Rational& f, int base) {
  ComponentEncoding out;
  BigInt num = boost::multiprecision::numerator(f);
  const BigInt den = boost::multiprecision::denominator(f);
  std::map<BigInt, std::size_t> seen;
  std::vector<int> digits;
  while (!seen.count(num)) {
    seen[num] = digits.size();
    num *= base;
    digits.push_back(static_cast<int>(BigInt(num / den)));
    num %= den;
  }
  const std::size_t start = seen[num];
  out.fraction_prefix.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
  out.fraction_period.assign(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
  return out;
}

/// All encodings of r >= 0 with a natural part of exactly `length` digits.
inline std::vector<ComponentEncoding> encodings_of(const Rational& r, std::size_t length, int base) {
  if (r < 0) throw std::invalid_argument("encodings_of: negative value");
  std::vector<ComponentEncoding> out;
  if (r == 0) {
    out.push_back({std::vector<int>(length, 0), {}, {0}});
    return out;
  }
  auto greedy = [&](std::size_t len) -> std::optional<ComponentEncoding> {
    BigInt n = BigInt(boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r));
    if (Rational(n) >= power(base, len)) return std::nullopt;
    ComponentEncoding e = fraction_expansion(r - Rational(n), base);
    e.natural.assign(len, 0);
    for (std::size_t i = len; i-- > 0;) {
      e.natural[i] = static_cast<int>(BigInt(n % base));
      n /= base;
    }
    return e;
  };
  if (auto g = greedy(length)) out.push_back(*g);
  // Dual encoding ending in (b-1)^omega: exists iff the greedy one terminates.
  if (r <= power(base, length)) {
    auto wide = greedy(length + 1);
    if (wide && wide->fraction_period == std::vector<int>{0}) {
      std::vector<int> digits = wide->natural;
      digits.insert(digits.end(), wide->fraction_prefix.begin(), wide->fraction_prefix.end());
      std::size_t t = digits.size();
      while (t > 0 && digits[t - 1] == 0) --t;
      if (t > 0) {
        digits.resize(t);
        --digits[t - 1];
        while (digits.size() < length + 1) digits.push_back(base - 1);
        if (digits.front() == 0) {
          ComponentEncoding dual;
          dual.natural.assign(digits.begin() + 1, digits.begin() + 1 + static_cast<std::ptrdiff_t>(length));
          dual.fraction_prefix.assign(digits.begin() + 1 + static_cast<std::ptrdiff_t>(length), digits.end());
          dual.fraction_period = {base - 1};
          out.push_back(dual);
        }
      }
    }
  }
  return out;
}

/// Parallel pair-word with one separator assembled from per-component encodings
/// that share the same natural length.
inline PairWord combine(const std::vector<ComponentEncoding>& parts) {
  if (parts.empty()) throw std::invalid_argument("combine: no components");
  const std::size_t nat = parts.front().natural.size();
  std::size_t pre = 0, per = 1;
  for (const auto& p : parts) {
    if (p.natural.size() != nat) throw std::invalid_argument("combine: natural lengths differ");
    pre = std::max(pre, p.fraction_prefix.size());
    per = std::lcm(per, p.fraction_period.size());
  }
  auto frac_digit = [](const ComponentEncoding& p, std::size_t i) {
    if (i < p.fraction_prefix.size()) return p.fraction_prefix[i];
    return p.fraction_period[(i - p.fraction_prefix.size()) % p.fraction_period.size()];
  };
  PairWord w;
  w.stars = {nat};
  for (std::size_t i = 0; i < nat + pre + per; ++i) {
    Symbol s;
    for (const auto& p : parts) s.push_back(i < nat ? p.natural[i] : frac_digit(p, i - nat));
    (i < nat + pre ? w.prefix : w.period).push_back(std::move(s));
  }
  return normalize(w);
}

/// Smallest l with value < b^l.
inline std::size_t minimal_natural_length(const Rational& r, int base) {
  std::size_t l = 0;
  while (r >= power(base, l)) ++l;
  return l;
}

/// All encodings of value_real(w) whose natural part has at most `max_natural`
/// digits (default: max minimal length + natural length of w + 2).
inline std::vector<PairWord> alternative_encodings(const PairWord& w, const AlphabetSpec& alphabet,
                                                   std::optional<std::size_t> max_natural = std::nullopt) {
  const bool seq = alphabet.kind() == EncodingKind::sequential;
  const PairWord par = seq ? parallelize(w, alphabet.dim()) : w;
  const RationalVector value = value_real(par, AlphabetSpec(alphabet.base(), alphabet.dim(), EncodingKind::parallel));
  std::size_t bound = 0;
  if (max_natural) {
    bound = *max_natural;
  } else {
    for (const auto& r : value) bound = std::max(bound, minimal_natural_length(r, alphabet.base()));
    bound += par.stars.front() + 2;
  }
  std::vector<PairWord> out;
  for (std::size_t len = 0; len <= bound; ++len) {
    std::vector<std::vector<ComponentEncoding>> options;
    bool possible = true;
    for (const auto& r : value) {
      options.push_back(encodings_of(r, len, alphabet.base()));
      possible = possible && !options.back().empty();
    }
    if (!possible) continue;
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      std::vector<ComponentEncoding> parts;
      for (std::size_t c = 0; c < options.size(); ++c) parts.push_back(options[c][pick[c]]);
      PairWord e = combine(parts);
      out.push_back(seq ? normalize(sequentialize(e)) : e);
      std::size_t c = 0;
      while (c < pick.size() && ++pick[c] == options[c].size()) pick[c++] = 0;
      if (c == pick.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Number of components in which two parallel words of equal shape differ.
inline std::size_t component_distance(const PairWord& w, const PairWord& v, int d) {
  if (w.stars != v.stars) throw std::invalid_argument("component_distance: separator sets differ");
  const std::size_t pre = std::max(w.prefix.size(), v.prefix.size());
  const std::size_t per = std::lcm(std::max<std::size_t>(w.period.size(), 1), std::max<std::size_t>(v.period.size(), 1));
  if (w.period.empty() != v.period.empty()) throw std::invalid_argument("component_distance: shapes differ");
  const std::size_t len = w.period.empty() ? std::max(w.prefix.size(), v.prefix.size()) : pre + per;
  if (w.period.empty() && w.prefix.size() != v.prefix.size()) throw std::invalid_argument("component_distance: lengths differ");
  std::size_t count = 0;
  for (int c = 0; c < d; ++c) {
    for (std::size_t i = 0; i < len; ++i) {
      if (digit_at(w, i).at(static_cast<std::size_t>(c)) != digit_at(v, i).at(static_cast<std::size_t>(c))) {
        ++count;
        break;
      }
    }
  }
  return count;
}

// Word literal syntax: whitespace-separated letters, "*" for the separator,
// "_" for a box, comma-joined components for parallel letters, and an
// optional "/" between prefix and period.

inline Letter parse_letter(const std::string& token, const AlphabetSpec& alphabet) {
  if (token == "*") return Letter::separator();
  Letter letter;
  std::stringstream in(token);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part == "_") {
      letter.symbols.push_back(kBox);
      continue;
    }
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) {
      throw std::invalid_argument("bad letter '" + token + "'");
    }
    letter.symbols.push_back(std::stoi(part));
  }
  alphabet.index_of(letter);
  return letter;
}

inline LassoWord parse_word(const std::string& text, const AlphabetSpec& alphabet) {
  LassoWord out;
  std::stringstream in(text);
  std::string token;
  bool in_period = false;
  while (in >> token) {
    if (token == "/") {
      if (in_period) throw std::invalid_argument("word: more than one '/'");
      in_period = true;
      continue;
    }
    (in_period ? out.period : out.prefix).push_back(parse_letter(token, alphabet));
  }
  if (in_period && out.period.empty()) throw std::invalid_argument("word: empty period after '/'");
  return out;
}

inline std::string format_word(const LassoWord& w) {
  std::string out;
  for (const auto& a : w.prefix) out += (out.empty() ? "" : " ") + to_string(a);
  if (!w.period.empty()) {
    out += out.empty() ? "/" : " /";
    for (const auto& a : w.period) out += " " + to_string(a);
  }
  return out;
}

inline std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

}  // namespace rva
