#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eisenpole {

// Exact rational scalar used throughout. All weight/character arithmetic is
// performed in Q; nothing in the combinatorial pipeline ever touches floats.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Rat& q) { return mpz_get_si(q.get_num_mpz_t()); }

// Parses "3", "-3", "1/4", "-5/22". Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& s);

// "p/q" with q omitted when 1; used for table cells and JSON payloads.
std::string rat_str(const Rat& q);

// "\frac{p}{q}" (or plain integer), with the sign pulled out front.
std::string rat_latex(const Rat& q);

Rat rat_pow(const Rat& base, long exp);

struct RatHash {
  std::size_t operator()(const Rat& q) const;
};

// Rational vectors: weights in the fundamental-weight basis.
using Weight = std::vector<Rat>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rat& c, const Weight& a);

std::string weight_str(const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

}  // namespace eisenpole
