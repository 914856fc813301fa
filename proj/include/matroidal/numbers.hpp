#ifndef MATROIDAL_NUMBERS_HPP
#define MATROIDAL_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace matroidal {

// Exact arithmetic scalars. Rationals are kept canonical: lowest terms,
// positive denominator. Nothing in this library ever rounds.
using Int = mpz_class;
using Rat = mpq_class;

// Parses a decimal integer string, e.g. "-123". Throws std::invalid_argument
// on malformed input.
Int parse_int(const std::string& s);

// Parses "p" or "p/q" with decimal p, q. Throws std::invalid_argument on
// malformed input or zero denominator.
Rat parse_rat(const std::string& s);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// Binomial coefficient with the combinatorial convention:
// 0 whenever k < 0, k > n or n < 0.
Int binomial(long n, long k);
Int binomial(const Int& n, long k);

Int int_pow(const Int& base, unsigned long e);

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace matroidal

#endif
