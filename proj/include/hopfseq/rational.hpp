#ifndef HOPFSEQ_RATIONAL_HPP
#define HOPFSEQ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfseq {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// No floating point exists in this project.
using Int = mpz_class;
using Rat = mpq_class;

bool is_integer(const Rat& q);
bool is_nonnegative(const Rat& q);

// Parses "41", "-7/3", "1/2"; whitespace around the token is ignored and a
// unicode minus sign is accepted. Throws Error(invalid_argument) on garbage.
Rat parse_rational(std::string_view token);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

// Generalized binomial coefficient: x(x-1)...(x-m+1)/m! for integer m >= 0.
Rat binomial(const Rat& x, unsigned long m);

Int factorial(unsigned long n);

} // namespace hopfseq

#endif
