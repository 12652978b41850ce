#ifndef HOPFSEQ_TRANSFORMS_HPP
#define HOPFSEQ_TRANSFORMS_HPP

#include "hopfseq/sequence.hpp"

namespace hopfseq {

// The six transfer maps between the triple (h, a, p) determined by
//
//   1 + sum_{k>=1} h_k t^k  =  1 / (1 - sum_{m>=1} a_m t^m)
//                           =  prod_{d>=1} (1 - t^d)^{-p_d}.
//
// All maps are prefix-exact: the first N outputs depend only on the first N
// inputs, so a truncated sequence transforms to a truncated sequence of the
// same degree. Everything is exact rational arithmetic.

// INVERT: a -> h via h_n = a_n + sum_{k=1}^{n-1} a_k h_{n-k}.
Sequence invert(const Sequence& a);

// INVERTi: h -> a via a_n = h_n - sum_{k=1}^{n-1} a_k h_{n-k}.
Sequence inverti(const Sequence& h);

// Euler transform: p -> h via c_n = sum_{d|n} d p_d and
// n h_n = c_n + sum_{k=1}^{n-1} c_k h_{n-k}.
Sequence euler(const Sequence& p);

// Inverse Euler transform: h -> p via the power-series logarithm
// c_n = n h_n - sum_{k=1}^{n-1} c_k h_{n-k} followed by Mobius inversion
// p_n = (1/n) sum_{d|n} mu(n/d) c_d.
//
// If h is integral the result is integral (this is a theorem); a
// non-integral result for integral input raises InternalError.
Sequence euleri(const Sequence& h);

// a -> p, the generator-counts-to-primitive-counts map; equals euleri(invert(a)).
Sequence a_to_p(const Sequence& a);

// p -> a, inverse of a_to_p; equals inverti(euler(p)).
Sequence p_to_a(const Sequence& p);

} // namespace hopfseq

#endif
