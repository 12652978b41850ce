#ifndef HOPFSEQ_COALGEBRA_HPP
#define HOPFSEQ_COALGEBRA_HPP

#include "hopfseq/ncpoly.hpp"

namespace hopfseq {

// The cocommutative coproduct making every letter primitive: on a word w of
// length l, Delta(w) is the sum over the 2^l position subsets S of
// w|_S (x) w|_{S^c}, extended linearly.
TensorElement coproduct(const NcPoly& f);

// Delta_+(f) = Delta(f) - f (x) 1 - 1 (x) f; requires f without constant term.
TensorElement reduced_coproduct(const NcPoly& f);

bool is_primitive(const NcPoly& f);

// The Eulerian idempotent
//   e(x) = x - 1/2 mu.Delta_+(x) + 1/3 mu^(2).Delta_+^(2)(x) - ...
// On a degree-n homogeneous element the series stops after n terms because
// iterated reduced coproducts vanish once every tensor factor must carry
// positive degree. Non-homogeneous inputs are split by degree and recombined;
// a constant term is rejected. The result is primitive, and e fixes
// primitives.
NcPoly eulerian_idempotent(const NcPoly& f);

} // namespace hopfseq

#endif
