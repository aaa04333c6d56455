#pragma once

#include "bisyz/syzygy.hpp"

namespace bisyz {

/// The generic / non-generic / degenerate trichotomy,
/// realized by pure linear algebra: degenerate iff Res_{(2,1)} = 0, and
/// otherwise dim Syz(p)_{2,3} distinguishes the two cases (it can only be
/// 0 or 1 for a triple without common zeros).
inline InstanceClass classify(const InputTriple& p)
{
    if (resultant_21(p).is_zero) return InstanceClass::Degenerate;
    long d = syz_and_ideal_dims(p, 2, 3).syz;
    if (d == 0) return InstanceClass::Generic;
    if (d == 1) return InstanceClass::NonGeneric;
    throw InternalInvariantViolation("dim Syz(p)_{2,3} = " + std::to_string(d) +
                                     " for a non-degenerate input");
}

/// Whether q0, q1 generate a complete intersection.  The kernel of
/// [mult q0 | mult q1] : R_{2,1}^2 -> R_{4,2} is 1-dimensional (the Koszul
/// relation alone) exactly when the pair is coprime; a common factor of
/// bidegree (a,b) inflates the kernel to dimension (a+1)(b+1) >= 2.
inline bool coprime_pair(const BiHomPoly& q0, const BiHomPoly& q1)
{
    if (q0.deg() != BiDeg{2, 1} || q1.deg() != BiDeg{2, 1})
        throw WrongBidegree("coprime_pair expects bidegree (2, 1) forms");
    if (q0.is_zero() || q1.is_zero()) throw ZeroInput("coprime_pair with a zero form");
    BiDeg src{2, 1};
    ExactMatrix m = ExactMatrix::hstack(mult_matrix(q0, src), mult_matrix(q1, src));
    long nullity = static_cast<long>(m.cols()) - static_cast<long>(rank(m));
    return nullity == 1;
}

}  // namespace bisyz
