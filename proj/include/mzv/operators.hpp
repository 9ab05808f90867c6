#pragma once

#include "mzv/ncpoly.hpp"
#include "mzv/series.hpp"

namespace mzv {

// The derivation with partial_n(x) = x z^{n-1} y and partial_n(y) = -x z^{n-1} y,
// extended by the Leibniz rule. Raises weight by exactly n and maps xHy into
// xHy (the domain of the derivation relation; images of general words can
// leave H0). Throws std::domain_error for n < 1.
NCPoly partial_n(const NCPoly& p, unsigned n);

// d(w) = y sh w - yw, a derivation with d(x) = xy and d(y) = yy.
NCPoly dmap(const NCPoly& p);

// The concatenation automorphism with phi(x) = x + y, phi(y) = -y; an involution.
NCPoly phi(const NCPoly& p);

// Left concatenation by x.
NCPoly Lx(const NCPoly& p);

// exp(sum_{n>=1} partial_n / n) applied to p, discarding terms of weight
// above weight_cap. Finite because each partial_n raises weight by n.
NCPoly exp_derivation_sum(const NCPoly& p, std::size_t weight_cap);

// The multiplicative endomorphism with x -> x/(1-yY) and z -> z, applied
// coefficient-wise and truncated at the series cap.
ParamSeries delta_Y(const ParamSeries& s);

// exp(sign * dY): sum_m (sign Y)^m d^m(.) / m! up to the cap. sign is +1 or -1.
ParamSeries exp_dY(const ParamSeries& s, int sign);

// Closed multiplicative form of the same operator, x -> x/(1 - sign yY),
// y -> y/(1 - sign yY); kept as an independent cross-check route.
ParamSeries exp_dY_closed(const ParamSeries& s, int sign);

// Phi_{-yY}: w -> (1+yY)(1/(1+yY) * w) on H1 coefficients, extended to all
// of H multiplicatively via Phi(x) = x (trailing x-runs pass through).
ParamSeries phi_yY(const ParamSeries& s);

// Inverse of phi_yY: w -> g * (h w) with h = 1/(1+yY) and g the harmonic
// inverse of h, extended over trailing x-runs the same way.
ParamSeries phi_yY_inv(const ParamSeries& s);

}  // namespace mzv
