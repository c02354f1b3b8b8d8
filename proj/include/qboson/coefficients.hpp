#pragma once

#include <string>
#include <vector>

#include "qboson/params.hpp"
#include "qboson/partition.hpp"

namespace qboson {

/// Reading of the inner sum of the diagonal coefficient U_{K,m}.
///
/// RestrictedInnerSum drops every term in which some lowering index
/// j in I_- sits on a zero part (the reading that makes the order-1
/// reduction and the Pieri recurrence exact identities, and the default
/// everywhere).  LiteralInnerSum keeps those terms as printed; it is
/// retained for the negative-control check.
enum class CoeffVariant { RestrictedInnerSum, LiteralInnerSum };

std::string to_string(CoeffVariant variant);

/// Hopping coefficient W_{J+,J-}(lambda) of the quantum integrals.
/// Requires the shifted partition to be admissible.
Rational coeff_w(const ParamSet& params, const Partition& lambda,
                 const ShiftPair& pair);

/// Diagonal coefficient U_{K,m}(lambda): (-1)^m times the inner sum
/// over disjoint I_+, I_- in K with |I_+| + |I_-| = m.  K is a sorted
/// 1-based index set.
Rational coeff_u(const ParamSet& params, const Partition& lambda,
                 const std::vector<int>& K, int m, CoeffVariant variant);

/// A single inner term of U_{K,m} for given (I_+, I_-), without the
/// global (-1)^m sign.  Exposed for the order-vanishing checks.
Rational coeff_u_term(const ParamSet& params, const Partition& lambda,
                      const std::vector<int>& K, const ShiftPair& inner);

/// Pieri coefficient V_{J+,J-}(lambda).
Rational coeff_v(const ParamSet& params, const Partition& lambda,
                 const ShiftPair& pair);

/// Gauge function h(lambda) linking Pieri and operator coefficients.
Rational gauge_h(const ParamSet& params, const Partition& lambda);

/// V_{J+,J-}(lambda) h(lambda') == W_{J+,J-}(lambda) h(lambda) with
/// lambda' the shifted partition; exact check.
bool check_gauge_relation(const ParamSet& params, const Partition& lambda,
                          const ShiftPair& pair);

/// The lambda-independent constant sum_j (t0 t^{n-j} + t0^-1 t^-(n-j))
/// that turns the order-1 integral into the Hamiltonian.
Rational constant_shift(int n, const ParamSet& params);

} // namespace qboson
