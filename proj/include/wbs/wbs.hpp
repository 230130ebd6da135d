#pragma once

// Umbrella header: exact arithmetic for weighted binomial sums
// f(m,a,r) = (1+a)^(-r) sum_{i<=r} C(m,i) a^i, their peak structure,
// log-concavity, the P/Q remainder polynomials, sandwich bounds and limit
// behaviour of the peak value, the induced probability distribution, and the
// Reed-Muller parameter bridge.

#include "wbs/asymptotics.hpp"
#include "wbs/bigfloat.hpp"
#include "wbs/binom.hpp"
#include "wbs/concavity.hpp"
#include "wbs/distribution.hpp"
#include "wbs/errors.hpp"
#include "wbs/inequality_suite.hpp"
#include "wbs/pq_polys.hpp"
#include "wbs/rational.hpp"
#include "wbs/report.hpp"
#include "wbs/rm_codes.hpp"
