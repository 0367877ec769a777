#pragma once

#include "definetti/partition.hpp"

namespace definetti {

// Littlewood-Richardson coefficient c^la_{mu,nu}: number of semistandard
// fillings of la/mu with content nu whose reverse reading word (rows read
// right to left, top to bottom) is a lattice word.
Int lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu);

// Checks dim_skew(la/mu) == sum_nu c^la_{mu,nu} dim_sn(nu) with nu running
// over partitions of |la|-|mu|. Throws when mu is not contained in la.
bool skew_dim_identity_check(const Partition& la, const Partition& mu);

}  // namespace definetti
