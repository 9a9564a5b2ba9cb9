#pragma once

#include "spast/instance.hpp"

namespace spast {

// Re-encodes an instance in Hospitals/Residents-with-Ties form, itself
// expressed as an instance with one lecturer per project and d = c. Each
// project becomes a hospital keeping its capacity and its projected
// preference list, prefixed by a single tie of dummy residents that absorb
// the difference between the lecturer's total project capacity and the
// lecturer's own capacity. Dummy residents are appended after the real
// students, grouped by lecturer in ascending order, and each ranks the
// hospitals of its lecturer as one tie.
Instance clone_to_hrt(const Instance& inst);

// True iff every lecturer offers exactly one project whose capacity equals
// the lecturer's.
bool is_hrt(const Instance& inst);

}  // namespace spast
