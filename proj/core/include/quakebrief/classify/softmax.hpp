#pragma once

#include <span>
#include <vector>

namespace qb {

/// Max-subtracted softmax. Throws DataError on NaN or infinite logits.
std::vector<double> softmax(std::span<const double> logits);

/// Index of the largest entry; ties go to the lowest index.
std::size_t argmax(std::span<const double> values);

}  // namespace qb
