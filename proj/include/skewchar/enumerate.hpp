#pragma once

#include <vector>

#include "skewchar/diagrams.hpp"

namespace skewchar {

// Partitions with |p| <= max_size (including the empty one).
std::vector<Partition> partitions_up_to(int max_size);
// Partitions of exactly k.
std::vector<Partition> partitions_of(int k);
// Skew diagrams with 1..max_boxes boxes and no empty rows or columns, one per
// translation class; anchor 0.
std::vector<SkewDiagram> normalized_skew_shapes(int max_boxes);

}  // namespace skewchar
