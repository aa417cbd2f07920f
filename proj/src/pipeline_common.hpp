#pragma once

#include "odiam/constructor.hpp"

namespace odiam::detail {

// Assigns every still-unassigned edge under the step label "completion".
void complete_in_place(PartialOrientation& p, const PipelineOptions& options);

}  // namespace odiam::detail
