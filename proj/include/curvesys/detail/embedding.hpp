#pragma once

#include "curvesys/field.hpp"

namespace curvesys::detail {

/// Image of the generator of `from` under the fixed embedding into `to`
/// (both extensions of the same F_p, deg from | deg to). The choice is the
/// smallest root of from's modulus in `to` and is cached per pair.
FieldElement generator_image(const FieldPtr& from, const FieldPtr& to);

}  // namespace curvesys::detail
