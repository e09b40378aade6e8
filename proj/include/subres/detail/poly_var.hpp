#pragma once

namespace subres::detail {

/// Parameter name used for the polynomial variable x while a determinant
/// with polynomial entries is evaluated.  Leading underscore keeps it away
/// from user parameter names in practice.
inline constexpr const char* kPolyVar = "_x";

}  // namespace subres::detail
