#pragma once

#include <string_view>

namespace orbitsep::fixtures {

// Built-in example systems, also shipped as files under fixtures/.
// selftest runs against these embedded copies.

inline constexpr std::string_view kAdditive = R"(# additive-group analogue of the shear automorphism
field: QQ
vars: x, y
monoid: true
gen: x, x + y
point p0: 2, 0
point p1: 2, 7
point q0: 3, 0
)";

inline constexpr std::string_view kSquaring = R"(# squaring endomorphism of the affine line
field: QQ
vars: x
monoid: true
gen: x^2
point base: 3
point fixed: 1
)";

inline constexpr std::string_view kScaling = R"(# dense cyclic subsemigroup of the diagonal scaling action
field: QQ
vars: x, y
monoid: true
gen: 2*x, 2*y
point a: 1, 1
point b: 2, 2
point c: 1, 2
)";

struct Named {
  std::string_view name;
  std::string_view text;
};

inline constexpr Named kAll[] = {
    {"sys.toy", kAdditive},
    {"sq.toy", kSquaring},
    {"scale.toy", kScaling},
};

}  // namespace orbitsep::fixtures
