#pragma once

#include <memory>
#include <optional>
#include <string>

#include "carpets/carpet.hpp"
#include "carpets/spectra.hpp"

// Line-oriented `key = value` run configuration with `#` comments.
//
//   m = 2
//   n = 3
//   # either a two-row shorthand ...
//   n0 = 2
//   n1 = 1
//   q0 = exceptional        # or a number in (0,1); `collapse` gives A = +1
//   # ... or an explicit digit set with weights
//   digits = 0,0; 0,1; 1,0
//   p = 0,0:0.25; 0,1:0.25; 1,0:0.5
//
// Exactly one of {digits+p, n0/n1/q0} must be present.

namespace carpets {

struct RunConfig {
    std::shared_ptr<const CarpetSpec> carpet;
    AttractorProfile profile;
    BernoulliWeights weights;
    std::optional<TwoRowMeasure> two_row;

    bool has_two_row() const { return two_row.has_value(); }
    TwoRowCtx ctx() const;  // throws when the config is not two-row
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace carpets
