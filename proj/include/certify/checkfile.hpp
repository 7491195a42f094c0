#pragma once

#include "certify/pipeline.hpp"

#include <istream>
#include <string>

namespace certify {

/// Declarative check list: ring/derivation/morphism definitions in the shared
/// expression grammar plus one check directive per line.
///
///   ring B1 x y z t*              ('*' marks an invertible variable)
///   rel B1 x*z - y^2 + t^3
///   derivation D B1 y = x ; z = 2*y
///   morphism F B1 U x = x ; y = m^3 + x*v ; ...
///   check zero <ring> <poly>
///   check equal <ring> <poly> == <poly>
///   check member <ring> <poly>
///   check radical <ring> <poly>
///   check well_defined <derivation>
///   check lnd <derivation> [cap]
///   check kernel_member <derivation> <poly>
///   check morphism <morphism>
///   check inverse_pair <morphism> <morphism>
///
/// Lines starting with '#' and blank lines are ignored.
Report run_check_file(std::istream& in, const PipelineConfig& config);
Report run_check_file_path(const std::string& path, const PipelineConfig& config);

}  // namespace certify
