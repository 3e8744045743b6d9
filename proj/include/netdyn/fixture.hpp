#pragma once

#include "netdyn/graph.hpp"

namespace netdyn {

/// The ten-node, twelve-edge reference network used throughout the case
/// study: nodes V1..V10 and undirected edges
///
///   V1-V9  V2-V3  V2-V6  V2-V7  V2-V9  V3-V4
///   V3-V5  V5-V8  V5-V9  V6-V9  V7-V9  V9-V10
///
/// Degrees are V1:1 V2:4 V3:3 V4:1 V5:3 V6:2 V7:2 V8:1 V9:6 V10:1.
Graph fixture_g();

}  // namespace netdyn
