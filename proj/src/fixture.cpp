#include "netdyn/fixture.hpp"

namespace netdyn {

Graph fixture_g() {
  std::vector<NodeLabel> nodes;
  for (int i = 1; i <= 10; ++i) nodes.emplace_back("V" + std::to_string(i));
  std::vector<EdgeInput> edges = {
      {"V1", "V9"}, {"V2", "V3"}, {"V2", "V6"}, {"V2", "V7"}, {"V2", "V9"},  {"V3", "V4"},
      {"V3", "V5"}, {"V5", "V8"}, {"V5", "V9"}, {"V6", "V9"}, {"V7", "V9"}, {"V9", "V10"},
  };
  return Graph::build(false, std::move(nodes), std::move(edges));
}

}  // namespace netdyn
