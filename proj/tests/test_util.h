// Copyright 2026 The svcnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVCNET_TESTS_TEST_UTIL_H_
#define SVCNET_TESTS_TEST_UTIL_H_

#include <cstdio>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "svcnet/network.h"

namespace svcnet::testing {

inline std::string fixture(const std::string& relative) {
  return std::string(SVCNET_FIXTURES) + "/" + relative;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Node names n000, n001, ... so lexicographic order equals index order.
inline std::vector<std::string> numbered_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "n%03zu", i);
    names.push_back(buf);
  }
  return names;
}

inline Digraph make_digraph(std::size_t n, std::vector<Edge> edges) {
  return Digraph(numbered_names(n), std::move(edges));
}

// Each undirected edge becomes a single arc from the smaller to the larger id.
inline Digraph make_undirected(std::size_t n,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<Edge> arcs;
  for (auto [a, b] : edges) arcs.emplace_back(std::min(a, b), std::max(a, b));
  return make_digraph(n, std::move(arcs));
}

inline InteractionNetwork as_network(Digraph g) {
  InteractionNetwork net;
  net.domains.assign(g.size(), std::nullopt);
  net.graph = std::move(g);
  return net;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("svcnet_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace svcnet::testing

#endif  // SVCNET_TESTS_TEST_UTIL_H_
