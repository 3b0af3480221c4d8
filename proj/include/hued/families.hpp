#pragma once

#include <cstddef>
#include <cstdint>

#include "hued/graph.hpp"

// Named graphs used by tests, the benchmark and the CLI.
namespace hued::families {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);
Graph petersen();

// Erdos-Renyi G(n, p). Deterministic for a given seed on every platform.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

} // namespace hued::families
