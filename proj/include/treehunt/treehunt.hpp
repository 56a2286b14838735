#pragma once

#include "treehunt/coloring.hpp"
#include "treehunt/generators.hpp"
#include "treehunt/graph.hpp"
#include "treehunt/hunter.hpp"
#include "treehunt/io.hpp"
#include "treehunt/tree_patterns.hpp"
