#pragma once

// Labyrinth patterns, mixed labyrinth sets, and the machinery around them:
// composition, labyrinth-property validation, snake/plain cross generators,
// exit-to-exit tree paths with an independent BFS oracle, box-counting
// dimension schedules, and SVG rendering.

#include "laby/cell.hpp"
#include "laby/dimension.hpp"
#include "laby/errors.hpp"
#include "laby/generators.hpp"
#include "laby/grid.hpp"
#include "laby/paths.hpp"
#include "laby/props.hpp"
#include "laby/render.hpp"
