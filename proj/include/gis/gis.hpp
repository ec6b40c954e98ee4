#ifndef GIS_GIS_HPP
#define GIS_GIS_HPP

#include "gis/cycle_monoid.hpp"
#include "gis/element.hpp"
#include "gis/graph.hpp"
#include "gis/literals.hpp"
#include "gis/path.hpp"
#include "gis/star.hpp"

#endif  // GIS_GIS_HPP
