#pragma once

#include "sidonlab/core.hpp"
#include "sidonlab/point_set.hpp"
#include "sidonlab/field_gf2.hpp"
#include "sidonlab/transform.hpp"
#include "sidonlab/setcore.hpp"
#include "sidonlab/spectral.hpp"
#include "sidonlab/cayley.hpp"
#include "sidonlab/constructions.hpp"
#include "sidonlab/io.hpp"
#include "sidonlab/report.hpp"
#include "sidonlab/random.hpp"
