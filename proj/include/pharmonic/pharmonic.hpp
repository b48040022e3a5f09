#pragma once

#include "pharmonic/bipoly.hpp"
#include "pharmonic/bloch.hpp"
#include "pharmonic/coefficient_bounds.hpp"
#include "pharmonic/harmonic_series.hpp"
#include "pharmonic/io.hpp"
#include "pharmonic/landau.hpp"
#include "pharmonic/pharmonic_map.hpp"
#include "pharmonic/predicates.hpp"
#include "pharmonic/rootfind.hpp"
#include "pharmonic/sampling.hpp"
#include "pharmonic/types.hpp"
#include "pharmonic/variability.hpp"
#include "pharmonic/wirtinger.hpp"
