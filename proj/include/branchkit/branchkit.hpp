#pragma once

#include "branching.hpp"
#include "characters.hpp"
#include "error.hpp"
#include "partitions.hpp"
#include "tableau.hpp"
#include "weights.hpp"
